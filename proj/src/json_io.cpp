#include "leavitt/json_io.hpp"

#include "leavitt/error.hpp"
#include "leavitt/parser.hpp"

namespace leavitt {

namespace {

const json& expect(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw error(std::string("missing JSON key '") + key + "'");
    return *it;
}

std::string expect_string(const json& j, const char* key) {
    const json& v = expect(j, key);
    if (!v.is_string()) throw error(std::string("JSON key '") + key + "' must be a string");
    return v.get<std::string>();
}

long expect_int(const json& j, const char* key) {
    const json& v = expect(j, key);
    if (!v.is_number_integer()) throw error(std::string("JSON key '") + key + "' must be an integer");
    return v.get<long>();
}

bool optional_bool(const json& j, const char* key, bool fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_boolean()) throw error(std::string("JSON key '") + key + "' must be a boolean");
    return it->get<bool>();
}

Poly poly_from_value(const json& v, const Field& f) {
    if (!v.is_string()) throw error("polynomials must be expression strings like \"1+x\"");
    return parse_poly(v.get<std::string>(), f);
}

}  // namespace

json scalar_to_json(const Scalar& k) { return json(k.str()); }

json poly_to_json(const Poly& p) { return json(p.str("x")); }

Poly poly_from_json(const json& j, const Field& f) { return poly_from_value(j, f); }

json algebra_to_json(const AlgebraElement& a) {
    json terms = json::array();
    for (const auto& [word, coeff] : a.terms())
        terms.push_back(json{{"word", word.str()}, {"coeff", coeff.str()}});
    return json{{"terms", std::move(terms)}};
}

AlgebraElement algebra_from_json(const json& j, const Field& f) {
    const json& terms = expect(j, "terms");
    if (!terms.is_array()) throw error("JSON key 'terms' must be an array");
    AlgebraElement a = AlgebraElement::zero(f);
    for (const auto& t : terms) {
        std::string word = expect_string(t, "word");
        Scalar coeff = Scalar::parse(f, expect_string(t, "coeff"));
        a = a + parse_leavitt(word, f).scaled(coeff);
    }
    return a;
}

json jacobson_to_json(const JacobsonElement& a) {
    json terms = json::array();
    for (const auto& [mono, coeff] : a.terms())
        terms.push_back(json{{"word", mono.str()}, {"coeff", coeff.str()}});
    return json{{"terms", std::move(terms)}};
}

JacobsonElement jacobson_from_json(const json& j, const Field& f) {
    const json& terms = expect(j, "terms");
    if (!terms.is_array()) throw error("JSON key 'terms' must be an array");
    JacobsonElement a = JacobsonElement::zero(f);
    for (const auto& t : terms) {
        std::string word = expect_string(t, "word");
        Scalar coeff = Scalar::parse(f, expect_string(t, "coeff"));
        a = a + parse_jacobson(word, f).scaled(coeff);
    }
    return a;
}

json ew_to_json(const EnvRwElement& m) {
    long top = m.exact() ? (m.tail().empty() ? -1 : m.tail().rbegin()->first) : m.order();
    json k = json::array();
    for (long i = 0; i <= top; ++i) {
        auto it = m.tail().find(i);
        k.push_back(it == m.tail().end() ? Scalar::zero(m.field()).str() : it->second.str());
    }
    return json{{"k-1", m.k_minus1().str()},
                {"k", std::move(k)},
                {"order", m.order()},
                {"exact", m.exact()}};
}

EnvRwElement ew_from_json(const json& j, const Field& f) {
    long order = expect_int(j, "order");
    bool exact = optional_bool(j, "exact", false);
    EnvRwElement m(f, order, exact);
    m.set_k_minus1(Scalar::parse(f, expect_string(j, "k-1")));
    const json& k = expect(j, "k");
    if (!k.is_array()) throw error("JSON key 'k' must be an array");
    long i = 0;
    for (const auto& c : k) {
        if (!c.is_string()) throw error("tail coefficients must be strings");
        m.set_tail_coeff(i++, Scalar::parse(f, c.get<std::string>()));
    }
    return m;
}

json theta_to_json(const EnvRcstarElement& t) {
    long top = t.exact() ? (t.series().empty() ? -1 : t.series().rbegin()->first) : t.order();
    json q = json::array();
    Poly zero = Poly::zero(t.field());
    for (long i = 0; i <= top; ++i) {
        auto it = t.series().find(i);
        q.push_back(poly_to_json(it == t.series().end() ? zero : it->second));
    }
    json out{{"q-1", poly_to_json(t.q_minus1())},
             {"q", std::move(q)},
             {"order", t.order()},
             {"exact", t.exact()}};
    out["bound"] = t.bound() ? json(*t.bound()) : json(nullptr);
    return out;
}

EnvRcstarElement theta_from_json(const json& j, const Field& f) {
    long order = expect_int(j, "order");
    bool exact = optional_bool(j, "exact", false);
    std::optional<long> bound;
    if (auto it = j.find("bound"); it != j.end() && !it->is_null()) {
        if (!it->is_number_integer()) throw error("JSON key 'bound' must be an integer or null");
        bound = it->get<long>();
    }
    EnvRcstarElement t(f, order, exact, bound);
    t.set_q_minus1(poly_from_value(expect(j, "q-1"), f));
    const json& q = expect(j, "q");
    if (!q.is_array()) throw error("JSON key 'q' must be an array");
    long i = 0;
    for (const auto& comp : q) t.set_q(i++, poly_from_value(comp, f));
    return t;
}

json prufer_to_json(const PruferElement& t) {
    return json{{"f", poly_to_json(t.f())},
                {"level", t.level()},
                {"residue", poly_to_json(t.residue())},
                {"ack-unverified", t.unverified_acknowledged()}};
}

PruferElement prufer_from_json(const json& j, const Field& f) {
    Poly mod = poly_from_value(expect(j, "f"), f);
    long level = expect_int(j, "level");
    Poly residue = poly_from_value(expect(j, "residue"), f);
    bool ack = optional_bool(j, "ack-unverified", false);
    return PruferElement::make(mod, level, residue, ack);
}

json rational_to_json(const RationalFunc& g) {
    return json{{"num", poly_to_json(g.num())}, {"den", poly_to_json(g.den())}};
}

RationalFunc rational_from_json(const json& j, const Field& f) {
    return RationalFunc::of(poly_from_value(expect(j, "num"), f),
                            poly_from_value(expect(j, "den"), f));
}

json laurent_series_to_json(const LaurentSeriesElement& s) {
    json terms = json::array();
    for (const auto& [e, k] : s.coeffs())
        terms.push_back(json{{"exp", e}, {"coeff", k.str()}});
    return json{{"terms", std::move(terms)}, {"order", s.order()}, {"exact", s.exact()}};
}

}  // namespace leavitt
