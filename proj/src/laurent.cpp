#include "leavitt/laurent.hpp"

#include <algorithm>
#include <cstdlib>

namespace leavitt {

LaurentPoly LaurentPoly::mono(const Field& f, long exp, const Scalar& coeff) {
    LaurentPoly out(f);
    out.add_term(exp, coeff);
    return out;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p) {
    LaurentPoly out(p.field());
    for (int k = 0; k <= p.degree(); ++k) out.add_term(k, p.coeff(static_cast<std::size_t>(k)));
    return out;
}

Scalar LaurentPoly::coeff(long e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw error("zero Laurent polynomial has no exponents");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw error("zero Laurent polynomial has no exponents");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long e, const Scalar& coeff) {
    if (!(coeff.field() == field_)) throw field_mismatch();
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
    LaurentPoly out = *this;
    for (const auto& [e, k] : o.terms_) out.add_term(e, k);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(field_);
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, -k);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
    LaurentPoly out(field_);
    for (const auto& [ea, ka] : terms_)
        for (const auto& [eb, kb] : o.terms_) out.add_term(ea + eb, ka * kb);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Scalar& k) const {
    if (!(k.field() == field_)) throw field_mismatch();
    LaurentPoly out(field_);
    if (k.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
    return out;
}

LaurentPoly LaurentPoly::shifted(long by) const {
    LaurentPoly out(field_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, k] : terms_) {
        const bool neg = k.is_negative();
        const Scalar mag = neg ? -k : k;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (e == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly quotient_map(const AlgebraElement& e) {
    LaurentPoly out(e.field());
    for (const auto& [w, k] : e.terms()) {
        switch (w.shape()) {
            case Shape::V:
            case Shape::C:
            case Shape::Cstar:
            case Shape::CCstar:
                out.add_term(static_cast<long>(w.c_exp()) - static_cast<long>(w.cstar_exp()), k);
                break;
            default:
                break;  // words through w or the (ghost) edge die in the quotient
        }
    }
    return out;
}

bool is_in_socle(const AlgebraElement& e) { return quotient_map(e).is_zero(); }

SeriesPrefix::SeriesPrefix(const Field& f, std::vector<Scalar> coeffs)
    : field_(f), b_(std::move(coeffs)) {
    for (const auto& k : b_)
        if (!(k.field() == f)) throw field_mismatch();
}

Scalar SeriesPrefix::coeff(std::size_t k) const {
    return k < b_.size() ? b_[k] : Scalar::zero(field_);
}

SeriesPrefix series_inverse(const Poly& p, unsigned order) {
    if (!p.unit_constant_term()) throw error("series inverse requires constant term 1");
    const Field f = p.field();
    std::vector<Scalar> b;
    b.reserve(order + 1);
    b.push_back(Scalar::one(f));
    for (unsigned n = 1; n <= order; ++n) {
        Scalar acc = Scalar::zero(f);
        const unsigned top = std::min<unsigned>(n, static_cast<unsigned>(p.degree()));
        for (unsigned j = 1; j <= top; ++j) acc += p.coeff(j) * b[n - j];
        b.push_back(-acc);
    }
    return SeriesPrefix(f, std::move(b));
}

namespace {

// --- exact factor search over the rationals ---------------------------------

// Clears denominators and content: returns a primitive integer polynomial
// proportional to f.
std::vector<mpz_class> primitive_integer_form(const Poly& f) {
    mpz_class lcm_den(1);
    for (int k = 0; k <= f.degree(); ++k) {
        mpq_class q(f.coeff(static_cast<std::size_t>(k)).str());
        q.canonicalize();
        mpz_class den = q.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        lcm_den = lcm_den / g * den;
    }
    std::vector<mpz_class> c;
    for (int k = 0; k <= f.degree(); ++k) {
        mpq_class q(f.coeff(static_cast<std::size_t>(k)).str());
        q.canonicalize();
        mpq_class scaled = q * lcm_den;
        c.push_back(scaled.get_num());
    }
    mpz_class content(0);
    for (const auto& z : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    if (content > 1)
        for (auto& z : c) z /= content;
    return c;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    return out;
}

Poly poly_from_mpq(const Field& f, const std::vector<mpq_class>& coeffs) {
    std::vector<Scalar> s;
    s.reserve(coeffs.size());
    for (auto q : coeffs) {
        q.canonicalize();
        s.push_back(Scalar::parse(f, q.get_str()));
    }
    return Poly::from_coeffs(f, std::move(s));
}

// Normalizes a proper factor so its constant term is 1 (possible because
// f(0) = 1 forces every factor's constant term to be nonzero).
Poly unit_normalize(const Poly& g) {
    return g.scaled(g.constant_term().inverse());
}

FactorOutcome rational_factor_check(const Poly& f) {
    const Field F = f.field();
    const int n = f.degree();
    if (n == 1) return {FactorVerdict::Irreducible, std::nullopt, "degree 1"};
    if (n > 4)
        return {FactorVerdict::Unverified, std::nullopt,
                "degree exceeds the exact range over the rationals (4)"};

    const std::vector<mpz_class> c = primitive_integer_form(f);

    // Linear factors via the rational root theorem.
    for (const auto& pnum : positive_divisors(c.front()))
        for (const auto& pden : positive_divisors(c.back()))
            for (int sign = 0; sign < 2; ++sign) {
                mpq_class r(pnum, pden);
                r.canonicalize();
                if (sign) r = -r;
                mpq_class acc(0);
                for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + mpq_class(*it);
                if (acc == 0) {
                    // root r != 0, so (1 - x/r) is a factor with constant term 1
                    mpq_class inv = -1 / r;
                    Poly g = Poly::one(F) + Poly::x(F).scaled(Scalar::parse(F, [&] {
                                 mpq_class v = inv;
                                 v.canonicalize();
                                 return v.get_str();
                             }()));
                    return {FactorVerdict::FactorFound, g, "rational root " + r.get_str()};
                }
            }
    if (n <= 3) return {FactorVerdict::Irreducible, std::nullopt, "no rational root"};

    // Quartic with no linear factor: search integer quadratic factors
    // a x^2 + b x + e with a | lead, e | constant, |b| within the integer
    // factor coefficient bound 2^deg(g) * ||F||_2.
    mpz_class norm2(0);
    for (const auto& z : c) norm2 += z * z;
    mpz_class bound = 4 * (sqrt(norm2) + 1);
    for (const auto& a : positive_divisors(c.back()))
        for (const auto& e_abs : positive_divisors(c.front()))
            for (int esign = 0; esign < 2; ++esign) {
                const mpz_class e = esign ? mpz_class(-e_abs) : e_abs;
                for (mpz_class b = -bound; b <= bound; ++b) {
                    const std::vector<mpq_class> g{mpq_class(e), mpq_class(b), mpq_class(a)};
                    Poly gq = poly_from_mpq(F, g);
                    if (Poly::divides(gq, f))
                        return {FactorVerdict::FactorFound, unit_normalize(gq),
                                "quadratic factor"};
                }
            }
    return {FactorVerdict::Irreducible, std::nullopt, "no factor within the integer bound"};
}

FactorOutcome prime_field_factor_check(const Poly& f) {
    const Field F = f.field();
    const int n = f.degree();
    if (n == 1) return {FactorVerdict::Irreducible, std::nullopt, "degree 1"};
    if (n > 12)
        return {FactorVerdict::Unverified, std::nullopt,
                "degree exceeds the exhaustive range over a prime field (12)"};
    const std::uint64_t p = F.prime();

    for (int m = 1; 2 * m <= n; ++m) {
        // All monic candidates of degree m, by odometer over the low coefficients.
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(m), 0);
        for (;;) {
            std::vector<Scalar> coeffs;
            coeffs.reserve(static_cast<std::size_t>(m) + 1);
            for (auto dgt : digits) coeffs.push_back(Scalar::of_int(F, static_cast<long>(dgt)));
            coeffs.push_back(Scalar::one(F));
            const Poly g = Poly::from_coeffs(F, std::move(coeffs));
            if (Poly::divides(g, f))
                return {FactorVerdict::FactorFound, unit_normalize(g),
                        "monic factor of degree " + std::to_string(m)};
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
            if (k == digits.size()) break;
        }
    }
    return {FactorVerdict::Irreducible, std::nullopt, "exhaustive trial division"};
}

}  // namespace

FactorOutcome factor_check(const Poly& f) {
    if (f.degree() < 1) throw error("factor check needs degree >= 1");
    if (!f.unit_constant_term()) throw error("factor check requires constant term 1");
    return f.field().is_rationals() ? rational_factor_check(f) : prime_field_factor_check(f);
}

}  // namespace leavitt
