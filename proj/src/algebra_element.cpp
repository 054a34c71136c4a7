#include "leavitt/algebra_element.hpp"

namespace leavitt {

AlgebraElement AlgebraElement::one(const Field& f) {
    AlgebraElement e(f);
    e.add_term(BasisWord::v(), Scalar::one(f));
    e.add_term(BasisWord::w(), Scalar::one(f));
    return e;
}

AlgebraElement AlgebraElement::word(const Field& f, const BasisWord& w) {
    return word(f, w, Scalar::one(f));
}

AlgebraElement AlgebraElement::word(const Field& f, const BasisWord& w, const Scalar& coeff) {
    AlgebraElement e(f);
    e.add_term(w, coeff);
    return e;
}

AlgebraElement AlgebraElement::generator(const Field& f, Gen g) {
    switch (g) {
        case Gen::V: return word(f, BasisWord::v());
        case Gen::W: return word(f, BasisWord::w());
        case Gen::C: return word(f, BasisWord::c_pow(1));
        case Gen::Cstar: return word(f, BasisWord::cstar_pow(1));
        case Gen::D: return word(f, BasisWord::d());
        case Gen::Dstar: return word(f, BasisWord::dstar());
    }
    throw std::logic_error("bad generator");
}

Scalar AlgebraElement::coeff(const BasisWord& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::uint32_t AlgebraElement::max_exp() const {
    std::uint32_t m = 0;
    for (const auto& [w, k] : terms_)
        if (w.max_exp() > m) m = w.max_exp();
    return m;
}

void AlgebraElement::add_term(const BasisWord& w, const Scalar& coeff) {
    if (!(coeff.field() == field_)) throw field_mismatch();
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
    AlgebraElement out = *this;
    for (const auto& [w, k] : o.terms_) out.add_term(w, k);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out(field_);
    for (const auto& [w, k] : terms_) out.terms_.emplace(w, -k);
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
    AlgebraElement out(field_);
    for (const auto& [wa, ka] : terms_)
        for (const auto& [wb, kb] : o.terms_) {
            const Scalar k = ka * kb;
            for (const auto& t : word_mul_terms(wa, wb))
                out.add_term(t.word, t.sign > 0 ? k : -k);
        }
    return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& k) const {
    if (!(k.field() == field_)) throw field_mismatch();
    AlgebraElement out(field_);
    if (k.is_zero()) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * k);
    return out;
}

AlgebraElement AlgebraElement::pow(std::uint32_t n) const {
    AlgebraElement acc = one(field_);
    for (std::uint32_t k = 0; k < n; ++k) acc = acc * *this;
    return acc;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, k] : terms_) {
        const bool neg = k.is_negative();
        const Scalar mag = neg ? -k : k;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (!mag.is_one()) out += mag.str() + "*";
        out += w.str();
    }
    return out;
}

AlgebraElement word_mul(const BasisWord& a, const BasisWord& b, const Field& f) {
    AlgebraElement out(f);
    const Scalar one = Scalar::one(f);
    for (const auto& t : word_mul_terms(a, b)) out.add_term(t.word, t.sign > 0 ? one : -one);
    return out;
}

}  // namespace leavitt
