#include "leavitt/jacobson.hpp"

namespace leavitt {

std::string YXMono::str() const {
    if (y == 0 && x == 0) return "1";
    std::string out;
    if (y > 0) out += "Y^" + std::to_string(y);
    if (x > 0) {
        if (!out.empty()) out += " ";
        out += "X^" + std::to_string(x);
    }
    return out;
}

JacobsonElement JacobsonElement::mono(const Field& f, YXMono m) {
    return mono(f, m, Scalar::one(f));
}

JacobsonElement JacobsonElement::mono(const Field& f, YXMono m, const Scalar& coeff) {
    JacobsonElement e(f);
    e.add_term(m, coeff);
    return e;
}

Scalar JacobsonElement::coeff(YXMono m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void JacobsonElement::add_term(YXMono m, const Scalar& coeff) {
    if (!(coeff.field() == field_)) throw field_mismatch();
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

JacobsonElement JacobsonElement::operator+(const JacobsonElement& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
    JacobsonElement out = *this;
    for (const auto& [m, k] : o.terms_) out.add_term(m, k);
    return out;
}

JacobsonElement JacobsonElement::operator-(const JacobsonElement& o) const { return *this + (-o); }

JacobsonElement JacobsonElement::operator-() const {
    JacobsonElement out(field_);
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, -k);
    return out;
}

JacobsonElement JacobsonElement::operator*(const JacobsonElement& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
    JacobsonElement out(field_);
    for (const auto& [a, ka] : terms_)
        for (const auto& [b, kb] : o.terms_) {
            // Y^ay X^ax * Y^by X^bx: X^ax Y^by collapses via XY = 1.
            YXMono m = a.x >= b.y ? YXMono{a.y, a.x - b.y + b.x}
                                  : YXMono{a.y + b.y - a.x, b.x};
            out.add_term(m, ka * kb);
        }
    return out;
}

JacobsonElement JacobsonElement::scaled(const Scalar& k) const {
    if (!(k.field() == field_)) throw field_mismatch();
    JacobsonElement out(field_);
    if (k.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * k);
    return out;
}

JacobsonElement JacobsonElement::pow(std::uint32_t n) const {
    JacobsonElement acc = one(field_);
    for (std::uint32_t k = 0; k < n; ++k) acc = acc * *this;
    return acc;
}

bool JacobsonElement::operator==(const JacobsonElement& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

std::string JacobsonElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, k] : terms_) {
        const bool neg = k.is_negative();
        const Scalar mag = neg ? -k : k;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string w = m.str();
        if (w == "1") {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += w;
        }
    }
    return out;
}

}  // namespace leavitt
