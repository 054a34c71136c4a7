#include "leavitt/poly.hpp"

namespace leavitt {

Poly Poly::x(const Field& f) {
    Poly p(f);
    p.c_ = {Scalar::zero(f), Scalar::one(f)};
    return p;
}

Poly Poly::constant(const Scalar& k) {
    Poly p(k.field());
    if (!k.is_zero()) p.c_ = {k};
    return p;
}

Poly Poly::from_coeffs(const Field& f, std::vector<Scalar> coeffs) {
    Poly p(f);
    for (const auto& k : coeffs)
        if (!(k.field() == f)) throw field_mismatch();
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Scalar Poly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Scalar::zero(field_);
}

Scalar Poly::leading() const {
    if (c_.empty()) return Scalar::zero(field_);
    return c_.back();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
    Poly out(field_);
    const std::size_t n = std::max(c_.size(), o.c_.size());
    out.c_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.c_.push_back(coeff(k) + o.coeff(k));
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly out(field_);
    out.c_.reserve(c_.size());
    for (const auto& k : c_) out.c_.push_back(-k);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
    Poly out(field_);
    if (is_zero() || o.is_zero()) return out;
    out.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b) out.c_[a + b] += c_[a] * o.c_[b];
    out.trim();
    return out;
}

Poly Poly::scaled(const Scalar& k) const {
    if (!(k.field() == field_)) throw field_mismatch();
    Poly out(field_);
    if (k.is_zero()) return out;
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(c * k);
    return out;
}

Poly Poly::times_x(std::size_t n) const {
    if (is_zero() || n == 0) return n == 0 ? *this : zero(field_);
    Poly out(field_);
    out.c_.assign(n, Scalar::zero(field_));
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

Poly Poly::pow(std::uint32_t n) const {
    Poly acc = one(field_);
    for (std::uint32_t k = 0; k < n; ++k) acc = acc * *this;
    return acc;
}

Scalar Poly::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (!(num.field_ == den.field_)) throw field_mismatch();
    if (den.is_zero()) throw division_by_zero();
    Poly q(num.field_), r = num;
    const Scalar lead_inv = den.leading().inverse();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - den.degree());
        const Scalar k = r.leading() * lead_inv;
        q = q + Poly::constant(k).times_x(shift);
        r = r - den.scaled(k).times_x(shift);
    }
    return {q, r};
}

Poly Poly::exact_div(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw error("inexact polynomial division");
    return q;
}

bool Poly::divides(const Poly& den, const Poly& num) {
    return divmod(num, den).second.is_zero();
}

Poly Poly::gcd(Poly a, Poly b) {
    if (!(a.field_ == b.field_)) throw field_mismatch();
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.leading().inverse());
    return a;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Scalar& coeff = c_[k];
        if (coeff.is_zero()) continue;
        const bool neg = coeff.is_negative();
        const Scalar mag = neg ? -coeff : coeff;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str();
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace leavitt
