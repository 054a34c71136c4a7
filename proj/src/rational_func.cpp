#include "leavitt/rational_func.hpp"

#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

RationalFunc RationalFunc::zero(const Field& f) {
    return RationalFunc(Poly::zero(f), Poly::one(f));
}

RationalFunc RationalFunc::one(const Field& f) {
    return RationalFunc(Poly::one(f), Poly::one(f));
}

RationalFunc RationalFunc::of(const Poly& num, const Poly& den) {
    if (!(num.field() == den.field())) throw field_mismatch();
    if (den.is_zero()) throw division_by_zero();
    if (num.is_zero()) return zero(num.field());
    Poly g = Poly::gcd(num, den);
    Poly n = Poly::exact_div(num, g);
    Poly d = Poly::exact_div(den, g);
    Scalar lead = d.leading();
    n = n.scaled(lead.inverse());
    d = d.scaled(lead.inverse());
    return RationalFunc(std::move(n), std::move(d));
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
    return of(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const {
    return *this + (-o);
}

RationalFunc RationalFunc::operator-() const {
    return RationalFunc(-num_, den_);
}

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
    return of(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
    if (o.is_zero()) throw division_by_zero();
    return of(num_ * o.den_, den_ * o.num_);
}

RationalFunc RationalFunc::scaled(const Scalar& k) const {
    if (k.is_zero()) return zero(field());
    return RationalFunc(num_.scaled(k), den_);
}

bool RationalFunc::operator==(const RationalFunc& o) const {
    // Both sides are canonical, but cross multiply anyway so the check does
    // not silently depend on the normalization.
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunc::str(const std::string& var) const {
    if (den_ == Poly::one(field())) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ") / (" << den_.str(var) << ")";
    return os.str();
}

RationalFunc laurent_act(const LaurentPoly& p, const RationalFunc& g) {
    if (!(p.field() == g.field())) throw field_mismatch();
    RationalFunc acc = RationalFunc::zero(g.field());
    for (const auto& [e, k] : p.terms()) {
        Poly num = Poly::one(g.field());
        Poly den = Poly::one(g.field());
        if (e >= 0)
            num = Poly::x(g.field()).pow(e);
        else
            den = Poly::x(g.field()).pow(-e);
        acc = acc + (RationalFunc::of(num, den).scaled(k) * g);
    }
    return acc;
}

RationalFunc rational_act(const AlgebraElement& a, const RationalFunc& g) {
    return laurent_act(quotient_map(a), g);
}

}  // namespace leavitt
