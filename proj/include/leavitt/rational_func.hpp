#pragma once

#include <string>

#include "leavitt/algebra_element.hpp"
#include "leavitt/laurent.hpp"
#include "leavitt/poly.hpp"

namespace leavitt {

// An element of the rational function field K(x), kept in lowest terms with
// a monic denominator so equality is plain structural equality.
class RationalFunc {
  public:
    static RationalFunc zero(const Field& f);
    static RationalFunc one(const Field& f);
    static RationalFunc of(const Poly& num, const Poly& den);
    static RationalFunc of_poly(const Poly& num) { return of(num, Poly::one(num.field())); }

    const Field& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunc operator+(const RationalFunc& o) const;
    RationalFunc operator-(const RationalFunc& o) const;
    RationalFunc operator-() const;
    RationalFunc operator*(const RationalFunc& o) const;
    RationalFunc operator/(const RationalFunc& o) const;
    RationalFunc scaled(const Scalar& k) const;
    bool operator==(const RationalFunc& o) const;

    std::string str(const std::string& var = "c") const;

  private:
    RationalFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

// Action of the algebra on K(x) through the Laurent quotient: words are
// first pushed to polynomials in the invertible image of c, then multiply
// the function. Negative powers divide by x.
RationalFunc rational_act(const AlgebraElement& a, const RationalFunc& g);
RationalFunc laurent_act(const LaurentPoly& p, const RationalFunc& g);

}  // namespace leavitt
