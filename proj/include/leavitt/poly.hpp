#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leavitt/scalar.hpp"

namespace leavitt {

// A dense univariate polynomial over the configured field, stored without
// trailing zero coefficients (the zero polynomial stores nothing and has
// degree -1).
class Poly {
  public:
    explicit Poly(const Field& f) : field_(f) {}

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return constant(Scalar::one(f)); }
    static Poly x(const Field& f);
    static Poly constant(const Scalar& k);
    static Poly from_coeffs(const Field& f, std::vector<Scalar> coeffs);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    Scalar coeff(std::size_t k) const;
    Scalar constant_term() const { return coeff(0); }
    Scalar leading() const;
    // True when the constant term is 1 (the normalization every series
    // denominator and Prüfer parameter in this library requires).
    bool unit_constant_term() const { return constant_term().is_one(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& k) const;
    Poly times_x(std::size_t n = 1) const;
    Poly pow(std::uint32_t n) const;

    Scalar eval(const Scalar& at) const;

    // Quotient and remainder with deg(r) < deg(den); den must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    // True exact division; throws when the remainder is nonzero.
    static Poly exact_div(const Poly& num, const Poly& den);
    static bool divides(const Poly& den, const Poly& num);
    // Monic greatest common divisor.
    static Poly gcd(Poly a, Poly b);

    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    Field field_;
    std::vector<Scalar> c_;
};

}  // namespace leavitt
