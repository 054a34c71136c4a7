#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leavitt/algebra_element.hpp"
#include "leavitt/poly.hpp"

namespace leavitt {

// A Laurent polynomial over the configured field, in the image variable of
// the quotient modulo the socle. Nonzero coefficients only.
class LaurentPoly {
  public:
    explicit LaurentPoly(const Field& f) : field_(f) {}

    static LaurentPoly zero(const Field& f) { return LaurentPoly(f); }
    static LaurentPoly one(const Field& f) { return mono(f, 0, Scalar::one(f)); }
    static LaurentPoly mono(const Field& f, long exp, const Scalar& coeff);
    static LaurentPoly from_poly(const Poly& p);

    const Field& field() const { return field_; }
    const std::map<long, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(long e) const;
    long min_exp() const;  // requires a nonzero value
    long max_exp() const;

    void add_term(long e, const Scalar& coeff);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Scalar& k) const;
    LaurentPoly shifted(long by) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "c") const;

  private:
    Field field_;
    std::map<long, Scalar> terms_;
};

// The quotient map modulo the socle: v -> 1, w -> 0, c^i (c*)^j -> c^(i-j),
// and every word containing d or d* -> 0.
LaurentPoly quotient_map(const AlgebraElement& e);

// Membership in the socle, the kernel of the quotient map.
bool is_in_socle(const AlgebraElement& e);

// Coefficients b_0..b_N of the multiplicative inverse of a polynomial with
// constant term 1, as a truncated power series.
class SeriesPrefix {
  public:
    SeriesPrefix(const Field& f, std::vector<Scalar> coeffs);
    const Field& field() const { return field_; }
    long order() const { return static_cast<long>(b_.size()) - 1; }
    Scalar coeff(std::size_t k) const;
    const std::vector<Scalar>& coeffs() const { return b_; }

  private:
    Field field_;
    std::vector<Scalar> b_;
};

// Series inverse of p up to the requested order: b_0 = 1 and
// sum_{j=0..N} p_j b_{N-j} = 0 for N >= 1. Requires p(0) = 1.
SeriesPrefix series_inverse(const Poly& p, unsigned order);

enum class FactorVerdict { Irreducible, FactorFound, Unverified };

struct FactorOutcome {
    FactorVerdict verdict;
    std::optional<Poly> factor;  // a proper factor with constant term 1
    std::string note;
};

// Irreducibility check for a polynomial with constant term 1 and degree >= 1.
// Over GF(p) the answer is exact up to degree 12 (exhaustive trial division
// by monic candidates). Over the rationals the answer is exact up to degree 4
// (rational-root search plus bounded quadratic-pair enumeration justified by
// the integer factor bound). Beyond those ranges the outcome is Unverified
// and the caller must acknowledge it explicitly.
FactorOutcome factor_check(const Poly& f);

}  // namespace leavitt
