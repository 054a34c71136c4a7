#pragma once

#include <string>

#include "leavitt/laurent.hpp"

namespace leavitt {

// A truncated formal Laurent series: finitely many negative-exponent
// (principal) coefficients plus a tail tracked up to a valid order.
// Coefficients beyond the valid order are unknown, not zero, unless the
// exact flag is set, in which case everything outside the stored support is
// zero. Every operation computes the exact output order, and comparisons
// only ever look at the overlap both sides actually know.
class LaurentSeriesElement {
  public:
    LaurentSeriesElement(const Field& f, long order, bool exact = false)
        : field_(f), order_(order), exact_(exact) {}

    const Field& field() const { return field_; }
    long order() const { return order_; }
    bool exact() const { return exact_; }
    const std::map<long, Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(long e) const;

    // Sets a coefficient; e must not exceed the valid order unless the
    // element is exact.
    void set_coeff(long e, const Scalar& k);

    bool is_zero_within_order() const { return coeffs_.empty(); }
    // Largest m with a nonzero coefficient at exponent -m (0 when the
    // principal part vanishes).
    long principal_length() const;

    LaurentSeriesElement operator+(const LaurentSeriesElement& o) const;
    LaurentSeriesElement operator-() const;
    LaurentSeriesElement scaled(const Scalar& k) const;
    // Multiplication by a Laurent polynomial; a truncated result is valid to
    // order + min_exp(p).
    LaurentSeriesElement times(const LaurentPoly& p) const;

    std::string str(const std::string& var = "c") const;

  private:
    Field field_;
    std::map<long, Scalar> coeffs_;
    long order_;
    bool exact_;
};

// Agreement on the overlap: equal coefficients at every exponent up to
// min(valid orders), where an exact side is valid everywhere.
bool agree(const LaurentSeriesElement& a, const LaurentSeriesElement& b);
bool agree_to_order(const LaurentSeriesElement& a, const LaurentSeriesElement& b, long order);

// Whether p(image of c) * t vanishes within t's valid order; p must have
// constant term 1. Nonzero series always fail this, which is how the
// harness certifies the absence of torsion.
bool torsion_probe(const Poly& p, const LaurentSeriesElement& t);

}  // namespace leavitt
