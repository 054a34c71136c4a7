#pragma once

#include <optional>
#include <string>

#include "leavitt/algebra_element.hpp"
#include "leavitt/laurent_series.hpp"
#include "leavitt/poly.hpp"

namespace leavitt {

// Truncation-scale model of the injective envelope of the left ideal
// generated by c*. An element is
//
//   d* c* q_{-1}(c*) + sum_{i >= 0} c^i c* q_i(c*)
//
// with polynomial components q_i. The series over i may be infinite; we
// store components up to a valid order, and the exact flag promises that
// everything beyond the stored support is zero. An optional declared degree
// bound caps deg q_i across the whole element, including the unknown
// components, which is what makes the anti-diagonal reduction well defined
// on truncated elements.
class EnvRcstarElement {
  public:
    EnvRcstarElement(const Field& f, long order, bool exact = false,
                     std::optional<long> bound = std::nullopt)
        : field_(f), q_minus1_(Poly::zero(f)), order_(order), exact_(exact), bound_(bound) {}

    static EnvRcstarElement zero(const Field& f) { return EnvRcstarElement(f, -1, true); }

    const Field& field() const { return field_; }
    long order() const { return order_; }
    bool exact() const { return exact_; }
    const std::optional<long>& bound() const { return bound_; }
    const Poly& q_minus1() const { return q_minus1_; }
    const std::map<long, Poly>& series() const { return series_; }

    void set_q_minus1(const Poly& q);
    // Series component at index i >= 0; unknown indices raise a precision
    // error.
    Poly q(long i) const;
    void set_q(long i, const Poly& p);
    // Attaches a declared degree bound; every stored component must already
    // respect it.
    EnvRcstarElement with_bound(long bound) const;

    bool is_zero_within_order() const { return q_minus1_.is_zero() && series_.empty(); }
    bool is_zero() const { return exact_ && is_zero_within_order(); }

    EnvRcstarElement operator+(const EnvRcstarElement& o) const;
    EnvRcstarElement operator-() const;
    EnvRcstarElement scaled(const Scalar& k) const;

    // Left action of a single generator. The component transformations are
    //   v:  q_{-1} <- 0
    //   w:  series cleared, exact
    //   c:  q_{i+1} <- q_i, q_0 <- 0, q_{-1} <- 0, order + 1
    //   c*: q_0 <- x q_0 + q_1, q_i <- q_{i+1}, q_{-1} <- 0, order - 1
    //   d:  q_0 <- q_{-1}, q_1 <- -x q_{-1}, rest zero, exact
    //   d*: q_{-1} <- q_0, series cleared, exact
    // A declared degree bound rises by one under c* and d and is preserved
    // otherwise.
    EnvRcstarElement act_gen(Gen g) const;

    // Left action of a ring element; words act letter by letter, rightmost
    // first.
    EnvRcstarElement act(const AlgebraElement& a) const;

    std::string str() const;

  private:
    Field field_;
    Poly q_minus1_;
    std::map<long, Poly> series_;  // nonzero components only
    long order_;
    bool exact_;
    std::optional<long> bound_;
};

bool agree(const EnvRcstarElement& a, const EnvRcstarElement& b);
bool agree_to_order(const EnvRcstarElement& a, const EnvRcstarElement& b, long order);

// Converts a ring element lying in the ideal generated by c* (words ending
// in at least one c*) to the finitely supported exact model element, and
// back.
EnvRcstarElement theta_embed(const AlgebraElement& a);
AlgebraElement theta_project(const EnvRcstarElement& t);

struct ThetaWitness {
    AlgebraElement r;
    EnvRcstarElement image;
};

// For nonzero t produces a ring element r with r*t a nonzero element of the
// ideal generated by c*, concentrated in the d* c* component. Elements that
// vanish within their valid order but are not exactly zero raise
// inconclusive_error; exact zeros raise error.
ThetaWitness essential_witness(const EnvRcstarElement& t);

// Solves p(c) * result = image up to the requested order, where p has
// constant term 1. The component recurrence convolves image with the series
// inverse of p. A truncated image must be valid to order + deg p.
EnvRcstarElement baer_extend(const Poly& p, const EnvRcstarElement& image, long order);

// Anti-diagonal reduction onto the Laurent series picture: the coefficient
// at exponent s collects every x^t coefficient of q_i with i - t = s. Needs
// a declared degree bound n; a truncated element must be valid to order >= n
// and the result is then valid to order - n.
LaurentSeriesElement reduce(const EnvRcstarElement& t);

// Canonical preimage of a reduced series under the given bound: component 0
// packs the exponents <= 0 as a polynomial, component i >= 1 is the constant
// at exponent i. Reducing the result recovers the series.
EnvRcstarElement theta_from_reduction(const LaurentSeriesElement& s, long bound);

// Whether p(c) * t vanishes within t's valid order; p must have constant
// term 1.
bool torsion_probe(const Poly& p, const EnvRcstarElement& t);

}  // namespace leavitt
