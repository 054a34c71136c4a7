#pragma once

#include <string>

#include "leavitt/algebra_element.hpp"

namespace leavitt {

// Truncation-scale model of the injective envelope of the left ideal
// generated by w. An element is
//
//   k_{-1} w + sum_{i >= 0} k_i c^i d
//
// where the tail may be infinite. We store the tail coefficients up to a
// valid order; the exact flag promises that everything beyond the stored
// support is zero. The ideal itself sits inside as the finitely supported
// exact elements.
class EnvRwElement {
  public:
    EnvRwElement(const Field& f, long order, bool exact = false)
        : field_(f), k_minus1_(Scalar::zero(f)), order_(order), exact_(exact) {}

    static EnvRwElement zero(const Field& f) { return EnvRwElement(f, -1, true); }

    const Field& field() const { return field_; }
    long order() const { return order_; }
    bool exact() const { return exact_; }
    const Scalar& k_minus1() const { return k_minus1_; }
    const std::map<long, Scalar>& tail() const { return tail_; }

    void set_k_minus1(const Scalar& k) { k_minus1_ = k; }
    // Tail coefficient at index i >= 0; unknown indices raise a precision
    // error.
    Scalar tail_coeff(long i) const;
    void set_tail_coeff(long i, const Scalar& k);

    bool is_zero_within_order() const { return k_minus1_.is_zero() && tail_.empty(); }
    bool is_zero() const { return exact_ && is_zero_within_order(); }

    EnvRwElement operator+(const EnvRwElement& o) const;
    EnvRwElement operator-() const;
    EnvRwElement scaled(const Scalar& k) const;

    // Left action of a single generator, with the truncation-order and
    // exactness bookkeeping described in act().
    EnvRwElement act_gen(Gen g) const;

    // Left action of a ring element. Words act letter by letter, rightmost
    // first. Multiplying by c raises the known order by one, c* lowers it
    // by one, and w, d, d* give exact results because they collapse the
    // infinite tail.
    EnvRwElement act(const AlgebraElement& a) const;

    std::string str() const;

  private:
    Field field_;
    Scalar k_minus1_;
    std::map<long, Scalar> tail_;  // nonzero entries only
    long order_;
    bool exact_;
};

bool agree(const EnvRwElement& a, const EnvRwElement& b);
bool agree_to_order(const EnvRwElement& a, const EnvRwElement& b, long order);

// Converts a ring element lying in the ideal (span of w and the words
// c^i d) to the finitely supported exact model element, and back.
EnvRwElement ew_embed(const AlgebraElement& a);
AlgebraElement ew_project(const EnvRwElement& m);

struct EwWitness {
    AlgebraElement r;
    EnvRwElement image;
};

// For nonzero m produces a ring element r with r*m a nonzero multiple of w,
// witnessing that the ideal generated by w meets every nonzero submodule.
// Elements that vanish within their valid order but are not exactly zero
// raise inconclusive_error; exact zeros raise error.
EwWitness essential_witness(const EnvRwElement& m);

}  // namespace leavitt
