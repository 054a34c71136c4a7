#pragma once

#include <optional>
#include <vector>

#include "leavitt/algebra_element.hpp"
#include "leavitt/env_rw.hpp"

namespace leavitt {

// Decomposition of a socle element along the direct sum
//
//   soc = Rw (+) sum_{i >= 0} R d*(c*)^i,
//
// where every summand is a copy of the ideal generated by w. The projection
// onto Rw is right multiplication by w; the projection onto the i-th summand
// is right multiplication by the idempotent c^i d d* (c*)^i. Component i is
// stored through its Rw coordinate r_i = x * c^i d, so the actual summand of
// x is r_i * d*(c*)^i.
class SocleVector {
  public:
    SocleVector(EnvRwElement w_part, std::vector<EnvRwElement> components)
        : w_part_(std::move(w_part)), components_(std::move(components)) {}

    const Field& field() const { return w_part_.field(); }
    // x * w, the coordinate of x in the Rw summand.
    const EnvRwElement& w_part() const { return w_part_; }
    // r_i = x * c^i d for i = 0 .. components().size() - 1.
    const std::vector<EnvRwElement>& components() const { return components_; }

    // The i-th summand of x as a ring element, r_i * d*(c*)^i.
    AlgebraElement actual(std::size_t i) const;

    // w_part + sum_i actual(i); equal to x exactly when x lies in the socle.
    AlgebraElement reassemble() const;

  private:
    EnvRwElement w_part_;
    std::vector<EnvRwElement> components_;
};

// The idempotent c^i d d* (c*)^i projecting onto the i-th summand, expanded
// into basis form.
AlgebraElement socle_idempotent(const Field& f, std::uint32_t i);

// Componentwise decomposition of x, checked by reassembly; nullopt when x is
// not in the socle.
std::optional<SocleVector> try_socle_decompose(const AlgebraElement& x);

// Same, but x must already pass the quotient-map membership test; reassembly
// is then asserted rather than reported.
SocleVector socle_decompose(const AlgebraElement& x);

}  // namespace leavitt
