#pragma once

#include <string>

#include "leavitt/algebra_element.hpp"
#include "leavitt/laurent.hpp"
#include "leavitt/poly.hpp"

namespace leavitt {

// An element of the Pruefer-style module attached to an irreducible
// polynomial f with constant term 1: the union of the chain of Laurent
// quotients modulo f^n, with consecutive stages glued by multiplication by
// f. Canonical form: the residue is a plain polynomial of degree below
// n * deg f (the invertibility of x modulo f^n eliminates negative powers),
// and the level n is minimal, meaning f no longer divides the residue, with
// the zero element pinned at level 1.
class PruferElement {
  public:
    // Certifies irreducibility of f through the factor check. When the
    // check is inconclusive the caller must pass acknowledge_unverified;
    // the flag is carried so downstream output can say so.
    static PruferElement make(const Poly& f, long level, const Poly& residue,
                              bool acknowledge_unverified = false);

    const Field& field() const { return f_.field(); }
    const Poly& f() const { return f_; }
    long level() const { return level_; }
    const Poly& residue() const { return residue_; }
    bool unverified_acknowledged() const { return ack_unverified_; }
    bool is_zero() const { return residue_.is_zero(); }

    PruferElement operator+(const PruferElement& o) const;
    PruferElement operator-() const;
    PruferElement scaled(const Scalar& k) const;
    bool operator==(const PruferElement& o) const;

    // Left action of a ring element, through the Laurent quotient; the
    // socle acts as zero.
    PruferElement act(const AlgebraElement& a) const;
    PruferElement act_laurent(const LaurentPoly& p) const;
    PruferElement act_poly(const Poly& p) const;

    // An element one level up whose product with f is this element.
    PruferElement divisibility_witness() const;

    std::string str() const;

  private:
    PruferElement(Poly f, long level, Poly residue, bool ack)
        : f_(std::move(f)), level_(level), residue_(std::move(residue)), ack_unverified_(ack) {}

    static PruferElement canonical(const Poly& f, long level, const Poly& residue, bool ack);

    Poly f_;
    long level_;
    Poly residue_;
    bool ack_unverified_;
};

}  // namespace leavitt
