#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace leavitt {

// The six generators of the algebra: the vertices v, w, the loop c at v, the
// edge d from v to w, and their ghost edges c*, d*.
enum class Gen : std::uint8_t { V, W, C, Cstar, D, Dstar };

std::string gen_name(Gen g);

// Canonical shapes of the K-basis, listed in the fixed total order used for
// printing and term iteration:
//   v < w < c^i < (c*)^j < c^i(c*)^j < d < c^i d < d* < d*(c*)^j
// with lexicographic comparison of exponents inside a shape.
enum class Shape : std::uint8_t { V, W, C, Cstar, CCstar, D, CD, Dstar, DstarCstar };

// One canonical basis monomial. Exponents are >= 1 wherever the shape shows
// them; degenerate requests normalize to the smaller shape at construction
// (c_pow(0) is v, c_d(0) is d, and so on), so equal monomials always compare
// equal.
class BasisWord {
  public:
    static BasisWord v() { return {Shape::V, 0, 0}; }
    static BasisWord w() { return {Shape::W, 0, 0}; }
    static BasisWord d() { return {Shape::D, 0, 0}; }
    static BasisWord dstar() { return {Shape::Dstar, 0, 0}; }
    static BasisWord c_pow(std::uint32_t i);                         // c^i
    static BasisWord cstar_pow(std::uint32_t j);                     // (c*)^j
    static BasisWord c_cstar(std::uint32_t i, std::uint32_t j);      // c^i (c*)^j
    static BasisWord c_d(std::uint32_t i);                           // c^i d
    static BasisWord dstar_cstar(std::uint32_t j);                   // d* (c*)^j

    Shape shape() const { return shape_; }
    std::uint32_t c_exp() const { return i_; }
    std::uint32_t cstar_exp() const { return j_; }

    // Largest exponent appearing in the word (0 for v, w, d, d*).
    std::uint32_t max_exp() const { return i_ > j_ ? i_ : j_; }

    // The word as a product of generators, for the rewriting oracle and the
    // series-module actions.
    std::vector<Gen> letters() const;

    auto operator<=>(const BasisWord&) const = default;

    std::string str() const;

  private:
    BasisWord(Shape s, std::uint32_t i, std::uint32_t j) : shape_(s), i_(i), j_(j) {}

    Shape shape_;
    std::uint32_t i_, j_;
};

struct WordProductTerm {
    BasisWord word;
    int sign;  // +1 or -1
};

// Normal form of the product of two basis words. At most two terms; the
// two-term case is d d* = v - c c* propagated through the word shapes.
std::vector<WordProductTerm> word_mul_terms(const BasisWord& a, const BasisWord& b);

}  // namespace leavitt
