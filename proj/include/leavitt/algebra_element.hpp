#pragma once

#include <map>
#include <string>

#include "leavitt/basis_word.hpp"
#include "leavitt/scalar.hpp"

namespace leavitt {

// A finite K-linear combination of canonical basis words, kept in normal
// form: the term map never stores zero coefficients, and iteration follows
// the fixed term order on BasisWord, so printing is deterministic.
class AlgebraElement {
  public:
    explicit AlgebraElement(const Field& f) : field_(f) {}

    static AlgebraElement zero(const Field& f) { return AlgebraElement(f); }
    // The multiplicative identity v + w.
    static AlgebraElement one(const Field& f);
    static AlgebraElement word(const Field& f, const BasisWord& w);
    static AlgebraElement word(const Field& f, const BasisWord& w, const Scalar& coeff);
    static AlgebraElement generator(const Field& f, Gen g);

    const Field& field() const { return field_; }
    const std::map<BasisWord, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const BasisWord& w) const;
    // Largest exponent appearing in any term (0 for scalars of v, w, d, d*).
    std::uint32_t max_exp() const;

    void add_term(const BasisWord& w, const Scalar& coeff);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& k) const;
    AlgebraElement pow(std::uint32_t n) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Field field_;
    std::map<BasisWord, Scalar> terms_;
};

// Structured product of two basis words as an AlgebraElement over f.
AlgebraElement word_mul(const BasisWord& a, const BasisWord& b, const Field& f);

}  // namespace leavitt
