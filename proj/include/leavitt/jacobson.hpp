#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "leavitt/scalar.hpp"

namespace leavitt {

// A basis monomial Y^y X^x of the algebra K<X,Y | XY = 1>.
struct YXMono {
    std::uint32_t y = 0, x = 0;
    auto operator<=>(const YXMono&) const = default;
    std::string str() const;
};

// An element of K<X,Y | XY = 1> in its monomial basis {Y^i X^j}. Products
// reduce through the middle: X^j Y^k = X^(j-k) when j >= k, else Y^(k-j).
class JacobsonElement {
  public:
    explicit JacobsonElement(const Field& f) : field_(f) {}

    static JacobsonElement zero(const Field& f) { return JacobsonElement(f); }
    static JacobsonElement one(const Field& f) { return mono(f, {0, 0}); }
    static JacobsonElement mono(const Field& f, YXMono m);
    static JacobsonElement mono(const Field& f, YXMono m, const Scalar& coeff);
    static JacobsonElement x(const Field& f) { return mono(f, {0, 1}); }
    static JacobsonElement y(const Field& f) { return mono(f, {1, 0}); }

    const Field& field() const { return field_; }
    const std::map<YXMono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(YXMono m) const;

    void add_term(YXMono m, const Scalar& coeff);

    JacobsonElement operator+(const JacobsonElement& o) const;
    JacobsonElement operator-(const JacobsonElement& o) const;
    JacobsonElement operator-() const;
    JacobsonElement operator*(const JacobsonElement& o) const;
    JacobsonElement scaled(const Scalar& k) const;
    JacobsonElement pow(std::uint32_t n) const;

    bool operator==(const JacobsonElement& o) const;
    bool operator!=(const JacobsonElement& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Field field_;
    std::map<YXMono, Scalar> terms_;
};

}  // namespace leavitt
