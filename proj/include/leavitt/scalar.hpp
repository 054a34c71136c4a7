#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "leavitt/error.hpp"

namespace leavitt {

// The coefficient field K: the rationals, or a prime field GF(p). A Field is
// a runtime configuration value shared by a whole computation; every element
// type carries one so mixed-field arithmetic can be rejected explicitly.
class Field {
  public:
    static Field rationals() { return Field(0); }
    // Checks primality by trial division. p must satisfy 2 <= p < 2^31 so
    // residue products never overflow 64-bit arithmetic.
    static Field gf(std::uint64_t p);
    // Accepts "q" or "gf:<p>".
    static Field parse(const std::string& text);

    bool is_rationals() const { return p_ == 0; }
    std::uint64_t prime() const { return p_; }  // 0 for the rationals

    bool operator==(const Field&) const = default;
    std::string str() const { return p_ == 0 ? "q" : "gf:" + std::to_string(p_); }

  private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

// An exact element of the configured field. Rationals are arbitrary-precision
// and always stored reduced with positive denominator; GF(p) residues live in
// [0, p). All arithmetic is exact; there is no floating point anywhere.
class Scalar {
  public:
    Scalar() : field_(Field::rationals()), v_(mpq_class(0)) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long n);
    // Accepts an optionally signed integer "n" or fraction "a/b" (in GF(p),
    // a/b means a * b^-1).
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // For the rationals: true when the value is negative. Used only for
    // sign-aware printing; GF(p) residues report false.
    bool is_negative() const;

    std::string str() const;

  private:
    Scalar(const Field& f, mpq_class q) : field_(f), v_(std::move(q)) {}
    Scalar(const Field& f, std::uint64_t r) : field_(f), v_(r) {}
    void check_same_field(const Scalar& o) const;
    const mpq_class& q() const { return std::get<mpq_class>(v_); }
    std::uint64_t r() const { return std::get<std::uint64_t>(v_); }

    Field field_;
    std::variant<mpq_class, std::uint64_t> v_;
};

}  // namespace leavitt
