#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leavitt/algebra_element.hpp"
#include "leavitt/env_rcstar.hpp"
#include "leavitt/env_rw.hpp"
#include "leavitt/jacobson.hpp"
#include "leavitt/poly.hpp"
#include "leavitt/prufer.hpp"

namespace leavitt {

// Deterministic source of random test data. All draws go through the
// engine directly rather than the standard distributions, whose outputs
// differ between library implementations, so a seed pins the exact same
// inputs everywhere.
class RandomGen {
  public:
    explicit RandomGen(std::uint64_t seed) : eng_(seed) {}

    // Stable seed derivation: FNV-1a over the tag, xored with the base
    // seed and scrambled, so each suite sees an independent stream.
    static std::uint64_t mix(std::uint64_t seed, const std::string& tag);

    std::uint64_t next_u64() { return eng_(); }
    // Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi);
    bool coin() { return (next_u64() & 1) != 0; }

    Scalar scalar(const Field& f);
    Scalar nonzero_scalar(const Field& f);

    BasisWord basis_word(std::uint32_t max_exp);
    std::vector<Gen> free_word(std::size_t max_len);
    AlgebraElement algebra_element(const Field& f, int max_terms, std::uint32_t max_exp);
    JacobsonElement jacobson_element(const Field& f, int max_terms, std::uint32_t max_exp);

    Poly poly(const Field& f, long max_deg);
    Poly nonzero_poly(const Field& f, long max_deg);
    // Random polynomial with constant term 1.
    Poly unit_poly(const Field& f, long max_deg);

    EnvRwElement ew_element(const Field& f, long order, bool allow_exact);
    EnvRcstarElement theta(const Field& f, long order, long bound, bool allow_exact);
    // A random combination of the reduction kernel generators: pure q(-1)
    // components and the paired x^a at slot i with -x^(a+1) at slot i+1.
    EnvRcstarElement kernel_theta(const Field& f, long order, long bound);

    // A random socle element: combination of w, c^k d, d*(c*)^j and the
    // differences c^k (c*)^i - c^(k+1) (c*)^(i+1).
    AlgebraElement socle_element(const Field& f, std::uint32_t max_exp, int max_terms);

    PruferElement prufer_element(const Poly& modulus, long max_level);

  private:
    std::mt19937_64 eng_;
};

}  // namespace leavitt
