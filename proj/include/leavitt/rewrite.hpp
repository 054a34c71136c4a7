#pragma once

#include <cstddef>
#include <vector>

#include "leavitt/algebra_element.hpp"

namespace leavitt {

// A word in the free algebra on the six generators, before any relation is
// applied. The empty word is the identity v + w.
using FreeWord = std::vector<Gen>;

// Reduces a free word to normal form by exhaustive application of the
// defining relations (two-letter rewriting, with d d* -> v - c c* the only
// branching rule). This is deliberately independent of the structured
// product table so the two can cross-check each other.
//
// The step budget guards against non-termination; the default is
// 10 * len(word)^2 rewriting steps. Exceeding it raises an error.
AlgebraElement rewrite_oracle(const FreeWord& word, const Field& f);
AlgebraElement rewrite_oracle(const FreeWord& word, const Field& f, std::size_t step_budget);

}  // namespace leavitt
