#include "leavitt/catalog.hpp"

namespace leavitt {

const std::vector<ModuleDescriptor>& module_catalog() {
    static const std::vector<ModuleDescriptor> entries = {
        {"env-w",
         "injective envelope of the left ideal generated by w; elements are "
         "k(-1) w + sum_i k(i) c^i d with a possibly infinite tail",
         "K[[Y]] (1 - YX), the power series column with 1 - YX as socle",
         "truncated at a configurable tail order"},
        {"rational",
         "K(c), the field of rational functions in the invertible image of "
         "c, pulled back along the quotient modulo the socle",
         "K(X) with X acting as the variable",
         "exact; no truncation involved"},
        {"prufer",
         "U^f, the union of the Laurent quotients modulo f^n glued by "
         "multiplication by f, for an irreducible f with constant term 1",
         "direct limit of K[X, X^-1] / f^n(X) K[X, X^-1]",
         "parametrized by the modulus f; levels are minimized canonically"},
    };
    return entries;
}

}  // namespace leavitt
