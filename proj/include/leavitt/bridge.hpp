#pragma once

#include "leavitt/algebra_element.hpp"
#include "leavitt/jacobson.hpp"

namespace leavitt {

// The mutually inverse isomorphisms between K<X,Y | XY = 1> and the path
// algebra presentation. Forward: X -> c* + d*, Y -> c + d. Backward images
// of the generators: v -> YX, w -> 1 - YX, c -> Y^2 X, c* -> Y X^2,
// d -> Y - Y^2 X, d* -> X - Y X^2.
AlgebraElement to_leavitt(const JacobsonElement& e);
JacobsonElement to_jacobson(const AlgebraElement& e);

// Image of the i-th basis vector of the w-envelope series module under the
// backward map: i = -1 gives 1 - YX (the image of w), i >= 0 gives
// Y^(i+1) (1 - YX) = Y^(i+1) - Y^(i+2) X (the image of c^i d).
JacobsonElement env_rw_basis_to_jacobson(const Field& f, long i);

}  // namespace leavitt
