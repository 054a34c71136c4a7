#pragma once

#include <json.hpp>

#include "leavitt/algebra_element.hpp"
#include "leavitt/env_rcstar.hpp"
#include "leavitt/env_rw.hpp"
#include "leavitt/jacobson.hpp"
#include "leavitt/laurent_series.hpp"
#include "leavitt/prufer.hpp"
#include "leavitt/rational_func.hpp"

namespace leavitt {

// All serialization goes through ordered JSON so repeated runs print keys
// in a stable order. Scalars are strings ("3", "-1/2"), polynomials are
// expression strings in x ("1 + x^2"), and module elements carry their
// truncation metadata.
using json = nlohmann::ordered_json;

json scalar_to_json(const Scalar& k);
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, const Field& f);

json algebra_to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const json& j, const Field& f);

json jacobson_to_json(const JacobsonElement& a);
JacobsonElement jacobson_from_json(const json& j, const Field& f);

json ew_to_json(const EnvRwElement& m);
EnvRwElement ew_from_json(const json& j, const Field& f);

json theta_to_json(const EnvRcstarElement& t);
EnvRcstarElement theta_from_json(const json& j, const Field& f);

json prufer_to_json(const PruferElement& t);
PruferElement prufer_from_json(const json& j, const Field& f);

json rational_to_json(const RationalFunc& g);
RationalFunc rational_from_json(const json& j, const Field& f);

json laurent_series_to_json(const LaurentSeriesElement& s);

}  // namespace leavitt
