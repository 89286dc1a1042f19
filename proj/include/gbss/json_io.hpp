#pragma once

// JSON conversions for the CLI: rationals travel as "p/q" strings,
// weights as integer arrays, matrices as row arrays. Polynomial entries
// are coefficient arrays, constant term first.

#include <json.hpp>

#include "gbss/curve.hpp"
#include "gbss/la.hpp"
#include "gbss/poly.hpp"
#include "gbss/tensor.hpp"

namespace gbss::io {

using Json = nlohmann::ordered_json;

Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& r);  // string "p/q"

std::vector<Int> int_vec_from_json(const Json& j);
std::vector<Rat> rat_vec_from_json(const Json& j);

QMat qmat_from_json(const Json& j);
Json qmat_to_json(const QMat& m);

QPoly qpoly_from_json(const Json& j);
Matrix<QPoly> pmat_from_json(const Json& j);

curve::LinearPoly linear_poly_from_json(const Json& j);  // [slope, constant]
Json linear_poly_to_json(const curve::LinearPoly& p);

curve::CurveNumerics curve_from_json(const Json& j);
std::vector<curve::ComponentFlag> component_flags_from_json(const Json& j);

struct TensorInput {
  tensor::TensorShape shape;
  tensor::FiltrationWithOracle filtration;
  curve::LinearPoly p_total;
};

TensorInput tensor_input_from_json(const Json& j);

/// Parses "1,0,-2" into a vector (ASCII minus).
std::vector<Int> parse_int_list(const std::string& s);

}  // namespace gbss::io
