#include "gbss/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace gbss::io {

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw std::invalid_argument("expected rational as integer or \"p/q\" string, got " + j.dump());
}

Json rat_to_json(const Rat& r) { return rat_str(r); }

std::vector<Int> int_vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected integer array, got " + j.dump());
  std::vector<Int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("expected integer entry, got " + x.dump());
    out.push_back(x.get<long long>());
  }
  return out;
}

std::vector<Rat> rat_vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array, got " + j.dump());
  std::vector<Rat> out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

QMat qmat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected nonempty matrix, got " + j.dump());
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int k = 0; k < cols; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

Json qmat_to_json(const QMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

QPoly qpoly_from_json(const Json& j) {
  std::vector<Rat> coeffs;
  if (j.is_array())
    for (const auto& c : j) coeffs.push_back(rat_from_json(c));
  else
    coeffs.push_back(rat_from_json(j));
  return QPoly(std::move(coeffs));
}

Matrix<QPoly> pmat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected polynomial matrix");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  Matrix<QPoly> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int k = 0; k < cols; ++k) m(i, k) = qpoly_from_json(j[i][k]);
  }
  return m;
}

curve::LinearPoly linear_poly_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [slope, constant] pair, got " + j.dump());
  return curve::LinearPoly{rat_from_json(j[0]), rat_from_json(j[1])};
}

Json linear_poly_to_json(const curve::LinearPoly& p) {
  return Json::array({rat_to_json(p.slope), rat_to_json(p.constant)});
}

curve::CurveNumerics curve_from_json(const Json& j) {
  int components = j.at("components").get<int>();
  std::vector<std::pair<int, int>> nodes;
  if (j.contains("nodes"))
    for (const auto& n : j.at("nodes")) {
      if (!n.is_array() || n.size() != 2) throw std::invalid_argument("node must be a pair of components");
      nodes.emplace_back(n[0].get<int>(), n[1].get<int>());
    }
  std::vector<Int> pol = int_vec_from_json(j.at("polarization"));
  Int genus = j.at("genus").get<long long>();
  return curve::CurveNumerics::make(components, std::move(nodes), std::move(pol), genus);
}

std::vector<curve::ComponentFlag> component_flags_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : j.at("components");
  std::vector<curve::ComponentFlag> out;
  for (const auto& c : arr)
    out.push_back(curve::ComponentFlag{int_vec_from_json(c.at("weights")), int_vec_from_json(c.at("dims"))});
  return out;
}

TensorInput tensor_input_from_json(const Json& j) {
  Int a = j.at("a").get<long long>();
  int b = j.at("b").get<int>();
  int c = j.at("c").get<int>();
  Rat delta = rat_from_json(j.at("delta"));
  std::vector<Rat> ranks = rat_vec_from_json(j.at("ranks"));
  if (ranks.empty()) throw std::invalid_argument("tensor input: empty ranks");
  tensor::TensorShape shape = tensor::TensorShape::make(a, b, c, delta, ranks.back());
  std::vector<Rat> weights = rat_vec_from_json(j.at("weights"));
  // "hilbert" holds P_{F_1}..P_{F_p}, optionally followed by the total
  // P_F; otherwise the total comes from a separate "p_total" entry.
  std::vector<curve::LinearPoly> hilbert;
  for (const auto& h : j.at("hilbert")) hilbert.push_back(linear_poly_from_json(h));
  int p = static_cast<int>(weights.size());
  curve::LinearPoly p_total{Rat(0), Rat(0)};
  if (static_cast<int>(hilbert.size()) == p + 1) {
    p_total = hilbert.back();
    hilbert.pop_back();
  } else if (j.contains("p_total")) {
    p_total = linear_poly_from_json(j.at("p_total"));
  } else {
    throw std::invalid_argument("tensor input: need the total Hilbert polynomial as the last "
                                "\"hilbert\" entry or a \"p_total\" field");
  }
  std::set<std::vector<int>> admissible;
  for (const auto& tup : j.at("admissible")) {
    std::vector<int> t;
    for (const auto& ix : tup) t.push_back(ix.get<int>());
    admissible.insert(std::move(t));
  }
  return TensorInput{shape,
                     tensor::FiltrationWithOracle::make(shape, std::move(ranks), std::move(weights),
                                                        std::move(hilbert), std::move(admissible)),
                     p_total};
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    size_t pos = 0;
    long long v = std::stoll(cur, &pos);
    while (pos < cur.size() && std::isspace(static_cast<unsigned char>(cur[pos]))) ++pos;
    if (pos != cur.size()) throw std::invalid_argument("bad integer list entry '" + cur + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace gbss::io
