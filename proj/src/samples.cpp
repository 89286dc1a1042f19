#include "gbss/samples.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gbss::samples {

Matrix<QPoly> random_unimodular_poly(Rng& rng, int r, int ops, int max_deg) {
  Matrix<QPoly> u(r, r);
  for (int i = 0; i < r; ++i) u(i, i) = QPoly(1);
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(rng.range(0, r - 1));
    int j = static_cast<int>(rng.range(0, r - 1));
    if (i == j) continue;
    std::vector<Rat> coeffs;
    for (int d = 0; d <= static_cast<int>(rng.range(0, max_deg)); ++d)
      coeffs.push_back(Rat(static_cast<long>(rng.range(-2, 2))));
    QPoly p{std::vector<Rat>(coeffs)};
    if (p.is_zero()) continue;
    // row_i += p * row_j
    for (int c = 0; c < r; ++c) u(i, c) = u(i, c) + p * u(j, c);
  }
  return u;
}

AlphaKInstance random_alpha_k_instance(Rng& rng, int r_min, int r_max, Int a_bound) {
  int r = static_cast<int>(rng.range(r_min, r_max));
  std::vector<Int> a(r);
  for (int i = 0; i < r; ++i) a[i] = rng.range(-a_bound, a_bound);

  Matrix<QPoly> d1(r, r), d2(r, r);
  for (int i = 0; i < r; ++i) {
    Int m = std::max<Int>(a[i], 0);
    d1(i, i) = QPoly::monomial(Rat(1), static_cast<int>(m));
    d2(i, i) = QPoly::monomial(Rat(1), static_cast<int>(m - a[i]));
  }
  Matrix<QPoly> u = random_unimodular_poly(rng, r);
  Matrix<QPoly> v = random_unimodular_poly(rng, r);
  AlphaKInstance out{pole::ValuationMatrixPair::make(u * d1 * v, u * d2 * v), a};
  std::sort(out.expected.begin(), out.expected.end());
  return out;
}

FlagSample random_flag_sample(Rng& rng) {
  FlagSample s;
  s.components = static_cast<int>(rng.range(2, 3));
  s.r = rng.range(2, 4);
  std::vector<curve::ComponentFlag> comps;
  bool nontrivial = false;
  for (int i = 0; i < s.components; ++i) {
    Int steps = rng.range(0, 2);  // q_i
    if (i + 1 == s.components && !nontrivial) steps = std::max<Int>(steps, 1);
    steps = std::min<Int>(steps, s.r - 1);
    if (steps > 0) nontrivial = true;

    curve::ComponentFlag flag;
    if (steps == 0) {
      flag.weights = {0};
      flag.dims = {s.r};
    } else {
      // distinct dims ending at r
      std::set<Int> dimset{s.r};
      while (static_cast<Int>(dimset.size()) < steps + 1) dimset.insert(rng.range(1, s.r - 1));
      flag.dims.assign(dimset.begin(), dimset.end());
      // strictly increasing raw weights, then scale by r and recentre so
      // the weighted trace vanishes
      std::vector<Int> raw;
      Int w = rng.range(-5, -1);
      for (Int k = 0; k <= steps; ++k) {
        raw.push_back(w);
        w += rng.range(1, 3);
      }
      Int trace = 0;
      for (size_t k = 0; k < raw.size(); ++k) {
        Int prev = k == 0 ? 0 : flag.dims[k - 1];
        trace += raw[k] * (flag.dims[k] - prev);
      }
      for (Int rw : raw) flag.weights.push_back(rw * s.r - trace);
    }
    comps.push_back(std::move(flag));
  }
  s.flags = curve::FlagInput::make(s.components, s.r, std::move(comps));

  // chi data for the merged filtration: one value per proper step
  std::vector<Int> mu;
  for (const auto& c : s.flags.comps)
    for (Int w : c.weights) mu.push_back(w);
  std::sort(mu.begin(), mu.end());
  mu.erase(std::unique(mu.begin(), mu.end()), mu.end());
  for (size_t j = 0; j + 1 < mu.size(); ++j) s.chi_list.push_back(rng.range(-6, 6));
  s.chi_total = rng.range(-8, -1);
  return s;
}

std::vector<Int> random_polarization(Rng& rng, int components) {
  std::vector<Int> d(components);
  for (auto& x : d) x = rng.range(1, 5);
  return d;
}

QMat random_sl(Rng& rng, int n, int ops) {
  QMat g = QMat::identity(n);
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(rng.range(0, n - 1));
    int j = static_cast<int>(rng.range(0, n - 1));
    if (i == j) continue;
    Rat c(static_cast<long>(rng.range(-2, 2)));
    if (c == 0) continue;
    QMat t = QMat::identity(n);
    t(i, j) = c;
    g = g * t;
  }
  return g;
}

QMat random_sp(Rng& rng, const QMat& omega, int ops) {
  int n = omega.rows();
  QMat g = QMat::identity(n);
  for (int k = 0; k < ops; ++k) {
    QMat v(n, 1);
    bool zero = true;
    for (int i = 0; i < n; ++i) {
      v(i, 0) = Rat(static_cast<long>(rng.range(-1, 1)));
      if (v(i, 0) != 0) zero = false;
    }
    if (zero) continue;
    Rat c(static_cast<long>(rng.range(-2, 2)));
    if (c == 0) continue;
    // symplectic transvection x -> x - c omega(v, x) v
    QMat t = QMat::identity(n) - (v * (v.transpose() * omega)).scaled(c);
    g = g * t;
  }
  return g;
}

QMat random_group_element(Rng& rng, const descent::GroupTag& tag, int n) {
  switch (tag.kind) {
    case descent::GroupKind::SL: return random_sl(rng, n);
    case descent::GroupKind::Sp: return random_sp(rng, tag.form);
    case descent::GroupKind::SO: break;
  }
  throw std::invalid_argument("random_group_element: unsupported group kind");
}

QMat random_nonmember(Rng& rng, const descent::GroupTag& tag, int n) {
  for (;;) {
    QMat g = random_group_element(rng, tag, n);
    int i = static_cast<int>(rng.range(0, n - 1));
    int j = static_cast<int>(rng.range(0, n - 1));
    g(i, j) += rng.nonzero_small_rational(2, 2);
    if (g.det() != 0 && !descent::in_group(tag, g)) return g;
  }
}

QMat random_invertible(Rng& rng, int n, Int bound) {
  for (;;) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rat(static_cast<long>(rng.range(-bound, bound)));
    if (m.det() != 0) return m;
  }
}

descent::GluingDatum datum_realizing(Rng& rng, const QMat& g) {
  int n = g.rows();
  QMat sigma1 = random_invertible(rng, n, 2);
  QMat sigma2 = random_invertible(rng, n, 2);
  QMat q2 = random_invertible(rng, n, 2);
  // g = -sigma2 q2^{-1} q1 sigma1^{-1}  =>  q1 = -q2 sigma2^{-1} g sigma1
  QMat q1 = (q2 * sigma2.inverse() * g * sigma1).scaled(Rat(-1));
  return descent::GluingDatum::make(std::move(sigma1), std::move(sigma2), std::move(q1), std::move(q2));
}

TensorSample random_tensor_sample(Rng& rng) {
  Int a = rng.range(1, 2);
  int b = static_cast<int>(rng.range(1, 2));
  int p = static_cast<int>(rng.range(1, 2));

  // strictly increasing integers a*r_i
  std::set<Int> ar;
  ar.insert(rng.range(p + 1, 4 * a));  // top, with room for p smaller values
  while (static_cast<int>(ar.size()) < p + 1) {
    Int v = rng.range(1, *ar.rbegin() - 1);
    ar.insert(v);
  }
  std::vector<Rat> ranks;
  for (Int v : ar) ranks.push_back(ratio(static_cast<long>(v), static_cast<long>(a)));

  Rat delta = ratio(static_cast<long>(rng.range(1, 9)), static_cast<long>(rng.range(1, 4)));
  tensor::TensorShape shape = tensor::TensorShape::make(a, b, 1, delta, ranks.back());

  std::vector<Rat> weights;
  for (int i = 0; i < p; ++i)
    weights.push_back(ratio(static_cast<long>(rng.range(1, 6)), static_cast<long>(rng.range(1, 3))));

  std::vector<curve::LinearPoly> hilbert;
  for (int i = 0; i < p; ++i)
    hilbert.push_back(curve::LinearPoly{Rat(static_cast<long>(rng.range(1, 6))),
                                        Rat(static_cast<long>(rng.range(-4, 4)))});

  // upward-closed admissible set: union of one or two corner cones
  std::set<std::vector<int>> admissible;
  int cones = static_cast<int>(rng.range(1, 2));
  std::vector<std::vector<int>> corners{std::vector<int>(b, p + 1)};
  for (int k = 0; k < cones; ++k) {
    std::vector<int> corner(b);
    for (int t = 0; t < b; ++t) corner[t] = static_cast<int>(rng.range(1, p + 1));
    corners.push_back(std::move(corner));
  }
  std::vector<int> tup(b, 1);
  for (;;) {
    for (const auto& corner : corners) {
      bool above = true;
      for (int t = 0; t < b; ++t)
        if (tup[t] < corner[t]) { above = false; break; }
      if (above) {
        admissible.insert(tup);
        break;
      }
    }
    int t = b - 1;
    while (t >= 0 && tup[t] == p + 1) tup[t--] = 1;
    if (t < 0) break;
    ++tup[t];
  }

  curve::LinearPoly p_total{Rat(static_cast<long>(rng.range(2, 8))), Rat(static_cast<long>(rng.range(-4, 4)))};
  return TensorSample{shape,
                      tensor::FiltrationWithOracle::make(shape, std::move(ranks), std::move(weights),
                                                         std::move(hilbert), std::move(admissible)),
                      p_total};
}

}  // namespace gbss::samples
