#include "gbss/descent.hpp"

#include <stdexcept>

namespace gbss::descent {

namespace {

QMat require_square(QMat m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument(std::string(what) + ": expected nonempty square matrix");
  return m;
}

// sum over slots of I x ... x Y x ... x I applied to v, dim n per slot.
std::vector<Rat> leibniz_apply(const QMat& y, int d, int n, const std::vector<Rat>& v) {
  std::vector<Rat> out(v.size(), Rat(0));
  std::vector<long> stride(d);
  long s = 1;
  for (int k = d - 1; k >= 0; --k) {
    stride[k] = s;
    s *= n;
  }
  for (long index = 0; index < static_cast<long>(v.size()); ++index) {
    if (v[index] == 0) continue;
    long rest = index;
    std::vector<int> idx(d);
    for (int k = d - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rest % n);
      rest /= n;
    }
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < n; ++i) {
        const Rat& c = y(i, idx[k]);
        if (c == 0) continue;
        out[index + (i - idx[k]) * stride[k]] += c * v[index];
      }
  }
  return out;
}

}  // namespace

std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::SL: return "sl";
    case GroupKind::Sp: return "sp";
    case GroupKind::SO: return "so";
  }
  return "?";
}

GroupKind group_kind_from_name(const std::string& s) {
  if (s == "sl" || s == "SL") return GroupKind::SL;
  if (s == "sp" || s == "Sp" || s == "SP") return GroupKind::Sp;
  if (s == "so" || s == "SO") return GroupKind::SO;
  throw std::invalid_argument("unknown group kind '" + s + "'");
}

GroupTag GroupTag::sl() { return GroupTag{GroupKind::SL, QMat()}; }

GroupTag GroupTag::sp(QMat omega) {
  omega = require_square(std::move(omega), "symplectic form");
  if (!(omega.transpose() == omega.scaled(Rat(-1))))
    throw std::invalid_argument("symplectic form must be antisymmetric");
  if (omega.det() == 0) throw std::invalid_argument("symplectic form must be nondegenerate");
  return GroupTag{GroupKind::Sp, std::move(omega)};
}

GroupTag GroupTag::so(QMat s) {
  s = require_square(std::move(s), "symmetric form");
  if (!(s.transpose() == s)) throw std::invalid_argument("orthogonal form must be symmetric");
  if (s.det() == 0) throw std::invalid_argument("orthogonal form must be nondegenerate");
  return GroupTag{GroupKind::SO, std::move(s)};
}

QMat standard_symplectic_form(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("symplectic form needs even dimension");
  QMat w(n, n);
  int k = n / 2;
  for (int i = 0; i < k; ++i) {
    w(i, k + i) = 1;
    w(k + i, i) = -1;
  }
  return w;
}

GluingDatum GluingDatum::make(QMat sigma1, QMat sigma2, QMat q1, QMat q2) {
  sigma1 = require_square(std::move(sigma1), "sigma1");
  int r = sigma1.rows();
  auto check = [r](const QMat& m, const char* what) {
    if (m.rows() != r || m.cols() != r)
      throw std::invalid_argument(std::string(what) + ": size mismatch");
  };
  check(sigma2, "sigma2");
  check(q1, "q1");
  check(q2, "q2");
  if (sigma1.det() == 0 || sigma2.det() == 0)
    throw std::invalid_argument("trivializations sigma must be invertible");
  QMat stacked(r, 2 * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      stacked(i, j) = q1(i, j);
      stacked(i, r + j) = q2(i, j);
    }
  if (stacked.rank() != r) throw std::invalid_argument("(q1, q2) must be jointly surjective");
  return GluingDatum{r, std::move(sigma1), std::move(sigma2), std::move(q1), std::move(q2)};
}

std::optional<QMat> gluing_element(const GluingDatum& d) {
  if (d.q2.det() == 0) return std::nullopt;
  return d.sigma2.scaled(Rat(-1)) * d.q2.inverse() * d.q1 * d.sigma1.inverse();
}

bool in_group(const GroupTag& tag, const QMat& g) {
  if (g.rows() != g.cols() || g.rows() == 0) throw std::invalid_argument("in_group: not square");
  if (tag.kind != GroupKind::SL && g.rows() != tag.form.rows())
    throw std::invalid_argument("in_group: matrix size does not match form");
  switch (tag.kind) {
    case GroupKind::SL: return g.det() == 1;
    case GroupKind::Sp: return g.transpose() * tag.form * g == tag.form;
    case GroupKind::SO: return g.transpose() * tag.form * g == tag.form && g.det() == 1;
  }
  return false;
}

namespace {

bool kappa_scalar_condition(const GluingDatum& d) {
  Rat k1 = d.q1.det() / d.sigma1.det();
  Rat k2 = d.q2.det() / d.sigma2.det();
  if (d.r % 2 == 1) k2 = -k2;
  return k1 == k2;
}

QMat kernel_basis(const GluingDatum& d) {
  QMat stacked(d.r, 2 * d.r);
  for (int i = 0; i < d.r; ++i)
    for (int j = 0; j < d.r; ++j) {
      stacked(i, j) = d.q1(i, j);
      stacked(i, d.r + j) = d.q2(i, j);
    }
  return stacked.nullspace();  // 2r x r, since [q1|q2] has rank r
}

bool kernel_isotropic(const GroupTag& tag, const GluingDatum& d) {
  // psi_i = sigma_i^T Form sigma_i on the fibers; the kernel must be
  // isotropic for psi_1 (x) -psi_2 on fiber1 + fiber2.
  QMat psi1 = d.sigma1.transpose() * tag.form * d.sigma1;
  QMat psi2 = d.sigma2.transpose() * tag.form * d.sigma2;
  QMat big(2 * d.r, 2 * d.r);
  for (int i = 0; i < d.r; ++i)
    for (int j = 0; j < d.r; ++j) {
      big(i, j) = psi1(i, j);
      big(d.r + i, d.r + j) = -psi2(i, j);
    }
  QMat k = kernel_basis(d);
  return (k.transpose() * big * k).is_zero();
}

}  // namespace

bool kappa_condition(const GroupTag& tag, const GluingDatum& d) {
  switch (tag.kind) {
    case GroupKind::SL: return kappa_scalar_condition(d);
    case GroupKind::Sp: return kernel_isotropic(tag, d);
    case GroupKind::SO: return kernel_isotropic(tag, d) && kappa_scalar_condition(d);
  }
  return false;
}

std::vector<QMat> lie_algebra_basis(const GroupTag& tag, int n) {
  std::vector<QMat> basis;
  if (tag.kind == GroupKind::SL) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        QMat e(n, n);
        e(i, j) = 1;
        basis.push_back(e);
      }
    for (int i = 0; i + 1 < n; ++i) {
      QMat e(n, n);
      e(i, i) = 1;
      e(i + 1, i + 1) = -1;
      basis.push_back(e);
    }
    return basis;
  }
  if (tag.form.rows() != n) throw std::invalid_argument("lie_algebra_basis: form size mismatch");
  // Solve X^T F + F X = 0 as a linear system in the n^2 entries of X:
  // (X^T F)(a,b) = sum_i X(i,a) F(i,b), (F X)(a,b) = sum_i F(a,i) X(i,b).
  QMat system(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i) {
        system(a * n + b, i * n + a) += tag.form(i, b);
        system(a * n + b, i * n + b) += tag.form(a, i);
      }
  QMat ker = system.nullspace();
  for (int c = 0; c < ker.cols(); ++c) {
    QMat x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x(i, j) = ker(i * n + j, c);
    basis.push_back(x);
  }
  return basis;
}

QMat invariant_subspace(const GroupTag& tag, const schur::Partition& lambda, int n) {
  QMat u = schur::schur_space_basis(lambda, n);
  int d = lambda.size();
  std::vector<QMat> lie = lie_algebra_basis(tag, n);
  // Dual action: X on the acting space corresponds to -X^T here.
  long rows_per = u.rows();
  QMat big(static_cast<int>(lie.size() * rows_per), u.cols());
  for (size_t t = 0; t < lie.size(); ++t) {
    QMat y = lie[t].transpose().scaled(Rat(-1));
    for (int jcol = 0; jcol < u.cols(); ++jcol) {
      std::vector<Rat> img = leibniz_apply(y, d, n, u.col(jcol));
      for (long i = 0; i < rows_per; ++i) big(static_cast<int>(t * rows_per + i), jcol) = img[i];
    }
  }
  QMat coeffs = big.nullspace();
  return u * coeffs;
}

bool descent_condition(const schur::Partition& lambda, const GluingDatum& d, const GroupTag& tag) {
  QMat inv = invariant_subspace(tag, lambda, d.r);
  if (inv.cols() == 0) return true;  // nothing to hit
  QMat k = kernel_basis(d);
  int kdim = k.cols();
  QMat top(d.r, kdim), bot(d.r, kdim);
  for (int i = 0; i < d.r; ++i)
    for (int j = 0; j < kdim; ++j) {
      top(i, j) = k(i, j);
      bot(i, j) = k(d.r + i, j);
    }
  QMat a1 = d.sigma1 * top;
  QMat a2 = d.sigma2 * bot;
  QMat src = schur::schur_space_basis(lambda, kdim);
  int deg = lambda.size();
  for (int j = 0; j < src.cols(); ++j) {
    std::vector<Rat> delta1 = schur::tensor_power_apply(a1, deg, src.col(j));
    std::vector<Rat> delta2 = schur::tensor_power_apply(a2, deg, src.col(j));
    for (int w = 0; w < inv.cols(); ++w) {
      Rat dot(0);
      for (size_t i = 0; i < delta1.size(); ++i) {
        if (delta1[i] != delta2[i]) dot += inv(static_cast<int>(i), w) * (delta1[i] - delta2[i]);
      }
      if (dot != 0) return false;
    }
  }
  return true;
}

std::vector<schur::Partition> generating_partitions(const GroupTag& tag, int n) {
  std::vector<schur::Partition> out;
  auto column = [n] { return schur::Partition::make(std::vector<int>(n, 1)); };
  switch (tag.kind) {
    case GroupKind::SL:
      out.push_back(column());
      break;
    case GroupKind::Sp:
      out.push_back(schur::Partition::make({1}));
      out.push_back(schur::Partition::make({2}));
      out.push_back(schur::Partition::make({1, 1}));
      break;
    case GroupKind::SO:
      out.push_back(schur::Partition::make({1}));
      out.push_back(schur::Partition::make({2}));
      out.push_back(schur::Partition::make({1, 1}));
      out.push_back(column());
      break;
  }
  return out;
}

EquivalenceResult descent_equivalence_test(const GroupTag& tag, const GluingDatum& d) {
  auto g = gluing_element(d);
  if (!g) throw std::invalid_argument("descent_equivalence_test needs invertible q's");
  EquivalenceResult out;
  out.group_verdict = in_group(tag, *g);
  out.schur_verdict = true;
  for (const auto& lambda : generating_partitions(tag, d.r))
    if (!descent_condition(lambda, d, tag)) {
      out.schur_verdict = false;
      break;
    }
  out.agree = out.schur_verdict == out.group_verdict;
  return out;
}

}  // namespace gbss::descent
