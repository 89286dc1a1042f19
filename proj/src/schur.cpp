#include "gbss/schur.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gbss::schur {

namespace {

long ipow(int base, int exp) {
  long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::vector<int> decode(long index, int m, int d) {
  std::vector<int> idx(d);
  for (int k = d - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(index % m);
    index /= m;
  }
  return idx;
}

long encode(const std::vector<int>& idx, int m) {
  long x = 0;
  for (int i : idx) x = x * m + i;
  return x;
}

int perm_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// All permutations of {0..d-1} fixing each block setwise.
std::vector<std::vector<int>> block_permutations(int d, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::vector<int>> arrangements{cur};
  for (const auto& block : blocks) {
    std::vector<int> targets(block);
    std::sort(targets.begin(), targets.end());
    std::vector<std::vector<int>> next;
    do {
      for (const auto& base : arrangements) {
        std::vector<int> p(base);
        for (size_t k = 0; k < block.size(); ++k) p[block[k]] = targets[k];
        next.push_back(std::move(p));
      }
    } while (std::next_permutation(targets.begin(), targets.end()));
    arrangements = std::move(next);
  }
  return arrangements;
}

struct Tableau {
  std::vector<std::vector<int>> rows;  // canonical filling, row-major
  std::vector<std::vector<int>> cols;
};

Tableau canonical_tableau(const Partition& lambda) {
  Tableau t;
  int next = 0;
  for (int len : lambda.parts) {
    std::vector<int> row(len);
    std::iota(row.begin(), row.end(), next);
    next += len;
    t.rows.push_back(std::move(row));
  }
  int width = lambda.parts.empty() ? 0 : lambda.parts[0];
  for (int j = 0; j < width; ++j) {
    std::vector<int> col;
    for (const auto& row : t.rows)
      if (j < static_cast<int>(row.size())) col.push_back(row[j]);
    t.cols.push_back(std::move(col));
  }
  return t;
}

}  // namespace

Partition Partition::make(std::vector<int> parts, int size_cap) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (parts.empty()) throw std::invalid_argument("empty partition");
  int total = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    total += parts[i];
  }
  if (total > size_cap)
    throw std::invalid_argument("partition size " + std::to_string(total) + " exceeds cap " +
                                std::to_string(size_cap));
  return Partition{std::move(parts)};
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

Rat hook_content_dim(const Partition& lambda, int m) {
  std::vector<int> conj;  // column lengths
  int width = lambda.parts[0];
  for (int j = 0; j < width; ++j) {
    int len = 0;
    for (int part : lambda.parts)
      if (part > j) ++len;
    conj.push_back(len);
  }
  Rat dim(1);
  for (size_t i = 0; i < lambda.parts.size(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) {
      int content = m + j - static_cast<int>(i);
      int hook = lambda.parts[i] - j + conj[j] - static_cast<int>(i) - 1;
      dim *= ratio(content, hook);
    }
  return dim;
}

std::vector<Rat> symmetrizer_column(const Partition& lambda, int m, long index) {
  int d = lambda.size();
  Tableau t = canonical_tableau(lambda);
  auto row_perms = block_permutations(d, t.rows);
  auto col_perms = block_permutations(d, t.cols);

  std::vector<int> idx = decode(index, m, d);
  std::vector<Rat> out(ipow(m, d), Rat(0));
  std::vector<int> moved(d);
  for (const auto& tau : col_perms) {
    int sgn = perm_sign(tau);
    for (const auto& rho : row_perms) {
      // sigma = rho after tau; place permutation sends slot k to sigma(k).
      for (int k = 0; k < d; ++k) moved[rho[tau[k]]] = idx[k];
      out[encode(moved, m)] += sgn;
    }
  }
  return out;
}

QMat schur_space_basis(const Partition& lambda, int m, int dim_cap) {
  if (m > dim_cap)
    throw std::invalid_argument("schur: dimension " + std::to_string(m) + " exceeds cap");
  int d = lambda.size();
  long n = ipow(m, d);
  Rat target = hook_content_dim(lambda, m);
  long want = target.get_num().get_si();  // integral by construction

  std::vector<std::vector<Rat>> cols;
  RowSpace<Rat> span(static_cast<int>(n));
  for (long index = 0; index < n && span.dim() < want; ++index) {
    std::vector<Rat> col = symmetrizer_column(lambda, m, index);
    if (span.insert(col)) cols.push_back(std::move(col));
  }
  if (static_cast<long>(cols.size()) != want)
    throw std::logic_error("schur space rank does not match hook content dimension");
  QMat basis(static_cast<int>(n), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (long i = 0; i < n; ++i) basis(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
  return basis;
}

std::vector<Rat> tensor_power_apply(const QMat& f, int d, const std::vector<Rat>& v) {
  int m = f.cols(), mp = f.rows();
  long n_out = ipow(mp, d);
  std::vector<Rat> out(n_out, Rat(0));
  for (long index = 0; index < static_cast<long>(v.size()); ++index) {
    if (v[index] == 0) continue;
    std::vector<int> idx = decode(index, m, d);
    // accumulate v[index] * f e_{i_1} tensor ... tensor f e_{i_d}
    std::vector<Rat> acc{v[index]};
    for (int k = 0; k < d; ++k) {
      std::vector<Rat> next(acc.size() * mp, Rat(0));
      for (size_t a = 0; a < acc.size(); ++a) {
        if (acc[a] == 0) continue;
        for (int i = 0; i < mp; ++i) {
          const Rat& x = f(i, idx[k]);
          if (x != 0) next[a * mp + i] = acc[a] * x;
        }
      }
      acc = std::move(next);
    }
    for (long i = 0; i < n_out; ++i)
      if (acc[i] != 0) out[i] += acc[i];
  }
  return out;
}

QMat schur_apply(const Partition& lambda, const QMat& f, int dim_cap) {
  int m = f.cols(), mp = f.rows();
  QMat src = schur_space_basis(lambda, m, dim_cap);
  QMat dst = schur_space_basis(lambda, mp, dim_cap);
  QMat image(dst.rows(), src.cols());
  for (int j = 0; j < src.cols(); ++j) {
    std::vector<Rat> v = tensor_power_apply(f, lambda.size(), src.col(j));
    for (int i = 0; i < dst.rows(); ++i) image(i, j) = v[i];
  }
  auto x = dst.solve(image);
  if (!x) throw std::logic_error("schur_apply: image left the target Schur space");
  return *x;
}

}  // namespace gbss::schur
