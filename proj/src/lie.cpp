#include "gbss/lie.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gbss::lie {

namespace {

std::vector<Int> unit_sum(int len, int i, int j, Int ci, Int cj) {
  std::vector<Int> v(len, 0);
  v[i] += ci;
  if (j >= 0) v[j] += cj;
  return v;
}

void check_len(const RootSystem& rs, const std::vector<Int>& v, const char* what) {
  if (static_cast<int>(v.size()) != rs.coord_len())
    throw std::invalid_argument(std::string(what) + ": expected length " + std::to_string(rs.coord_len()) +
                                " for " + family_name(rs.family) + std::to_string(rs.rank) + ", got " +
                                std::to_string(v.size()));
}

bool weakly_decreasing(const std::vector<Int>& v, size_t upto) {
  for (size_t i = 0; i + 1 < upto; ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + s + "'");
}

RootSystem RootSystem::make(Family f, int rank) {
  int min_rank = f == Family::B ? 2 : f == Family::D ? 3 : 1;
  if (rank < min_rank)
    throw std::invalid_argument("family " + family_name(f) + " needs rank >= " + std::to_string(min_rank));
  return RootSystem{f, rank};
}

std::vector<Int> RootSystem::theta() const {
  int n = coord_len();
  switch (family) {
    case Family::A: return unit_sum(n, 0, n - 1, 1, -1);  // e1 - en
    case Family::B:
    case Family::D: return unit_sum(n, 0, 1, 1, 1);       // e1 + e2
    case Family::C: return unit_sum(n, 0, -1, 2, 0);      // 2 e1
  }
  throw std::logic_error("bad family");
}

std::vector<Int> RootSystem::theta_covector() const {
  int n = coord_len();
  switch (family) {
    case Family::A: return unit_sum(n, 0, n - 1, 1, -1);
    case Family::B:
    case Family::D: return unit_sum(n, 0, 1, 1, 1);
    case Family::C: return unit_sum(n, 0, -1, 1, 0);  // theta is long: coroot is e1
  }
  throw std::logic_error("bad family");
}

std::vector<std::vector<Rat>> RootSystem::positive_roots() const {
  int n = coord_len();
  std::vector<std::vector<Rat>> roots;
  auto root = [n](int i, int j, int ci, int cj) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = ci;
    if (j >= 0) v[j] = cj;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(root(i, j, 1, -1));
      if (family == Family::B || family == Family::C || family == Family::D)
        roots.push_back(root(i, j, 1, 1));
    }
  if (family == Family::B)
    for (int i = 0; i < n; ++i) roots.push_back(root(i, -1, 1, 0));
  if (family == Family::C)
    for (int i = 0; i < n; ++i) roots.push_back(root(i, -1, 2, 0));
  return roots;
}

DominantWeight make_weight(const RootSystem& rs, std::vector<Int> coords) {
  check_len(rs, coords, "weight");
  size_t n = coords.size();
  switch (rs.family) {
    case Family::A:
      if (!weakly_decreasing(coords, n) || coords.back() != 0)
        throw std::invalid_argument("type A weight must be weakly decreasing with last entry 0");
      break;
    case Family::B:
    case Family::C:
      if (!weakly_decreasing(coords, n) || coords.back() < 0)
        throw std::invalid_argument("type B/C weight must be weakly decreasing and nonnegative");
      break;
    case Family::D:
      if (!weakly_decreasing(coords, n - 1) || coords[n - 2] < std::abs(coords[n - 1]))
        throw std::invalid_argument("type D weight must satisfy l1 >= ... >= l_{n-1} >= |l_n|");
      break;
  }
  return DominantWeight{std::move(coords)};
}

DominantCoweight make_coweight(const RootSystem& rs, std::vector<Int> coords) {
  check_len(rs, coords, "coweight");
  size_t n = coords.size();
  switch (rs.family) {
    case Family::A:
      if (!weakly_decreasing(coords, n) || sum(coords) != 0)
        throw std::invalid_argument("type A coweight must be weakly decreasing with zero sum");
      break;
    case Family::B:
    case Family::C:
      if (!weakly_decreasing(coords, n) || coords.back() < 0)
        throw std::invalid_argument("type B/C coweight must be weakly decreasing and nonnegative");
      break;
    case Family::D:
      if (!weakly_decreasing(coords, n - 1) || coords[n - 2] < std::abs(coords[n - 1]))
        throw std::invalid_argument("type D coweight must satisfy f1 >= ... >= f_{n-1} >= |f_n|");
      break;
  }
  return DominantCoweight{std::move(coords)};
}

Int level(const RootSystem& rs, const DominantWeight& lambda) {
  check_len(rs, lambda.coords, "level");
  std::vector<Int> tv = rs.theta_covector();
  Int s = 0;
  for (size_t i = 0; i < tv.size(); ++i) s += lambda.coords[i] * tv[i];
  return s;
}

DominantWeight dual_weight(const RootSystem& rs, const DominantWeight& lambda) {
  check_len(rs, lambda.coords, "dual_weight");
  std::vector<Int> v = lambda.coords;
  switch (rs.family) {
    case Family::A: {
      // -w0 negates and reverses; shift by lambda_1 so the last entry is 0.
      std::reverse(v.begin(), v.end());
      Int top = v.back();
      for (auto& x : v) x = top - x;
      break;
    }
    case Family::B:
    case Family::C:
      break;  // w0 = -1
    case Family::D:
      if (rs.rank % 2 == 1) v.back() = -v.back();
      break;
  }
  return make_weight(rs, std::move(v));
}

Int pair(const DominantWeight& lambda, const DominantCoweight& phi) {
  if (lambda.coords.size() != phi.coords.size())
    throw std::invalid_argument("pair: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < phi.coords.size(); ++i) s += lambda.coords[i] * phi.coords[i];
  return s;
}

Rat weyl_dim(const RootSystem& rs, const DominantWeight& lambda) {
  check_len(rs, lambda.coords, "weyl_dim");
  auto roots = rs.positive_roots();
  int n = rs.coord_len();
  std::vector<Rat> rho(n, Rat(0));
  for (const auto& a : roots)
    for (int i = 0; i < n; ++i) rho[i] += a[i] / 2;
  Rat dim(1);
  for (const auto& a : roots) {
    Rat num(0), den(0);
    for (int i = 0; i < n; ++i) {
      num += (Rat(static_cast<long>(lambda.coords[i])) + rho[i]) * a[i];
      den += rho[i] * a[i];
    }
    dim *= num / den;
  }
  return dim;
}

namespace {

// Weakly decreasing nonnegative integer vectors, first entry <= cap1,
// lexicographic emission order.
void decreasing_vectors(int len, Int cap1, std::vector<Int>& cur,
                        const std::function<void(const std::vector<Int>&)>& emit) {
  if (static_cast<int>(cur.size()) == len) {
    emit(cur);
    return;
  }
  Int hi = cur.empty() ? cap1 : std::min<Int>(cap1, cur.back());
  for (Int v = 0; v <= hi; ++v) {
    cur.push_back(v);
    decreasing_vectors(len, cap1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DominantWeight> enumerate_weights(const RootSystem& rs, Int max_level) {
  if (max_level < 0) throw std::invalid_argument("enumerate_weights: negative level bound");
  std::vector<DominantWeight> out;
  int n = rs.coord_len();
  std::vector<Int> cur;
  switch (rs.family) {
    case Family::A:
      // level = lambda_1; entries between lambda_1 and 0.
      decreasing_vectors(n - 1, max_level, cur, [&](const std::vector<Int>& v) {
        std::vector<Int> w(v);
        w.push_back(0);
        if (weakly_decreasing(w, w.size())) out.push_back(make_weight(rs, std::move(w)));
      });
      break;
    case Family::C:
      decreasing_vectors(n, max_level, cur,
                         [&](const std::vector<Int>& v) { out.push_back(make_weight(rs, v)); });
      break;
    case Family::B:
      decreasing_vectors(n, max_level, cur, [&](const std::vector<Int>& v) {
        if (v[0] + v[1] <= max_level) out.push_back(make_weight(rs, v));
      });
      break;
    case Family::D:
      decreasing_vectors(n - 1, max_level, cur, [&](const std::vector<Int>& v) {
        if (v[0] + v[1] > max_level) return;
        for (Int last = -v[n - 2]; last <= v[n - 2]; ++last) {
          std::vector<Int> w(v);
          w.push_back(last);
          out.push_back(make_weight(rs, std::move(w)));
        }
      });
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DominantCoweight> enumerate_coweights(const RootSystem& rs, Int entry_bound) {
  if (entry_bound < 0) throw std::invalid_argument("enumerate_coweights: negative bound");
  std::vector<DominantCoweight> out;
  int n = rs.coord_len();
  switch (rs.family) {
    case Family::A: {
      // Weakly decreasing, entries in [-B, B], zero sum.
      std::vector<Int> cur;
      std::function<void(Int)> rec = [&](Int prev) {
        if (static_cast<int>(cur.size()) == n) {
          if (sum(cur) == 0) out.push_back(make_coweight(rs, cur));
          return;
        }
        for (Int v = -entry_bound; v <= prev; ++v) {
          cur.push_back(v);
          rec(v);
          cur.pop_back();
        }
      };
      rec(entry_bound);
      break;
    }
    case Family::B:
    case Family::C: {
      std::vector<Int> cur;
      decreasing_vectors(n, entry_bound, cur,
                         [&](const std::vector<Int>& v) { out.push_back(make_coweight(rs, v)); });
      break;
    }
    case Family::D: {
      std::vector<Int> cur;
      decreasing_vectors(n - 1, entry_bound, cur, [&](const std::vector<Int>& v) {
        for (Int last = -v[n - 2]; last <= v[n - 2]; ++last) {
          std::vector<Int> w(v);
          w.push_back(last);
          out.push_back(make_coweight(rs, std::move(w)));
        }
      });
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string rep_tag_name(RepTag t) {
  switch (t) {
    case RepTag::AStdPlusDual: return "a-std-plus-dual";
    case RepTag::BStd: return "b-std";
    case RepTag::CStd: return "c-std";
    case RepTag::DStd: return "d-std";
  }
  return "?";
}

RepTag rep_tag_from_name(const std::string& s) {
  if (s == "a-std-plus-dual" || s == "a") return RepTag::AStdPlusDual;
  if (s == "b-std" || s == "b") return RepTag::BStd;
  if (s == "c-std" || s == "c") return RepTag::CStd;
  if (s == "d-std" || s == "d") return RepTag::DStd;
  throw std::invalid_argument("unknown representation tag '" + s + "'");
}

RepId RepId::make(RepTag tag, int rank) {
  Family f = tag == RepTag::AStdPlusDual ? Family::A
             : tag == RepTag::BStd       ? Family::B
             : tag == RepTag::CStd       ? Family::C
                                         : Family::D;
  RootSystem::make(f, rank);  // rank validation
  return RepId{tag, rank};
}

RootSystem RepId::root_system() const {
  switch (tag) {
    case RepTag::AStdPlusDual: return RootSystem::make(Family::A, rank);
    case RepTag::BStd: return RootSystem::make(Family::B, rank);
    case RepTag::CStd: return RootSystem::make(Family::C, rank);
    case RepTag::DStd: return RootSystem::make(Family::D, rank);
  }
  throw std::logic_error("bad tag");
}

int RepId::dim() const {
  int n = root_system().coord_len();
  return tag == RepTag::BStd ? 2 * n + 1 : 2 * n;
}

std::vector<Int> embed_coweight(const RepId& rep, const DominantCoweight& phi) {
  RootSystem rs = rep.root_system();
  check_len(rs, phi.coords, "embed_coweight");
  std::vector<Int> d;
  d.reserve(rep.dim());
  for (Int x : phi.coords) d.push_back(x);
  for (Int x : phi.coords) d.push_back(-x);
  if (rep.tag == RepTag::BStd) d.push_back(0);
  return d;
}

std::vector<std::vector<Int>> rep_weights(const RepId& rep) {
  int n = rep.root_system().coord_len();
  std::vector<std::vector<Int>> w;
  for (int i = 0; i < n; ++i) w.push_back(unit_sum(n, i, -1, 1, 0));
  for (int i = 0; i < n; ++i) w.push_back(unit_sum(n, i, -1, -1, 0));
  if (rep.tag == RepTag::BStd) w.push_back(std::vector<Int>(n, 0));
  return w;
}

Int dynkin_index(const RepId& rep) {
  RootSystem rs = rep.root_system();
  std::vector<Int> tv = rs.theta_covector();
  Int twice = 0;
  for (const auto& mu : rep_weights(rep)) {
    Int p = 0;
    for (size_t i = 0; i < tv.size(); ++i) p += mu[i] * tv[i];
    twice += p * p;
  }
  if (twice % 2 != 0) throw std::logic_error("dynkin_index: non-integral result");
  return twice / 2;
}

}  // namespace gbss::lie
