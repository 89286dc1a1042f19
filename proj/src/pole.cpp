#include "gbss/pole.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace gbss::pole {

PoleInstance PoleInstance::make(lie::RepId rep, Int l,
                                std::vector<std::pair<lie::DominantWeight, lie::DominantCoweight>> nodes) {
  if (l < 1) throw std::invalid_argument("pole instance needs l >= 1");
  lie::RootSystem rs = rep.root_system();
  Int cap = l * lie::dynkin_index(rep);
  for (const auto& [lambda, phi] : nodes) {
    if (lie::level(rs, lambda) > cap)
      throw std::invalid_argument("node weight level exceeds l * d_V");
    lie::make_coweight(rs, phi.coords);  // revalidate
  }
  return PoleInstance{rep, l, std::move(nodes)};
}

Int ord_kappa(const lie::RepId& rep, const lie::DominantCoweight& phi) {
  Int s = 0;
  for (Int x : lie::embed_coweight(rep, phi))
    if (x > 0) s += x;
  return s;
}

Int node_pole_bound(const lie::RepId& rep, Int l, const lie::DominantWeight& lambda,
                    const lie::DominantCoweight& phi) {
  lie::RootSystem rs = rep.root_system();
  if (lie::level(rs, lambda) > l * lie::dynkin_index(rep))
    throw std::invalid_argument("node_pole_bound: weight level exceeds l * d_V");
  // (w0 lambda)(phi) = -<-w0 lambda, phi> = -<dual_weight(lambda), phi>.
  return l * ord_kappa(rep, phi) - lie::pair(lie::dual_weight(rs, lambda), phi);
}

Int total_pole_bound(const PoleInstance& instance) {
  Int s = 0;
  for (const auto& [lambda, phi] : instance.nodes)
    s += node_pole_bound(instance.rep, instance.l, lambda, phi);
  return s;
}

SweepReport verify_nonnegativity(const lie::RepId& rep, Int l_max, Int coweight_bound, int threads,
                                 std::optional<Int> ord_kappa_filter) {
  if (l_max < 1 || coweight_bound < 0) throw std::invalid_argument("verify_nonnegativity: bad bounds");
  lie::RootSystem rs = rep.root_system();
  Int d_v = lie::dynkin_index(rep);

  std::vector<lie::DominantCoweight> phis = lie::enumerate_coweights(rs, coweight_bound);
  if (ord_kappa_filter) {
    std::erase_if(phis, [&](const lie::DominantCoweight& phi) { return ord_kappa(rep, phi) != *ord_kappa_filter; });
  }

  // Flatten the (l, lambda) grid so chunks can be handed to workers; the
  // merge below is a deterministic min-with-first-witness.
  struct Cell {
    Int l;
    lie::DominantWeight lambda;
  };
  std::vector<Cell> cells;
  for (Int l = 1; l <= l_max; ++l)
    for (const auto& lambda : lie::enumerate_weights(rs, l * d_v)) cells.push_back({l, lambda});

  SweepReport report;
  if (cells.empty() || phis.empty()) {
    report.vacuous = true;
    return report;
  }

  struct Partial {
    bool any = false;
    Int min_value = 0;
    size_t min_index = 0;  // index into the flattened grid, for determinism
    SweepWitness min_witness;
    long long evaluated = 0;
  };

  auto run_chunk = [&](size_t begin, size_t end, Partial& out) {
    for (size_t ci = begin; ci < end; ++ci) {
      const Cell& cell = cells[ci];
      for (size_t pi = 0; pi < phis.size(); ++pi) {
        Int b = node_pole_bound(rep, cell.l, cell.lambda, phis[pi]);
        ++out.evaluated;
        size_t idx = ci * phis.size() + pi;
        if (!out.any || b < out.min_value || (b == out.min_value && idx < out.min_index)) {
          out.any = true;
          out.min_value = b;
          out.min_index = idx;
          out.min_witness = SweepWitness{cell.l, cell.lambda, phis[pi], b};
        }
      }
    }
  };

  int nthreads = std::max(1, threads);
  std::vector<Partial> partials(nthreads);
  if (nthreads == 1) {
    run_chunk(0, cells.size(), partials[0]);
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (cells.size() + nthreads - 1) / nthreads;
    for (int w = 0; w < nthreads; ++w) {
      size_t begin = std::min(cells.size(), w * chunk);
      size_t end = std::min(cells.size(), begin + chunk);
      pool.emplace_back(run_chunk, begin, end, std::ref(partials[w]));
    }
    for (auto& th : pool) th.join();
  }

  Partial merged;
  for (const Partial& p : partials) {
    merged.evaluated += p.evaluated;
    if (!p.any) continue;
    if (!merged.any || p.min_value < merged.min_value ||
        (p.min_value == merged.min_value && p.min_index < merged.min_index)) {
      merged.any = p.any;
      merged.min_value = p.min_value;
      merged.min_index = p.min_index;
      merged.min_witness = p.min_witness;
    }
  }

  report.min_value = merged.min_value;
  report.min_witness = merged.min_witness;
  report.evaluated = merged.evaluated;
  if (merged.min_value < 0) report.negative_witness = merged.min_witness;
  return report;
}

// ---------------------------------------------------------------------

namespace {

Matrix<RatFunc> to_ratfunc(const Matrix<QPoly>& p) {
  Matrix<RatFunc> out(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) out(i, j) = RatFunc(p(i, j));
  return out;
}

Matrix<Rat> eval_zero(const Matrix<QPoly>& p) {
  Matrix<Rat> out(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) out(i, j) = p(i, j).eval_zero();
  return out;
}

}  // namespace

ValuationMatrixPair ValuationMatrixPair::make(Matrix<QPoly> q1, Matrix<QPoly> q2) {
  if (q1.rows() != q1.cols() || q2.rows() != q2.cols() || q1.rows() != q2.rows())
    throw std::invalid_argument("valuation matrix pair must be square of equal size");
  if (to_ratfunc(q1).det().is_zero() || to_ratfunc(q2).det().is_zero())
    throw SingularMatrixError();
  return ValuationMatrixPair{std::move(q1), std::move(q2)};
}

std::vector<Int> smith_valuations(const ValuationMatrixPair& p) {
  Matrix<RatFunc> m = to_ratfunc(p.q2).inverse() * to_ratfunc(p.q1);
  int r = m.rows();
  std::vector<Int> exps;
  // Smith form over the discrete valuation ring at t = 0: pivot on an
  // entry of minimal valuation, clear its row and column, recurse on the
  // trailing block. Quotients by the pivot stay in the local ring.
  for (int k = 0; k < r; ++k) {
    int bi = -1, bj = -1;
    int best = 0;
    for (int i = k; i < r; ++i)
      for (int j = k; j < r; ++j) {
        if (m(i, j).is_zero()) continue;
        int v = m(i, j).valuation();
        if (bi < 0 || v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) throw SingularMatrixError();  // cannot happen for invertible input
    m.swap_rows(bi, k);
    if (bj != k)
      for (int i = 0; i < r; ++i) std::swap(m(i, bj), m(i, k));
    const RatFunc pivot = m(k, k);
    for (int i = k + 1; i < r; ++i) {
      if (m(i, k).is_zero()) continue;
      RatFunc f = m(i, k) / pivot;
      for (int j = k; j < r; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
    for (int j = k + 1; j < r; ++j) {
      if (m(k, j).is_zero()) continue;
      RatFunc f = m(k, j) / pivot;
      for (int i = k; i < r; ++i) m(i, j) = m(i, j) - f * m(i, k);
    }
    exps.push_back(best);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

AlphaKReport check_alpha_k(const ValuationMatrixPair& p) {
  int r = p.r();
  // Surjectivity of [q1 | q2] over the local ring: the maximal minors
  // must generate the unit ideal, i.e. full rank after setting t = 0.
  Matrix<Rat> stacked(r, 2 * r);
  Matrix<Rat> a = eval_zero(p.q1), b = eval_zero(p.q2);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      stacked(i, j) = a(i, j);
      stacked(i, r + j) = b(i, j);
    }
  if (stacked.rank() < r)
    throw std::domain_error("alpha_k hypothesis violated: [q1|q2] not surjective over the local ring");

  AlphaKReport out;
  out.ord_det_q1 = to_ratfunc(p.q1).det().valuation();
  for (Int a_i : smith_valuations(p))
    if (a_i >= 0) out.sum_nonneg_a += a_i;
  out.equal = out.ord_det_q1 == out.sum_nonneg_a;
  return out;
}

}  // namespace gbss::pole
