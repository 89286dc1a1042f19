#include "gbss/report.hpp"

#include <chrono>
#include <sstream>

#include "gbss/curve.hpp"
#include "gbss/descent.hpp"
#include "gbss/lie.hpp"
#include "gbss/pole.hpp"
#include "gbss/repverify.hpp"
#include "gbss/samples.hpp"
#include "gbss/tensor.hpp"

namespace gbss::report {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

CriterionResult finish(CriterionResult r, Clock::time_point t0) {
  r.elapsed_ms = ms_since(t0);
  if (r.budget_ms > 0 && r.elapsed_ms >= r.budget_ms) {
    r.pass = false;
    r.detail += " [exceeded time budget]";
  }
  return r;
}

curve::CurveNumerics chain_curve(int components, const std::vector<Int>& polarization) {
  std::vector<std::pair<int, int>> nodes;
  for (int i = 0; i + 1 < components; ++i) nodes.emplace_back(i, i + 1);
  return curve::CurveNumerics::make(components, std::move(nodes), polarization, 2);
}

}  // namespace

CriterionResult b2_node_counterexample() {
  auto t0 = Clock::now();
  CriterionResult r{1, "b2 standard rep: node bound for l=1, lambda=(2,0), phi=(1,0)", false, "", 0, 1000};
  lie::RepId rep = lie::RepId::make(lie::RepTag::BStd, 2);
  lie::RootSystem rs = rep.root_system();
  Int bound = pole::node_pole_bound(rep, 1, lie::make_weight(rs, {2, 0}), lie::make_coweight(rs, {1, 0}));
  r.pass = bound == -1;
  r.detail = "bound = " + std::to_string(bound) + " (expected -1)";
  return finish(r, t0);
}

CriterionResult ac_nonnegativity_sweep(int threads) {
  auto t0 = Clock::now();
  CriterionResult r{2, "exhaustive nonnegativity for SL (W+W*) ranks 1-3 and Sp std ranks 2-3", false, "",
                    0, 60000};
  struct Case {
    lie::RepTag tag;
    int rank;
  };
  std::vector<Case> cases{{lie::RepTag::AStdPlusDual, 1},
                          {lie::RepTag::AStdPlusDual, 2},
                          {lie::RepTag::AStdPlusDual, 3},
                          {lie::RepTag::CStd, 2},
                          {lie::RepTag::CStd, 3}};
  bool ok = true;
  long long total = 0;
  std::ostringstream detail;
  for (const auto& c : cases) {
    lie::RepId rep = lie::RepId::make(c.tag, c.rank);
    pole::SweepReport sweep = pole::verify_nonnegativity(rep, 2, 3, threads);
    total += sweep.evaluated;
    if (sweep.vacuous || sweep.min_value != 0 || sweep.negative_witness) ok = false;
    detail << lie::rep_tag_name(c.tag) << c.rank << ": min " << sweep.min_value << "; ";
  }
  r.pass = ok;
  r.detail = detail.str() + std::to_string(total) + " node bounds evaluated";
  return finish(r, t0);
}

CriterionResult d3_violation_exists() {
  auto t0 = Clock::now();
  CriterionResult r{3, "so(6) standard rep admits a negative node bound (l=1, entries <= 1)", false, "", 0,
                    5000};
  lie::RepId rep = lie::RepId::make(lie::RepTag::DStd, 3);
  pole::SweepReport sweep = pole::verify_nonnegativity(rep, 1, 1);
  r.pass = sweep.negative_witness.has_value();
  if (sweep.negative_witness) {
    std::ostringstream os;
    os << "witness bound " << sweep.negative_witness->bound << " at lambda=(";
    for (size_t i = 0; i < sweep.negative_witness->lambda.coords.size(); ++i)
      os << (i ? "," : "") << sweep.negative_witness->lambda.coords[i];
    os << "), phi=(";
    for (size_t i = 0; i < sweep.negative_witness->phi.coords.size(); ++i)
      os << (i ? "," : "") << sweep.negative_witness->phi.coords[i];
    os << ")";
    r.detail = os.str();
  } else {
    r.detail = "no negative witness found";
  }
  return finish(r, t0);
}

CriterionResult so5_two_point_block() {
  auto t0 = Clock::now();
  CriterionResult r{4, "so(5), lambda=2w1: T^3 = 0, T^2 != 0, coinvariant dimension 1, zero-weight witness",
                    false, "", 0, 30000};
  repverify::LieAlgebraModel g = repverify::build_so5();
  repverify::IrrepModel irrep = repverify::build_irrep(g, repverify::IrrepId::TracelessSym2Std);
  repverify::TwoPointOperator cube = repverify::two_point_operator(g, irrep, 3);
  repverify::TwoPointOperator square = repverify::two_point_operator(g, irrep, 2);
  bool t3_zero = cube.t_power.is_zero();
  bool t2_nonzero = !square.t_power.is_zero();
  Int dim = repverify::coinvariants_dim(g, irrep, 3);
  repverify::Witness w = repverify::zero_weight_witness(g, irrep, 3);
  bool weight_zero = w.weight == std::vector<Int>{0, 0};
  r.pass = t3_zero && t2_nonzero && dim == 1 && weight_zero;
  std::ostringstream os;
  os << "dim V = " << irrep.dim << "; T^3 zero: " << (t3_zero ? "yes" : "no")
     << "; T^2 nonzero: " << (t2_nonzero ? "yes" : "no") << "; coinvariant dim = " << dim
     << "; witness weight (0,0): " << (weight_zero ? "yes" : "no");
  r.detail = os.str();
  return finish(r, t0);
}

CriterionResult polarization_independence(uint64_t seed) {
  auto t0 = Clock::now();
  CriterionResult r{5, "weighted rank sum equals top weight under 4 polarizations x 200 flag samples",
                    false, "", 0, 10000};
  Rng rng(seed);
  int failures = 0;
  long long evaluations = 0;
  for (int inst = 0; inst < 200; ++inst) {
    samples::FlagSample s = samples::random_flag_sample(rng);
    std::optional<Rat> reference_quantity;
    for (int p = 0; p < 4; ++p) {
      curve::CurveNumerics curve = chain_curve(s.components, samples::random_polarization(rng, s.components));
      curve::WeightedFiltration f = curve::build_filtration(curve, s.r, s.flags);
      ++evaluations;
      if (curve::weighted_rank_sum(f) != Rat(static_cast<long>(f.mu.back()))) ++failures;
      Rat q = curve::ss_quantity(f, s.chi_list, s.chi_total, s.r);
      if (!reference_quantity)
        reference_quantity = q;
      else if (q != *reference_quantity)
        ++failures;
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(evaluations) + " evaluations, " + std::to_string(failures) + " mismatches";
  return finish(r, t0);
}

CriterionResult three_form_agreement(uint64_t seed) {
  auto t0 = Clock::now();
  CriterionResult r{6, "the three semistability formulations agree in sign on 200 flag samples", false, "",
                    0, 0};
  Rng rng(seed);
  int failures = 0;
  for (int inst = 0; inst < 200; ++inst) {
    samples::FlagSample s = samples::random_flag_sample(rng);
    for (int p = 0; p < 4; ++p) {
      curve::CurveNumerics curve = chain_curve(s.components, samples::random_polarization(rng, s.components));
      curve::WeightedFiltration f = curve::build_filtration(curve, s.r, s.flags);
      if (!curve::ss_alt_forms(f, s.chi_list, s.chi_total, s.r).agree) ++failures;
    }
  }
  r.pass = failures == 0;
  r.detail = "800 evaluations, " + std::to_string(failures) + " sign disagreements";
  return finish(r, t0);
}

CriterionResult alpha_k_batch(uint64_t seed) {
  auto t0 = Clock::now();
  CriterionResult r{7, "ord det q1 equals the sum of nonnegative exponents on 100 random instances", false,
                    "", 0, 20000};
  Rng rng(seed);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    samples::AlphaKInstance inst = samples::random_alpha_k_instance(rng);
    pole::AlphaKReport rep = pole::check_alpha_k(inst.pair);
    if (!rep.equal) ++failures;
    if (pole::smith_valuations(inst.pair) != inst.expected) ++failures;
  }
  r.pass = failures == 0;
  r.detail = "100 instances, " + std::to_string(failures) + " failures";
  return finish(r, t0);
}

CriterionResult descent_equivalence_batch(uint64_t seed) {
  auto t0 = Clock::now();
  CriterionResult r{8, "Schur criterion matches group membership for SL2, SL3, Sp4 (50 in + 50 out each)",
                    false, "", 0, 60000};
  Rng rng(seed);
  int failures = 0;
  std::ostringstream detail;
  struct Case {
    descent::GroupTag tag;
    int n;
    const char* name;
  };
  std::vector<Case> cases;
  cases.push_back({descent::GroupTag::sl(), 2, "sl2"});
  cases.push_back({descent::GroupTag::sl(), 3, "sl3"});
  cases.push_back({descent::GroupTag::sp(descent::standard_symplectic_form(4)), 4, "sp4"});
  for (const auto& c : cases) {
    int case_failures = 0;
    for (int i = 0; i < 50; ++i) {
      QMat g = samples::random_group_element(rng, c.tag, c.n);
      descent::GluingDatum d = samples::datum_realizing(rng, g);
      descent::EquivalenceResult e = descent::descent_equivalence_test(c.tag, d);
      if (!e.agree || !e.group_verdict) ++case_failures;
    }
    for (int i = 0; i < 50; ++i) {
      QMat g = samples::random_nonmember(rng, c.tag, c.n);
      descent::GluingDatum d = samples::datum_realizing(rng, g);
      descent::EquivalenceResult e = descent::descent_equivalence_test(c.tag, d);
      if (!e.agree || e.group_verdict) ++case_failures;
    }
    detail << c.name << ": " << (100 - case_failures) << "/100 agree; ";
    failures += case_failures;
  }
  r.pass = failures == 0;
  r.detail = detail.str();
  return finish(r, t0);
}

CriterionResult dynkin_anchor_values() {
  auto t0 = Clock::now();
  CriterionResult r{9, "Dynkin indices: W+W* -> 2, Sp std -> 1, SO(odd) std -> 2", false, "", 0, 1000};
  bool ok = true;
  for (int rank = 1; rank <= 3; ++rank)
    ok = ok && lie::dynkin_index(lie::RepId::make(lie::RepTag::AStdPlusDual, rank)) == 2;
  for (int rank = 1; rank <= 3; ++rank)
    ok = ok && lie::dynkin_index(lie::RepId::make(lie::RepTag::CStd, rank)) == 1;
  for (int rank = 2; rank <= 3; ++rank)
    ok = ok && lie::dynkin_index(lie::RepId::make(lie::RepTag::BStd, rank)) == 2;
  r.pass = ok;
  r.detail = ok ? "all anchor values reproduced" : "anchor value mismatch";
  return finish(r, t0);
}

CriterionResult level_duality() {
  auto t0 = Clock::now();
  CriterionResult r{10, "level of the dual weight equals the level across all swept weights", false, "", 0,
                    0};
  struct Case {
    lie::RepTag tag;
    int rank;
  };
  std::vector<Case> cases{{lie::RepTag::AStdPlusDual, 1},
                          {lie::RepTag::AStdPlusDual, 2},
                          {lie::RepTag::AStdPlusDual, 3},
                          {lie::RepTag::CStd, 2},
                          {lie::RepTag::CStd, 3}};
  long long checked = 0;
  int failures = 0;
  for (const auto& c : cases) {
    lie::RepId rep = lie::RepId::make(c.tag, c.rank);
    lie::RootSystem rs = rep.root_system();
    Int d_v = lie::dynkin_index(rep);
    for (Int l = 1; l <= 2; ++l)
      for (const auto& lambda : lie::enumerate_weights(rs, l * d_v)) {
        ++checked;
        if (lie::level(rs, lie::dual_weight(rs, lambda)) != lie::level(rs, lambda)) ++failures;
      }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(checked) + " weights checked, " + std::to_string(failures) + " failures";
  return finish(r, t0);
}

CriterionResult tensor_mu_checks(uint64_t seed) {
  auto t0 = Clock::now();
  CriterionResult r{11, "mu worked examples and degree-1 homogeneity of the semistability bound", false,
                    "", 0, 0};
  bool ok = true;

  // two-step filtration on rank 2, a = 1, b = 1
  {
    tensor::TensorShape shape = tensor::TensorShape::make(1, 1, 1, Rat(1), Rat(2));
    auto filt = tensor::FiltrationWithOracle::make(shape, {Rat(1), Rat(2)}, {Rat(1)},
                                                   {curve::LinearPoly{Rat(1), Rat(1)}}, {{1}, {2}});
    ok = ok && tensor::mu(filt, shape) == Rat(1);
    auto filt2 = tensor::FiltrationWithOracle::make(shape, {Rat(1), Rat(2)}, {Rat(1)},
                                                    {curve::LinearPoly{Rat(1), Rat(1)}}, {{2}});
    ok = ok && tensor::mu(filt2, shape) == Rat(-1);
  }
  // trivial one-step filtration: lambda is the zero vector
  {
    tensor::TensorShape shape = tensor::TensorShape::make(1, 2, 1, Rat(1), Rat(3));
    auto filt = tensor::FiltrationWithOracle::make(shape, {Rat(3)}, {}, {}, {{1, 1}});
    ok = ok && tensor::mu(filt, shape) == Rat(0);
  }

  Rng rng(seed);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    samples::TensorSample s = samples::random_tensor_sample(rng);
    Rat c = ratio(static_cast<long>(rng.range(1, 7)), static_cast<long>(rng.range(1, 4)));
    std::vector<Rat> scaled_weights(s.filtration.weights);
    for (auto& w : scaled_weights) w *= c;
    auto scaled = tensor::FiltrationWithOracle::make(s.shape, s.filtration.ranks, scaled_weights,
                                                     s.filtration.hilbert, s.filtration.admissible);
    tensor::DeltaSS base = tensor::delta_ss(s.filtration, s.shape, s.p_total);
    tensor::DeltaSS big = tensor::delta_ss(scaled, s.shape, s.p_total);
    if (!(big.lhs == base.lhs.scaled(c))) ++failures;
  }
  ok = ok && failures == 0;
  r.pass = ok;
  r.detail = "examples " + std::string(ok || failures == 0 ? "ok" : "mismatch") + "; homogeneity failures: " +
             std::to_string(failures);
  return finish(r, t0);
}

std::vector<CriterionResult> run_all(uint64_t seed, int threads) {
  std::vector<CriterionResult> out;
  out.push_back(b2_node_counterexample());
  out.push_back(ac_nonnegativity_sweep(threads));
  out.push_back(d3_violation_exists());
  out.push_back(so5_two_point_block());
  out.push_back(polarization_independence(seed));
  out.push_back(three_form_agreement(seed));
  out.push_back(alpha_k_batch(seed));
  out.push_back(descent_equivalence_batch(seed));
  out.push_back(dynkin_anchor_values());
  out.push_back(level_duality());
  out.push_back(tensor_mu_checks(seed));
  return out;
}

}  // namespace gbss::report
