// gbss: exact semistability calculator for bundle degenerations on
// nodal curves. All subcommands print a single JSON object on stdout;
// timing goes to stderr so reports stay byte-identical for a fixed seed.
//
// Exit codes: 0 success / verdict positive, 3 verdict negative (e.g. a
// counterexample was found), 1 input or usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "gbss/json_io.hpp"
#include "gbss/report.hpp"
#include "gbss/repverify.hpp"
#include "gbss/samples.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using gbss::Int;
using gbss::QMat;
using gbss::Rat;
using Json = gbss::io::Json;
namespace lie = gbss::lie;
namespace pole = gbss::pole;
namespace curve = gbss::curve;
namespace tensor = gbss::tensor;
namespace descent = gbss::descent;
namespace repverify = gbss::repverify;
namespace samples = gbss::samples;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNegative = 3;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return Json::parse(in);  // parse errors carry byte positions
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json weight_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (Int x : v) out.push_back(x);
  return out;
}

struct PoleCheckArgs {
  std::string rep = "b-std";
  int rank = 2;
  Int l = 1;
  std::string lambda, phi;
};

int run_pole_check(const PoleCheckArgs& a) {
  lie::RepId rep = lie::RepId::make(lie::rep_tag_from_name(a.rep), a.rank);
  lie::RootSystem rs = rep.root_system();
  lie::DominantWeight lambda = lie::make_weight(rs, gbss::io::parse_int_list(a.lambda));
  lie::DominantCoweight phi = lie::make_coweight(rs, gbss::io::parse_int_list(a.phi));
  Int bound = pole::node_pole_bound(rep, a.l, lambda, phi);
  Json out;
  out["bound"] = std::to_string(bound);
  emit(out);
  return bound < 0 ? kExitNegative : kExitOk;
}

struct PoleSweepArgs {
  std::string rep = "c-std";
  int rank = 2;
  Int lmax = 1;
  Int bound = 1;
  int threads = 1;
  Int ord_detq1 = -1;  // <0: no filter
};

int run_pole_sweep(const PoleSweepArgs& a) {
  lie::RepId rep = lie::RepId::make(lie::rep_tag_from_name(a.rep), a.rank);
  std::optional<Int> filter;
  if (a.ord_detq1 >= 0) filter = a.ord_detq1;
  pole::SweepReport r = pole::verify_nonnegativity(rep, a.lmax, a.bound, a.threads, filter);
  Json out;
  out["version"] = kVersion;
  out["rep"] = lie::rep_tag_name(rep.tag);
  out["root_system"] = Json{{"family", lie::family_name(rep.root_system().family)}, {"rank", a.rank}};
  out["lmax"] = a.lmax;
  out["coweight_bound"] = a.bound;
  if (filter) out["ord_detq1"] = *filter;
  if (r.vacuous) {
    out["result"] = "vacuous";
    emit(out);
    return kExitOk;
  }
  out["evaluated"] = r.evaluated;
  out["min"] = std::to_string(r.min_value);
  out["min_witness"] = Json{{"l", r.min_witness.l},
                            {"lambda", weight_json(r.min_witness.lambda.coords)},
                            {"phi", weight_json(r.min_witness.phi.coords)}};
  out["negative_witness_exists"] = r.negative_witness.has_value();
  emit(out);
  return r.negative_witness ? kExitNegative : kExitOk;
}

struct PoleAlphakArgs {
  std::string input;
  int count = 100;
  uint64_t seed = 0;
};

int run_pole_alphak(const PoleAlphakArgs& a) {
  Json out;
  out["version"] = kVersion;
  if (!a.input.empty()) {
    Json j = load_json(a.input);
    pole::ValuationMatrixPair pair =
        pole::ValuationMatrixPair::make(gbss::io::pmat_from_json(j.at("q1")), gbss::io::pmat_from_json(j.at("q2")));
    pole::AlphaKReport r = pole::check_alpha_k(pair);
    out["ord_det_q1"] = r.ord_det_q1;
    out["sum_nonneg_a"] = r.sum_nonneg_a;
    out["equal"] = r.equal;
    Json vals = Json::array();
    for (Int v : pole::smith_valuations(pair)) vals.push_back(v);
    out["valuations"] = vals;
    emit(out);
    return r.equal ? kExitOk : kExitNegative;
  }
  gbss::Rng rng(a.seed);
  int failures = 0;
  for (int i = 0; i < a.count; ++i) {
    samples::AlphaKInstance inst = samples::random_alpha_k_instance(rng);
    pole::AlphaKReport r = pole::check_alpha_k(inst.pair);
    if (!r.equal || pole::smith_valuations(inst.pair) != inst.expected) ++failures;
  }
  out["seed"] = a.seed;
  out["instances"] = a.count;
  out["failures"] = failures;
  out["all_equal"] = failures == 0;
  emit(out);
  return failures == 0 ? kExitOk : kExitNegative;
}

struct CurveCheckArgs {
  std::string curve_path, flags_path, chi;
  Int chi_total = 0;
  Int r = 0;
};

int run_curve_check(const CurveCheckArgs& a) {
  curve::CurveNumerics c = gbss::io::curve_from_json(load_json(a.curve_path));
  curve::FlagInput flags =
      curve::FlagInput::make(c.components, a.r, gbss::io::component_flags_from_json(load_json(a.flags_path)));
  std::vector<Int> chi_list = gbss::io::parse_int_list(a.chi);
  curve::WeightedFiltration f = curve::build_filtration(c, a.r, flags);
  Rat quantity = curve::ss_quantity(f, chi_list, a.chi_total, a.r);
  curve::AltForms alt = curve::ss_alt_forms(f, chi_list, a.chi_total, a.r);
  Json out;
  out["version"] = kVersion;
  out["mu"] = weight_json(f.mu);
  Json ranks = Json::array();
  for (const Rat& rk : f.ranks) ranks.push_back(gbss::rat_str(rk));
  out["ranks"] = ranks;
  Json m = Json::array();
  for (const Rat& mj : f.m) m.push_back(gbss::rat_str(mj));
  out["m"] = m;
  out["weighted_rank_sum"] = gbss::rat_str(curve::weighted_rank_sum(f));
  out["quantity"] = gbss::rat_str(quantity);
  out["form1"] = gbss::rat_str(alt.form1);
  out["form2"] = gbss::rat_str(alt.form2);
  out["forms_agree"] = alt.agree;
  out["verdict"] = quantity > 0 ? "stable" : quantity == 0 ? "semistable-boundary" : "unstable";
  emit(out);
  return quantity >= 0 ? kExitOk : kExitNegative;
}

struct CurveLindArgs {
  int instances = 200;
  int polarizations = 4;
  uint64_t seed = 0;
};

int run_curve_lind(const CurveLindArgs& a) {
  gbss::Rng rng(a.seed);
  int failures = 0;
  for (int i = 0; i < a.instances; ++i) {
    samples::FlagSample s = samples::random_flag_sample(rng);
    std::optional<Rat> ref;
    for (int p = 0; p < a.polarizations; ++p) {
      std::vector<std::pair<int, int>> nodes;
      for (int k = 0; k + 1 < s.components; ++k) nodes.emplace_back(k, k + 1);
      curve::CurveNumerics c =
          curve::CurveNumerics::make(s.components, nodes, samples::random_polarization(rng, s.components), 2);
      curve::WeightedFiltration f = curve::build_filtration(c, s.r, s.flags);
      if (curve::weighted_rank_sum(f) != Rat(static_cast<long>(f.mu.back()))) ++failures;
      Rat q = curve::ss_quantity(f, s.chi_list, s.chi_total, s.r);
      if (!ref)
        ref = q;
      else if (q != *ref)
        ++failures;
      if (!curve::ss_alt_forms(f, s.chi_list, s.chi_total, s.r).agree) ++failures;
    }
  }
  Json out;
  out["version"] = kVersion;
  out["seed"] = a.seed;
  out["instances"] = a.instances;
  out["polarizations"] = a.polarizations;
  out["failures"] = failures;
  out["independent"] = failures == 0;
  emit(out);
  return failures == 0 ? kExitOk : kExitNegative;
}

int run_tensor_mu(const std::string& path) {
  gbss::io::TensorInput in = gbss::io::tensor_input_from_json(load_json(path));
  Json out;
  out["mu"] = gbss::rat_str(tensor::mu(in.filtration, in.shape));
  Json lambda = Json::array();
  for (const Rat& x : tensor::lambda_vector(in.filtration, in.shape)) lambda.push_back(gbss::rat_str(x));
  out["lambda"] = lambda;
  emit(out);
  return kExitOk;
}

int run_tensor_ss(const std::string& path) {
  gbss::io::TensorInput in = gbss::io::tensor_input_from_json(load_json(path));
  tensor::DeltaSS v = tensor::delta_ss(in.filtration, in.shape, in.p_total);
  Json out;
  out["mu"] = gbss::rat_str(tensor::mu(in.filtration, in.shape));
  out["lhs"] = gbss::io::linear_poly_to_json(v.lhs);
  out["holds"] = v.holds;
  emit(out);
  return v.holds ? kExitOk : kExitNegative;
}

struct DescentCheckArgs {
  std::string tag = "sl";
  std::string form_path;
  std::string datum_path;
  int partitions_up_to = gbss::schur::kPartitionSizeCap;
};

std::vector<gbss::schur::Partition> partitions_up_to(int cap) {
  std::vector<gbss::schur::Partition> all;
  std::vector<int> cur;
  std::function<void(int, int)> exact = [&](int remaining, int max_part) {
    if (remaining == 0) {
      all.push_back(gbss::schur::Partition::make(cur, cap));
      return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
      cur.push_back(next);
      exact(remaining - next, next);
      cur.pop_back();
    }
  };
  for (int total = 1; total <= cap; ++total) exact(total, total);
  return all;
}

int run_descent_check(const DescentCheckArgs& a) {
  descent::GroupKind kind = descent::group_kind_from_name(a.tag);
  Json dj = load_json(a.datum_path);
  descent::GluingDatum d =
      descent::GluingDatum::make(gbss::io::qmat_from_json(dj.at("sigma1")), gbss::io::qmat_from_json(dj.at("sigma2")),
                                 gbss::io::qmat_from_json(dj.at("q1")), gbss::io::qmat_from_json(dj.at("q2")));
  descent::GroupTag tag = descent::GroupTag::sl();
  if (kind != descent::GroupKind::SL) {
    if (a.form_path.empty()) throw std::invalid_argument("sp/so tags need --form");
    QMat form = gbss::io::qmat_from_json(load_json(a.form_path));
    tag = kind == descent::GroupKind::Sp ? descent::GroupTag::sp(std::move(form))
                                         : descent::GroupTag::so(std::move(form));
  }
  bool schur_ok = true;
  for (const auto& lambda : partitions_up_to(a.partitions_up_to))
    if (!descent::descent_condition(lambda, d, tag)) {
      schur_ok = false;
      break;
    }
  Json out;
  out["schur"] = schur_ok;
  out["kappa"] = descent::kappa_condition(tag, d);
  auto g = descent::gluing_element(d);
  if (g) {
    bool member = descent::in_group(tag, *g);
    out["group"] = member;
    out["agree"] = member == schur_ok;
  } else {
    out["group"] = nullptr;
    out["agree"] = nullptr;
  }
  emit(out);
  return schur_ok ? kExitOk : kExitNegative;
}

struct DescentEquivArgs {
  std::string tag = "sl";
  int n = 2;
  int count = 50;
  uint64_t seed = 0;
};

int run_descent_equivalence(const DescentEquivArgs& a) {
  descent::GroupKind kind = descent::group_kind_from_name(a.tag);
  descent::GroupTag tag = descent::GroupTag::sl();
  if (kind == descent::GroupKind::Sp)
    tag = descent::GroupTag::sp(descent::standard_symplectic_form(a.n));
  else if (kind == descent::GroupKind::SO)
    throw std::invalid_argument("random so batches are not supported; use `descent check` with explicit data");
  gbss::Rng rng(a.seed);
  int disagreements = 0;
  for (int i = 0; i < a.count; ++i) {
    descent::GluingDatum d = samples::datum_realizing(rng, samples::random_group_element(rng, tag, a.n));
    descent::EquivalenceResult e = descent::descent_equivalence_test(tag, d);
    if (!e.agree || !e.group_verdict) ++disagreements;
  }
  for (int i = 0; i < a.count; ++i) {
    descent::GluingDatum d = samples::datum_realizing(rng, samples::random_nonmember(rng, tag, a.n));
    descent::EquivalenceResult e = descent::descent_equivalence_test(tag, d);
    if (!e.agree || e.group_verdict) ++disagreements;
  }
  Json out;
  out["version"] = kVersion;
  out["tag"] = a.tag;
  out["n"] = a.n;
  out["seed"] = a.seed;
  out["cases"] = 2 * a.count;
  out["disagreements"] = disagreements;
  out["all_agree"] = disagreements == 0;
  emit(out);
  return disagreements == 0 ? kExitOk : kExitNegative;
}

int run_repverify_polebd(int exponent) {
  repverify::LieAlgebraModel g = repverify::build_so5();
  repverify::IrrepModel irrep = repverify::build_irrep(g, repverify::IrrepId::TracelessSym2Std);
  repverify::TwoPointOperator op = repverify::two_point_operator(g, irrep, exponent);
  bool t_power_zero = op.t_power.is_zero();
  gbss::Int dim = repverify::coinvariants_dim(g, irrep, exponent);
  Json out;
  out["t_cubed_zero"] = t_power_zero;
  out["coinvariant_dim"] = dim;
  if (dim > 0) {
    repverify::Witness w = repverify::zero_weight_witness(g, irrep, exponent);
    out["witness_weight"] = weight_json(w.weight);
  }
  emit(out);
  bool expected = t_power_zero && dim == 1;
  return expected ? kExitOk : kExitNegative;
}

int run_report_all(uint64_t seed, int threads) {
  std::vector<gbss::report::CriterionResult> results = gbss::report::run_all(seed, threads);
  Json out;
  out["version"] = kVersion;
  out["seed"] = seed;
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json one;
    one["id"] = r.id;
    one["name"] = r.name;
    one["pass"] = r.pass;
    one["detail"] = r.detail;
    arr.push_back(one);
    all = all && r.pass;
    std::cerr << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.elapsed_ms
              << " ms)\n";
  }
  out["criteria"] = arr;
  out["all_pass"] = all;
  emit(out);
  return all ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact semistability calculator for bundle degenerations on nodal curves"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // pole
  auto* pole_cmd = app.add_subcommand("pole", "node pole bounds, sweeps, valuation identities");
  pole_cmd->require_subcommand(1);

  PoleCheckArgs pc;
  auto* pole_check = pole_cmd->add_subcommand("check", "single node bound");
  pole_check->add_option("--rep", pc.rep, "representation tag (a-std-plus-dual, b-std, c-std, d-std)");
  pole_check->add_option("--rank", pc.rank)->required();
  pole_check->add_option("--l", pc.l, "determinant line power")->required();
  pole_check->add_option("--lambda", pc.lambda, "dominant weight, comma separated")->required();
  pole_check->add_option("--phi", pc.phi, "dominant coweight, comma separated")->required();

  PoleSweepArgs ps;
  auto* pole_sweep = pole_cmd->add_subcommand("sweep", "exhaustive nonnegativity sweep");
  pole_sweep->add_option("--rep", ps.rep)->required();
  pole_sweep->add_option("--rank", ps.rank)->required();
  pole_sweep->add_option("--lmax", ps.lmax)->required();
  pole_sweep->add_option("--bound,--coweight-bound", ps.bound, "coweight entry bound")->required();
  pole_sweep->add_option("--threads", ps.threads);
  pole_sweep->add_option("--ord-detq1", ps.ord_detq1, "restrict to coweights with this ord det q1");

  PoleAlphakArgs pa;
  auto* pole_alphak = pole_cmd->add_subcommand("alphak", "valuation identity check");
  pole_alphak->add_option("--input", pa.input, "JSON file with polynomial matrices q1, q2");
  pole_alphak->add_option("--count", pa.count, "number of random instances");
  pole_alphak->add_option("--seed", pa.seed);

  // curve-ss
  auto* curve_cmd = app.add_subcommand("curve-ss", "weighted-filtration semistability");
  curve_cmd->require_subcommand(1);

  CurveCheckArgs cc;
  auto* curve_check = curve_cmd->add_subcommand("check", "evaluate one filtration");
  curve_check->add_option("--curve", cc.curve_path, "curve JSON file")->required();
  curve_check->add_option("--flags", cc.flags_path, "flag JSON file")->required();
  curve_check->add_option("--chi", cc.chi, "chi(E_j) list, comma separated")->required();
  curve_check->add_option("--chi-total", cc.chi_total)->required();
  curve_check->add_option("--r", cc.r, "uniform rank")->required();

  CurveLindArgs cl;
  auto* curve_lind = curve_cmd->add_subcommand("lind", "polarization independence batch");
  curve_lind->add_option("--instances", cl.instances);
  curve_lind->add_option("--polarizations", cl.polarizations);
  curve_lind->add_option("--seed", cl.seed);

  // tensor
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor-field semistability");
  tensor_cmd->require_subcommand(1);
  std::string tensor_mu_path, tensor_ss_path;
  auto* tmu = tensor_cmd->add_subcommand("mu", "mu of a filtration");
  tmu->add_option("--input", tensor_mu_path)->required();
  auto* tss = tensor_cmd->add_subcommand("ss", "delta-semistability inequality");
  tss->add_option("--input", tensor_ss_path)->required();

  // descent
  auto* descent_cmd = app.add_subcommand("descent", "gluing / descent checks");
  descent_cmd->require_subcommand(1);

  DescentCheckArgs dc;
  auto* descent_check = descent_cmd->add_subcommand("check", "check one gluing datum");
  descent_check->add_option("--tag", dc.tag, "sl, sp, or so");
  descent_check->add_option("--form", dc.form_path, "bilinear form JSON (sp/so)");
  descent_check->add_option("--datum", dc.datum_path, "gluing datum JSON")->required();
  descent_check->add_option("--partitions-up-to", dc.partitions_up_to);

  DescentEquivArgs de;
  auto* descent_equiv = descent_cmd->add_subcommand("equivalence", "random batch: Schur vs membership");
  descent_equiv->add_option("--tag", de.tag, "sl or sp");
  descent_equiv->add_option("--n", de.n, "matrix size");
  descent_equiv->add_option("--count", de.count, "instances per side");
  descent_equiv->add_option("--seed", de.seed);

  // repverify
  auto* rep_cmd = app.add_subcommand("repverify", "representation-theoretic verification");
  rep_cmd->require_subcommand(1);
  int exponent = 3;
  auto* rep_polebd = rep_cmd->add_subcommand("polebd", "so(5) two-point coinvariant instance");
  rep_polebd->add_option("--exponent", exponent, "power of the lowest-root operator");

  // report
  auto* report_cmd = app.add_subcommand("report", "verification reports");
  report_cmd->require_subcommand(1);
  uint64_t report_seed = 0;
  int report_threads = 1;
  auto* report_all = report_cmd->add_subcommand("all", "run the full verification battery");
  report_all->add_option("--seed", report_seed);
  report_all->add_option("--threads", report_threads);

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  int code = kExitInputError;
  try {
    if (pole_check->parsed()) code = run_pole_check(pc);
    else if (pole_sweep->parsed()) code = run_pole_sweep(ps);
    else if (pole_alphak->parsed()) code = run_pole_alphak(pa);
    else if (curve_check->parsed()) code = run_curve_check(cc);
    else if (curve_lind->parsed()) code = run_curve_lind(cl);
    else if (tmu->parsed()) code = run_tensor_mu(tensor_mu_path);
    else if (tss->parsed()) code = run_tensor_ss(tensor_ss_path);
    else if (descent_check->parsed()) code = run_descent_check(dc);
    else if (descent_equiv->parsed()) code = run_descent_equivalence(de);
    else if (rep_polebd->parsed()) code = run_repverify_polebd(exponent);
    else if (report_all->parsed()) code = run_report_all(report_seed, report_threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "elapsed: " << ms << " ms\n";
  return code;
}
