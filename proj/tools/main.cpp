#include <chrono>
#include <ctime>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohfm/error.hpp"
#include "cohfm/fm.hpp"
#include "cohfm/isogeny.hpp"
#include "cohfm/ns_lattice.hpp"
#include "cohfm/report.hpp"
#include "cohfm/spectral.hpp"
#include "cohfm/stability.hpp"
#include "cohfm/verify.hpp"

namespace {

using namespace cohfm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitVerifyFail = 4;

struct Options {
  std::string format = "text";
  std::vector<std::string> model_files;
  bool timestamp = false;
  std::map<std::string, RingModelPtr> user_models;
};

void emit(const Options& opt, const ReportNode& node) {
  if (opt.timestamp) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    std::cout << "timestamp: " << buf << "\n";
  }
  std::cout << (opt.format == "flat" ? render_flat(node) : render_text(node));
}

RingModelPtr resolve_model(const Options& opt, const std::string& name) {
  if (auto it = opt.user_models.find(name); it != opt.user_models.end()) return it->second;
  return builtin_model(name);
}

long parse_long(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(std::string("invalid ") + what + ": '" + text + "'");
  }
}

std::pair<long, long> parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(std::string("invalid ") + what + " (expected lo:hi): '" + text + "'");
  const long lo = parse_long(text.substr(0, colon), what);
  const long hi = parse_long(text.substr(colon + 1), what);
  return {lo, hi};
}

ReportNode model_report(const RingModelPtr& m) {
  ReportNode node = ReportNode::block(m->name());
  node.add("top_degree", m->top_degree());
  ReportNode basis = ReportNode::block("basis");
  for (const BasisElement& e : m->basis()) basis.add(e.label, e.degree);
  node.add(std::move(basis));
  ReportNode products = ReportNode::block("products");
  for (std::size_t i = 0; i < m->size(); ++i)
    for (std::size_t j = i; j < m->size(); ++j) {
      if (i == m->unit_index() || j == m->unit_index()) continue;
      const CohClass p = mul(m->basis_class(i), m->basis_class(j));
      if (p.is_zero()) continue;
      products.add(m->basis_element(i).label + "." + m->basis_element(j).label, to_string(p));
    }
  node.add(std::move(products));
  return node;
}

int cmd_models(const Options& opt, const std::string& name) {
  ReportNode root = ReportNode::block("models");
  if (!name.empty()) {
    root.add(model_report(resolve_model(opt, name)));
  } else {
    for (const std::string& builtin : builtin_model_names())
      root.add(model_report(builtin_model(builtin)));
    for (const auto& [user_name, model] : opt.user_models) root.add(model_report(model));
  }
  emit(opt, root);
  return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& suite) {
  std::vector<SuiteResult> results;
  if (suite == "all")
    results = run_all_suites();
  else
    results.push_back(run_verification_suite(suite));

  ReportNode root = ReportNode::block("verify");
  bool all_pass = true;
  std::string first_failure;
  for (const SuiteResult& r : results) {
    root.add(suite_report(r));
    if (!r.passed() && all_pass) {
      all_pass = false;
      first_failure = r.suite + "/" + r.first_failure()->name;
    }
  }
  root.add("result", all_pass ? "pass" : "FAIL");
  if (!all_pass) root.add("first_failure", first_failure);
  emit(opt, root);
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_fm_apply(const Options& opt, const std::string& expr, bool inverse) {
  const FMMatrix& fm = inverse ? builtin_sP_inverse() : builtin_sP();
  const CohClass input = parse_class(expr, fm.map.source);
  const CohClass image = apply_fm(fm, input);
  ReportNode root = ReportNode::block(inverse ? "fm_inverse" : "fm");
  root.add("input", to_string(input));
  root.add("input_model", fm.map.source->name());
  root.add("image", to_string(image));
  root.add("image_model", fm.map.target->name());
  emit(opt, root);
  return kExitOk;
}

int cmd_chern_ci(const Options& opt, long ambient, const std::vector<long>& degrees) {
  const auto ci = ci_tangent_chern(static_cast<int>(ambient), degrees);
  ReportNode root = ReportNode::block("chern_ci");
  root.add("ambient", ci.ambient_dim);
  std::string degs;
  for (long d : ci.multidegrees) degs += (degs.empty() ? "" : ",") + std::to_string(d);
  root.add("degrees", degs.empty() ? "none" : degs);
  root.add("dim", ci.dim);
  root.add("c1_h", ci.c1);
  root.add("c2_h2", ci.c2);
  root.add("c3_h3", ci.c3);
  root.add("degree", ci.degree);
  root.add("integral_c3", ci.integral_c3);
  emit(opt, root);
  return kExitOk;
}

int cmd_chern_table(const Options& opt) {
  ReportNode root = ReportNode::block("chern_table");
  for (const FmTableRow& row : fm_sheaf_table()) {
    ReportNode r = ReportNode::block(row.sheaf);
    r.add("ch", to_string(row.ch));
    r.add("transform_upstairs", row.upstairs_sheaf);
    r.add("ch_upstairs", to_string(row.upstairs_ch));
    if (!row.image_sheaf.empty()) r.add("transform", row.image_sheaf);
    r.add("ch_transform", to_string(row.image_ch));
    r.add("status", row.status == ColumnStatus::verified ? "verified" : "expected");
    root.add(std::move(r));
  }
  emit(opt, root);
  return kExitOk;
}

std::string candidate_str(const SpectralCandidate& c) {
  std::string out =
      "(" + std::to_string(c.a) + ", " + std::to_string(c.b) + ", " + std::to_string(c.chi);
  if (c.twist)
    out += "; twist " + std::to_string(c.twist->x) + "[Hd] + " + std::to_string(c.twist->y) +
           "[Ad]";
  return out + ")";
}

int cmd_search(const Options& opt, const SearchBounds& bounds, const HeteroticConstraints& k) {
  const SearchReport report = enumerate_candidates(bounds, k);
  ReportNode root = ReportNode::block("search");
  root.add("rank", k.rank);
  root.add("c1_target", to_string(k.c1_target));
  root.add("c3_target", k.c3_target);
  root.add("c2_tangent", to_string(k.c2_tangent));
  if (k.c2_tangent_is_default)
    root.add("c2_tangent_note",
             "complete-intersection default; small-resolution correction not included, "
             "override with --c2t");
  root.add("anomaly",
           k.anomaly_mode == AnomalyMode::require_effective ? "require_effective" : "ignore");
  root.add("a_range", std::to_string(bounds.a_lo) + ":" + std::to_string(bounds.a_hi));
  root.add("b_range", std::to_string(bounds.b_lo) + ":" + std::to_string(bounds.b_hi));
  root.add("chi_range", std::to_string(bounds.chi_lo) + ":" + std::to_string(bounds.chi_hi));
  if (bounds.twist)
    root.add("twist_range", std::to_string((*bounds.twist)[0]) + ":" +
                                std::to_string((*bounds.twist)[1]) + "," +
                                std::to_string((*bounds.twist)[2]) + ":" +
                                std::to_string((*bounds.twist)[3]));
  else
    root.add("twist_range", "none");
  root.add("effective_candidates_only",
           bounds.require_effective_candidates ? "true" : "false");
  root.add("total", report.total);
  ReportNode rejected = ReportNode::block("rejected");
  for (int i = 0; i < kConstraintCount; ++i)
    rejected.add(constraint_name(static_cast<Constraint>(i)), report.rejected[i]);
  root.add(std::move(rejected));
  root.add("feasible_count", report.feasible.size());
  if (!report.feasible.empty()) {
    ReportNode feasible = ReportNode::block("feasible");
    std::size_t index = 0;
    for (const SpectralCandidate& c : report.feasible)
      feasible.add("candidate_" + std::to_string(index++), candidate_str(c));
    root.add(std::move(feasible));
  }
  root.add_bool("infeasible_within_bounds", report.infeasible_within_bounds());
  if (!report.certificate.empty()) root.add("certificate", report.certificate);
  root.add("scope", report.scope_note);
  emit(opt, root);
  return report.infeasible_within_bounds() ? kExitInfeasible : kExitOk;
}

int cmd_stability_ample(const Options& opt, const Rat& l, const Rat& k) {
  const PolarizationChoice d(l, k);
  const AmpleResult res = is_ample(d);
  ReportNode root = ReportNode::block("stability_ample");
  root.add("divisor", to_string(d.divisor()));
  root.add("dot_ed", res.dot_section);
  root.add("dot_ld", res.dot_line);
  root.add_bool("ample", res.ample);
  if (!res.ample) root.add("failing_generator", res.witness);
  emit(opt, root);
  return kExitOk;
}

int cmd_stability_threshold(const Options& opt, const Rat& a, const Rat& mu, long rank) {
  const long k = stability_threshold(a, mu, rank);
  ReportNode root = ReportNode::block("stability_threshold");
  root.add("a", a);
  root.add("mu", mu);
  root.add("rank", rank);
  root.add("k", k);
  emit(opt, root);
  return kExitOk;
}

std::string triple_str(const NSTriple& t) {
  return "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) +
         ")";
}

int cmd_lattice_cone(const Options& opt, long height) {
  const auto gens = cone_generators(height);
  ReportNode root = ReportNode::block("lattice_cone");
  root.add("height", height);
  root.add("count", gens.size());
  ReportNode list = ReportNode::block("generators");
  std::size_t index = 0;
  for (const NSTriple& t : gens) list.add("g" + std::to_string(index++), triple_str(t));
  root.add(std::move(list));
  emit(opt, root);
  return kExitOk;
}

int cmd_lattice_orbit(const Options& opt, long height) {
  const OrbitReport report = orbit_transitivity(height);
  ReportNode root = ReportNode::block("lattice_orbit");
  root.add("height", height);
  root.add("states_explored", report.states_explored);
  root.add("reached", report.reached.size());
  root.add("missed", report.missed.size());
  if (!report.missed.empty()) {
    ReportNode missed = ReportNode::block("missed_generators");
    std::size_t index = 0;
    for (const NSTriple& t : report.missed) missed.add("g" + std::to_string(index++), triple_str(t));
    root.add(std::move(missed));
  }
  root.add_bool("transitive_within_height", report.missed.empty());
  emit(opt, root);
  return kExitOk;
}

int cmd_lattice_schwarz(const Options& opt, long height) {
  const SchwarzReport report = reverse_schwarz_check(height);
  ReportNode root = ReportNode::block("lattice_schwarz");
  root.add("height", height);
  root.add("generators", report.generators);
  root.add("classes", report.classes);
  root.add("pairs_checked", report.pairs_checked);
  root.add("violations", report.violations.size());
  if (!report.violations.empty()) {
    ReportNode list = ReportNode::block("violation_list");
    std::size_t index = 0;
    for (const SchwarzViolation& v : report.violations) {
      ReportNode item = ReportNode::block("v" + std::to_string(index++));
      item.add("d", triple_str(v.lhs_class));
      item.add("h", triple_str(v.rhs_class));
      item.add("pairing_sq", v.pairing_sq);
      item.add("norm_product", v.norm_product);
      list.add(std::move(item));
    }
    root.add(std::move(list));
  }
  emit(opt, root);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;

  CLI::App app{"Exact-rational intersection-ring and Fourier-Mukai calculator for a "
               "(1,8)-polarized abelian-surface-fibered Calabi-Yau threefold and its dual"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "flat"}))
      ->capture_default_str();
  app.add_option("--model-file", opt.model_files, "Load a user ring-model file");
  app.add_flag("--timestamp", opt.timestamp, "Prefix output with a timestamp line");

  auto* models_cmd = app.add_subcommand("models", "Show the built-in and loaded ring models");
  std::string models_name;
  models_cmd->add_option("name", models_name, "Model to show (default: all)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->capture_default_str();

  auto* fm_cmd = app.add_subcommand("fm", "Fourier-Mukai transform on Chern characters");
  auto* fm_apply_cmd = fm_cmd->add_subcommand("apply", "Transform a class");
  std::string fm_expr;
  bool fm_inverse = false;
  fm_apply_cmd->add_option("--class", fm_expr, "Class expression")->required();
  fm_apply_cmd->add_flag("--inverse", fm_inverse, "Apply the inverse transform");
  auto* fm_verify_cmd = fm_cmd->add_subcommand("verify", "Run the matrix verification suite");
  fm_cmd->require_subcommand(1);

  auto* chern_cmd = app.add_subcommand("chern", "Chern class utilities");
  auto* chern_ci_cmd =
      chern_cmd->add_subcommand("ci", "Tangent Chern classes of a complete intersection");
  long ci_ambient = 0;
  std::string ci_degrees;
  chern_ci_cmd->add_option("--ambient", ci_ambient, "Ambient projective dimension")->required();
  chern_ci_cmd->add_option("--degrees", ci_degrees, "Comma-separated multidegrees (may be empty)");
  auto* chern_table_cmd =
      chern_cmd->add_subcommand("table", "Transform table of the six basis sheaves");
  chern_cmd->require_subcommand(1);

  auto* search_cmd = app.add_subcommand("search", "Scan spectral data against the constraints");
  long search_rank = 0;
  std::string search_c3 = "6", search_c1, search_c2t, search_anomaly = "require";
  std::string a_range, b_range = "0:64", chi_range = "-64:64", twist_range;
  int workers = 1;
  bool allow_ineffective = false;
  search_cmd->add_option("--rank", search_rank, "Bundle rank (4 or 5 for the challenge)")
      ->required();
  search_cmd->add_option("--c3", search_c3, "Target integral of c3")->capture_default_str();
  search_cmd->add_option("--c1", search_c1, "Target c1 as a class on Vdual (default 0)");
  search_cmd->add_option("--c2t", search_c2t,
                         "c2 of the tangent bundle on Vdual (default [ed] + 8[Ed])");
  search_cmd->add_option("--anomaly", search_anomaly, "Anomaly mode: require | ignore")
      ->check(CLI::IsMember({"require", "ignore"}))
      ->capture_default_str();
  search_cmd->add_option("--a-range", a_range, "Curve e-coefficient range lo:hi (default rank:rank)");
  search_cmd->add_option("--b-range", b_range, "Curve l-coefficient range lo:hi")
      ->capture_default_str();
  search_cmd->add_option("--chi-range", chi_range, "Euler characteristic range lo:hi")
      ->capture_default_str();
  search_cmd->add_option("--twist-range", twist_range, "Twist ranges xlo:xhi,ylo:yhi");
  search_cmd->add_option("--workers", workers, "Worker threads (identical output for any count)")
      ->capture_default_str();
  search_cmd->add_flag("--allow-ineffective", allow_ineffective,
                       "Also scan candidates outside the effective cone");

  auto* stability_cmd = app.add_subcommand("stability", "Ampleness and slope-stability tools");
  auto* ample_cmd = stability_cmd->add_subcommand("ample", "Kleiman ampleness test");
  std::string ample_l, ample_k;
  ample_cmd->add_option("--l", ample_l, "Coefficient of Hd")->required();
  ample_cmd->add_option("--k", ample_k, "Coefficient of Ad")->required();
  auto* threshold_cmd =
      stability_cmd->add_subcommand("threshold", "Least k making every subsheaf slope lose");
  std::string thr_a, thr_mu;
  long thr_rank = 0;
  threshold_cmd->add_option("--a", thr_a, "Subsheaf slope bound")->required();
  threshold_cmd->add_option("--mu", thr_mu, "Slope of the bundle")->required();
  threshold_cmd->add_option("--rank", thr_rank, "Bundle rank (>= 2)")->required();
  stability_cmd->require_subcommand(1);

  auto* lattice_cmd = app.add_subcommand("lattice", "Neron-Severi calculus on E x E");
  long cone_height = 0, orbit_height = 0, schwarz_height = 0;
  auto* cone_cmd = lattice_cmd->add_subcommand("cone", "Effective-cone generators");
  cone_cmd->add_option("--height", cone_height, "Coordinate bound")->required();
  auto* orbit_cmd = lattice_cmd->add_subcommand("orbit", "Orbit of E under SL(2,Z)");
  orbit_cmd->add_option("--height", orbit_height, "Coordinate bound")->required();
  auto* schwarz_cmd = lattice_cmd->add_subcommand("schwarz", "Reverse Schwarz inequality scan");
  schwarz_cmd->add_option("--height", schwarz_height, "Coordinate bound")->required();
  lattice_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  // A model file that fails its invariant check is a verification failure;
  // everything else the user got wrong is a usage error.
  try {
    for (const std::string& path : opt.model_files) {
      const RingModelPtr m = load_model_file(path);
      opt.user_models[m->name()] = m;
    }
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*models_cmd) return cmd_models(opt, models_name);
    if (*verify_cmd) return cmd_verify(opt, suite);
    if (*fm_cmd) {
      if (*fm_apply_cmd) return cmd_fm_apply(opt, fm_expr, fm_inverse);
      if (*fm_verify_cmd) return cmd_verify(opt, "fm-matrix");
    }
    if (*chern_cmd) {
      if (*chern_ci_cmd) {
        std::vector<long> degrees;
        std::stringstream ss(ci_degrees);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) degrees.push_back(parse_long(item, "degree"));
        return cmd_chern_ci(opt, ci_ambient, degrees);
      }
      if (*chern_table_cmd) return cmd_chern_table(opt);
    }
    if (*search_cmd) {
      HeteroticConstraints k = HeteroticConstraints::make(search_rank, rat_parse(search_c3));
      if (search_rank < 2) throw Error("search rank must be at least 2");
      const RingModelPtr vd = builtin_model("Vdual");
      if (!search_c1.empty()) k.c1_target = parse_class(search_c1, vd);
      if (!search_c2t.empty()) k.set_c2_tangent(parse_class(search_c2t, vd));
      k.anomaly_mode =
          search_anomaly == "ignore" ? AnomalyMode::ignore : AnomalyMode::require_effective;

      SearchBounds bounds;
      if (a_range.empty()) {
        bounds.a_lo = bounds.a_hi = search_rank;
      } else {
        std::tie(bounds.a_lo, bounds.a_hi) = parse_range(a_range, "--a-range");
      }
      std::tie(bounds.b_lo, bounds.b_hi) = parse_range(b_range, "--b-range");
      std::tie(bounds.chi_lo, bounds.chi_hi) = parse_range(chi_range, "--chi-range");
      if (!twist_range.empty()) {
        const auto comma = twist_range.find(',');
        if (comma == std::string::npos)
          throw Error("invalid --twist-range (expected xlo:xhi,ylo:yhi)");
        const auto [xlo, xhi] = parse_range(twist_range.substr(0, comma), "--twist-range");
        const auto [ylo, yhi] = parse_range(twist_range.substr(comma + 1), "--twist-range");
        bounds.twist = {xlo, xhi, ylo, yhi};
      }
      bounds.require_effective_candidates = !allow_ineffective;
      bounds.workers = workers;
      return cmd_search(opt, bounds, k);
    }
    if (*stability_cmd) {
      if (*ample_cmd) return cmd_stability_ample(opt, rat_parse(ample_l), rat_parse(ample_k));
      if (*threshold_cmd)
        return cmd_stability_threshold(opt, rat_parse(thr_a), rat_parse(thr_mu), thr_rank);
    }
    if (*lattice_cmd) {
      if (*cone_cmd) return cmd_lattice_cone(opt, cone_height);
      if (*orbit_cmd) return cmd_lattice_orbit(opt, orbit_height);
      if (*schwarz_cmd) return cmd_lattice_schwarz(opt, schwarz_height);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
