// cisforge: construct, verify, enumerate and search t-CIS quasi-cyclic,
// quasi-twisted and quasi-polycyclic codes over finite fields and Z4.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/parameter error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cisforge/asymptotics.hpp"
#include "cisforge/descent.hpp"
#include "cisforge/serialize.hpp"

namespace {

using namespace cisforge;

constexpr const char* kVersion = "1.0.0";

struct Outcome {
  Json result;
  std::string text;  // human rendering; result.dump used when --json
  int exit_code = 0;
  bool json_lines = false;  // table reports print one JSON object per row
};

FieldPtr field_arg(const Json& params) { return field_from_q(params.at("q").get<std::uint64_t>()); }

RingPtr ring_arg(const Json& params, const FieldPtr& field) {
  Poly h = parse_poly(field, params.at("h").get<std::string>());
  return QuotientRing::make(field, h);
}

std::string spec_text(const GeneratorSpec& spec) {
  std::ostringstream os;
  os << "  h = " << to_string(spec.ring->h()) << "\n";
  for (std::size_t i = 0; i < spec.gens.size(); ++i) {
    os << "  a_" << (i + 1) << " = " << to_string(spec.gens[i]) << "\n";
  }
  return os.str();
}

Outcome run_search(const Json& params) {
  const int t = params.at("t").get<int>();
  const int workers = params.at("workers").get<int>();
  const auto distance_budget = params.at("distance_budget").get<std::uint64_t>();
  const auto budget = params.at("budget").get<std::uint64_t>();
  const auto seed = params.at("seed").get<std::uint64_t>();
  std::optional<int> target;
  if (!params.at("target_d").is_null()) target = params.at("target_d").get<int>();

  FieldPtr field = field_arg(params);
  SearchReport report;
  if (params.contains("qpc_n")) {
    report = qpc_search(field, t, params.at("qpc_n").get<std::size_t>(), seed, budget, target,
                        workers, distance_budget);
  } else {
    RingPtr ring = ring_arg(params, field);
    if (params.at("mode").get<std::string>() == "exhaustive") {
      report = exhaustive_best(ring, t, budget, workers, distance_budget);
    } else {
      SearchJob job;
      job.ring = ring;
      job.t = t;
      job.mode = SearchMode::Random;
      job.seed = seed;
      job.budget = budget;
      job.target_d = target;
      job.workers = workers;
      job.distance_budget = distance_budget;
      report = random_search(job);
    }
  }

  Outcome out;
  out.result = search_report_to_json(report);
  std::ostringstream os;
  if (report.found) {
    os << "best d = " << report.best_d << " at n = " << report.n << " (candidates: "
       << report.candidates_tried << ", " << report.elapsed_sec << " s)\n"
       << spec_text(report.best_spec);
  } else {
    os << "no CIS candidate found within budget " << report.candidates_tried << "\n";
  }
  out.text = os.str();
  return out;
}

Outcome run_table(const Json& params) {
  const auto id = parse_table_id(params.at("table").get<std::string>());
  if (!id) throw std::invalid_argument("unknown table id");
  TableOptions options;
  options.random_budget = params.at("budget").get<std::uint64_t>();
  options.stop_at_published = params.at("stop_at_published").get<bool>();
  options.workers = params.at("workers").get<int>();
  options.distance_budget = params.at("distance_budget").get<std::uint64_t>();
  const auto seed = params.at("seed").get<std::uint64_t>();

  const auto rows = reproduce_table(*id, seed, options);
  Outcome out;
  out.result = table_rows_to_json(*id, seed, rows);
  out.json_lines = true;

  std::ostringstream os;
  os << "table " << table_name(*id) << " (seed " << seed << ")\n";
  os << "  n   d_found d_published mode        match\n";
  bool all = true;
  for (const auto& row : rows) {
    std::ostringstream dfound;
    if (row.found) dfound << row.d_found;
    else dfound << "-";
    os << "  " << row.n << (row.n < 10 ? "   " : "  ") << dfound.str() << "       "
       << row.d_published << "           " << (row.exhaustive ? "exhaustive" : "random    ")
       << "  " << (row.match ? "yes" : "NO") << "\n";
    all = all && row.match;
  }
  os << (all ? "all rows reproduced" : "some rows did not reproduce") << "\n";
  out.text = os.str();
  return out;
}

Outcome run_verify(const Json& params) {
  FieldPtr field = field_arg(params);
  RingPtr ring = ring_arg(params, field);
  const int t = params.at("t").get<int>();
  std::vector<Poly> gens;
  for (const auto& a : params.at("a")) gens.push_back(parse_poly(field, a.get<std::string>()));
  if (static_cast<int>(gens.size()) != t - 1) {
    throw std::invalid_argument("need exactly t-1 generators via --a");
  }
  GeneratorSpec spec(ring, t, std::move(gens));
  const bool cis = is_cis(spec);
  const bool by_rank = is_cis_by_rank(spec);
  if (cis != by_rank) throw std::logic_error("gcd criterion disagrees with the rank oracle");

  Outcome out;
  out.result = Json{{"cis", cis}, {"spec", spec_to_json(spec)}};
  out.text = std::string("CIS: ") + (cis ? "true" : "false") + "\n";
  out.exit_code = cis ? 0 : 1;
  return out;
}

Outcome run_count(const Json& params) {
  FieldPtr field = field_arg(params);
  RingPtr ring = ring_arg(params, field);
  const int t = params.at("t").get<int>();
  const bool oracle = params.at("oracle").get<bool>();
  const auto budget = params.at("budget").get<std::uint64_t>();

  CountReport report = count_report(t, ring->h(), oracle, budget);
  Outcome out;
  out.result = count_report_to_json(report);
  std::ostringstream os;
  os << "formula: " << report.formula_count.get_str() << "\n";
  if (report.oracle_count) {
    os << "oracle:  " << report.oracle_count->get_str() << "\n"
       << (report.mismatch() ? "MISMATCH" : "MATCH") << "\n";
    if (report.mismatch()) out.exit_code = 1;
  }
  out.text = os.str();
  return out;
}

Outcome run_bound(const Json& params) {
  const auto q = params.at("q").get<std::uint32_t>();
  const int t = params.at("t").get<int>();
  const int r = params.at("r").get<int>();
  const double target = static_cast<double>(t - 1) / (static_cast<double>(r) * t);
  const double delta = gv_delta(q, t, r);

  Outcome out;
  out.result = Json{{"q", q}, {"t", t}, {"r", r}, {"target", target}, {"delta", delta}};
  std::ostringstream os;
  os << "entropy target (t-1)/(rt) = " << target << "\n";
  os << "delta with H_q(delta) = target: " << delta << "\n";

  if (!params.at("expurgate_nmax").is_null()) {
    FieldPtr field = field_from_q(q);
    std::optional<double> delta_opt;
    if (!params.at("delta").is_null()) delta_opt = params.at("delta").get<double>();
    const auto rows = expurgation_report(field, t, r, params.at("expurgate_nmax").get<std::size_t>(),
                                         delta_opt);
    Json jrows = Json::array();
    os << "expurgation comparison (delta = " << (delta_opt ? *delta_opt : delta) << "):\n";
    for (const auto& row : rows) {
      Json jr{{"n", row.n}, {"ok", row.ok}};
      if (!row.ok) {
        jr["note"] = row.note;
        os << "  n=" << row.n << ": skipped (" << row.note << ")\n";
      } else {
        jr["d"] = row.d;
        jr["ball_estimate"] = row.ball_estimate.get_str();
        jr["total"] = row.total.get_str();
        jr["estimate_below_total"] = row.estimate_below_total;
        if (row.exact_containing) jr["exact_containing"] = row.exact_containing->get_str();
        os << "  n=" << row.n << ": d<=" << row.d << ", estimate "
           << row.ball_estimate.get_str() << (row.estimate_below_total ? " < " : " >= ")
           << "total " << row.total.get_str();
        if (row.exact_containing) os << " (exact incidences " << row.exact_containing->get_str() << ")";
        os << "\n";
      }
      jrows.push_back(std::move(jr));
    }
    out.result["expurgation"] = jrows;
  }
  out.text = os.str();
  return out;
}

Outcome run_shape(const Json& params) {
  const auto kind = params.at("kind").get<std::string>();
  FieldPtr field = field_from_q(params.at("q").get<std::uint64_t>());
  Outcome out;
  std::ostringstream os;
  if (kind == "qc") {
    const auto nmax = params.at("nmax").get<std::size_t>();
    Json rows = Json::array();
    std::vector<std::size_t> hits;
    for (std::size_t n = 2; n <= nmax; ++n) {
      if (!is_prime_u64(n) || n % field->p() == 0) continue;
      const bool shape = qc_two_factor_shape(field, n);
      rows.push_back(Json{{"n", n}, {"two_factor", shape}});
      if (shape) hits.push_back(n);
    }
    out.result = Json{{"kind", "qc"}, {"q", field->q()}, {"nmax", nmax}, {"rows", rows}};
    os << "primes n <= " << nmax << " with x^n-1 = (x-1) * irreducible over F_" << field->q()
       << ":\n  ";
    for (auto n : hits) os << n << " ";
    os << "\n";
  } else {
    const auto bound = params.at("bound").get<std::size_t>();
    const auto report = qt_irreducible_family(field, bound);
    out.result = Json{{"kind", "qt"}, {"q", field->q()}, {"bound", bound}, {"found", report.found}};
    if (report.found) {
      out.result["e"] = report.e;
      out.result["prime"] = report.prime;
      out.result["alpha_index"] = report.alpha_index;
      out.result["lengths"] = report.lengths;
      os << "alpha = " << field->element_str(report.alpha_index) << " of order " << report.e
         << ", prime p = " << report.prime << "\n";
      os << "n with x^n-alpha irreducible, n <= " << bound << ":\n  ";
      for (auto n : report.lengths) os << n << " ";
      os << "\n";
    } else {
      os << "no e > 1 dividing q-1 with gcd(e, (q-1)/e) = 1; no QT family over F_"
         << field->q() << "\n";
    }
  }
  out.text = os.str();
  return out;
}

Outcome run_descend(const Json& params) {
  LinearCode code = code_from_json(params.at("code"));
  if (params.at("basis").get<std::string>() != "poly") {
    throw std::invalid_argument("only the polynomial basis ('poly') is supported");
  }
  DescentBasis basis = polynomial_basis(code.field);
  LinearCode binary = descend(code, basis);

  Outcome out;
  out.result = code_to_json(binary);
  std::ostringstream os;
  os << "binary [" << binary.length << ", " << binary.dimension << "] code, " << binary.t
     << " product-partition information sets verified\n";
  os << matrix_text(binary.gen_matrix);
  out.text = os.str();
  return out;
}

Outcome run_factor(const Json& params) {
  FieldPtr field = field_arg(params);
  Poly h = parse_poly(field, params.at("h").get<std::string>());
  Factorization factorization = factorize(h);

  Outcome out;
  Json factors = Json::array();
  std::ostringstream os;
  os << to_string(h) << " =";
  if (!factorization.constant.is_one()) os << " " << factorization.constant.str() << " *";
  for (const auto& [fac, mult] : factorization.factors) {
    factors.push_back(Json{{"factor", poly_to_json(fac)},
                           {"factor_str", to_string(fac)},
                           {"multiplicity", mult}});
    os << " (" << to_string(fac) << ")";
    if (mult > 1) os << "^" << mult;
  }
  os << "\n";
  os << "separable: " << (factorization.squarefree() ? "yes" : "no") << "\n";
  out.result = Json{{"q", field->q()},
                    {"h", poly_to_json(h)},
                    {"h_str", to_string(h)},
                    {"constant", factorization.constant.index()},
                    {"separable", factorization.squarefree()},
                    {"factors", factors}};
  out.text = os.str();
  return out;
}

Outcome run_z4(const Json& params) {
  const auto op = params.at("op").get<std::string>();
  Outcome out;
  std::ostringstream os;
  if (op == "search") {
    const auto n = params.at("n").get<std::size_t>();
    const int t = params.at("t").get<int>();
    std::optional<int> target;
    if (!params.at("target_lee").is_null()) target = params.at("target_lee").get<int>();
    auto report = z4::z4_random_search(n, t, params.at("seed").get<std::uint64_t>(),
                                       params.at("budget").get<std::uint64_t>(), target,
                                       params.at("workers").get<int>(),
                                       params.at("lee_budget").get<std::uint64_t>());
    out.result = z4_search_report_to_json(report, n, t);
    if (report.found) {
      os << "best Lee distance = " << report.best_lee << " (candidates: "
         << report.candidates_tried << ")\n";
      for (std::size_t i = 0; i < report.best_spec.gens.size(); ++i) {
        os << "  a_" << (i + 1) << " = " << z4::to_string(report.best_spec.gens[i]) << "\n";
      }
    } else {
      os << "no CIS candidate found within budget\n";
    }
  } else if (op == "count") {
    auto report = z4::count_cis_z4(params.at("n").get<std::size_t>(), params.at("t").get<int>(),
                                   params.at("budget").get<std::uint64_t>());
    out.result = z4_count_to_json(report);
    os << "paper formula (4^n-2^n)^(t-1):          " << report.paper_count.get_str() << "\n";
    os << "CRT-derived (2*(4^(n-1)-2^(n-1)))^(t-1): " << report.crt_count.get_str() << "\n";
    os << "exhaustive oracle:                       " << report.oracle_count.get_str() << "\n";
    os << "oracle vs CRT:   " << (report.crt_matches_oracle ? "MATCH" : "MISMATCH") << "\n";
    os << "oracle vs paper: " << (report.paper_matches_oracle ? "MATCH" : "MISMATCH") << "\n";
  } else {  // hensel
    const auto n = params.at("n").get<std::size_t>();
    const auto minus = z4::hensel_lift(n);
    const auto plus = z4::factors_xn_plus_1(n);
    Json jminus = Json::array(), jplus = Json::array();
    os << "x^" << n << "-1 over Z4 =";
    for (const auto& f : minus) {
      jminus.push_back(z4::to_string(f));
      os << " (" << z4::to_string(f) << ")";
    }
    os << "\nx^" << n << "+1 over Z4 =";
    for (const auto& f : plus) {
      jplus.push_back(z4::to_string(f));
      os << " (" << z4::to_string(f) << ")";
    }
    os << "\n";
    out.result = Json{{"n", n}, {"factors_xn_minus_1", jminus}, {"factors_xn_plus_1", jplus}};
  }
  out.text = os.str();
  return out;
}

Outcome dispatch(const std::string& subcommand, const Json& params) {
  if (subcommand == "search") return run_search(params);
  if (subcommand == "table") return run_table(params);
  if (subcommand == "verify") return run_verify(params);
  if (subcommand == "count") return run_count(params);
  if (subcommand == "bound") return run_bound(params);
  if (subcommand == "shape") return run_shape(params);
  if (subcommand == "descend") return run_descend(params);
  if (subcommand == "factor") return run_factor(params);
  if (subcommand == "z4") return run_z4(params);
  throw std::invalid_argument("unknown subcommand: " + subcommand);
}

int finish(const std::string& subcommand, const Json& params, const Outcome& outcome, bool json,
           const std::string& manifest_path, double wall_ms) {
  if (json) {
    if (outcome.json_lines && outcome.result.contains("rows")) {
      for (const auto& row : outcome.result.at("rows")) std::cout << row.dump() << "\n";
    } else {
      std::cout << outcome.result.dump(2) << "\n";
    }
  } else {
    std::cout << outcome.text;
  }
  if (!manifest_path.empty()) {
    Json manifest{{"tool", "cisforge"},
                  {"version", kVersion},
                  {"subcommand", subcommand},
                  {"params", params},
                  {"seed", params.value("seed", std::uint64_t{0})},
                  {"wall_ms", wall_ms},
                  {"digest", digest_hex(outcome.result)}};
    std::ofstream f(manifest_path);
    if (!f) {
      std::cerr << "cannot write manifest to " << manifest_path << "\n";
      return 2;
    }
    f << manifest.dump(2) << "\n";
  }
  return outcome.exit_code;
}

int run_replay(const std::string& path, bool json) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot read manifest " << path << "\n";
    return 2;
  }
  Json manifest = Json::parse(f);
  if (manifest.value("version", "") != kVersion) {
    std::cerr << "warning: manifest written by version " << manifest.value("version", "?")
              << ", this is " << kVersion << "\n";
  }
  const std::string subcommand = manifest.at("subcommand").get<std::string>();
  Outcome outcome = dispatch(subcommand, manifest.at("params"));
  const std::string digest = digest_hex(outcome.result);
  const std::string expected = manifest.at("digest").get<std::string>();
  const bool match = digest == expected;
  if (json) {
    std::cout << Json{{"digest", digest}, {"expected", expected}, {"match", match}}.dump(2) << "\n";
  } else {
    std::cout << (match ? "MATCH" : "MISMATCH") << " (digest " << digest << ", expected "
              << expected << ")\n";
  }
  return match ? 0 : 1;
}

struct ConfigDefaults {
  int workers = 1;
  std::uint64_t distance_budget = kDefaultDistanceBudget;
  std::uint64_t search_budget = 100000;
  std::uint64_t lee_budget = z4::kDefaultLeeBudget;
};

ConfigDefaults load_config(int argc, char** argv) {
  ConfigDefaults d;
  d.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      std::ifstream f(argv[i + 1]);
      if (!f) throw std::invalid_argument(std::string("cannot read config ") + argv[i + 1]);
      Json cfg = Json::parse(f);
      d.workers = cfg.value("workers", d.workers);
      d.distance_budget = cfg.value("distance_budget", d.distance_budget);
      d.search_budget = cfg.value("search_budget", d.search_budget);
      d.lee_budget = cfg.value("lee_budget", d.lee_budget);
    }
  }
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const ConfigDefaults defaults = load_config(argc, argv);

    CLI::App app{"t-CIS quasi-polycyclic code toolkit"};
    app.set_version_flag("--version", kVersion);
    app.set_help_flag("--help", "print help");
    bool json = false;
    std::string manifest_path;
    std::string config_path;
    int workers = defaults.workers;
    app.add_flag("--json", json, "emit machine-readable JSON");
    app.add_option("--manifest", manifest_path, "write a reproducibility manifest");
    app.add_option("--config", config_path, "JSON config with budgets and worker counts");
    app.add_option("--workers", workers, "worker threads for searches and sweeps");
    app.require_subcommand(1);

    // search
    auto* search = app.add_subcommand("search", "best-distance search over generator tuples");
    search->set_help_flag("--help", "print help");
    search->fallthrough();
    std::uint64_t s_q = 2;
    int s_t = 2;
    std::string s_h;
    std::size_t s_qpc_n = 0;
    std::string s_mode = "exhaustive";
    std::uint64_t s_seed = 0, s_budget = 0, s_dist_budget = defaults.distance_budget;
    int s_target = -1;
    search->add_option("--q", s_q, "field size")->required();
    search->add_option("--t", s_t, "index t (rate 1/t)")->required();
    search->add_option("--h", s_h, "modulus polynomial, e.g. \"x^7-1\"");
    search->add_option("--qpc-n", s_qpc_n, "QPC mode: co-index n, h sampled randomly");
    search->add_option("--mode", s_mode, "exhaustive | random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--seed", s_seed, "seed for random mode");
    search->add_option("--budget", s_budget, "candidate budget (default: mode-dependent)");
    search->add_option("--target-d", s_target, "stop once this distance is reached");
    search->add_option("--distance-budget", s_dist_budget, "codeword sweep cap");

    // table
    auto* table = app.add_subcommand("table", "reproduce one of the six published tables");
    table->set_help_flag("--help", "print help");
    table->fallthrough();
    std::string t_id;
    std::uint64_t t_seed = 0, t_budget = defaults.search_budget,
                  t_dist_budget = defaults.distance_budget;
    bool t_full = false;
    table->add_option("id", t_id, "qc-t2 qc-t3 qt-t2 qt-t3 qpc-t2 qpc-t3")->required();
    table->add_option("--seed", t_seed, "seed for randomized rows");
    table->add_option("--budget", t_budget, "candidate budget for randomized rows");
    table->add_flag("--full", t_full, "run the whole budget instead of stopping at published d");
    table->add_option("--distance-budget", t_dist_budget, "codeword sweep cap");

    // verify
    auto* verify = app.add_subcommand("verify", "check the CIS property of a spec");
    verify->set_help_flag("--help", "print help");
    verify->fallthrough();
    std::uint64_t v_q = 2;
    int v_t = 2;
    std::string v_h;
    std::vector<std::string> v_a;
    verify->add_option("--q", v_q)->required();
    verify->add_option("--t", v_t)->required();
    verify->add_option("--h", v_h)->required();
    verify->add_option("--a", v_a, "generator residue, repeat t-1 times")->required();

    // count
    auto* count = app.add_subcommand("count", "count t-CIS codes for a separable h");
    count->set_help_flag("--help", "print help");
    count->fallthrough();
    std::uint64_t c_q = 2, c_budget = 1ULL << 24;
    int c_t = 2;
    std::string c_h;
    bool c_oracle = false;
    count->add_option("--q", c_q)->required();
    count->add_option("--t", c_t)->required();
    count->add_option("--h", c_h)->required();
    count->add_flag("--oracle", c_oracle, "run the exhaustive tuple-scan oracle");
    count->add_option("--budget", c_budget, "oracle scan cap");

    // bound
    auto* bound = app.add_subcommand("bound", "GV entropy floor and expurgation comparison");
    bound->set_help_flag("--help", "print help");
    bound->fallthrough();
    std::uint32_t b_q = 2;
    int b_t = 2, b_r = 1;
    std::size_t b_nmax = 0;
    double b_delta = -1.0;
    bound->add_option("--q", b_q)->required();
    bound->add_option("--t", b_t)->required();
    bound->add_option("--r", b_r, "number of equal-degree factors");
    bound->add_option("--expurgate-nmax", b_nmax, "emit the finite-n comparison up to this n");
    bound->add_option("--delta", b_delta, "override the relative distance");

    // shape
    auto* shape = app.add_subcommand("shape", "factorization-shape reports");
    shape->set_help_flag("--help", "print help");
    shape->fallthrough();
    auto* shape_qc = shape->add_subcommand("qc", "primes with x^n-1 = (x-1) * irreducible");
    shape_qc->set_help_flag("--help", "print help");
    shape_qc->fallthrough();
    std::uint64_t sh_q = 2;
    std::size_t sh_nmax = 100;
    shape_qc->add_option("--q", sh_q)->required();
    shape_qc->add_option("--nmax", sh_nmax);
    auto* shape_qt = shape->add_subcommand("qt", "irreducible binomial family x^(p^i)-alpha");
    shape_qt->set_help_flag("--help", "print help");
    shape_qt->fallthrough();
    std::uint64_t shqt_q = 4;
    std::size_t shqt_bound = 100;
    shape_qt->add_option("--q", shqt_q)->required();
    shape_qt->add_option("--bound", shqt_bound);
    shape->require_subcommand(1);

    // descend
    auto* descend_cmd = app.add_subcommand("descend", "binary expansion of a 2^m-ary CIS code");
    descend_cmd->set_help_flag("--help", "print help");
    descend_cmd->fallthrough();
    std::string d_in, d_out, d_basis = "poly";
    descend_cmd->add_option("--in", d_in, "input code JSON file")->required();
    descend_cmd->add_option("--out", d_out, "output file (stdout otherwise)");
    descend_cmd->add_option("--basis", d_basis, "expansion basis (poly)");

    // factor
    auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial over F_q");
    factor_cmd->set_help_flag("--help", "print help");
    factor_cmd->fallthrough();
    std::uint64_t f_q = 2;
    std::string f_h;
    factor_cmd->add_option("--q", f_q)->required();
    factor_cmd->add_option("--h", f_h)->required();

    // z4
    auto* z4_cmd = app.add_subcommand("z4", "multinegacirculant Z4 codes");
    z4_cmd->set_help_flag("--help", "print help");
    z4_cmd->fallthrough();
    auto* z4_search = z4_cmd->add_subcommand("search", "random search maximizing Lee distance");
    z4_search->set_help_flag("--help", "print help");
    z4_search->fallthrough();
    std::size_t z_n = 3;
    int z_t = 2, z_target = -1;
    std::uint64_t z_seed = 0, z_budget = defaults.search_budget, z_lee_budget = defaults.lee_budget;
    z4_search->add_option("--n", z_n)->required();
    z4_search->add_option("--t", z_t)->required();
    z4_search->add_option("--seed", z_seed);
    z4_search->add_option("--budget", z_budget);
    z4_search->add_option("--target-lee", z_target);
    z4_search->add_option("--lee-budget", z_lee_budget);
    auto* z4_count = z4_cmd->add_subcommand("count", "Theorem-count probe: paper vs CRT vs oracle");
    z4_count->set_help_flag("--help", "print help");
    z4_count->fallthrough();
    std::size_t zc_n = 3;
    int zc_t = 2;
    std::uint64_t zc_budget = 1ULL << 24;
    z4_count->add_option("--n", zc_n)->required();
    z4_count->add_option("--t", zc_t)->required();
    z4_count->add_option("--budget", zc_budget);
    auto* z4_hensel = z4_cmd->add_subcommand("hensel", "Hensel lift of x^n-1 to Z4");
    z4_hensel->set_help_flag("--help", "print help");
    z4_hensel->fallthrough();
    std::size_t zh_n = 7;
    z4_hensel->add_option("--n", zh_n)->required();
    z4_cmd->require_subcommand(1);

    // replay
    auto* replay = app.add_subcommand("replay", "re-run a manifest and compare digests");
    replay->set_help_flag("--help", "print help");
    replay->fallthrough();
    std::string r_path;
    replay->add_option("manifest", r_path, "manifest JSON file")->required();

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int rc = app.exit(e);
      return rc == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    std::string subcommand;
    Json params;

    if (search->parsed()) {
      subcommand = "search";
      if (s_h.empty() == (s_qpc_n == 0)) {
        throw std::invalid_argument("provide exactly one of --h and --qpc-n");
      }
      if (s_budget == 0) {
        s_budget = (s_mode == "exhaustive" && s_qpc_n == 0) ? (1ULL << 24) : defaults.search_budget;
      }
      params = Json{{"q", s_q},          {"t", s_t},
                    {"mode", s_mode},    {"seed", s_seed},
                    {"budget", s_budget}, {"workers", workers},
                    {"distance_budget", s_dist_budget}};
      params["target_d"] = s_target >= 0 ? Json(s_target) : Json(nullptr);
      if (s_qpc_n != 0) {
        params["qpc_n"] = s_qpc_n;
      } else {
        params["h"] = s_h;
      }
    } else if (table->parsed()) {
      subcommand = "table";
      params = Json{{"table", t_id},
                    {"seed", t_seed},
                    {"budget", t_budget},
                    {"stop_at_published", !t_full},
                    {"workers", workers},
                    {"distance_budget", t_dist_budget}};
    } else if (verify->parsed()) {
      subcommand = "verify";
      params = Json{{"q", v_q}, {"t", v_t}, {"h", v_h}, {"a", v_a}};
    } else if (count->parsed()) {
      subcommand = "count";
      params = Json{{"q", c_q}, {"t", c_t}, {"h", c_h}, {"oracle", c_oracle}, {"budget", c_budget}};
    } else if (bound->parsed()) {
      subcommand = "bound";
      params = Json{{"q", b_q}, {"t", b_t}, {"r", b_r}};
      params["expurgate_nmax"] = b_nmax > 0 ? Json(b_nmax) : Json(nullptr);
      params["delta"] = b_delta >= 0 ? Json(b_delta) : Json(nullptr);
    } else if (shape->parsed()) {
      subcommand = "shape";
      if (shape_qc->parsed()) {
        params = Json{{"kind", "qc"}, {"q", sh_q}, {"nmax", sh_nmax}};
      } else {
        params = Json{{"kind", "qt"}, {"q", shqt_q}, {"bound", shqt_bound}};
      }
    } else if (descend_cmd->parsed()) {
      subcommand = "descend";
      std::ifstream f(d_in);
      if (!f) throw std::invalid_argument("cannot read " + d_in);
      params = Json{{"code", Json::parse(f)}, {"basis", d_basis}};
    } else if (factor_cmd->parsed()) {
      subcommand = "factor";
      params = Json{{"q", f_q}, {"h", f_h}};
    } else if (z4_cmd->parsed()) {
      subcommand = "z4";
      if (z4_search->parsed()) {
        params = Json{{"op", "search"}, {"n", z_n},         {"t", z_t},
                      {"seed", z_seed}, {"budget", z_budget}, {"workers", workers},
                      {"lee_budget", z_lee_budget}};
        params["target_lee"] = z_target >= 0 ? Json(z_target) : Json(nullptr);
      } else if (z4_count->parsed()) {
        params = Json{{"op", "count"}, {"n", zc_n}, {"t", zc_t}, {"budget", zc_budget}};
      } else {
        params = Json{{"op", "hensel"}, {"n", zh_n}};
      }
    } else if (replay->parsed()) {
      return run_replay(r_path, json);
    }

    Outcome outcome = dispatch(subcommand, params);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (subcommand == "descend" && !d_out.empty()) {
      std::ofstream f(d_out);
      if (!f) throw std::invalid_argument("cannot write " + d_out);
      f << outcome.result.dump(2) << "\n";
    }
    return finish(subcommand, params, outcome, json, manifest_path, wall_ms);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
