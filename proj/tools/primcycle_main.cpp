// primcycle: classification queries, group construction and analysis, and
// verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "primcycle/arith.hpp"
#include "primcycle/classifier.hpp"
#include "primcycle/families.hpp"
#include "primcycle/io.hpp"
#include "primcycle/verifier.hpp"

using namespace primcycle;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

constexpr const char *kConfigEnv = "PRIMCYCLE_CONFIG";

struct CliConfig {
  bool json = false;
  std::uint64_t seed = 0x5eedULL;
  std::uint64_t exhaustive_cap = 1'000'000;
  std::uint64_t sample_budget = 200'000;
  double time_budget_seconds = 0;
  std::size_t degree_cap = 4096;
  unsigned jobs = 1;
  bool timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Keys mirror the long flag names.
void apply_config_file(const std::string &path, CliConfig &cfg) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read config file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!j.is_object())
    throw UsageError("config file " + path + ": expected a JSON object");
  try {
    for (auto &[key, v] : j.items()) {
      if (key == "format") {
        auto f = v.get<std::string>();
        if (f != "text" && f != "json")
          throw UsageError("config file " + path + ": format must be text or json");
        cfg.json = f == "json";
      } else if (key == "seed") {
        cfg.seed = v.get<std::uint64_t>();
      } else if (key == "exhaustive-cap") {
        cfg.exhaustive_cap = v.get<std::uint64_t>();
      } else if (key == "sample-budget") {
        cfg.sample_budget = v.get<std::uint64_t>();
      } else if (key == "time-budget") {
        cfg.time_budget_seconds = v.get<double>();
      } else if (key == "degree-cap") {
        cfg.degree_cap = v.get<std::size_t>();
      } else if (key == "jobs") {
        cfg.jobs = v.get<unsigned>();
      } else if (key == "timing") {
        cfg.timing = v.get<bool>();
      } else {
        throw UsageError("config file " + path + ": unknown key \"" + key + "\"");
      }
    }
  } catch (const Json::type_error &e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
}

VerifierConfig verifier_config(const CliConfig &cfg) {
  VerifierConfig v;
  v.seed = cfg.seed;
  v.exhaustive_cap = cfg.exhaustive_cap;
  v.sample_budget = cfg.sample_budget;
  v.time_budget_seconds = cfg.time_budget_seconds;
  v.jobs = cfg.jobs;
  v.timing = cfg.timing;
  return v;
}

std::string render_params(const FamilyDescriptor &d) {
  std::ostringstream os;
  if (d.p)
    os << "p=" << d.p << " q=" << d.q();
  if (d.d)
    os << " d=" << d.d;
  if (!d.name.empty() && d.name != "L2" && d.name != "PGL2")
    os << (d.p ? " " : "") << "name=" << d.name;
  return os.str();
}

// ---- classify ----

struct ClassifyArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  bool equations = false;
};

int cmd_classify(const ClassifyArgs &a, const CliConfig &cfg) {
  CaseList list;
  try {
    list = classify(a.n, a.k);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  if (cfg.json) {
    Json j = to_json(list);
    if (a.equations)
      j["equations"] = to_json(solve_degree_equations(a.n));
    std::cout << j.dump() << '\n';
    return kExitPass;
  }
  std::cout << "degree " << a.n << ", " << a.k << " fixed point" << (a.k == 1 ? "" : "s")
            << " (" << a.n - a.k << "-cycle)\n";
  for (const auto &c : list.cases) {
    std::cout << "  " << to_string(c.descriptor.tag) << "  " << c.descriptor.group_name() << "  "
              << render_params(c.descriptor) << '\n';
    if (!c.note.empty())
      std::cout << "      note: " << c.note << '\n';
  }
  for (const auto &u : list.unconditional)
    std::cout << "  " << u << '\n';
  if (list.cases.empty())
    std::cout << "  (only the alternating and symmetric groups)\n";
  if (a.equations) {
    auto eq = solve_degree_equations(a.n);
    std::cout << "degree equations:\n  prime: " << (eq.prime ? "yes" : "no") << '\n';
    for (const auto &f : eq.projective)
      std::cout << "  (q^d-1)/(q-1) = n: q=" << f.q() << " d=" << f.d << '\n';
    for (const auto &f : eq.affine)
      std::cout << "  q^d = n: q=" << f.q() << " d=" << f.d << '\n';
    if (eq.line)
      std::cout << "  q+1 = n: q=" << eq.line->q()
                << (eq.line_prime_at_least_5 ? " (prime, at least 5)" : "") << '\n';
  }
  return kExitPass;
}

// ---- construct ----

struct ConstructArgs {
  std::string family;
  std::uint32_t p = 0, e = 1, d = 0, m = 0, blocks = 0, step = 0;
  std::uint64_t q = 0;
  std::string which;
  std::string name;
  std::string out;
};

std::pair<std::uint32_t, std::uint32_t> field_of(const ConstructArgs &a) {
  if (a.q) {
    auto pp = as_prime_power(a.q);
    if (!pp)
      throw UsageError("--q " + std::to_string(a.q) + " is not a prime power");
    if (a.p && a.p != pp->p)
      throw UsageError("--p conflicts with --q");
    return {static_cast<std::uint32_t>(pp->p), pp->e};
  }
  if (!a.p)
    throw UsageError("--q or --p is required for family " + a.family);
  return {a.p, a.e};
}

LineGroup line_group(const std::string &s) {
  if (s == "L2")
    return LineGroup::L2;
  if (s == "PGL2")
    return LineGroup::PGL2;
  if (s == "PSigmaL2")
    return LineGroup::PSigmaL2;
  if (s == "M2")
    return LineGroup::M2;
  if (s == "PGammaL2")
    return LineGroup::PGammaL2;
  if (s == "intermediate")
    return LineGroup::intermediate;
  throw UsageError("unknown --which " + s);
}

ConstructedGroup build(const ConstructArgs &a) {
  const auto &f = a.family;
  if (f == "affine-line") {
    std::uint32_t p = a.p ? a.p : static_cast<std::uint32_t>(a.q);
    return affine_line(p, a.m ? a.m : 1);
  }
  if (f == "projective" || f == "affine") {
    auto [p, e] = field_of(a);
    std::uint32_t s = a.step ? a.step : e;
    return f == "projective" ? projective(a.d, p, e, s) : affine_space(a.d, p, e, s);
  }
  if (f == "psl2") {
    std::uint32_t p = a.p ? a.p : static_cast<std::uint32_t>(a.q);
    return psl2_pgl2(p, line_group(a.which.empty() ? "PGL2" : a.which));
  }
  if (f == "line") {
    auto [p, e] = field_of(a);
    return projective_line_gamma(p, e, line_group(a.which.empty() ? "PGL2" : a.which), a.step);
  }
  if (f == "sporadic") {
    if (a.name.empty())
      throw UsageError("--name is required for family sporadic");
    return sporadic(a.name);
  }
  if (f == "wreath")
    return wreath_imprimitive(a.m, a.blocks);
  throw UsageError("unknown family " + f);
}

// Degree implied by the arguments, saturating at UINT64_MAX; 0 if not known before building.
std::uint64_t predicted_degree(const ConstructArgs &a) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto mul = [&](std::uint64_t x, std::uint64_t y) { return y && x > kMax / y ? kMax : x * y; };
  auto power = [&](std::uint64_t b, std::uint32_t k) {
    std::uint64_t r = 1;
    while (k--)
      r = mul(r, b);
    return r;
  };
  if (a.family == "wreath")
    return mul(a.m, a.blocks);
  const std::uint64_t q = a.q ? a.q : power(a.p, a.e);
  if (a.family == "affine")
    return power(q, a.d);
  if (a.family == "projective") {
    const std::uint64_t qd = power(q, a.d);
    return q > 1 && qd != kMax ? (qd - 1) / (q - 1) : qd;
  }
  if (a.family == "line" || a.family == "psl2")
    return q == kMax ? kMax : q + 1;
  return 0;
}

int cmd_construct(const ConstructArgs &a, const CliConfig &cfg) {
  if (predicted_degree(a) > cfg.degree_cap)
    throw UsageError("degree exceeds --degree-cap " + std::to_string(cfg.degree_cap));
  ConstructedGroup g;
  try {
    g = build(a);
  } catch (const DataVerificationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  } catch (const std::domain_error &e) {
    throw UsageError(e.what());
  } catch (const std::overflow_error &e) {
    throw UsageError(e.what());
  }
  if (g.spec.degree > cfg.degree_cap)
    throw UsageError("degree " + std::to_string(g.spec.degree) + " exceeds --degree-cap " +
                     std::to_string(cfg.degree_cap));
  const std::string text = to_json(to_spec_file(g)).dump(2) + "\n";
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    std::ofstream out(a.out);
    if (!(out << text))
      throw UsageError("cannot write " + a.out);
    if (!cfg.json)
      std::cerr << "wrote " << g.descriptor.group_name() << " (degree " << g.spec.degree
                << ") to " << a.out << '\n';
  }
  return kExitPass;
}

// ---- analyze ----

int cmd_analyze(const std::string &path, const CliConfig &cfg) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  GroupSpecFile file;
  try {
    file = parse_group_spec(buf.str());
  } catch (const SpecFileError &e) {
    throw UsageError(path + ": " + e.what());
  }
  const GroupSpec &g = file.spec;
  if (g.degree > cfg.degree_cap)
    throw UsageError("degree " + std::to_string(g.degree) + " exceeds --degree-cap " +
                     std::to_string(cfg.degree_cap));
  if (g.degree == 0)
    throw UsageError(path + ": degree must be positive");

  const SearchConfig search{cfg.exhaustive_cap, cfg.sample_budget, cfg.seed};
  auto sgs = build_sgs(g);
  std::optional<std::uint64_t> order;
  try {
    order = sgs.order();
  } catch (const std::overflow_error &) {
  }
  const auto orbs = orbits(g);
  const bool transitive = orbs.size() == 1;
  const bool primitive = transitive && is_primitive(g);
  const unsigned t = transitive ? transitivity_degree(g) : 0;

  // Smallest k with an (n-k)-cycle; k = n - 1 would be the identity.
  std::optional<std::size_t> k;
  std::optional<Permutation> cycle;
  bool exhaustive = false;
  if (g.degree >= 2) {
    auto census = cycle_census(sgs, search);
    exhaustive = census.exhaustive;
    for (std::size_t i = 0; i < census.by_fixed.size() && !k; ++i)
      if (census.by_fixed[i]) {
        k = i;
        cycle = census.by_fixed[i];
      }
  }
  IdentifyOptions opts;
  opts.search = search;
  const auto id = identify(g, opts);

  const char *cert = k ? (exhaustive ? "certified smallest k" : "found by sampling")
                       : (exhaustive ? "certified absent" : "none found by sampling");
  if (cfg.json) {
    Json j;
    j["label"] = g.label ? Json(*g.label) : Json(nullptr);
    j["degree"] = g.degree;
    j["order"] = order ? Json(*order) : Json(nullptr);
    j["transitivity"] = t;
    j["primitive"] = primitive;
    Json sizes = Json::array();
    for (const auto &o : orbs)
      sizes.push_back(o.size());
    j["orbit_sizes"] = std::move(sizes);
    Json c;
    c["k"] = k ? Json(*k) : Json(nullptr);
    c["element"] = cycle ? Json(print_cycles(*cycle)) : Json(nullptr);
    c["exhaustive"] = exhaustive;
    c["status"] = cert;
    j["cycle"] = std::move(c);
    j["identification"] = to_json(id);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "label: " << (g.label ? *g.label : "(none)") << '\n'
              << "degree: " << g.degree << '\n'
              << "order: " << (order ? std::to_string(*order) : "exceeds 2^64") << '\n'
              << "transitivity: " << t << '\n'
              << "primitive: " << (primitive ? "yes" : "no") << '\n'
              << "orbits: " << orbs.size() << " (sizes";
    for (const auto &o : orbs)
      std::cout << ' ' << o.size();
    std::cout << ")\n";
    if (k)
      std::cout << "cycle: " << g.degree - *k << "-cycle with k=" << *k << ' '
                << print_cycles(*cycle) << " [" << cert << "]\n";
    else
      std::cout << "cycle: none [" << cert << "]\n";
    std::cout << "verdict: " << to_string(id.verdict);
    if (id.reason != Inapplicable::none)
      std::cout << " (" << to_string(id.reason) << ")";
    std::cout << '\n';
    for (const auto &m : id.matches)
      std::cout << "  match: " << to_string(m.tag) << ' ' << m.group_name() << '\n';
    if (id.conjugacy_confirmed)
      std::cout << "conjugacy confirmed: " << (*id.conjugacy_confirmed ? "yes" : "no") << '\n';
    if (!id.detail.empty())
      std::cout << "detail: " << id.detail << '\n';
  }
  return id.verdict == Verdict::inconsistent_with_theorem ? kExitFail : kExitPass;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite;
  std::size_t max_degree = 9;
  std::size_t forward_max_degree = 60;
};

int cmd_verify(const VerifyArgs &a, const CliConfig &cfg) {
  const auto &names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end())
    throw UsageError("unknown suite " + a.suite);
  VerifierConfig v = verifier_config(cfg);
  v.converse_max_degree = a.max_degree;
  v.forward_max_degree = a.forward_max_degree;
  std::vector<CheckReport> reports;
  try {
    reports = run_suite(a.suite, v);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  for (const auto &r : reports) {
    if (cfg.json) {
      std::cout << r.to_json().dump() << '\n';
    } else {
      std::cout << to_string(r.verdict) << "  " << r.check << ' ' << r.params.dump();
      if (r.seconds)
        std::cout << "  " << *r.seconds << 's';
      std::cout << '\n';
      if (r.verdict != CheckVerdict::pass)
        std::cout << "    " << r.witness.dump() << '\n';
    }
  }
  const auto overall = aggregate(reports);
  if (!cfg.json)
    std::cout << reports.size() << " checks: " << to_string(overall) << '\n';
  switch (overall) {
  case CheckVerdict::pass:
    return kExitPass;
  case CheckVerdict::fail:
    return kExitFail;
  case CheckVerdict::inconclusive:
    return kExitInconclusive;
  }
  return kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Primitive permutation groups containing a cycle: classify, construct, analyze, "
               "verify"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("primcycle 1.0"));

  CliConfig cfg;
  std::string format = "text", config_path;
  auto *o_format = app.add_option("--format", format, "Output format")
                       ->check(CLI::IsMember({"text", "json"}));
  auto *o_seed = app.add_option("--seed", cfg.seed, "Seed for all randomized steps");
  auto *o_cap = app.add_option("--exhaustive-cap", cfg.exhaustive_cap,
                               "Scan groups exhaustively up to this order");
  auto *o_sample = app.add_option("--sample-budget", cfg.sample_budget,
                                  "Random elements drawn above the exhaustive cap");
  auto *o_budget = app.add_option("--time-budget", cfg.time_budget_seconds,
                                  "Wall-clock budget in seconds for verify (0 = none)");
  auto *o_degcap = app.add_option("--degree-cap", cfg.degree_cap,
                                  "Refuse to construct or analyze groups above this degree");
  auto *o_jobs = app.add_option("--jobs", cfg.jobs, "Worker threads for verify")
                     ->check(CLI::Range(1u, 256u));
  auto *o_timing = app.add_flag("--timing", cfg.timing, "Record seconds in verify reports");
  app.add_option("--config", config_path,
                 std::string("JSON config file; defaults to $") + kConfigEnv);

  ClassifyArgs ca;
  auto *classify_cmd = app.add_subcommand("classify", "List the cases for a degree and k");
  classify_cmd->add_option("--degree,-n", ca.n, "Degree n")->required();
  classify_cmd->add_option("--fixed,-k", ca.k, "Fixed points k of the cycle")->required();
  classify_cmd->add_flag("--equations", ca.equations, "Also show the degree equations");

  ConstructArgs xa;
  auto *construct_cmd = app.add_subcommand("construct", "Write a GroupSpec for a family");
  construct_cmd
      ->add_option("--family", xa.family,
                   "affine-line | projective | affine | psl2 | line | sporadic | wreath")
      ->required()
      ->check(CLI::IsMember(
          {"affine-line", "projective", "affine", "psl2", "line", "sporadic", "wreath"}));
  construct_cmd->add_option("--p", xa.p, "Characteristic / prime degree");
  construct_cmd->add_option("--e", xa.e, "Field exponent (with --p)");
  construct_cmd->add_option("--q", xa.q, "Field size");
  construct_cmd->add_option("--d", xa.d, "Dimension");
  construct_cmd->add_option("--m", xa.m, "Index m (affine-line) or block size (wreath)");
  construct_cmd->add_option("--blocks", xa.blocks, "Number of blocks (wreath)");
  construct_cmd->add_option("--step", xa.step, "Frobenius step s dividing e");
  construct_cmd->add_option("--which", xa.which,
                            "L2 | PGL2 (psl2); also PSigmaL2 | M2 | PGammaL2 | intermediate (line)");
  construct_cmd->add_option("--name", xa.name, "Sporadic group name");
  construct_cmd->add_option("--out,-o", xa.out, "Output path (default stdout)");

  std::string spec_path;
  auto *analyze_cmd = app.add_subcommand("analyze", "Analyze a GroupSpec file");
  analyze_cmd->add_option("spec", spec_path, "GroupSpec JSON file")->required();

  VerifyArgs va;
  auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", va.suite, "Suite name")->required();
  verify_cmd->add_option("--max-degree", va.max_degree, "Largest degree for the converse search");
  verify_cmd->add_option("--forward-max-degree", va.forward_max_degree,
                         "Largest degree for the forward sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    // Precedence: defaults, then config file, then explicit flags.
    if (config_path.empty())
      if (const char *env = std::getenv(kConfigEnv); env && *env)
        config_path = env;
    if (!config_path.empty()) {
      CliConfig from_file;
      apply_config_file(config_path, from_file);
      if (!o_format->count())
        format = from_file.json ? "json" : "text";
      if (!o_seed->count())
        cfg.seed = from_file.seed;
      if (!o_cap->count())
        cfg.exhaustive_cap = from_file.exhaustive_cap;
      if (!o_sample->count())
        cfg.sample_budget = from_file.sample_budget;
      if (!o_budget->count())
        cfg.time_budget_seconds = from_file.time_budget_seconds;
      if (!o_degcap->count())
        cfg.degree_cap = from_file.degree_cap;
      if (!o_jobs->count())
        cfg.jobs = from_file.jobs;
      if (!o_timing->count())
        cfg.timing = from_file.timing;
    }
    cfg.json = format == "json";

    if (*classify_cmd)
      return cmd_classify(ca, cfg);
    if (*construct_cmd)
      return cmd_construct(xa, cfg);
    if (*analyze_cmd)
      return cmd_analyze(spec_path, cfg);
    if (*verify_cmd)
      return cmd_verify(va, cfg);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
