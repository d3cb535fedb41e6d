#include "attract/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "attract/attractive_set.hpp"
#include "attract/catalog.hpp"
#include "attract/convex_set.hpp"
#include "attract/ergodic.hpp"
#include "attract/extension.hpp"
#include "attract/mapping.hpp"
#include "attract/rng.hpp"
#include "attract/sampling.hpp"

namespace attract {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line.erase(hash_pos);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value, got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    if (cfg.values.count(key)) {
      throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" +
                        key + "'");
    }
    cfg.values[key] = value;
  }
  return cfg;
}

Config Config::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

std::string Config::get(const std::string& key, const std::string& fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

double Config::get_number(const std::string& key, double fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size() || !std::isfinite(v)) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": cannot parse '" + it->second +
                      "' as a number");
  }
}

std::int64_t Config::get_int(const std::string& key, std::int64_t fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": cannot parse '" + it->second +
                      "' as an integer");
  }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  if (it->second == "true" || it->second == "1") return true;
  if (it->second == "false" || it->second == "0") return false;
  throw ConfigError("config key " + key + ": expected true|false, got '" + it->second +
                    "'");
}

std::vector<double> Config::get_vector(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) throw ConfigError("config key " + key + " is required");
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const std::string t = trim(item);
      const double v = std::stod(t, &pos);
      if (pos != t.size() || !std::isfinite(v)) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("config key " + key + ": cannot parse vector '" + it->second +
                        "'");
    }
  }
  if (out.empty()) throw ConfigError("config key " + key + ": empty vector");
  return out;
}

std::string Config::canonical() const {
  std::string out;
  for (const auto& [key, value] : values) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

const std::vector<std::string>& known_check_names() {
  static const std::vector<std::string> names = {
      "theorem_3_1", "lemma_2_3", "lemma_2_4", "extension", "lemma_4_1",
      "corollary_4_1"};
  return names;
}

namespace {

constexpr const char* kStatusText[] = {"PASS", "FAIL", "AMBIGUOUS"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Point point_in_box(Rng& rng, const Box& box) {
  std::vector<double> c(static_cast<std::size_t>(box.dim()));
  for (int i = 0; i < box.dim(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    c[k] = rng.uniform(box.lower[k], box.upper[k]);
  }
  return Point(std::move(c));
}

Box inflate(const Box& box, double factor) {
  std::vector<double> lo(box.lower), hi(box.upper);
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const double c = (lo[i] + hi[i]) / 2.0;
    const double h = (hi[i] - lo[i]) / 2.0 * factor;
    lo[i] = c - h;
    hi[i] = c + h;
  }
  return Box(std::move(lo), std::move(hi));
}

/// Odd per-axis counts so window centers and endpoints land exactly on grid
/// nodes (find_fixed_points needs exact hits).
int odd_per_axis(int dim) {
  switch (dim) {
    case 1: return 101;
    case 2: return 33;
    default: return 9;
  }
}

std::string witness_text(const ResidualReport& report) {
  std::string out;
  for (const Point& w : report.witness) {
    if (!out.empty()) out += ", ";
    out += to_string(w);
  }
  return out.empty() ? "none" : out;
}

struct RunContext {
  const Config& config;
  Mapping mapping;
  std::vector<Point> samples;
  AttractiveApprox approx;
  double tol_fixed;
  double tol_residual;
  double tol_projection;
  double tol_identity;
  std::int64_t seed;
  std::optional<CesaroTrace> trace;
  std::optional<ConvergenceReport> conv;
  std::string trace_error;
};

CheckOutcome check_theorem_3_1(RunContext& ctx) {
  CheckOutcome out{.name = "theorem_3_1"};
  if (!ctx.conv) {
    out.status = CheckStatus::Fail;
    out.detail = "trace unavailable: " + ctx.trace_error;
    return out;
  }
  const ConvergenceReport& c = *ctx.conv;
  const bool expect_contradiction = ctx.config.get_bool("expect.contradiction", false);
  std::string detail = "proj_limit=" + to_string(c.proj_limit) +
                       ", hypothesis=" + c.hypothesis_status +
                       ", combined_tol=" + fmt_short(c.combined_tolerance);
  if (c.mean_limit) {
    detail += ", mean_limit=" + to_string(*c.mean_limit) +
              ", mean_matches_proj=" + (c.mean_matches_proj ? "true" : "false") +
              ", membership_violation=" + fmt_short(c.mean_membership_violation);
  } else {
    detail += ", mean_limit=none (drift " + fmt_short(c.mean_drift) + ")";
  }
  if (ctx.trace->boundary_contact_step >= 0) {
    detail += ", orbit touched the domain boundary at step " +
              std::to_string(ctx.trace->boundary_contact_step);
  }
  bool pass;
  if (expect_contradiction) {
    pass = c.contradiction_case && !c.mean_matches_proj;
    detail += ", expected contradiction " +
              std::string(c.contradiction_case ? "observed" : "NOT observed");
  } else {
    pass = c.mean_matches_proj && c.hypothesis_status == "verified-on-trace";
  }
  out.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  out.detail = detail;
  return out;
}

CheckOutcome check_lemma_2_3(RunContext& ctx) {
  CheckOutcome out{.name = "lemma_2_3"};
  const Domain& domain = ctx.mapping.domain;
  if (!domain.is_closed()) {
    out.status = CheckStatus::Ambiguous;
    out.detail = "domain of " + ctx.mapping.label +
                 " is not closed; the lemma needs a closed convex C";
    return out;
  }
  const ConvexSet& C = *domain.as_closed_set();
  if (!ctx.approx.feasible) {
    out.status = CheckStatus::Ambiguous;
    out.detail = "approximation is infeasible; no members to draw";
    return out;
  }
  Rng rng(static_cast<std::uint64_t>(ctx.seed) ^ 0x23c3u);
  const Box draw_box = inflate(domain.window(), 3.0);
  // The polytope certifies attractiveness only up to its sampling resolution:
  // members hugging the boundary may lie outside the true attractive set, so
  // only members strictly inside by at least the resolution are tested.
  const double interior_margin = std::max(ctx.approx.resolution, ctx.tol_fixed);
  int tested = 0, boundary = 0, rejected = 0;
  for (int i = 0; i < 10; ++i) {
    const Point z = project_attractive(ctx.approx, point_in_box(rng, draw_box)).point;
    if (ctx.approx.membership_violation(z) > -interior_margin) {
      ++boundary;
      continue;
    }
    try {
      if (!attractive_projects_to_fixed(ctx.mapping, C, z, ctx.samples,
                                        ctx.tol_fixed)) {
        out.status = CheckStatus::Fail;
        out.detail = "P_C(z) is not fixed for member z=" + to_string(z);
        return out;
      }
      ++tested;
    } catch (const std::invalid_argument&) {
      ++rejected;  // approximation member that is not attractive for T
    } catch (const std::domain_error&) {
      ++rejected;  // projection landed outside the strict domain
    }
  }
  if (tested == 0) {
    out.status = CheckStatus::Ambiguous;
    out.detail = "no certified-interior member survived the preconditions (" +
                 std::to_string(boundary) + " at the boundary, " +
                 std::to_string(rejected) + " not attractive on samples)";
    return out;
  }
  out.status = CheckStatus::Pass;
  out.detail = std::to_string(tested) + " members project to fixed points at tol " +
               fmt_short(ctx.tol_fixed) + " (" + std::to_string(boundary) +
               " boundary-skipped, " + std::to_string(rejected) +
               " precondition-rejected)";
  return out;
}

CheckOutcome check_lemma_2_4(RunContext& ctx) {
  CheckOutcome out{.name = "lemma_2_4"};
  const Domain& domain = ctx.mapping.domain;
  const auto grid = box_grid(domain.window(), odd_per_axis(domain.dim()));
  const FixedSetApprox fixed =
      find_fixed_points(ctx.mapping, grid, ctx.tol_fixed);
  if (fixed.empty()) {
    out.status = CheckStatus::Ambiguous;
    out.detail = "no fixed points found on the window grid";
    return out;
  }
  const auto quasi = quasinonexpansive_residual(ctx.mapping, fixed.points,
                                                ctx.samples, ctx.tol_residual);
  if (!quasi.passed) {
    out.status = CheckStatus::Ambiguous;
    out.detail = "precondition failed: not quasinonexpansive on samples "
                 "(violation " + fmt_short(quasi.max_violation) + " at " +
                 witness_text(quasi) + ")";
    return out;
  }
  // Discretization budget for one probe: the finite fixed grid quantizes
  // P_F by up to eps (half the cell diagonal), which perturbs the projection
  // of a point at distance d by up to sqrt(2 d eps + eps^2); the polytope
  // side contributes its resolution estimate.
  const Box& window = domain.window();
  double spacing = 0.0;
  for (int i = 0; i < window.dim(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    spacing = std::max(spacing, (window.upper[k] - window.lower[k]) /
                                    (odd_per_axis(domain.dim()) - 1));
  }
  const double eps_grid = spacing * std::sqrt(double(domain.dim())) / 2.0;

  Rng rng(static_cast<std::uint64_t>(ctx.seed) ^ 0x24c4u);
  double max_gap = 0.0, witness_budget = 0.0;
  Point witness = domain.refine_target();
  for (int i = 0; i < 20; ++i) {
    const Point x = domain.sample(rng);
    const double gap = check_projection_identity(ctx.mapping, ctx.approx, fixed, x);
    if (gap > max_gap) {
      max_gap = gap;
      witness = x;
      const double d_pf = distance(x, *fixed.nearest(x));
      witness_budget = ctx.tol_identity + ctx.approx.resolution +
                       std::sqrt(2.0 * d_pf * eps_grid + eps_grid * eps_grid);
    }
  }
  out.detail = std::to_string(fixed.points.size()) + " fixed point(s), max gap " +
               fmt_short(max_gap) + " at x=" + to_string(witness) + ", tol " +
               fmt_short(ctx.tol_identity);
  if (max_gap <= ctx.tol_identity) {
    out.status = CheckStatus::Pass;
  } else if (max_gap <= witness_budget) {
    out.status = CheckStatus::Ambiguous;
    out.detail += "; gap within the discretization budget " +
                  fmt_short(witness_budget) +
                  " (finite fixed grid + approximation resolution), so the "
                  "identity cannot be certified or refuted at this density";
  } else {
    out.status = CheckStatus::Fail;
  }
  return out;
}

CheckOutcome check_extension(RunContext& ctx) {
  CheckOutcome out{.name = "extension"};
  std::optional<ExtendedMapping> ext;
  try {
    ext.emplace(ctx.mapping, ctx.approx, ctx.tol_fixed);
  } catch (const std::invalid_argument& e) {
    out.status = CheckStatus::Fail;
    out.detail = e.what();
    return out;
  }
  const Domain& domain = ctx.mapping.domain;
  const auto grid =
      box_grid(inflate(domain.window(), 1.5), odd_per_axis(domain.dim()));
  const auto fixed_report = verify_extension_fixed_set(*ext, grid);

  Rng rng(static_cast<std::uint64_t>(ctx.seed) ^ 0x3e77u);
  const Box draw_box = inflate(domain.window(), 3.0);
  std::vector<Point> members;
  for (int i = 0; i < 3; ++i) {
    members.push_back(project_attractive(ctx.approx, point_in_box(rng, draw_box)).point);
  }
  std::vector<Point> probes = ctx.samples;
  for (int i = 0; i < 16; ++i) probes.push_back(point_in_box(rng, draw_box));
  const auto quasi_report =
      verify_extension_quasinonexpansive(*ext, members, probes, ctx.tol_residual);

  const bool pass = fixed_report.passed && quasi_report.passed;
  out.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  out.detail = "fixed-set: " + std::string(fixed_report.passed ? "ok" : "violated") +
               " (checked " + std::to_string(fixed_report.samples_checked) +
               ", skipped " + std::to_string(fixed_report.samples_skipped) +
               ", max violation " + fmt_short(fixed_report.max_violation) + " at " +
               witness_text(fixed_report) + "); quasinonexpansive: " +
               (quasi_report.passed ? "ok" : "violated") + " (max " +
               fmt_short(quasi_report.max_violation) + " at " +
               witness_text(quasi_report) + ")";
  return out;
}

CheckOutcome check_lemma_4_1(RunContext& ctx) {
  CheckOutcome out{.name = "lemma_4_1"};
  if (!ctx.trace) {
    out.status = CheckStatus::Fail;
    out.detail = "trace unavailable: " + ctx.trace_error;
    return out;
  }
  try {
    const auto report =
        cluster_attractiveness(*ctx.trace, ctx.mapping, ctx.samples, ctx.tol_residual);
    out.status = report.passed ? CheckStatus::Pass : CheckStatus::Fail;
    out.detail = report.note + ", max violation " + fmt_short(report.max_violation) +
                 " at " + witness_text(report);
  } catch (const std::invalid_argument& e) {
    out.status = CheckStatus::Ambiguous;
    out.detail = std::string("precondition failed: ") + e.what();
  }
  return out;
}

CheckOutcome check_corollary_4_1(RunContext& ctx) {
  CheckOutcome out{.name = "corollary_4_1"};
  if (!ctx.mapping.hybrid_lambda) {
    out.status = CheckStatus::Ambiguous;
    out.detail = ctx.mapping.label + " declares no hybridness parameter";
    return out;
  }
  if (!ctx.conv) {
    out.status = CheckStatus::Fail;
    out.detail = "trace unavailable: " + ctx.trace_error;
    return out;
  }
  const double lambda = *ctx.mapping.hybrid_lambda;
  const auto pairs = sample_pairs(ctx.mapping.domain, 64,
                                  static_cast<std::uint64_t>(ctx.seed) ^ 0xc441u);
  const auto direct = lambda_hybrid_residual(ctx.mapping, lambda, pairs,
                                             ctx.tol_residual);
  const auto equiv = lambda_hybrid_equivalent_residual(ctx.mapping, lambda, pairs,
                                                       ctx.tol_residual);
  std::string cluster_note;
  bool cluster_ok = false;
  try {
    const auto cluster =
        cluster_attractiveness(*ctx.trace, ctx.mapping, ctx.samples, ctx.tol_residual);
    cluster_ok = cluster.passed;
    cluster_note = "cluster max violation " + fmt_short(cluster.max_violation);
  } catch (const std::invalid_argument& e) {
    cluster_note = std::string("cluster precondition failed: ") + e.what();
  }
  const bool pass = direct.passed && equiv.passed && cluster_ok &&
                    ctx.conv->mean_matches_proj;
  out.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  out.detail = "hybrid(lambda=" + fmt_short(lambda) + ") max " +
               fmt_short(direct.max_violation) + ", equivalent form max " +
               fmt_short(equiv.max_violation) + ", " + cluster_note +
               ", mean_matches_proj=" +
               (ctx.conv->mean_matches_proj ? "true" : "false");
  return out;
}

CheckOutcome run_check(const std::string& name, RunContext& ctx) {
  if (name == "theorem_3_1") return check_theorem_3_1(ctx);
  if (name == "lemma_2_3") return check_lemma_2_3(ctx);
  if (name == "lemma_2_4") return check_lemma_2_4(ctx);
  if (name == "extension") return check_extension(ctx);
  if (name == "lemma_4_1") return check_lemma_4_1(ctx);
  if (name == "corollary_4_1") return check_corollary_4_1(ctx);
  throw ConfigError("unknown check name: " + name);
}

void validate_keys(const Config& config) {
  static const std::vector<std::string> exact = {
      "start",       "n_max",          "checks",        "expect.contradiction",
      "output.dir",  "approx.source",  "sample.grid",   "sample.random",
      "sample.seed", "tol.fixed",      "tol.residual",  "tol.projection",
      "tol.identity"};
  for (const auto& [key, value] : config.values) {
    if (key.rfind("mapping.", 0) == 0) continue;
    if (std::find(exact.begin(), exact.end(), key) == exact.end()) {
      throw ConfigError("unknown config key: " + key);
    }
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

}  // namespace

ExperimentResult run_experiment(const Config& config,
                                const std::vector<std::string>& check_names,
                                const std::filesystem::path& output_root) {
  validate_keys(config);

  std::vector<std::string> checks = check_names;
  if (checks.empty()) checks = split_list(config.get("checks", "theorem_3_1"));
  if (checks.empty()) throw ConfigError("no checks requested");
  for (const std::string& name : checks) {
    const auto& known = known_check_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ConfigError("unknown check name: " + name);
    }
  }

  const std::string mapping_id = config.get("mapping.id", "");
  if (mapping_id.empty()) throw ConfigError("config key mapping.id is required");
  std::map<std::string, std::string> mapping_params;
  for (const auto& [key, value] : config.values) {
    if (key.rfind("mapping.", 0) == 0 && key != "mapping.id") {
      mapping_params[key.substr(8)] = value;
    }
  }

  RunContext ctx{
      .config = config,
      .mapping = [&] {
        try {
          return make_from_catalog(mapping_id, mapping_params);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      }(),
      .samples = {},
      .approx = {},
      .tol_fixed = config.get_number("tol.fixed", kFixedTol),
      .tol_residual = config.get_number("tol.residual", kResidualTol),
      .tol_projection = config.get_number("tol.projection", kProjectionTol),
      .tol_identity = config.get_number("tol.identity", 0.05),
      .seed = config.get_int("sample.seed", 1)};
  if (!(ctx.tol_fixed > 0) || !(ctx.tol_residual > 0) || !(ctx.tol_projection > 0) ||
      !(ctx.tol_identity > 0)) {
    throw ConfigError("tolerances must be positive");
  }

  const auto grid_n = config.get_int("sample.grid", 64);
  const auto random_n = config.get_int("sample.random", 64);
  try {
    ctx.samples = sample_schedule(ctx.mapping.domain, static_cast<int>(grid_n),
                                  static_cast<int>(random_n),
                                  static_cast<std::uint64_t>(ctx.seed));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("sample schedule: ") + e.what());
  }

  const std::string source = config.get("approx.source", "sampled");
  if (source == "analytic") {
    if (!ctx.mapping.known_attractive_halfspaces) {
      throw ConfigError("approx.source=analytic but " + ctx.mapping.label +
                        " has no analytic halfspace description");
    }
    ctx.approx = AttractiveApprox::from_halfspaces(
        *ctx.mapping.known_attractive_halfspaces, ctx.mapping.label + " (analytic)",
        ctx.tol_residual);
  } else if (source == "sampled") {
    ctx.approx = build_attractive_approx(ctx.mapping, ctx.samples, ctx.tol_residual);
  } else {
    throw ConfigError("approx.source must be sampled|analytic, got '" + source + "'");
  }

  const bool needs_trace =
      std::any_of(checks.begin(), checks.end(), [](const std::string& n) {
        return n == "theorem_3_1" || n == "lemma_4_1" || n == "corollary_4_1";
      });
  const auto n_max = config.get_int("n_max", 2000);
  if (needs_trace) {
    if (n_max < 50) {
      throw ConfigError("n_max must be >= 50 for trace-based checks");
    }
    if (!config.has("start")) {
      throw ConfigError("config key start is required for trace-based checks");
    }
    const Point start{config.get_vector("start")};
    try {
      ctx.trace = iterate(ctx.mapping, start, static_cast<int>(n_max), ctx.approx,
                          ctx.tol_projection);
      ctx.conv = analyze(*ctx.trace, ctx.approx, ctx.tol_residual);
      if (ctx.conv->mean_limit) fill_mean_gaps(*ctx.trace, *ctx.conv->mean_limit);
    } catch (const std::domain_error& e) {
      throw ConfigError(e.what());  // start outside the domain
    } catch (const std::exception& e) {
      ctx.trace.reset();
      ctx.conv.reset();
      ctx.trace_error = e.what();
    }
  }

  ExperimentResult result;
  for (const std::string& name : checks) {
    result.checks.push_back(run_check(name, ctx));
  }
  result.exit_code =
      std::all_of(result.checks.begin(), result.checks.end(),
                  [](const CheckOutcome& c) { return c.status == CheckStatus::Pass; })
          ? 0
          : 1;

  char hash_text[20];
  std::snprintf(hash_text, sizeof hash_text, "%016llx",
                static_cast<unsigned long long>(fnv1a64(config.canonical())));

  std::ostringstream report;
  report << "mapping: " << ctx.mapping.label << "\n";
  report << "fixed set: " << ctx.mapping.fixed_desc
         << "; attractive set: " << ctx.mapping.attractive_desc << "\n";
  report << "seed: " << config.get("sample.seed", "1") << " (verbatim)\n";
  report << "samples: " << ctx.samples.size() << " (grid " << grid_n << ", random "
         << random_n << ")\n";
  report << "approximation: " << ctx.approx.halfspaces.size() << " halfspace(s), "
         << "resolution " << fmt(ctx.approx.resolution) << ", feasible "
         << (ctx.approx.feasible ? "yes" : "no") << ", whole-space "
         << (ctx.approx.whole_space ? "yes" : "no") << " [" << source << "]\n";
  if (ctx.conv) {
    report << "trace: n_max " << n_max << ", " << ctx.conv->diagnostics << "\n";
  } else if (!ctx.trace_error.empty()) {
    report << "trace: failed (" << ctx.trace_error << ")\n";
  }
  report << "config hash: " << hash_text << "\n\n";
  for (const CheckOutcome& c : result.checks) {
    report << c.name << ": " << kStatusText[static_cast<int>(c.status)] << "\n  "
           << c.detail << "\n";
  }
  result.report_text = report.str();

  // Artifacts.
  std::filesystem::path dir{config.get("output.dir", "attract-out")};
  if (dir.is_relative()) dir = output_root / dir;
  std::filesystem::create_directories(dir);

  const auto open_out = [](const std::filesystem::path& p) {
    std::ofstream os(p);
    if (!os) throw std::ios_base::failure("cannot open " + p.string() + " for writing");
    os.exceptions(std::ios::failbit | std::ios::badbit);
    return os;
  };

  result.report_path = dir / ("report_" + std::string(hash_text) + ".txt");
  {
    auto os = open_out(result.report_path);
    os << result.report_text;
  }
  result.approx_path = dir / ("approx_" + std::string(hash_text) + ".txt");
  {
    auto os = open_out(result.approx_path);
    ctx.approx.write_table(os);
  }
  if (ctx.trace) {
    result.trace_path = dir / ("trace_" + std::string(hash_text) + ".csv");
    auto os = open_out(result.trace_path);
    write_trace_csv(os, *ctx.trace);
  }
  return result;
}

}  // namespace attract
