#include "eltrans/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eltrans/enumerate.hpp"
#include "eltrans/errors.hpp"
#include "eltrans/formal_bundle.hpp"
#include "eltrans/higher_rank.hpp"
#include "eltrans/io.hpp"

namespace eltrans::cli {

namespace {

struct CommandConfig {
  std::string format = "json";
  int max_j = EnumerationLimits{}.max_j;

  int a = 0;
  int b = 0;

  std::string sequence;

  std::string claim;
  int j = 0;
  int epsilon = 0;
  bool strict = false;

  std::string p_json = "[]";
  std::string p_file;
  std::string bundle_op = "invariants";
  std::optional<int> max_order;
  std::optional<int> window;

  std::string tuples;
  std::string rank_op = "w";
};

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_enumerate(const CommandConfig& cfg, std::ostream& out) {
  const SplittingPair start{cfg.a, cfg.b};
  const EnumerationLimits limits{cfg.max_j};
  limits.check(start);
  // shortest path has t = 1 (balanced), 2 (odd gap) or 3 (even gap); its
  // terminal value is the smallest over all sequences from start
  const int t_min = start.balanced() ? 1 : (start.gap() % 2 == 1 ? 2 : 3);
  if ((start.degree() + t_min - 1) / 2 < -1 || start.degree() + t_min - 1 < -2)
    throw DomainError("w is undefined for sequences ending below -1; twist the start pair");

  const bool csv = cfg.format == "csv";
  if (csv) out << invariant_csv_header() << '\n';
  std::size_t count = 0;
  for_each_maximal(
      start,
      [&](const PairList& pairs) {
        const auto report = invariants_report(AdmissibleSequence(pairs));
        if (csv) out << invariant_csv_row(count, report) << '\n';
        else emit(out, to_json(report));
        ++count;
      },
      limits);
  if (csv) out << "# count " << count << '\n';
  else emit(out, Json{{"start", {start.a, start.b}}, {"count", count}});
  return kSuccess;
}

int cmd_invariants(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const PairList pairs = parse_pairs(cfg.sequence);
  const auto validation = validate_sequence(pairs);
  if (!validation.valid()) {
    Json violations = Json::array();
    for (auto p : validation.violated) violations.push_back(std::string(property_label(p)));
    emit(out, Json{{"sequence", pairs_to_json(pairs)}, {"valid", false}, {"violations", violations}});
    err << "error: " << validation.describe() << '\n';
    return kInputError;
  }
  const auto report = invariants_report(AdmissibleSequence(pairs));
  if (cfg.format == "csv") {
    out << invariant_csv_header() << '\n' << invariant_csv_row(0, report) << '\n';
  } else {
    emit(out, to_json(report));
  }
  return kSuccess;
}

int cmd_audit(const CommandConfig& cfg, std::ostream& out) {
  const EnumerationLimits limits{cfg.max_j};
  std::vector<AuditReport> reports;
  if (cfg.claim == "thm02") {
    reports.push_back(audit_box_coverage(cfg.j, cfg.epsilon, limits));
  } else if (cfg.claim == "thm05") {
    if (cfg.epsilon != 0) throw std::invalid_argument("thm05 is stated for epsilon = 0 only");
    reports.push_back(audit_defect_range(cfg.j, limits));
  } else if (cfg.claim == "lemma11") {
    reports.push_back(audit_invariant_bounds(cfg.j, cfg.epsilon, limits));
  } else {
    auto split = audit_split_characterization(cfg.j, cfg.epsilon, limits);
    reports.push_back(std::move(split.defect_characterizes_split));
    reports.push_back(std::move(split.max_w_characterizes_split));
  }

  bool holds = true;
  for (const auto& r : reports) {
    holds = holds && r.holds;
    if (cfg.format == "csv") out << audit_csv(r);
    else emit(out, to_json(r));
  }
  return cfg.strict && !holds ? kStrictAuditFailure : kSuccess;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read p-coefficient file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_bundle(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string p_text = cfg.p_file.empty() ? cfg.p_json : read_file(cfg.p_file);
  const auto t = make_canonical(cfg.j, parse_extension_json(p_text));
  const CechOptions options{cfg.max_order, cfg.window};

  const std::string& op = cfg.bundle_op;
  if (op == "dump") {
    emit(out, matrix_dump(t));
  } else if (op == "sequence") {
    const auto seq = associated_sequence_of_bundle(t);
    emit(out, Json{{"j", cfg.j}, {"sequence", pairs_to_json(seq.pairs())}});
  } else if (op == "cech") {
    emit(out, Json{{"j", cfg.j}, {"w", cech_w(t, options)}});
  } else if (op == "invariants") {
    emit(out, to_json(invariants_of_bundle(t).report));
  } else {
    const auto report = invariants_of_bundle(t).report;
    const int w_cech = cech_w(t, options);
    const bool agree = w_cech == report.w;
    emit(out, Json{{"j", cfg.j},
                   {"sequence", pairs_to_json(report.sequence)},
                   {"w_sequence", report.w},
                   {"w_cech", w_cech},
                   {"agree", agree}});
    if (!agree) {
      err << "discrepancy: sequence formula gives w = " << report.w << ", Cech gives " << w_cech
          << '\n';
      return kPipelineDisagreement;
    }
  }
  return kSuccess;
}

int cmd_rank_r(const CommandConfig& cfg, std::ostream& out) {
  const auto tuples = parse_tuples(cfg.tuples);
  const auto validation = validate_rank_r(tuples);
  if (!validation.valid()) throw std::invalid_argument("rank-r sequence " + validation.describe());
  const int value = cfg.rank_op == "w" ? w_rank_r_exact(tuples) : w_rank_r_bound(tuples);
  emit(out, Json{{"op", cfg.rank_op}, {"tuples", tuples}, {"value", value}});
  return kSuccess;
}

int max_j_from_env() {
  const char* raw = std::getenv(kMaxJEnv);
  if (raw == nullptr || *raw == '\0') return EnumerationLimits{}.max_j;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 1) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(kMaxJEnv) + " must be a positive integer");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Elementary transformations of rank-2 bundles near an exceptional curve"};
  app.name("eltrans");
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print version and report schema version");

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  const auto add_max_j = [&](CLI::App* sub) {
    sub->add_option("--max-j", cfg.max_j, "Enumeration cap (default 14 or $ELTRANS_MAX_J)")
        ->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "All maximal admissible sequences from (a, b)");
  enumerate->add_option("--a", cfg.a, "Larger splitting degree")->required();
  enumerate->add_option("--b", cfg.b, "Smaller splitting degree")->required();
  add_format(enumerate);
  add_max_j(enumerate);

  auto* invariants = app.add_subcommand("invariants", "w, c2-defect and z of one sequence");
  invariants->add_option("--sequence,sequence", cfg.sequence, "Pairs as \"a,b;a,b;...\"")
      ->required();
  add_format(invariants);

  auto* audit = app.add_subcommand("audit", "Exhaustive check of a claim at fixed j");
  audit->add_option("--claim", cfg.claim, "Claim to audit")
      ->required()
      ->check(CLI::IsMember({"thm02", "thm05", "prop04", "lemma11"}));
  audit->add_option("--j", cfg.j, "Splitting parameter j >= 1")->required()
      ->check(CLI::PositiveNumber);
  audit->add_option("--epsilon", cfg.epsilon, "0 or -1")->check(CLI::IsMember({0, -1}));
  audit->add_flag("--strict", cfg.strict, "Exit 3 when the claim does not hold");
  add_format(audit);
  add_max_j(audit);

  auto* bundle = app.add_subcommand("bundle", "Canonical transition matrix computations");
  bundle->add_option("--j", cfg.j, "Splitting type (j, -j), j >= 1")->required()
      ->check(CLI::PositiveNumber);
  auto* p_inline = bundle->add_option("--p", cfg.p_json, "Coefficients as JSON");
  auto* p_file = bundle->add_option("--p-file", cfg.p_file, "File with coefficient JSON");
  p_inline->excludes(p_file);
  bundle->add_option("--op", cfg.bundle_op, "What to compute")
      ->check(CLI::IsMember({"sequence", "cech", "invariants", "verify", "dump"}));
  bundle->add_option("--n-max", cfg.max_order, "u-order for the Cech computation");
  bundle->add_option("--window", cfg.window, "z-window half-width for the Cech computation");

  auto* rank_r = app.add_subcommand("rank-r", "w formula and bound for rank-r sequences");
  rank_r->add_option("--tuples", cfg.tuples, "Tuples as \"a,b,c;a,b,c;...\"")->required();
  rank_r->add_option("--op", cfg.rank_op, "Exact formula or bound")
      ->check(CLI::IsMember({"w", "bound"}));

  try {
    cfg.max_j = max_j_from_env();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (version) {
    out << "eltrans " << kVersion << " (schema " << kSchemaVersion << ")\n";
    return kSuccess;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*invariants) return cmd_invariants(cfg, out, err);
    if (*audit) return cmd_audit(cfg, out);
    if (*bundle) return cmd_bundle(cfg, out, err);
    if (*rank_r) return cmd_rank_r(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  out << app.help();
  return kInputError;
}

}  // namespace eltrans::cli
