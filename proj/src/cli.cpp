#include "ukin/cli.hpp"

#include "ukin/kinematics.hpp"
#include "ukin/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

namespace ukin::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 2;
  std::string target;
  std::string basis = "delta-n";
  std::string format = "text";
  std::string out_path;
  std::string suite = "all";
};

bool use_color(const std::ostream &err) {
  if (const char *env = std::getenv("UKIN_COLOR"))
    return std::string(env) != "0";
  return &err == &std::cerr && ::isatty(STDERR_FILENO);
}

std::string status_word(bool pass, bool color) {
  if (!color)
    return pass ? "PASS" : "FAIL";
  return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

AreaIndex parse_target(const Options &opt) {
  if (opt.target.empty())
    throw UsageError("--target is required for this command");
  AreaIndex idx;
  try {
    idx = AreaIndex::parse(opt.target);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("malformed target: ") + e.what());
  }
  if (!is_valid(opt.n, idx))
    throw InvalidIndex("invalid index " + idx.to_string() + " for n=" + std::to_string(opt.n));
  return idx;
}

void write_document(const Options &opt, const std::string &doc, std::ostream &out) {
  if (opt.out_path.empty()) {
    out << doc;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file)
    throw UsageError("cannot open output file '" + opt.out_path + "'");
  file << doc;
}

int print_report(const Report &report, std::ostream &err) {
  const bool color = use_color(err);
  std::size_t failed = 0;
  for (const auto &item : report.items) {
    err << item.name << ": " << status_word(item.pass, color) << "\n";
    if (!item.pass) {
      ++failed;
      if (!item.detail.empty())
        err << "    " << item.detail << "\n";
    }
  }
  err << report.items.size() - failed << "/" << report.items.size() << " checks passed\n";
  return failed == 0 ? Ok : CheckFailed;
}

int run_census(const Options &opt, Format format, std::ostream &out, std::ostream &err) {
  const DualAlgebra alg(opt.n);
  const Census c = census(opt.n);
  bool match = true;
  std::vector<int> ranks;
  for (std::size_t d = 0; d < c.per_degree.size(); ++d) {
    ranks.push_back(alg.monomial_image_rank(static_cast<int>(d)));
    match = match && ranks.back() == c.per_degree[d];
  }

  std::ostringstream doc;
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["n"] = opt.n;
    j["census"] = c.per_degree;
    j["ranks"] = ranks;
    j["total"] = c.total;
    j["match"] = match;
    doc << j.dump() << "\n";
  } else {
    doc << "census n=" << opt.n << "\n";
    doc << "degree  census  rank\n";
    int rank_total = 0;
    for (std::size_t d = 0; d < ranks.size(); ++d) {
      rank_total += ranks[d];
      doc << std::left;
      doc.width(8);
      doc << d;
      doc.width(8);
      doc << c.per_degree[d];
      doc << ranks[d] << (ranks[d] == c.per_degree[d] ? "" : "  MISMATCH") << "\n";
    }
    doc << "total   ";
    doc.width(8);
    doc << c.total << rank_total << "\n";
  }
  write_document(opt, doc.str(), out);
  err << "ranks match census: " << status_word(match, use_color(err)) << "\n";
  return match ? Ok : CheckFailed;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact unitary area-measure kinematic formulas", "ukin"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App *sub, bool with_target, bool with_basis, bool with_format) {
    sub->add_option("--n", opt.n, "Complex dimension (>= 2)")->required();
    if (with_target)
      sub->add_option("--target", opt.target, "Target index, e.g. Delta:2,1")->required();
    if (with_basis)
      sub->add_option("--basis", opt.basis, "delta-n or b-gamma")
          ->check(CLI::IsMember({"delta-n", "b-gamma"}));
    if (with_format) {
      sub->add_option("--format", opt.format, "text, latex or json")
          ->check(CLI::IsMember({"text", "latex", "json"}));
      sub->add_option("--out", opt.out_path, "Write the document to a file");
    }
  };

  auto *table = app.add_subcommand("table", "Every local formula for dimension n");
  add_common(table, false, true, true);
  auto *formula = app.add_subcommand("formula", "Local formula for one target");
  add_common(formula, true, true, true);
  auto *global = app.add_subcommand("global", "Global formula for a Delta target");
  add_common(global, true, false, true);
  auto *semilocal = app.add_subcommand("semilocal", "Semi-local formula for a Delta or N target");
  add_common(semilocal, true, false, true);
  auto *verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify, false, false, false);
  verify->add_option("--suite", opt.suite, "relations, identities, algebra or all")
      ->check(CLI::IsMember({"relations", "identities", "algebra", "all"}));
  auto *census_cmd = app.add_subcommand("census", "Graded dimension census and monomial-image ranks");
  add_common(census_cmd, false, false, true);
  auto *identities = app.add_subcommand("identities", "Closed-form and binomial identity sweeps");
  add_common(identities, false, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (opt.n < 2)
      throw UsageError("n must be at least 2");
    const Format format = parse_format(opt.format);
    const BasisMode mode = parse_basis_mode(opt.basis);

    if (table->parsed()) {
      write_document(opt, emit(full_table(DualAlgebra(opt.n), mode), format), out);
      return Ok;
    }
    if (formula->parsed()) {
      const AreaIndex target = parse_target(opt);
      write_document(opt, emit(local_formula(DualAlgebra(opt.n), target, mode), format), out);
      return Ok;
    }
    if (global->parsed()) {
      const AreaIndex target = parse_target(opt);
      if (target.family != Family::Delta)
        throw UsageError("global formulas take a Delta target");
      write_document(opt, emit(global_formula(DualAlgebra(opt.n), target.k, target.q), format), out);
      return Ok;
    }
    if (semilocal->parsed()) {
      const AreaIndex target = parse_target(opt);
      if (target.family != Family::Delta && target.family != Family::N)
        throw UsageError("semi-local formulas take a Delta or N target");
      write_document(opt, emit(semilocal_formula(DualAlgebra(opt.n), target), format), out);
      return Ok;
    }
    if (verify->parsed())
      return print_report(run_suite(opt.n, parse_suite(opt.suite)), err);
    if (identities->parsed())
      return print_report(run_suite(opt.n, Suite::Identities), err);
    if (census_cmd->parsed())
      return run_census(opt, format, out, err);
  } catch (const InvalidIndex &e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return CheckFailed;
  }
  return Usage;
}

} // namespace ukin::cli
