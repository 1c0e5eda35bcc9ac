#include "tgeom/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "tgeom/equivalence.hpp"
#include "tgeom/error.hpp"
#include "tgeom/linear_ops.hpp"
#include "tgeom/random_space.hpp"
#include "tgeom/sigma_space.hpp"
#include "tgeom/table_io.hpp"
#include "tgeom/vector_algebra.hpp"

namespace tgeom::cli {

namespace {

enum class Format { kHuman, kCsv };

struct Config {
  std::optional<double> tolerance;
  std::optional<std::size_t> limit;
  bool force = false;
  Format format = Format::kHuman;
  std::string out_path;
};

// Thrown for command-line mistakes that CLI11 cannot see (bad coefficient
// syntax and the like).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TableDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  return parse_table_document(in);
}

SigmaSpace load_space(const std::string& path, const Config& config) {
  return build_space(load_document(path), config.tolerance);
}

double parse_number(const std::string& text) {
  const auto value = parse_real(text);
  if (!value || !std::isfinite(*value)) throw UsageError("invalid number '" + text + "'");
  return *value;
}

Coefficients parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("coefficients must be written 'alpha,beta', got '" + text + "'");
  }
  return {parse_number(text.substr(0, comma)), parse_number(text.substr(comma + 1))};
}

GridPoint parse_grid_point(const std::string& text) {
  GridPoint p;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, text.find('_') != std::string::npos ? '_' : ',')) {
    const auto value = parse_real(token);
    if (!value || *value != std::floor(*value) || std::abs(*value) > 1e9) {
      throw UsageError("invalid grid coordinate '" + text + "'");
    }
    p.push_back(static_cast<int>(*value));
  }
  if (p.empty()) throw UsageError("empty grid coordinate");
  return p;
}

std::string arrow(const Vector& v) { return v.origin.label() + " -> " + v.end.label(); }

int cmd_check(const std::string& path, const Config& config, std::ostream& out) {
  const TableDocument doc = load_document(path);
  const double tolerance =
      config.tolerance.value_or(doc.tolerance.value_or(SigmaSpace::kDefaultTolerance));

  std::vector<std::string> problems;
  for (std::size_t e = 0; e < doc.entries.size(); ++e) {
    const auto& entry = doc.entries[e];
    const std::string where = "sigma(" + entry.from + "," + entry.to + ") = " +
                              format_real(entry.value) + " (line " +
                              std::to_string(doc.entry_lines[e]) + ")";
    if (!std::isfinite(entry.value)) {
      problems.push_back("non-finite value: " + where);
    } else if (entry.from == entry.to && std::abs(entry.value) > tolerance) {
      problems.push_back("diagonal violation: " + where);
    }
  }

  std::optional<SigmaSpace> space;
  std::optional<IdentityReport> identities;
  bool identities_skipped = false;
  if (problems.empty()) {
    space = build_space(doc, config.tolerance);
    const std::size_t max_points = config.limit.value_or(kDefaultIdentityLimit);
    if (space->size() <= max_points || config.force) {
      identities = verify_identities(*space, config.force ? space->size() : max_points);
    } else {
      identities_skipped = true;
    }
  }
  const bool symmetric = space && is_symmetric(*space);
  const std::size_t violations = identities ? identities->violations.size() : 0;
  const bool valid = problems.empty() && violations == 0;

  if (config.format == Format::kCsv) {
    out << "points,tolerance,value_violations,symmetric,identities_checked,"
           "identity_violations,valid\n";
    out << doc.labels.size() << ',' << format_real(tolerance) << ',' << problems.size()
        << ',' << (space ? (symmetric ? "yes" : "no") : "unknown") << ','
        << (identities ? std::to_string(identities->checked) : "skipped") << ','
        << violations << ',' << (valid ? "yes" : "no") << '\n';
  } else {
    out << "points: " << doc.labels.size() << '\n';
    out << "tolerance: " << format_real(tolerance) << '\n';
    out << "diagonal: " << (problems.empty() ? "ok" : "violated") << '\n';
    for (const auto& p : problems) out << "  " << p << '\n';
    if (space) out << "symmetric: " << (symmetric ? "yes" : "no") << '\n';
    if (identities) {
      out << "identities: " << identities->checked << " checked, " << violations
          << " violations\n";
    } else if (identities_skipped) {
      out << "identities: skipped (more than "
          << config.limit.value_or(kDefaultIdentityLimit) << " points)\n";
    }
    out << "status: " << (valid ? "valid" : "invalid") << '\n';
  }
  return valid ? kOk : kViolations;
}

int cmd_identities(const std::string& path, const Config& config, std::ostream& out) {
  const SigmaSpace space = load_space(path, config);
  const std::size_t limit =
      config.force ? space.size() : config.limit.value_or(kDefaultIdentityLimit);
  const IdentityReport report = verify_identities(space, limit);

  auto tuple = [&](const IdentityViolation& v) {
    std::string s;
    for (std::size_t i = 0; i < v.points.size(); ++i) {
      if (i > 0) s += ' ';
      s += space.point(v.points[i]).label();
    }
    return s;
  };
  if (config.format == Format::kCsv) {
    out << "identity,points,lhs,rhs\n";
    for (const auto& v : report.violations) {
      out << to_string(v.identity) << ',' << tuple(v) << ',' << format_real(v.lhs) << ','
          << format_real(v.rhs) << '\n';
    }
  } else {
    out << "checked: " << report.checked << '\n';
    out << "symmetry: " << (report.symmetry_checked ? "checked" : "skipped (asymmetric)")
        << '\n';
    out << "violations: " << report.violations.size() << '\n';
    for (const auto& v : report.violations) {
      out << "  " << to_string(v.identity) << " [" << tuple(v)
          << "] lhs=" << format_real(v.lhs) << " rhs=" << format_real(v.rhs) << '\n';
    }
  }
  return report.ok() ? kOk : kViolations;
}

int cmd_dot(const std::string& path, const std::vector<std::string>& labels,
            const Config& config, std::ostream& out) {
  const SigmaSpace space = load_space(path, config);
  const Vector v{PointId(labels[0]), PointId(labels[1])};
  const Vector w{PointId(labels[2]), PointId(labels[3])};
  out << format_real(scalar_product(space, v, w)) << '\n';
  return kOk;
}

int cmd_equiv(const std::string& path, const std::vector<std::string>& labels,
              const Config& config, std::ostream& out) {
  const SigmaSpace space = load_space(path, config);
  const Vector v{PointId(labels[0]), PointId(labels[1])};
  const Vector w{PointId(labels[2]), PointId(labels[3])};
  const EquivalenceWitness witness = equivalent(space, v, w);
  if (config.format == Format::kCsv) {
    out << "equivalent,q0,q1,slot,lhs,rhs\n";
    if (witness.equivalent) {
      out << "yes,,,,,\n";
    } else {
      const auto& c = *witness.counterexample;
      out << "no," << c.q0.label() << ',' << c.q1.label() << ','
          << (c.slot == ProbeSlot::kFirst ? "first" : "second") << ','
          << format_real(c.lhs) << ',' << format_real(c.rhs) << '\n';
    }
  } else if (witness.equivalent) {
    out << "equivalent\n";
  } else {
    const auto& c = *witness.counterexample;
    out << "not equivalent\n";
    out << "witness: Q0=" << c.q0.label() << " Q1=" << c.q1.label()
        << " slot=" << (c.slot == ProbeSlot::kFirst ? "first" : "second")
        << " lhs=" << format_real(c.lhs) << " rhs=" << format_real(c.rhs) << '\n';
  }
  return witness.equivalent ? kOk : kNotEquivalent;
}

SearchOptions search_options(const Config& config) {
  SearchOptions options;
  if (config.limit) options.limit = *config.limit;
  options.force = config.force;
  return options;
}

int cmd_combine(const std::string& path, const std::string& alpha, const std::string& beta,
                const std::vector<std::string>& labels, const Config& config,
                std::ostream& out) {
  const Coefficients c{parse_number(alpha), parse_number(beta)};
  const SigmaSpace space = load_space(path, config);
  const Vector v{PointId(labels[0]), PointId(labels[1])};
  const Vector w{PointId(labels[2]), PointId(labels[3])};
  const CombinationResult result = solve_combination(space, c, v, w, search_options(config));
  const std::string case_name =
      result.guaranteed ? std::string(to_string(*result.guaranteed)) : "none";

  if (config.format == Format::kCsv) {
    out << "s0,s1,case,method\n";
    for (const auto& s : result.solutions) {
      out << s.origin.label() << ',' << s.end.label() << ',' << case_name << ','
          << to_string(result.method) << '\n';
    }
  } else {
    out << "case: " << case_name << '\n';
    out << "method: " << to_string(result.method) << '\n';
    if (result.guaranteed) {
      out << "representative: " << arrow(construct_guaranteed(space, c, v, w)) << '\n';
    }
    out << "solutions: " << result.solutions.size() << '\n';
    for (const auto& s : result.solutions) out << "  " << arrow(s) << '\n';
    if (result.solutions.empty()) out << "the combination is not defined in this space\n";
  }
  return result.solutions.empty() ? kNoSolution : kOk;
}

int cmd_grid(std::size_t dim, std::size_t size, const std::vector<std::string>& deleted,
             const Config& config, std::ostream& out) {
  GridSpec spec{dim, size, {}};
  for (const auto& token : deleted) spec.deleted.insert(parse_grid_point(token));
  const SigmaSpace space = build_grid_space(
      spec, config.tolerance.value_or(SigmaSpace::kDefaultTolerance));
  write_sigma_table(out, space);
  return kOk;
}

int cmd_survey(const std::string& path, const std::vector<std::string>& pairs,
               const std::string& restrict_path, bool chained, const Config& config,
               std::ostream& out) {
  std::vector<Coefficients> coefficients;
  for (const auto& p : pairs) coefficients.push_back(parse_pair(p));
  if (coefficients.empty()) {
    coefficients = {{1, 1}, {1, -1}, {-1, -1}, {1, 0}, {0, 0}, {0.5, 0.5}, {2, -1}};
  }
  const SigmaSpace space = load_space(path, config);
  SurveyOptions options;
  options.search = search_options(config);
  options.scope = chained ? PairScope::kChained : PairScope::kAll;
  if (!restrict_path.empty()) {
    std::vector<PointId> keep;
    for (const auto& label : load_document(restrict_path).labels) keep.emplace_back(label);
    options.restrict_to = std::move(keep);
  }
  const SurveyReport report = survey_linearity(space, coefficients, options);

  if (config.format == Format::kCsv) {
    out << "alpha,beta,total,solvable,guaranteed,unsolvable\n";
    for (const auto& row : report.rows) {
      out << format_real(row.coefficients.alpha) << ',' << format_real(row.coefficients.beta)
          << ',' << row.total << ',' << row.solvable << ',' << row.guaranteed << ','
          << row.unsolvable << '\n';
    }
  } else {
    out << std::left << std::setw(8) << "alpha" << std::setw(8) << "beta" << std::right
        << std::setw(10) << "total" << std::setw(10) << "solvable" << std::setw(12)
        << "guaranteed" << std::setw(12) << "unsolvable" << '\n';
    for (const auto& row : report.rows) {
      out << std::left << std::setw(8) << format_real(row.coefficients.alpha)
          << std::setw(8) << format_real(row.coefficients.beta) << std::right
          << std::setw(10) << row.total << std::setw(10) << row.solvable << std::setw(12)
          << row.guaranteed << std::setw(12) << row.unsolvable << '\n';
    }
  }
  return kOk;
}

int cmd_random(std::size_t points, std::uint64_t seed, bool asymmetric, bool integer,
               double low, double high, const Config& config, std::ostream& out) {
  std::mt19937_64 rng(seed);
  RandomTableOptions options;
  options.points = points;
  options.low = low;
  options.high = high;
  options.symmetric = !asymmetric;
  options.integer = integer;
  options.tolerance = config.tolerance.value_or(SigmaSpace::kDefaultTolerance);
  write_sigma_table(out, random_table(rng, options));
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSearchLimitExceeded:
    case ErrorCode::kOracleLimitExceeded:
      return kLimitExceeded;
    default:
      return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tgeom: world-function geometry on finite point sets"};
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  std::string format = "human";
  app.add_option("--tolerance", config.tolerance, "Override the comparison tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--limit", config.limit, "Override the point limit for exhaustive searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--force", config.force, "Run exhaustive searches above the limit");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "csv"}));
  app.add_option("--out", config.out_path, "Write output to this file instead of stdout");

  std::string file;
  std::string restrict_file;
  std::vector<std::string> labels;
  std::vector<std::string> pairs;
  std::string alpha;
  std::string beta;
  std::vector<std::string> deleted;
  std::size_t dim = 2;
  std::size_t size = 2;
  std::size_t points = 4;
  std::uint64_t seed = 1;
  bool asymmetric = false;
  bool integer = false;
  bool chained = false;
  double low = 0.0;
  double high = 10.0;

  auto* check = app.add_subcommand("check", "Validate a sigma-table file");
  check->add_option("file", file, "sigma-table file")->required();

  auto* identities = app.add_subcommand("identities", "Verify the scalar-product identities");
  identities->add_option("file", file, "sigma-table file")->required();

  auto* dot = app.add_subcommand("dot", "Scalar product (P0P1 . Q0Q1)");
  dot->add_option("file", file, "sigma-table file")->required();
  dot->add_option("points", labels, "P0 P1 Q0 Q1")->required()->expected(4);

  auto* equiv = app.add_subcommand("equiv", "Test whether P0P1 and R0R1 are equivalent");
  equiv->add_option("file", file, "sigma-table file")->required();
  equiv->add_option("points", labels, "P0 P1 R0 R1")->required()->expected(4);

  auto* combine = app.add_subcommand("combine", "Solve S0S1 = alpha*P0P1 + beta*R0R1");
  combine->add_option("file", file, "sigma-table file")->required();
  combine->add_option("alpha", alpha, "alpha")->required();
  combine->add_option("beta", beta, "beta")->required();
  combine->add_option("points", labels, "P0 P1 R0 R1")->required()->expected(4);

  auto* grid = app.add_subcommand("grid", "Write the sigma-table of an integer grid");
  grid->add_option("--dim", dim, "Dimension")->check(CLI::PositiveNumber);
  grid->add_option("--size", size, "Points per axis")->check(CLI::PositiveNumber);
  grid->add_option("--delete", deleted, "Deleted points, e.g. 1,1 (repeatable)");

  auto* survey = app.add_subcommand("survey", "Count solvable combinations per coefficient pair");
  survey->add_option("file", file, "sigma-table file")->required();
  survey->add_option("coefficients", pairs, "alpha,beta pairs (use -- before negatives)");
  survey->add_option("--restrict", restrict_file,
                     "Only draw vectors from the points of this sigma-table file");
  survey->add_flag("--chained", chained, "Only pairs where the first end is the second origin");

  auto* random = app.add_subcommand("random", "Write a random sigma-table (for testing)");
  random->add_option("--points", points, "Number of points")->check(CLI::PositiveNumber);
  random->add_option("--seed", seed, "Random seed");
  random->add_option("--low", low, "Smallest value");
  random->add_option("--high", high, "Largest value");
  random->add_flag("--asymmetric", asymmetric, "Draw sigma(P,Q) and sigma(Q,P) independently");
  random->add_flag("--integer", integer, "Integer values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  config.format = format == "csv" ? Format::kCsv : Format::kHuman;

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*check) {
      code = cmd_check(file, config, buffer);
    } else if (*identities) {
      code = cmd_identities(file, config, buffer);
    } else if (*dot) {
      code = cmd_dot(file, labels, config, buffer);
    } else if (*equiv) {
      code = cmd_equiv(file, labels, config, buffer);
    } else if (*combine) {
      code = cmd_combine(file, alpha, beta, labels, config, buffer);
    } else if (*grid) {
      code = cmd_grid(dim, size, deleted, config, buffer);
    } else if (*survey) {
      code = cmd_survey(file, pairs, restrict_file, chained, config, buffer);
    } else if (*random) {
      code = cmd_random(points, seed, asymmetric, integer, low, high, config, buffer);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (config.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file_out(config.out_path);
    file_out << buffer.str();
    if (!file_out) {
      err << "error: cannot write '" << config.out_path << "'\n";
      return kInputError;
    }
  }
  return code;
}

}  // namespace tgeom::cli
