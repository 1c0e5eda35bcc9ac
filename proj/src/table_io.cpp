#include "tgeom/table_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "tgeom/error.hpp"

namespace tgeom {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) words.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

}  // namespace

std::optional<double> parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string format_real(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

TableDocument parse_table_document(std::istream& in) {
  TableDocument doc;
  std::unordered_map<std::string, std::size_t> index;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // pair -> entry
  bool have_points = false;
  bool have_tolerance = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, "expected '<directive>: ...'");
    }
    const std::string_view directive = trim(line.substr(0, colon));
    const std::vector<std::string> args = split_words(line.substr(colon + 1));

    if (!have_points && directive != "points") {
      throw ParseError(line_no, "the first directive must be 'points:'");
    }
    if (directive == "points") {
      if (have_points) throw ParseError(line_no, "'points:' given twice");
      if (args.empty()) throw ParseError(line_no, "'points:' needs at least one label");
      for (const auto& label : args) {
        if (!index.emplace(label, doc.labels.size()).second) {
          throw ParseError(line_no, "duplicate point label '" + label + "'");
        }
        doc.labels.push_back(label);
      }
      have_points = true;
    } else if (directive == "tolerance") {
      if (have_tolerance) throw ParseError(line_no, "'tolerance:' given twice");
      if (args.size() != 1) throw ParseError(line_no, "'tolerance:' takes one value");
      const auto value = parse_real(args[0]);
      if (!value || !std::isfinite(*value) || *value < 0.0) {
        throw ParseError(line_no, "invalid tolerance '" + args[0] + "'");
      }
      doc.tolerance = *value;
      have_tolerance = true;
    } else if (directive == "sigma") {
      if (args.size() != 3) {
        throw ParseError(line_no, "'sigma:' takes two labels and a value");
      }
      const auto from = index.find(args[0]);
      const auto to = index.find(args[1]);
      if (from == index.end() || to == index.end()) {
        throw ParseError(line_no, "unknown point '" +
                                      (from == index.end() ? args[0] : args[1]) + "'");
      }
      const auto value = parse_real(args[2]);
      if (!value) throw ParseError(line_no, "invalid number '" + args[2] + "'");
      const auto key = std::make_pair(from->second, to->second);
      if (auto it = seen.find(key); it != seen.end()) {
        throw ParseError(line_no, "σ(" + args[0] + "," + args[1] +
                                      ") already given on line " +
                                      std::to_string(doc.entry_lines[it->second]));
      }
      seen.emplace(key, doc.entries.size());
      doc.entries.push_back({args[0], args[1], *value});
      doc.entry_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
    }
  }
  if (!have_points) throw ParseError(0, "missing 'points:' line");

  const std::size_t n = doc.labels.size();
  bool mirrored = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || seen.contains({i, j})) continue;
      if (!seen.contains({j, i})) {
        throw ParseError(0, "missing σ(" + doc.labels[i] + "," + doc.labels[j] + ")");
      }
      mirrored = true;
    }
  }
  if (mirrored) {
    const double tolerance = doc.tolerance.value_or(SigmaSpace::kDefaultTolerance);
    for (const auto& [key, forward] : seen) {
      if (key.first >= key.second) continue;
      const auto back = seen.find({key.second, key.first});
      if (back == seen.end()) continue;
      const double a = doc.entries[forward].value;
      const double b = doc.entries[back->second].value;
      if (!(std::abs(a - b) <= tolerance)) {
        const std::size_t line =
            std::max(doc.entry_lines[forward], doc.entry_lines[back->second]);
        throw ParseError(line, "σ(" + doc.labels[key.first] + "," +
                                   doc.labels[key.second] + ") = " + format_real(a) +
                                   " conflicts with its mirror " + format_real(b));
      }
    }
  }
  return doc;
}

SigmaSpace build_space(const TableDocument& doc, std::optional<double> tolerance_override) {
  const double tolerance =
      tolerance_override.value_or(doc.tolerance.value_or(SigmaSpace::kDefaultTolerance));
  return build_finite_table(doc.labels, doc.entries, tolerance);
}

SigmaSpace read_sigma_table(std::istream& in) { return build_space(parse_table_document(in)); }

SigmaSpace read_sigma_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_sigma_table(in);
}

SigmaSpace read_sigma_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path.string() + "'");
  }
  return read_sigma_table(in);
}

void write_sigma_table(std::ostream& out, const SigmaSpace& space) {
  const std::size_t n = space.size();
  bool exact_symmetric = true;
  for (std::size_t i = 0; i < n && exact_symmetric; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (space.sigma(i, j) != space.sigma(j, i)) {
        exact_symmetric = false;
        break;
      }
    }
  }

  out << "# sigma-space, " << n << " points\n";
  out << "points:";
  for (const auto& p : space.points()) out << ' ' << p.label();
  out << "\ntolerance: " << format_real(space.tolerance()) << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = exact_symmetric ? i : 0; j < n; ++j) {
      if (i == j && space.sigma(i, i) == 0.0) continue;
      out << "sigma: " << space.point(i).label() << ' ' << space.point(j).label() << ' '
          << format_real(space.sigma(i, j)) << '\n';
    }
  }
}

std::string write_sigma_table(const SigmaSpace& space) {
  std::ostringstream out;
  write_sigma_table(out, space);
  return out.str();
}

void write_sigma_file(const std::filesystem::path& path, const SigmaSpace& space) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path.string() + "'");
  }
  write_sigma_table(out, space);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "failed writing '" + path.string() + "'");
  }
}

}  // namespace tgeom
