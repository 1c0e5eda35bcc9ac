#include "tgeom/linear_ops.hpp"

#include <cmath>
#include <span>

#include "tgeom/equivalence.hpp"
#include "tgeom/error.hpp"

namespace tgeom {

namespace {

void check_coefficients(Coefficients c) {
  if (!std::isfinite(c.alpha) || !std::isfinite(c.beta)) {
    throw Error(ErrorCode::kInvalidArgument, "coefficients must be finite");
  }
}

bool is_unit(double x) { return x == 1.0 || x == -1.0; }

std::optional<CaseId> classify(Coefficients c, IndexVector p, IndexVector r) {
  const double a = c.alpha;
  const double b = c.beta;
  if (a == 0.0 && b == 0.0) return CaseId::kZero;
  if ((a == 0.0 && is_unit(b)) || (b == 0.0 && is_unit(a))) return CaseId::kSingleVector;
  if (is_unit(a) && a == b && (p.end == r.origin || r.end == p.origin)) {
    return CaseId::kChainSum;
  }
  if (is_unit(a) && a == -b && (p.end == r.end || p.origin == r.origin)) {
    return CaseId::kCommonEndpointDifference;
  }
  return std::nullopt;
}

void check_search_size(const SigmaSpace& space, const SearchOptions& options) {
  if (space.size() > options.limit && !options.force) {
    throw Error(ErrorCode::kSearchLimitExceeded,
                "space has " + std::to_string(space.size()) +
                    " points, search limit is " + std::to_string(options.limit) +
                    " (use force to override)");
  }
}

// Probe indices (fingerprint layout) checked before the full sweep: every
// probe anchored at the first point, in both slots, skipping the null probe.
std::vector<std::size_t> screening_probes(std::size_t n) {
  std::vector<std::size_t> probes;
  for (std::size_t q1 = 1; q1 < n; ++q1) {
    probes.push_back(q1);
    probes.push_back(n * n + q1);
  }
  return probes;
}

double probe_value(const SigmaSpace& space, IndexVector s, std::size_t k) {
  const std::size_t n = space.size();
  const bool second = k >= n * n;
  const std::size_t flat = second ? k - n * n : k;
  const IndexVector q{flat / n, flat % n};
  return second ? scalar_product(space, q, s) : scalar_product(space, s, q);
}

std::vector<double> combine(Coefficients c, const Fingerprint& fv, const Fingerprint& fw) {
  std::vector<double> target(fv.size());
  for (std::size_t k = 0; k < fv.size(); ++k) {
    target[k] = c.alpha * fv[k] + c.beta * fw[k];
  }
  return target;
}

}  // namespace

std::string_view to_string(CaseId id) {
  switch (id) {
    case CaseId::kZero: return "zero";
    case CaseId::kSingleVector: return "single-vector";
    case CaseId::kChainSum: return "chain-sum";
    case CaseId::kCommonEndpointDifference: return "common-endpoint-difference";
  }
  return "unknown";
}

std::string_view to_string(SolveMethod method) {
  return method == SolveMethod::kConstructed ? "constructed" : "searched";
}

Vector negate(const Vector& v) { return {v.end, v.origin}; }

Vector chain_sum(const Vector& v, const Vector& w) {
  if (v.end != w.origin) {
    throw Error(ErrorCode::kChainMismatch,
                "cannot add " + v.origin.label() + v.end.label() + " and " +
                    w.origin.label() + w.end.label() +
                    ": end of the first is not the origin of the second");
  }
  return {v.origin, w.end};
}

std::optional<CaseId> guaranteed_case(const SigmaSpace& space, Coefficients c,
                                      const Vector& v, const Vector& w) {
  check_coefficients(c);
  return classify(c, resolve(space, v), resolve(space, w));
}

Vector construct_guaranteed(const SigmaSpace& space, Coefficients c, const Vector& v,
                            const Vector& w) {
  const auto id = guaranteed_case(space, c, v, w);
  if (!id) {
    throw Error(ErrorCode::kNotGuaranteed,
                "no always-defined case applies to these coefficients and vectors");
  }
  switch (*id) {
    case CaseId::kZero:
      return {v.origin, v.origin};
    case CaseId::kSingleVector:
      if (c.alpha != 0.0) return c.alpha == 1.0 ? v : negate(v);
      return c.beta == 1.0 ? w : negate(w);
    case CaseId::kChainSum: {
      const Vector sum = v.end == w.origin ? Vector{v.origin, w.end}
                                           : Vector{w.origin, v.end};
      return c.alpha == 1.0 ? sum : negate(sum);
    }
    case CaseId::kCommonEndpointDifference: {
      const Vector diff = v.end == w.end ? Vector{v.origin, w.origin}
                                         : Vector{w.end, v.end};
      return c.alpha == 1.0 ? diff : negate(diff);
    }
  }
  throw Error(ErrorCode::kNotGuaranteed, "unhandled case");
}

CombinationResult solve_combination(const SigmaSpace& space, Coefficients c,
                                    const Vector& v, const Vector& w,
                                    const SearchOptions& options) {
  check_coefficients(c);
  const IndexVector p = resolve(space, v);
  const IndexVector r = resolve(space, w);
  check_search_size(space, options);

  const std::size_t n = space.size();
  const double eps = space.tolerance();
  const std::vector<double> target = combine(c, fingerprint(space, p), fingerprint(space, r));
  const std::vector<std::size_t> screen = screening_probes(n);

  auto matches = [&](IndexVector s) {
    for (std::size_t k : screen) {
      if (std::abs(probe_value(space, s, k) - target[k]) > eps) return false;
    }
    for (std::size_t q0 = 0; q0 < n; ++q0) {
      for (std::size_t q1 = 0; q1 < n; ++q1) {
        const IndexVector q{q0, q1};
        if (std::abs(scalar_product(space, s, q) - target[q0 * n + q1]) > eps) {
          return false;
        }
      }
    }
    for (std::size_t q0 = 0; q0 < n; ++q0) {
      for (std::size_t q1 = 0; q1 < n; ++q1) {
        const IndexVector q{q0, q1};
        if (std::abs(scalar_product(space, q, s) - target[n * n + q0 * n + q1]) > eps) {
          return false;
        }
      }
    }
    return true;
  };

  CombinationResult result;
  for (std::size_t s0 = 0; s0 < n; ++s0) {
    for (std::size_t s1 = 0; s1 < n; ++s1) {
      if (matches({s0, s1})) result.solutions.push_back(to_vector(space, {s0, s1}));
    }
  }
  result.guaranteed = classify(c, p, r);
  result.method = result.guaranteed ? SolveMethod::kConstructed : SolveMethod::kSearched;
  return result;
}

SurveyReport survey_linearity(const SigmaSpace& space,
                              const std::vector<Coefficients>& coefficients,
                              const SurveyOptions& options) {
  for (const auto& c : coefficients) check_coefficients(c);
  check_search_size(space, options.search);

  const std::size_t n = space.size();
  const std::size_t count = n * n;
  const std::size_t width = 2 * n * n;
  const double eps = space.tolerance();

  std::vector<bool> allowed(n, true);
  if (options.restrict_to) {
    allowed.assign(n, false);
    for (const auto& point : *options.restrict_to) allowed[space.index_of(point)] = true;
  }

  std::vector<double> prints(count * width);
  for (std::size_t i = 0; i < count; ++i) {
    const Fingerprint f = fingerprint(space, IndexVector{i / n, i % n});
    std::copy(f.begin(), f.end(), prints.begin() + static_cast<std::ptrdiff_t>(i * width));
  }
  auto row = [&](std::size_t i) {
    return std::span<const double>(prints.data() + i * width, width);
  };

  std::vector<std::size_t> probe_order = screening_probes(n);
  for (std::size_t k = 0; k < width; ++k) probe_order.push_back(k);

  std::vector<double> target(width);
  auto solvable = [&]() {
    for (std::size_t s = 0; s < count; ++s) {
      const auto f = row(s);
      bool ok = true;
      for (std::size_t k : probe_order) {
        if (std::abs(f[k] - target[k]) > eps) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };

  SurveyReport report;
  for (const auto& c : coefficients) {
    SurveyRow out;
    out.coefficients = c;
    for (std::size_t i = 0; i < count; ++i) {
      const IndexVector p{i / n, i % n};
      if (!allowed[p.origin] || !allowed[p.end]) continue;
      for (std::size_t j = 0; j < count; ++j) {
        const IndexVector r{j / n, j % n};
        if (!allowed[r.origin] || !allowed[r.end]) continue;
        if (options.scope == PairScope::kChained && p.end != r.origin) continue;
        ++out.total;
        if (classify(c, p, r)) ++out.guaranteed;
        const auto fv = row(i);
        const auto fw = row(j);
        for (std::size_t k = 0; k < width; ++k) target[k] = c.alpha * fv[k] + c.beta * fw[k];
        if (solvable()) ++out.solvable;
      }
    }
    out.unsolvable = out.total - out.solvable;
    report.rows.push_back(out);
  }
  return report;
}

}  // namespace tgeom
