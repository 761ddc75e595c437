#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gromov/metric_space.hpp"

namespace gromov {

/// Point indices (x, y, z, p) at which a hyperbolicity bound is attained.
using Quadruple = std::array<std::size_t, 4>;

template <typename Scalar>
struct DeltaWitness {
  Scalar delta = 0;
  Quadruple quadruple{0, 0, 0, 0};
};

/// Thin-triangle constant of a geodesic graph: side [x, y] of triangle (x, y, z)
/// holds the point at arc-length `offset` from x that is farthest from the other sides.
template <typename Scalar>
struct ThinWitness {
  Scalar delta = 0;
  std::array<std::size_t, 3> triple{0, 0, 0};
  Scalar offset = 0;
  Scalar resolution = 0;
};

template <typename Scalar>
struct RelationCheck {
  std::string name;
  bool holds = true;
  Scalar slack = 0;  // rhs - lhs of the checked inequality
};

template <typename Scalar>
struct HyperbolicityReport {
  DeltaWitness<Scalar> delta_four_point;
  DeltaWitness<Scalar> delta_gromov;
  std::optional<ThinWitness<Scalar>> delta_thin;
  Scalar diameter = 0;
  std::vector<RelationCheck<Scalar>> checks;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
  }
};

struct ScanOptions {
  unsigned threads = 1;
};

namespace detail {

// Runs body(i) for i in [0, n) on `threads` workers; each i is processed by exactly
// one worker, so per-index results do not depend on the partition.
template <typename Body>
void for_each_index(std::size_t n, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
    });
}

// (delta, quadruple) ordering: larger delta wins, ties go to the lexicographically
// smaller quadruple.
template <typename Scalar>
bool better(const DeltaWitness<Scalar>& a, const DeltaWitness<Scalar>& b) {
  if (a.delta != b.delta) return a.delta > b.delta;
  return a.quadruple < b.quadruple;
}

template <typename Scalar>
DeltaWitness<Scalar> reduce(const std::vector<DeltaWitness<Scalar>>& parts) {
  DeltaWitness<Scalar> best;  // delta 0 at (0,0,0,0): every repeated-point quadruple
  for (const auto& p : parts)
    if (better(p, best)) best = p;
  return best;
}

template <typename Scalar>
inline Scalar four_point_excess(Scalar s1, Scalar s2, Scalar s3) {
  const Scalar hi12 = std::max(s1, s2), lo12 = std::min(s1, s2);
  const Scalar top = std::max(hi12, s3);
  const Scalar second = std::max(lo12, std::min(hi12, s3));
  return (top - second) / Scalar(2);
}

}  // namespace detail

/// Half the gap between the largest and second largest pairing sum of (x, y, z, p).
template <typename Scalar>
Scalar four_point_requirement(const BasicMetricSpace<Scalar>& d, const Quadruple& q) {
  const auto [x, y, z, p] = q;
  return detail::four_point_excess(d(x, y) + d(z, p), d(x, z) + d(y, p), d(x, p) + d(y, z));
}

/// min((x,y)_p, (y,z)_p) - (x,z)_p
template <typename Scalar>
Scalar gromov_requirement(const BasicMetricSpace<Scalar>& d, const Quadruple& q) {
  const auto [x, y, z, p] = q;
  return std::min(gromov_product(d, x, y, p), gromov_product(d, y, z, p)) -
         gromov_product(d, x, z, p);
}

/// Least delta for which every quadruple satisfies the four-point condition.
///
/// Scans unordered 4-subsets i < j < k < l. The witness is the lexicographically
/// smallest maximizing quadruple over all ordered quadruples with repetition, so a
/// zero result is witnessed by (0, 0, 0, 0).
template <typename Scalar>
DeltaWitness<Scalar> delta_four_point(const BasicMetricSpace<Scalar>& space,
                                      ScanOptions opts = {}) {
  const std::size_t n = space.size();
  const auto& d = space.matrix();
  std::vector<DeltaWitness<Scalar>> parts(n);

  detail::for_each_index(n, opts.threads, [&](std::size_t i) {
    DeltaWitness<Scalar> best;
    const Scalar* col_i = d.col(static_cast<Eigen::Index>(i)).data();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar* col_j = d.col(static_cast<Eigen::Index>(j)).data();
      const Scalar dij = col_i[j];
      for (std::size_t k = j + 1; k < n; ++k) {
        const Scalar* col_k = d.col(static_cast<Eigen::Index>(k)).data();
        const Scalar dik = col_i[k], djk = col_j[k];
        Scalar row_max = 0;
        for (std::size_t l = k + 1; l < n; ++l) {
          const Scalar e = detail::four_point_excess(dij + col_k[l], dik + col_j[l],
                                                     col_i[l] + djk);
          row_max = std::max(row_max, e);
        }
        if (!(row_max > best.delta)) continue;
        for (std::size_t l = k + 1; l < n; ++l) {
          const Scalar e = detail::four_point_excess(dij + col_k[l], dik + col_j[l],
                                                     col_i[l] + djk);
          if (e == row_max) {
            best = {e, {i, j, k, l}};
            break;
          }
        }
      }
    }
    parts[i] = best;
  });
  return detail::reduce(parts);
}

/// Least delta with (x,z)_p >= min((x,y)_p, (y,z)_p) - delta for all x, y, z, p.
///
/// Works from Gromov products, independently of the pairing-sum route in
/// delta_four_point: every 4-subset is evaluated under all 24 labelings.
template <typename Scalar>
DeltaWitness<Scalar> delta_gromov(const BasicMetricSpace<Scalar>& space, ScanOptions opts = {}) {
  const std::size_t n = space.size();
  std::vector<DeltaWitness<Scalar>> parts(n);

  detail::for_each_index(n, opts.threads, [&](std::size_t i) {
    DeltaWitness<Scalar> best;
    std::array<std::size_t, 4> pts{};
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          pts = {i, j, k, l};
          // For base point p and middle point y, x and z are the remaining pair;
          // the requirement is symmetric in x and z.
          Scalar subset_max = 0;
          Quadruple subset_arg{};
          bool found = false;
          for (std::size_t pi = 0; pi < 4; ++pi) {
            std::array<std::size_t, 3> rest{};
            for (std::size_t a = 0, r = 0; a < 4; ++a)
              if (a != pi) rest[r++] = pts[a];
            const std::size_t p = pts[pi];
            for (std::size_t yi = 0; yi < 3; ++yi) {
              const std::size_t y = rest[yi];
              const std::size_t x = rest[yi == 0 ? 1 : 0];
              const std::size_t z = rest[yi == 2 ? 1 : 2];
              const Scalar gxy = (space(x, p) + space(y, p) - space(x, y)) / Scalar(2);
              const Scalar gyz = (space(y, p) + space(z, p) - space(y, z)) / Scalar(2);
              const Scalar gxz = (space(x, p) + space(z, p) - space(x, z)) / Scalar(2);
              const Scalar req = std::min(gxy, gyz) - gxz;
              const Quadruple q{x, y, z, p};
              if (req > subset_max || (found && req == subset_max && q < subset_arg)) {
                subset_max = req;
                subset_arg = q;
                found = true;
              }
            }
          }
          if (!found) continue;  // every labeling clamps to 0
          DeltaWitness<Scalar> cand{subset_max, subset_arg};
          if (detail::better(cand, best)) best = cand;
        }
    parts[i] = best;
  });
  return detail::reduce(parts);
}

template <typename Scalar>
struct FourPointCheck {
  bool holds = true;
  DeltaWitness<Scalar> worst;
};

/// Whether every quadruple satisfies the four-point inequality with constant delta.
template <typename Scalar>
FourPointCheck<Scalar> satisfies_four_point(const BasicMetricSpace<Scalar>& space, Scalar delta,
                                            Tolerance<Scalar> tol = {}, ScanOptions opts = {}) {
  if (delta < 0) throw NegativeDelta("delta must be nonnegative");
  const auto worst = delta_four_point(space, opts);
  return {tol.less_equal(worst.delta, delta), worst};
}

struct ReportOptions {
  unsigned threads = 1;
  std::size_t subspace_probes = 3;
};

/// Both finite-space deltas plus the relations they must satisfy: equality of the
/// two, the diameter bound, and monotonicity under leave-one-out restriction.
template <typename Scalar>
HyperbolicityReport<Scalar> equivalence_report(const BasicMetricSpace<Scalar>& space,
                                               ReportOptions opts = {},
                                               Tolerance<Scalar> tol = {}) {
  HyperbolicityReport<Scalar> r;
  const ScanOptions scan{opts.threads};
  r.delta_four_point = delta_four_point(space, scan);
  r.delta_gromov = delta_gromov(space, scan);
  r.diameter = diameter(space);

  const Scalar d3 = r.delta_gromov.delta, d4 = r.delta_four_point.delta;
  r.checks.push_back({"gromov_equals_four_point", tol.equal(d3, d4), Scalar(0) - std::abs(d3 - d4)});
  r.checks.push_back({"diameter_bound", tol.less_equal(d3, r.diameter), r.diameter - d3});

  const std::size_t n = space.size();
  const std::size_t probes = n >= 2 ? std::min(opts.subspace_probes, n) : 0;
  for (std::size_t t = 0; t < probes; ++t) {
    const std::size_t drop = t * n / probes;
    std::vector<std::size_t> keep;
    keep.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      if (i != drop) keep.push_back(i);
    const Scalar sub = delta_four_point(subspace(space, keep), scan).delta;
    r.checks.push_back({"subspace_monotone(drop " + space.label(drop) + ")",
                        tol.less_equal(sub, d4), d4 - sub});
  }
  return r;
}

}  // namespace gromov
