#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gromov/errors.hpp"

namespace gromov {

template <typename Scalar>
using DistanceMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Relative tolerance: |a - b| <= rel * max(1, |a|, |b|).
template <typename Scalar>
struct Tolerance {
  Scalar rel = Scalar(1e-9);

  Scalar scaled(Scalar magnitude) const {
    return rel * std::max(Scalar(1), std::abs(magnitude));
  }
  bool equal(Scalar a, Scalar b) const {
    return std::abs(a - b) <= rel * std::max({Scalar(1), std::abs(a), std::abs(b)});
  }
  bool less_equal(Scalar a, Scalar b) const {
    return a <= b + rel * std::max({Scalar(1), std::abs(a), std::abs(b)});
  }
};

/// A labeled finite point set with its full distance matrix.
///
/// Construction only checks shapes; use validate_metric() to check the axioms.
/// Instances are immutable.
template <typename Scalar>
class BasicMetricSpace {
 public:
  using scalar_type = Scalar;
  using matrix_type = DistanceMatrix<Scalar>;

  BasicMetricSpace(std::vector<std::string> labels, matrix_type dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {
    if (labels_.empty()) throw DegenerateSpace("metric space needs at least one point");
    if (dist_.rows() != dist_.cols())
      throw DimensionMismatch("distance matrix is " + std::to_string(dist_.rows()) + "x" +
                              std::to_string(dist_.cols()) + ", expected square");
    if (static_cast<std::size_t>(dist_.rows()) != labels_.size())
      throw DimensionMismatch("distance matrix has " + std::to_string(dist_.rows()) +
                              " rows but " + std::to_string(labels_.size()) + " labels");
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const matrix_type& matrix() const { return dist_; }

  Scalar operator()(std::size_t i, std::size_t j) const {
    return dist_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Index of a label, or size() when absent.
  std::size_t find(const std::string& label) const {
    return static_cast<std::size_t>(std::find(labels_.begin(), labels_.end(), label) -
                                    labels_.begin());
  }

 private:
  std::vector<std::string> labels_;
  matrix_type dist_;
};

using MetricSpace = BasicMetricSpace<double>;

template <typename Scalar>
BasicMetricSpace<Scalar> build_space(std::vector<std::string> labels,
                                     const std::vector<std::vector<Scalar>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  DistanceMatrix<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw DimensionMismatch("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                              " entries, expected " + std::to_string(n));
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return BasicMetricSpace<Scalar>(std::move(labels), std::move(m));
}

enum class Axiom { kZeroDiagonal, kSymmetry, kPositivity, kTriangle };

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kZeroDiagonal: return "zero-diagonal";
    case Axiom::kSymmetry: return "symmetry";
    case Axiom::kPositivity: return "positivity";
    case Axiom::kTriangle: return "triangle";
  }
  return "?";
}

template <typename Scalar>
struct Violation {
  Axiom axiom;
  std::vector<std::size_t> witness;
  Scalar magnitude;
};

template <typename Scalar>
struct ValidationReport {
  std::vector<Violation<Scalar>> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks the four metric axiom families and keeps the worst witness of each.
/// The triangle witness (i, j, k) reads d(i,k) > d(i,j) + d(j,k).
template <typename Scalar>
ValidationReport<Scalar> validate_metric(const BasicMetricSpace<Scalar>& space,
                                         Tolerance<Scalar> tol = {}) {
  const std::size_t n = space.size();
  ValidationReport<Scalar> report;
  auto keep_worst = [&report](bool violated, Axiom axiom, Scalar magnitude,
                              std::vector<std::size_t> witness) {
    if (!violated) return;
    for (auto& v : report.violations) {
      if (v.axiom != axiom) continue;
      if (magnitude > v.magnitude) {
        v.magnitude = magnitude;
        v.witness = std::move(witness);
      }
      return;
    }
    report.violations.push_back({axiom, std::move(witness), magnitude});
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Scalar dii = std::abs(space(i, i));
    keep_worst(!(dii <= tol.scaled(0)), Axiom::kZeroDiagonal, dii, {i});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar a = space(i, j), b = space(j, i);
      keep_worst(!tol.equal(a, b), Axiom::kSymmetry, std::abs(a - b), {i, j});
      const Scalar lo = std::min(a, b);
      keep_worst(!(lo > 0), Axiom::kPositivity, -lo, {i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Scalar lhs = space(i, k), rhs = space(i, j) + space(j, k);
        keep_worst(!tol.less_equal(lhs, rhs), Axiom::kTriangle, lhs - rhs, {i, j, k});
      }
    }
  }
  auto& out = report.violations;
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.axiom < b.axiom; });
  return report;
}

namespace detail {
inline void check_index(std::size_t i, std::size_t n) {
  if (i >= n)
    throw IndexOutOfRange("point index " + std::to_string(i) + " out of range for " +
                          std::to_string(n) + " points");
}
}  // namespace detail

/// (x,z)_p = (d(x,p) + d(z,p) - d(x,z)) / 2
template <typename Scalar>
Scalar gromov_product(const BasicMetricSpace<Scalar>& space, std::size_t x, std::size_t z,
                      std::size_t p) {
  const std::size_t n = space.size();
  detail::check_index(x, n);
  detail::check_index(z, n);
  detail::check_index(p, n);
  return (space(x, p) + space(z, p) - space(x, z)) / Scalar(2);
}

template <typename Scalar>
Scalar diameter(const BasicMetricSpace<Scalar>& space) {
  return space.matrix().maxCoeff();
}

template <typename Scalar>
BasicMetricSpace<Scalar> subspace(const BasicMetricSpace<Scalar>& space,
                                  const std::vector<std::size_t>& indices) {
  const std::size_t n = space.size();
  std::vector<bool> seen(n, false);
  for (auto i : indices) {
    detail::check_index(i, n);
    if (seen[i]) throw DuplicateIndex("index " + std::to_string(i) + " repeated in subspace");
    seen[i] = true;
  }
  std::vector<std::string> labels;
  labels.reserve(indices.size());
  for (auto i : indices) labels.push_back(space.label(i));
  std::vector<Eigen::Index> idx(indices.begin(), indices.end());
  DistanceMatrix<Scalar> m = space.matrix()(idx, idx);
  return BasicMetricSpace<Scalar>(std::move(labels), std::move(m));
}

/// Uniform scaling of all distances by c.
template <typename Scalar>
BasicMetricSpace<Scalar> scaled(const BasicMetricSpace<Scalar>& space, Scalar c) {
  return BasicMetricSpace<Scalar>(space.labels(), space.matrix() * c);
}

}  // namespace gromov
