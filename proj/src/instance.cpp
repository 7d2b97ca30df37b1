#include "sskm/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sskm/rng.hpp"

namespace sskm {

namespace {

void check_common(int n, int k, int power) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < k) throw std::invalid_argument("need n >= k points");
  if (power != 1 && power != 2) throw std::invalid_argument("power must be 1 or 2");
}

void check_metric(const std::vector<double>& d, int rows) {
  double scale = 0.0;
  for (double v : d) {
    if (!std::isfinite(v)) throw std::invalid_argument("distance matrix has non-finite entries");
    if (v < 0.0) throw std::invalid_argument("distance matrix has negative entries");
    scale = std::max(scale, v);
  }
  auto at = [&](int a, int b) { return d[static_cast<size_t>(a) * rows + b]; };
  const double tol = 1e-9 * std::max(1.0, scale);
  for (int a = 0; a < rows; ++a) {
    if (at(a, a) > 1e-12 * std::max(1.0, scale))
      throw std::invalid_argument("distance matrix diagonal must be zero");
    for (int b = a + 1; b < rows; ++b) {
      if (std::abs(at(a, b) - at(b, a)) > tol)
        throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
  auto check_triple = [&](int a, int b, int c) {
    if (at(a, c) > at(a, b) + at(b, c) + tol)
      throw std::invalid_argument("triangle inequality violated at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (rows <= 200) {
    for (int a = 0; a < rows; ++a)
      for (int b = 0; b < rows; ++b)
        for (int c = 0; c < rows; ++c) check_triple(a, b, c);
  } else {
    // spot-check on seeded triples; full cubic scan is too big here
    Rng rng(0x7261u);
    for (int t = 0; t < 20 * rows; ++t) {
      int a = rng.uniform_int(0, rows - 1);
      int b = rng.uniform_int(0, rows - 1);
      int c = rng.uniform_int(0, rows - 1);
      check_triple(a, b, c);
    }
  }
}

}  // namespace

ClusterInstance ClusterInstance::euclidean(const std::vector<std::vector<double>>& points, int k,
                                           int power) {
  check_common(static_cast<int>(points.size()), k, power);
  if (points.empty() || points.front().empty())
    throw std::invalid_argument("points must have dimension >= 1");
  const int dim = static_cast<int>(points.front().size());
  ClusterInstance inst;
  inst.space_ = SpaceKind::kEuclidean;
  inst.n_ = static_cast<int>(points.size());
  inst.k_ = k;
  inst.power_ = power;
  inst.dim_ = dim;
  inst.coords_.reserve(static_cast<size_t>(inst.n_) * dim);
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("all points must share one dimension");
    for (double v : p) {
      if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
      inst.coords_.push_back(v);
    }
  }
  return inst;
}

ClusterInstance ClusterInstance::finite_metric(int n_points,
                                               const std::vector<std::vector<double>>& dist, int k,
                                               int power) {
  check_common(n_points, k, power);
  const int rows = static_cast<int>(dist.size());
  if (rows <= n_points)
    throw std::invalid_argument("distance matrix must cover points plus at least one candidate");
  ClusterInstance inst;
  inst.space_ = SpaceKind::kFiniteMetric;
  inst.n_ = n_points;
  inst.k_ = k;
  inst.power_ = power;
  inst.candidates_ = rows - n_points;
  inst.rows_ = rows;
  inst.dist_.reserve(static_cast<size_t>(rows) * rows);
  for (const auto& row : dist) {
    if (static_cast<int>(row.size()) != rows)
      throw std::invalid_argument("distance matrix must be square");
    inst.dist_.insert(inst.dist_.end(), row.begin(), row.end());
  }
  check_metric(inst.dist_, rows);
  return inst;
}

int ClusterInstance::dim() const {
  if (!is_euclidean()) throw std::invalid_argument("dim() needs a Euclidean instance");
  return dim_;
}

int ClusterInstance::candidate_count() const {
  if (is_euclidean()) throw std::invalid_argument("candidate_count() needs a finite metric");
  return candidates_;
}

std::span<const double> ClusterInstance::point(int p) const {
  require_point(p);
  if (!is_euclidean()) throw std::invalid_argument("point() needs a Euclidean instance");
  return {coords_.data() + static_cast<size_t>(p) * dim_, static_cast<size_t>(dim_)};
}

double ClusterInstance::point_distance(int a, int b) const {
  require_point(a);
  require_point(b);
  if (is_euclidean()) {
    const double* pa = coords_.data() + static_cast<size_t>(a) * dim_;
    const double* pb = coords_.data() + static_cast<size_t>(b) * dim_;
    double s = 0.0;
    for (int d = 0; d < dim_; ++d) {
      double diff = pa[d] - pb[d];
      s += diff * diff;
    }
    return std::sqrt(s);
  }
  return matrix_at(a, b);
}

double ClusterInstance::candidate_distance(int p, int candidate) const {
  require_point(p);
  if (is_euclidean()) throw std::invalid_argument("candidate_distance() needs a finite metric");
  if (candidate < 0 || candidate >= candidates_)
    throw std::invalid_argument("unknown candidate id " + std::to_string(candidate));
  return matrix_at(p, n_ + candidate);
}

double ClusterInstance::center_distance_sq(int p, const Center& c) const {
  require_point(p);
  if (is_euclidean()) {
    if (static_cast<int>(c.coords.size()) != dim_)
      throw std::invalid_argument("center dimension mismatch");
    const double* pa = coords_.data() + static_cast<size_t>(p) * dim_;
    double s = 0.0;
    for (int d = 0; d < dim_; ++d) {
      double diff = pa[d] - c.coords[d];
      s += diff * diff;
    }
    return s;
  }
  double d = candidate_distance(p, c.candidate);
  return d * d;
}

double ClusterInstance::center_distance(int p, const Center& c) const {
  if (!is_euclidean()) return candidate_distance(p, c.candidate);
  return std::sqrt(center_distance_sq(p, c));
}

double ClusterInstance::center_distance_pow(int p, const Center& c) const {
  double d2 = center_distance_sq(p, c);
  return power_ == 2 ? d2 : std::sqrt(d2);
}

int ClusterInstance::matrix_rows() const {
  if (is_euclidean()) throw std::invalid_argument("matrix_rows() needs a finite metric");
  return rows_;
}

double ClusterInstance::matrix_entry(int a, int b) const {
  if (is_euclidean()) throw std::invalid_argument("matrix_entry() needs a finite metric");
  if (a < 0 || a >= rows_ || b < 0 || b >= rows_)
    throw std::invalid_argument("matrix index out of range");
  return matrix_at(a, b);
}

void ClusterInstance::require_point(int p) const {
  if (p < 0 || p >= n_) throw std::invalid_argument("unknown point id " + std::to_string(p));
}

void ClusterInstance::require_center(const Center& c) const {
  if (is_euclidean()) {
    if (c.is_candidate() || static_cast<int>(c.coords.size()) != dim_)
      throw std::invalid_argument("center must be a coordinate vector of the instance dimension");
  } else {
    if (!c.is_candidate() || c.candidate >= candidates_)
      throw std::invalid_argument("center must name a known candidate");
  }
}

}  // namespace sskm
