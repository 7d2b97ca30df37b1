#ifndef SSKM_INSTANCE_HPP
#define SSKM_INSTANCE_HPP

#include <span>
#include <vector>

namespace sskm {

enum class SpaceKind { kEuclidean, kFiniteMetric };

/// A cluster center: free coordinates in the Euclidean case, a candidate id
/// into the instance's candidate list in the finite-metric case.
struct Center {
  std::vector<double> coords;
  int candidate = -1;

  bool is_candidate() const { return candidate >= 0; }

  static Center at(std::vector<double> coords) {
    Center c;
    c.coords = std::move(coords);
    return c;
  }
  static Center of_candidate(int id) {
    Center c;
    c.candidate = id;
    return c;
  }
};

/// Immutable clustering instance: the points to cluster, the candidate-center
/// space, the distance power (1 = median-style, 2 = means-style) and k.
///
/// Euclidean instances store flat row-major coordinates; finite-metric
/// instances store the full (n + candidates)^2 distance matrix, points first.
/// Construction validates shape, symmetry, the zero diagonal and the triangle
/// inequality (exhaustively up to 200 rows, on sampled triples beyond that).
class ClusterInstance {
 public:
  static ClusterInstance euclidean(const std::vector<std::vector<double>>& points, int k,
                                   int power);
  static ClusterInstance finite_metric(int n_points, const std::vector<std::vector<double>>& dist,
                                       int k, int power);

  SpaceKind space() const { return space_; }
  bool is_euclidean() const { return space_ == SpaceKind::kEuclidean; }
  int n() const { return n_; }
  int k() const { return k_; }
  int power() const { return power_; }
  int dim() const;              // Euclidean only
  int candidate_count() const;  // finite-metric only

  std::span<const double> point(int p) const;

  double point_distance(int a, int b) const;
  double candidate_distance(int p, int candidate) const;

  double center_distance(int p, const Center& c) const;
  double center_distance_sq(int p, const Center& c) const;
  /// d(p, c)^power — the cost kernel.
  double center_distance_pow(int p, const Center& c) const;

  // Raw matrix access for finite-metric serialization: rows cover points
  // first, then candidates.
  int matrix_rows() const;
  double matrix_entry(int a, int b) const;

  void require_point(int p) const;
  void require_center(const Center& c) const;

 private:
  ClusterInstance() = default;

  double matrix_at(int a, int b) const {
    return dist_[static_cast<size_t>(a) * rows_ + b];
  }

  SpaceKind space_ = SpaceKind::kEuclidean;
  int n_ = 0;
  int k_ = 1;
  int power_ = 2;
  int dim_ = 0;
  int candidates_ = 0;
  int rows_ = 0;               // n_ + candidates_ (finite metric)
  std::vector<double> coords_;  // n_ * dim_ row-major (Euclidean)
  std::vector<double> dist_;    // rows_^2 (finite metric)
};

}  // namespace sskm

#endif  // SSKM_INSTANCE_HPP
