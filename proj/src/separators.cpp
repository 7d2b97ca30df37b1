#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sskm/learners.hpp"

namespace sskm {

int BinarySeparator::eval_coords(std::span<const double> x) const {
  switch (kind) {
    case Kind::kConstant:
      return constant;
    case Kind::kHalfspace: {
      if (x.size() != w.size()) throw std::invalid_argument("separator dimension mismatch");
      double s = b;
      for (size_t d = 0; d < w.size(); ++d) s += w[d] * x[d];
      return s >= 0.0 ? 1 : -1;
    }
    case Kind::kCandidatePair:
      throw std::invalid_argument("candidate-pair separator needs a point id");
  }
  return 1;
}

int BinarySeparator::eval(const ClusterInstance& inst, int point) const {
  if (kind == Kind::kCandidatePair) {
    double d1 = inst.candidate_distance(point, q1);
    double d2 = inst.candidate_distance(point, q2);
    return d1 >= d2 ? -1 : 1;
  }
  if (kind == Kind::kConstant) return constant;
  return eval_coords(inst.point(point));
}

namespace {

struct SignedPoints {
  std::vector<std::vector<double>> x;  // centered and scaled into the unit ball
  std::vector<int> y;                  // +1 / -1
  std::vector<double> shift;
  double scale = 1.0;
};

SignedPoints normalize(std::span<const std::vector<double>> pos,
                       std::span<const std::vector<double>> neg, int dim) {
  SignedPoints d;
  d.shift.assign(dim, 0.0);
  auto add_shift = [&](const std::vector<double>& p) {
    for (int i = 0; i < dim; ++i) d.shift[i] += p[i];
  };
  for (const auto& p : pos) add_shift(p);
  for (const auto& p : neg) add_shift(p);
  const double m = static_cast<double>(pos.size() + neg.size());
  for (double& v : d.shift) v /= m;
  double radius = 0.0;
  auto dist = [&](const std::vector<double>& p) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += (p[i] - d.shift[i]) * (p[i] - d.shift[i]);
    return std::sqrt(s);
  };
  for (const auto& p : pos) radius = std::max(radius, dist(p));
  for (const auto& p : neg) radius = std::max(radius, dist(p));
  d.scale = radius > 0.0 ? radius : 1.0;
  auto push = [&](const std::vector<double>& p, int y) {
    std::vector<double> q(dim);
    for (int i = 0; i < dim; ++i) q[i] = (p[i] - d.shift[i]) / d.scale;
    d.x.push_back(std::move(q));
    d.y.push_back(y);
  };
  for (const auto& p : pos) push(p, 1);
  for (const auto& p : neg) push(p, -1);
  return d;
}

// Plain perceptron on the augmented points; succeeds on the first clean pass.
std::optional<std::pair<std::vector<double>, double>> perceptron(const SignedPoints& d, int dim,
                                                                 int max_epochs) {
  std::vector<double> w(dim, 0.0);
  double b = 0.0;
  const long long update_cap = 2000000;
  long long updates = 0;
  for (int epoch = 0; epoch < max_epochs; ++epoch) {
    int mistakes = 0;
    for (size_t i = 0; i < d.x.size(); ++i) {
      double act = b;
      for (int j = 0; j < dim; ++j) act += w[j] * d.x[i][j];
      if (d.y[i] * act <= 0.0) {
        for (int j = 0; j < dim; ++j) w[j] += d.y[i] * d.x[i][j];
        b += d.y[i];
        ++mistakes;
        if (++updates > update_cap) return std::nullopt;
      }
    }
    if (mistakes == 0) return std::make_pair(std::move(w), b);
  }
  return std::nullopt;
}

// Phase-1 simplex (dense tableau, Bland's rule) for the system
// <a_i, u> >= 1 over a free vector u. Returns u when feasible, nullopt when
// the phase-1 optimum certifies infeasibility.
std::optional<std::vector<double>> lp_feasible(const std::vector<std::vector<double>>& a) {
  const int m = static_cast<int>(a.size());
  const int d = static_cast<int>(a.front().size());
  const int n_struct = 2 * d;               // u split into u+ - u-
  const int n_cols = n_struct + 2 * m;      // + surplus + artificial
  const int rhs = n_cols;
  const double tol = 1e-9;

  std::vector<std::vector<double>> t(m + 1, std::vector<double>(n_cols + 1, 0.0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      t[i][j] = a[i][j];
      t[i][d + j] = -a[i][j];
    }
    t[i][n_struct + i] = -1.0;      // surplus
    t[i][n_struct + m + i] = 1.0;   // artificial
    t[i][rhs] = 1.0;
    basis[i] = n_struct + m + i;
  }
  // reduced costs with the all-artificial basis: r_j = c_j - sum of column j
  for (int j = 0; j <= n_cols; ++j) {
    double col = 0.0;
    for (int i = 0; i < m; ++i) col += t[i][j];
    double c = (j >= n_struct + m && j < n_cols) ? 1.0 : 0.0;
    t[m][j] = c - col;
  }

  const long long iter_cap = 20000 + 20LL * (m + n_cols);
  for (long long iter = 0; iter < iter_cap; ++iter) {
    int enter = -1;
    for (int j = 0; j < n_cols; ++j) {
      if (t[m][j] < -tol) {
        enter = j;
        break;  // Bland: lowest eligible index
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= tol) continue;
      double ratio = t[i][rhs] / t[i][enter];
      if (leave < 0 || ratio < best_ratio - tol ||
          (std::abs(ratio - best_ratio) <= tol && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw Error("linear feasibility: unbounded pivot column");
    double piv = t[leave][enter];
    for (int j = 0; j <= n_cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j <= n_cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  double objective = -t[m][rhs];
  if (objective > 1e-7) return std::nullopt;

  std::vector<double> u(d, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < d) {
      u[basis[i]] += t[i][rhs];
    } else if (basis[i] < n_struct) {
      u[basis[i] - d] -= t[i][rhs];
    }
  }
  return u;
}

}  // namespace

BinarySeparator fit_separator_euclidean(std::span<const std::vector<double>> positives,
                                        std::span<const std::vector<double>> negatives,
                                        const LearnerConfig& cfg) {
  if (positives.empty() && negatives.empty())
    throw std::invalid_argument("separator fit needs at least one sample");
  if (negatives.empty()) return BinarySeparator::constant_of(1);
  if (positives.empty()) return BinarySeparator::constant_of(-1);

  const int dim = static_cast<int>(positives.front().size());
  for (const auto& p : positives)
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("dimension mismatch");
  for (const auto& p : negatives)
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("dimension mismatch");

  SignedPoints data = normalize(positives, negatives, dim);

  auto fit = perceptron(data, dim, cfg.max_epochs);
  if (!fit) {
    const long long m = static_cast<long long>(data.x.size());
    if (m > cfg.lp_max_points)
      throw NonSeparableError(
          "first-order budget exhausted and the input exceeds the exact fallback limit");
    std::vector<std::vector<double>> rows;
    rows.reserve(m);
    for (size_t i = 0; i < data.x.size(); ++i) {
      std::vector<double> row(dim + 1);
      for (int j = 0; j < dim; ++j) row[j] = data.y[i] * data.x[i][j];
      row[dim] = data.y[i];
      rows.push_back(std::move(row));
    }
    auto u = lp_feasible(rows);
    if (!u) throw NonSeparableError("no separating halfspace exists");
    std::vector<double> w(u->begin(), u->begin() + dim);
    fit = std::make_pair(std::move(w), (*u)[dim]);
  }

  BinarySeparator sep;
  sep.kind = BinarySeparator::Kind::kHalfspace;
  sep.w.resize(dim);
  double shift_dot = 0.0;
  for (int j = 0; j < dim; ++j) {
    sep.w[j] = fit->first[j] / data.scale;
    shift_dot += fit->first[j] * data.shift[j];
  }
  sep.b = fit->second - shift_dot / data.scale;

  auto value = [&](const std::vector<double>& p) {
    double s = sep.b;
    for (int j = 0; j < dim; ++j) s += sep.w[j] * p[j];
    return s;
  };
  for (const auto& p : positives)
    if (!(value(p) > 0.0)) throw Error("separator verification failed on a positive sample");
  for (const auto& p : negatives)
    if (!(value(p) < 0.0)) throw Error("separator verification failed on a negative sample");
  return sep;
}

BinarySeparator fit_separator_fms(const ClusterInstance& inst, std::span<const int> positives,
                                  std::span<const int> negatives) {
  if (inst.is_euclidean())
    throw std::invalid_argument("candidate-pair separators need a finite metric");
  for (int p : positives) inst.require_point(p);
  for (int p : negatives) inst.require_point(p);
  const int m = inst.candidate_count();
  for (int q1 = 0; q1 < m; ++q1) {
    for (int q2 = 0; q2 < m; ++q2) {
      bool ok = true;
      for (int p : positives) {
        if (inst.candidate_distance(p, q1) >= inst.candidate_distance(p, q2)) {
          ok = false;
          break;
        }
      }
      for (size_t i = 0; ok && i < negatives.size(); ++i) {
        if (inst.candidate_distance(negatives[i], q1) < inst.candidate_distance(negatives[i], q2))
          ok = false;
      }
      if (ok) {
        BinarySeparator sep;
        sep.kind = BinarySeparator::Kind::kCandidatePair;
        sep.q1 = q1;
        sep.q2 = q2;
        return sep;
      }
    }
  }
  throw NonSeparableError("no candidate pair separates the samples");
}

}  // namespace sskm
