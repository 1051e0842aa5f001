#include "qojump/cone.hpp"

#include "qojump/error.hpp"

namespace qojump {

std::optional<QVector> cone_certificate(const QVector& point, const std::vector<QVector>& generators) {
  const std::size_t m = point.size();
  const std::size_t n = generators.size();
  for (const auto& g : generators) {
    if (g.size() != m) throw Error(ErrorKind::DimensionMismatch, "cone generator dimension");
  }

  // Tableau: m constraint rows over n structural + m artificial columns, rhs last.
  const std::size_t cols = n + m + 1;
  std::vector<QVector> t(m, QVector(cols));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = point[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -generators[j][i] : generators[j][i];
    t[i][n + i] = 1;
    t[i][cols - 1] = flip ? -point[i] : point[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-1 objective (sum of artificials).
  QVector cost(cols);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  }
  for (std::size_t i = 0; i < m; ++i) cost[cols - 1] -= t[i][cols - 1];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) {
      throw Error(ErrorKind::InternalInconsistency, "phase-1 objective unbounded");
    }
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (!cost[enter].is_zero()) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (!cost[cols - 1].is_zero()) return std::nullopt;
  QVector coeffs(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) coeffs[basis[i]] = t[i][cols - 1];
  }
  return coeffs;
}

bool cone_member(const QVector& point, const std::vector<QVector>& generators) {
  return cone_certificate(point, generators).has_value();
}

std::vector<QVector> to_qvectors(const std::vector<IntVector>& rows) {
  std::vector<QVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_qvector(r));
  return out;
}

}  // namespace qojump
