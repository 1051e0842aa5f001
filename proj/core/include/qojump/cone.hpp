#pragma once

#include <optional>
#include <vector>

#include "qojump/rational.hpp"

namespace qojump {

/// Nonnegative coefficients c with point = sum c_i * generators[i], if any.
/// Decided by an exact phase-1 simplex (Bland's rule, so it terminates).
std::optional<QVector> cone_certificate(const QVector& point, const std::vector<QVector>& generators);

bool cone_member(const QVector& point, const std::vector<QVector>& generators);

std::vector<QVector> to_qvectors(const std::vector<IntVector>& rows);

}  // namespace qojump
