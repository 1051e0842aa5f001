#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qojump/chardata.hpp"
#include "qojump/rational.hpp"

namespace qojump {

enum class ConeKind { Rho, SigmaPlus, SigmaMinus, SigmaTop };

struct ThetaCone {
  ConeKind kind = ConeKind::Rho;
  std::size_t index = 0;  // l for rho(l), j for sigma_plus/minus(j), g+1 for sigma_top
  std::vector<IntVector> generators;  // primitive, sorted

  std::string tag() const;
  bool operator==(const ThetaCone&) const = default;
};

/// Parses "rho(2)", "sigma_minus(1)", "sigma_top" and so on.
ThetaCone cone_from_tag(const std::string& tag, std::size_t top_index);

struct FanTheta {
  std::size_t dim = 0;
  std::vector<ThetaCone> rho;      // rho(0)..rho(g)
  std::vector<ThetaCone> maximal;  // sigma_plus(1), sigma_minus(1), ..., sigma_top
  std::vector<IntVector> lambda_forms;  // Lambda_1..Lambda_{g+1}

  /// Index (1-based) of the Lambda form used on a maximal cone.
  std::size_t lambda_index(const ThetaCone& cone) const;

  bool operator==(const FanTheta&) const = default;
};

FanTheta build_fan(const CharacteristicData& cd);

struct MembershipResult {
  bool inside = false;
  std::vector<std::string> cones;  // tags of maximal cones containing the point
};

MembershipResult fan_member(const FanTheta& fan, const QVector& w);

/// Lambda(w); throws OutsideSupport if w is not in the fan.
Rational lambda_eval(const FanTheta& fan, const QVector& w);

}  // namespace qojump
