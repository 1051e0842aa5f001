#include "qojump/tropfan.hpp"

#include <algorithm>

#include "qojump/cone.hpp"
#include "qojump/error.hpp"
#include "qojump/lattice.hpp"
#include "qojump/valuations.hpp"

namespace qojump {

std::string ThetaCone::tag() const {
  switch (kind) {
    case ConeKind::Rho: return "rho(" + std::to_string(index) + ")";
    case ConeKind::SigmaPlus: return "sigma_plus(" + std::to_string(index) + ")";
    case ConeKind::SigmaMinus: return "sigma_minus(" + std::to_string(index) + ")";
    case ConeKind::SigmaTop: return "sigma_top";
  }
  return "?";
}

ThetaCone cone_from_tag(const std::string& tag, std::size_t top_index) {
  ThetaCone c;
  if (tag == "sigma_top") {
    c.kind = ConeKind::SigmaTop;
    c.index = top_index;
    return c;
  }
  const auto open = tag.find('(');
  if (open == std::string::npos || tag.back() != ')') throw Error(ErrorKind::Parse, "cone tag '" + tag + "'");
  const std::string name = tag.substr(0, open);
  const std::string idx = tag.substr(open + 1, tag.size() - open - 2);
  if (name == "rho") {
    c.kind = ConeKind::Rho;
  } else if (name == "sigma_plus") {
    c.kind = ConeKind::SigmaPlus;
  } else if (name == "sigma_minus") {
    c.kind = ConeKind::SigmaMinus;
  } else {
    throw Error(ErrorKind::Parse, "cone tag '" + tag + "'");
  }
  const Integer v = parse_integer(idx);
  const long lo = c.kind == ConeKind::Rho ? 0 : 1;
  if (v < lo || v >= static_cast<long>(top_index)) {
    throw Error(ErrorKind::IndexOutOfRange, "cone tag '" + tag + "'");
  }
  c.index = v.get_ui();
  return c;
}

std::size_t FanTheta::lambda_index(const ThetaCone& cone) const {
  if (cone.kind == ConeKind::Rho) throw Error(ErrorKind::InvalidArgument, "rho cones are not maximal");
  return cone.index;
}

namespace {

IntVector unit(std::size_t dim, std::size_t k) {
  IntVector v(dim, Integer(0));
  v[k] = 1;
  return v;
}

ThetaCone make_cone(ConeKind kind, std::size_t index, std::vector<IntVector> gens) {
  for (auto& g : gens) g = primitivize(g).primitive;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return ThetaCone{kind, index, std::move(gens)};
}

}  // namespace

FanTheta build_fan(const CharacteristicData& cd) {
  FanTheta fan;
  fan.dim = cd.ambient_dim();
  const std::size_t d = cd.d;
  for (std::size_t l = 0; l <= cd.g; ++l) {
    std::vector<IntVector> gens;
    for (std::size_t i = 1; i <= d; ++i) gens.push_back(trop_embed(cd, l, primitive_axis_vector(cd, i, l)));
    fan.rho.push_back(make_cone(ConeKind::Rho, l, std::move(gens)));
  }
  for (std::size_t j = 1; j <= cd.g; ++j) {
    std::vector<IntVector> plus = fan.rho[j].generators;
    plus.push_back(unit(fan.dim, d + j - 1));
    fan.maximal.push_back(make_cone(ConeKind::SigmaPlus, j, std::move(plus)));
    std::vector<IntVector> minus = fan.rho[j - 1].generators;
    minus.insert(minus.end(), fan.rho[j].generators.begin(), fan.rho[j].generators.end());
    fan.maximal.push_back(make_cone(ConeKind::SigmaMinus, j, std::move(minus)));
  }
  std::vector<IntVector> top = fan.rho[cd.g].generators;
  top.push_back(unit(fan.dim, d + cd.g));
  fan.maximal.push_back(make_cone(ConeKind::SigmaTop, cd.g + 1, std::move(top)));

  for (std::size_t j = 1; j <= cd.g + 1; ++j) {
    IntVector form(fan.dim, Integer(0));
    for (std::size_t i = 0; i < d; ++i) form[i] = 1;
    for (std::size_t i = 1; i < j; ++i) form[d + i - 1] = 1 - cd.n(i);
    form[d + j - 1] = 1;
    fan.lambda_forms.push_back(std::move(form));
  }
  // adjacent forms agree on the shared face rho(j)
  for (std::size_t j = 1; j <= cd.g; ++j) {
    for (const auto& w : fan.rho[j].generators) {
      if (dot(fan.lambda_forms[j - 1], w) != dot(fan.lambda_forms[j], w)) {
        throw Error(ErrorKind::InternalInconsistency, "Lambda_" + std::to_string(j) + " and Lambda_" +
                                                          std::to_string(j + 1) + " disagree on " + to_string(w));
      }
    }
  }
  return fan;
}

MembershipResult fan_member(const FanTheta& fan, const QVector& w) {
  if (w.size() != fan.dim) throw Error(ErrorKind::DimensionMismatch, "point " + to_string(w));
  MembershipResult out;
  for (const auto& cone : fan.maximal) {
    if (cone_member(w, to_qvectors(cone.generators))) out.cones.push_back(cone.tag());
  }
  out.inside = !out.cones.empty();
  return out;
}

Rational lambda_eval(const FanTheta& fan, const QVector& w) {
  if (w.size() != fan.dim) throw Error(ErrorKind::DimensionMismatch, "point " + to_string(w));
  bool found = false;
  Rational value;
  for (const auto& cone : fan.maximal) {
    if (!cone_member(w, to_qvectors(cone.generators))) continue;
    const Rational v = dot(to_qvector(fan.lambda_forms[fan.lambda_index(cone) - 1]), w);
    if (found && v != value) {
      throw Error(ErrorKind::InternalInconsistency, "Lambda is not single valued at " + to_string(w));
    }
    value = v;
    found = true;
  }
  if (!found) throw Error(ErrorKind::OutsideSupport, to_string(w) + " is not in the fan");
  return value;
}

}  // namespace qojump
