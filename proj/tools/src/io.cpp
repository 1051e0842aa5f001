#include "qojump/cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qojump/error.hpp"

namespace qojump::cli {

namespace {

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw SchemaError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number_unsigned()) throw SchemaError(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

const Json& array_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
  return v;
}

void check_schema(const Json& doc) {
  auto it = doc.find("schema");
  if (it != doc.end() && (!it->is_string() || it->get<std::string>() != kSchema)) {
    throw SchemaError("unsupported schema " + it->dump());
  }
}

QVector qvector_from_json(const Json& v, const std::string& what) {
  if (!v.is_array()) throw SchemaError(what + " must be an array");
  QVector out;
  for (const auto& x : v) out.push_back(rational_from_json(x, what));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Rational rational_from_json(const Json& v, const std::string& what) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw SchemaError(what + ": expected a rational as a string or an integer, got " + v.dump());
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw SchemaError(what + ": expected an integer, got " + v.dump());
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntVector int_vector_from_json(const Json& v, const std::string& what) {
  if (!v.is_array()) throw SchemaError(what + " must be an array");
  IntVector out;
  for (const auto& x : v) out.push_back(integer_from_json(x, what));
  return out;
}

CharacteristicData chardata_from_json(const Json& doc) {
  check_schema(doc);
  const std::size_t d = size_field(doc, "d");
  std::vector<QVector> alphas;
  for (const auto& a : array_field(doc, "alphas")) alphas.push_back(qvector_from_json(a, "alphas"));
  return build(d, alphas);
}

BranchSeries branch_from_json(const Json& doc) {
  check_schema(doc);
  const std::size_t d = size_field(doc, "d");
  const std::size_t n = size_field(doc, "n");
  if (n == 0) throw SchemaError("field \"n\" must be positive");
  BranchSeries zeta(d, n);
  for (const auto& t : array_field(doc, "terms")) {
    zeta.add_term(qvector_from_json(field(t, "exponent"), "exponent"), rational_from_json(field(t, "coeff"), "coeff"));
  }
  validate(zeta);
  return zeta;
}

Input read_input(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("input must be a JSON object");
  Input in;
  if (doc.contains("terms")) {
    in.branch = branch_from_json(doc);
    in.cd = build(in.branch->d, characteristic_exponents(*in.branch));
  } else if (doc.contains("alphas")) {
    in.cd = chardata_from_json(doc);
  } else {
    throw SchemaError("input has neither \"alphas\" nor \"terms\"");
  }
  return in;
}

Polynomial polynomial_from_json(const Json& doc, std::size_t d) {
  check_schema(doc);
  Polynomial p(d);
  for (const auto& t : array_field(doc, "terms")) {
    const IntVector x = int_vector_from_json(field(t, "x"), "x");
    if (x.size() != d) throw SchemaError("term has " + std::to_string(x.size()) + " x exponents, expected " +
                                         std::to_string(d));
    Polynomial::Monomial m;
    for (const auto& e : x) {
      if (!e.fits_slong_p()) throw SchemaError("exponent too large");
      m.push_back(e.get_si());
    }
    const Json& y = field(t, "y");
    if (!y.is_number_integer()) throw SchemaError("field \"y\" must be an integer");
    m.push_back(y.get<long>());
    p += Polynomial::monomial(d, m, rational_from_json(field(t, "coeff"), "coeff"));
  }
  return p;
}

Json polynomial_to_json(const Polynomial& p) {
  std::vector<std::pair<Polynomial::Monomial, Rational>> sorted(p.terms().begin(), p.terms().end());
  // highest power of y first, as the semi-roots are usually written
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.back() != b.first.back()) return a.first.back() > b.first.back();
    return a.first > b.first;
  });
  Json terms = Json::array();
  for (const auto& [m, c] : sorted) {
    Json x = Json::array();
    for (std::size_t i = 0; i + 1 < m.size(); ++i) x.push_back(m[i]);
    terms.push_back(Json{{"y", m.back()}, {"x", x}, {"coeff", c.to_string()}});
  }
  return Json{{"degree_y", p.degree_y()}, {"terms", terms}};
}

Json chardata_to_json(const CharacteristicData& cd) {
  Json alphas = Json::array();
  Json gammas = Json::array();
  for (std::size_t j = 1; j <= cd.g; ++j) {
    alphas.push_back(to_json(cd.alpha(j)));
    gammas.push_back(to_json(cd.gamma(j)));
  }
  Json n = Json::array();
  for (const auto& x : cd.char_ints) n.push_back(integer_to_json(x));
  Json e = Json::array();
  for (const auto& x : cd.e) e.push_back(integer_to_json(x));
  Json axis = Json::array();
  for (const auto& row : cd.axis_mult) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(integer_to_json(x));
    axis.push_back(r);
  }
  return Json{{"d", cd.d},  {"g", cd.g},         {"alphas", alphas},
              {"n", n},     {"e", e},            {"gammas", gammas},
              {"axis_multipliers", axis}, {"degree", integer_to_json(cd.degree())}};
}

Json divisors_to_json(const DivisorTable& table) {
  Json out = Json::array();
  for (const auto& r : table.records) {
    Json aliases = Json::array();
    for (const auto& a : r.aliases) aliases.push_back(a);
    out.push_back(Json{{"id", r.id},
                       {"level", r.level},
                       {"axis", r.axis},
                       {"lattice_vector", to_json(r.lattice_vector)},
                       {"trop", to_json(r.trop)},
                       {"lambda", integer_to_json(r.log_discrepancy)},
                       {"exceptional", r.exceptional},
                       {"aliases", aliases}});
  }
  return out;
}

Json fan_to_json(const FanTheta& fan) {
  Json cones = Json::array();
  auto add = [&](const ThetaCone& c) {
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(to_json(g));
    cones.push_back(Json{{"tag", c.tag()}, {"generators", gens}});
  };
  for (const auto& c : fan.rho) add(c);
  for (const auto& c : fan.maximal) add(c);
  Json lambda = Json::array();
  for (const auto& l : fan.lambda_forms) lambda.push_back(to_json(l));
  return Json{{"schema", kSchema}, {"dim", fan.dim}, {"cones", cones}, {"lambda", lambda}};
}

FanTheta fan_from_json(const Json& doc) {
  check_schema(doc);
  FanTheta fan;
  fan.dim = size_field(doc, "dim");
  for (const auto& l : array_field(doc, "lambda")) {
    fan.lambda_forms.push_back(int_vector_from_json(l, "lambda"));
    if (fan.lambda_forms.back().size() != fan.dim) throw SchemaError("lambda form of the wrong dimension");
  }
  if (fan.lambda_forms.empty()) throw SchemaError("fan has no lambda forms");
  const std::size_t top = fan.lambda_forms.size();
  for (const auto& c : array_field(doc, "cones")) {
    const Json& tag = field(c, "tag");
    if (!tag.is_string()) throw SchemaError("cone tag must be a string");
    ThetaCone cone = cone_from_tag(tag.get<std::string>(), top);
    for (const auto& g : array_field(c, "generators")) {
      cone.generators.push_back(int_vector_from_json(g, "generators"));
      if (cone.generators.back().size() != fan.dim) throw SchemaError("cone generator of the wrong dimension");
    }
    (cone.kind == ConeKind::Rho ? fan.rho : fan.maximal).push_back(std::move(cone));
  }
  return fan;
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return gens;
}

Json jumps_to_json(const JumpingReport& report, bool approx) {
  Json jumps = Json::array();
  for (const auto& j : report.jumps) {
    Json w = Json::array();
    for (const auto& m : j.witnesses) w.push_back(to_json(m));
    Json entry{{"xi", j.xi.to_string()}};
    if (approx) entry["xi_approx"] = j.xi.to_decimal();
    entry["witnesses"] = w;
    jumps.push_back(entry);
  }
  return jumps;
}

std::string variable_label(std::size_t d, std::size_t g, std::size_t index) {
  if (index < 1 || index > d + g + 1) throw Error(ErrorKind::IndexOutOfRange, "variable " + std::to_string(index));
  if (index <= d) return "x_" + std::to_string(index);
  if (index == d + g + 1) return "f";
  if (index == d + 1) return "y";
  return "z_" + std::to_string(index - d - 1);
}

std::string monomial_label(std::size_t d, std::size_t g, const IntVector& exponent) {
  std::string out;
  for (std::size_t k = 0; k < exponent.size(); ++k) {
    if (exponent[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += variable_label(d, g, k + 1);
    if (exponent[k] != 1) out += "^" + to_string(exponent[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace qojump::cli
