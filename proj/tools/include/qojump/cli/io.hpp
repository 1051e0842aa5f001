#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qojump/branch.hpp"
#include "qojump/chardata.hpp"
#include "qojump/multiplier.hpp"
#include "qojump/tropfan.hpp"
#include "qojump/valuations.hpp"

namespace qojump::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qo-jump/1";

/// Malformed JSON or a document that does not match the expected shape.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// Either {"d", "alphas"} or the branch form {"d", "n", "terms"}.
struct Input {
  CharacteristicData cd;
  std::optional<BranchSeries> branch;
};

Input read_input(const Json& doc);
BranchSeries branch_from_json(const Json& doc);
CharacteristicData chardata_from_json(const Json& doc);

/// {"terms":[{"y":k,"x":[...],"coeff":"c"}]} with x of length d.
Polynomial polynomial_from_json(const Json& doc, std::size_t d);
Json polynomial_to_json(const Polynomial& p);

Rational rational_from_json(const Json& v, const std::string& what);
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& v, const std::string& what);
Json to_json(const QVector& v);
Json to_json(const IntVector& v);
IntVector int_vector_from_json(const Json& v, const std::string& what);

Json chardata_to_json(const CharacteristicData& cd);
Json divisors_to_json(const DivisorTable& table);
Json fan_to_json(const FanTheta& fan);
FanTheta fan_from_json(const Json& doc);
Json ideal_to_json(const MonomialIdeal& ideal);
Json jumps_to_json(const JumpingReport& report, bool approx);

/// x_1..x_d, y, z_1..z_{g-1}, f
std::string variable_label(std::size_t d, std::size_t g, std::size_t index);
std::string monomial_label(std::size_t d, std::size_t g, const IntVector& exponent);

}  // namespace qojump::cli
