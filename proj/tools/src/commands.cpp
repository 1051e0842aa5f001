#include "qojump/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

namespace qojump::cli {

namespace {

struct Options {
  std::string format = "json";
  bool approx = false;
  unsigned threads = 1;
};

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json header() { return Json{{"schema", kSchema}}; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Rows of cells, left aligned; `sep` goes between columns. A comma separator
// stays attached to its cell and the padding follows it.
void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows, const std::string& sep) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const bool last = c + 1 == row.size();
      if (last) {
        line += row[c];
      } else if (sep.front() == ',') {
        line += pad(row[c] + ",", width[c] + 1) + sep.substr(1);
      } else {
        line += pad(row[c], width[c]) + sep;
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void divisors_csv(std::ostream& out, const DivisorTable& table) {
  std::vector<std::vector<std::string>> rows{{"id", "level", "axis", "lattice_vector", "trop", "lambda", "exceptional"}};
  for (const auto& r : table.records) {
    rows.push_back({r.id, std::to_string(r.level), std::to_string(r.axis), csv_quote(to_string(r.lattice_vector)),
                    csv_quote(to_string(r.trop)), to_string(r.log_discrepancy), r.exceptional ? "true" : "false"});
  }
  print_aligned(out, rows, ", ");
}

// The witness shown for a jump: digit-bounded monomials first, then smallest
// total degree, then lexicographically largest (earlier variables first).
const IntVector& display_witness(const CharacteristicData& cd, const Jump& j) {
  auto key = [&](const IntVector& v) {
    bool bounded = true;
    for (std::size_t k = 1; k <= cd.g; ++k) bounded = bounded && v[cd.d + k - 1] < cd.n(k);
    Integer s = 0;
    for (const auto& x : v) s += x;
    return std::make_pair(!bounded, s);
  };
  return *std::min_element(j.witnesses.begin(), j.witnesses.end(), [&](const IntVector& a, const IntVector& b) {
    const auto ka = key(a);
    const auto kb = key(b);
    return ka != kb ? ka < kb : b < a;
  });
}

void jumps_csv(std::ostream& out, const CharacteristicData& cd, const JumpingReport& report, bool approx) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"xi"});
  if (approx) rows.back().push_back("xi_approx_nonauthoritative");
  rows.back().push_back("witnesses");
  for (const auto& j : report.jumps) {
    std::vector<std::string> row{j.xi.to_string()};
    if (approx) row.push_back(j.xi.to_decimal());
    std::string w;
    for (const auto& m : j.witnesses) w += (w.empty() ? "" : "; ") + monomial_label(cd.d, cd.g, m);
    row.push_back(csv_quote(w));
    rows.push_back(row);
  }
  print_aligned(out, rows, ", ");
}

// Blocks of ten columns, a row of monomials over a row of values.
void jumps_text(std::ostream& out, const CharacteristicData& cd, const JumpingReport& report, bool approx) {
  out << "lct = " << report.lct.to_string() << '\n';
  out << "jumping numbers in (0,1]: " << report.jumps.size() << " (" << report.candidates_examined
      << " candidates examined)\n";
  const std::size_t per_block = 10;
  for (std::size_t start = 0; start < report.jumps.size(); start += per_block) {
    std::vector<std::string> labels{"M"};
    std::vector<std::string> values{"xi"};
    std::vector<std::string> decimals{"~xi"};
    for (std::size_t k = start; k < std::min(report.jumps.size(), start + per_block); ++k) {
      const auto& j = report.jumps[k];
      labels.push_back(j.witnesses.empty() ? "-" : monomial_label(cd.d, cd.g, display_witness(cd, j)));
      values.push_back(j.xi.to_string());
      decimals.push_back(j.xi.to_decimal(4));
    }
    out << '\n';
    std::vector<std::vector<std::string>> rows{labels, values};
    if (approx) rows.push_back(decimals);
    print_aligned(out, rows, " | ");
  }
  if (approx) out << "(~xi rows are decimal approximations and are not authoritative)\n";
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InternalInconsistency, what);
}

void assert_consistent(const CharacteristicData& cd, const DivisorTable& table, const FanTheta& fan,
                       const JumpingReport& report) {
  for (const auto& r : table.records) {
    const QVector w = to_qvector(r.trop);
    check(fan_member(fan, w).inside, r.id + " lies outside the fan");
    check(lambda_eval(fan, w) == Rational(r.log_discrepancy), r.id + ": Lambda disagrees with the log-discrepancy");
  }
  check(!report.jumps.empty() && report.jumps.back().xi == Rational(1), "1 is missing from the jumping numbers");
  check(report.lct == report.jumps.front().xi, "lct is not the first jumping number");
  for (std::size_t k = 0; k < report.jumps.size(); ++k) {
    const auto& j = report.jumps[k];
    check(k == 0 || report.jumps[k - 1].xi < j.xi, "jumping numbers are not increasing");
    if (j.xi == Rational(1)) continue;
    check(!j.witnesses.empty(), "jump " + j.xi.to_string() + " has no witness");
    for (const auto& w : j.witnesses) {
      check(xi_of(cd, table, w) == j.xi, "witness " + to_string(w) + " of " + j.xi.to_string());
    }
  }
}

std::vector<Polynomial> semiroots_for(const Input& in) {
  return semiroots(in.branch ? *in.branch : generic_branch(in.cd));
}

QVector parse_point(const std::string& text) {
  QVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    out.push_back(Rational::parse(item));
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "empty point");
  return out;
}

void cmd_analyze(const Input& in, const Options& opt, const std::string* xi_text, std::ostream& out) {
  Rational xi;
  if (xi_text) xi = Rational::parse(*xi_text);
  const Json report = analyze_report(in, opt.threads, opt.approx, xi_text ? &xi : nullptr);
  if (opt.format == "json") {
    emit(out, report);
    return;
  }
  const auto& cd = in.cd;
  const DivisorTable table = divisor_table(cd);
  const JumpingReport jumps = jumping_numbers(cd, table, opt.threads);
  if (opt.format == "csv") {
    divisors_csv(out, table);
    out << '\n';
    jumps_csv(out, cd, jumps, opt.approx);
    return;
  }
  out << "d = " << cd.d << ", g = " << cd.g << ", degree " << to_string(cd.degree()) << '\n';
  for (std::size_t j = 1; j <= cd.g; ++j) {
    out << "alpha_" << j << " = " << to_string(cd.alpha(j)) << "  n_" << j << " = " << to_string(cd.n(j))
        << "  gamma_" << j << " = " << to_string(cd.gamma(j)) << '\n';
  }
  out << '\n';
  divisors_csv(out, table);
  const FanTheta fan = build_fan(cd);
  out << "\nfan: " << fan.maximal.size() << " maximal cones in dimension " << fan.dim << '\n';
  for (std::size_t j = 0; j < fan.lambda_forms.size(); ++j) {
    out << "Lambda_" << j + 1 << " = " << to_string(fan.lambda_forms[j]) << '\n';
  }
  out << '\n';
  jumps_text(out, cd, jumps, opt.approx);
  if (xi_text) {
    out << "\nJ(" << xi.to_string() << " D) generators:\n";
    for (const auto& g : multiplier_ideal_periodic(cd, table, xi, opt.threads).generators()) {
      out << "  " << monomial_label(cd.d, cd.g, g) << '\n';
    }
  }
}

void cmd_branch(const Json& doc, const Options& opt, std::ostream& out) {
  const BranchSeries zeta = branch_from_json(doc);
  const auto alphas = characteristic_exponents(zeta);
  const CharacteristicData cd = build(zeta.d, alphas);
  const auto roots = semiroots(zeta);
  if (opt.format == "json") {
    Json report = header();
    report["chardata"] = chardata_to_json(cd);
    Json sr = Json::array();
    for (const auto& p : roots) sr.push_back(polynomial_to_json(p));
    report["semiroots"] = sr;
    emit(out, report);
    return;
  }
  if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"j", "degree_y", "semiroot"}};
    for (std::size_t j = 0; j < roots.size(); ++j) {
      rows.push_back({std::to_string(j), std::to_string(roots[j].degree_y()), csv_quote(roots[j].to_string())});
    }
    print_aligned(out, rows, ", ");
    return;
  }
  for (std::size_t j = 1; j <= cd.g; ++j) out << "alpha_" << j << " = " << to_string(cd.alpha(j)) << '\n';
  for (std::size_t j = 0; j < roots.size(); ++j) {
    out << (j + 1 == roots.size() ? "f" : "g_" + std::to_string(j)) << " = " << roots[j].to_string() << '\n';
  }
}

void cmd_jumping(const Input& in, const Options& opt, std::ostream& out) {
  const DivisorTable table = divisor_table(in.cd);
  const JumpingReport report = jumping_numbers(in.cd, table, opt.threads);
  assert_consistent(in.cd, table, build_fan(in.cd), report);
  if (opt.format == "json") {
    Json doc = header();
    doc["lct"] = report.lct.to_string();
    if (opt.approx) doc["approx_note"] = "xi_approx values are decimal approximations and not authoritative";
    doc["candidates_examined"] = report.candidates_examined;
    doc["jumps"] = jumps_to_json(report, opt.approx);
    emit(out, doc);
  } else if (opt.format == "csv") {
    jumps_csv(out, in.cd, report, opt.approx);
  } else {
    jumps_text(out, in.cd, report, opt.approx);
  }
}

void cmd_ideal(const Input& in, const Options& opt, const std::string& xi_text, std::ostream& out) {
  const Rational xi = Rational::parse(xi_text);
  const DivisorTable table = divisor_table(in.cd);
  const MonomialIdeal ideal = multiplier_ideal_periodic(in.cd, table, xi, opt.threads);
  const std::size_t dim = in.cd.ambient_dim();
  if (opt.format == "json") {
    Json doc = header();
    doc["xi"] = xi.to_string();
    if (opt.approx) doc["xi_approx_nonauthoritative"] = xi.to_decimal();
    doc["generators"] = ideal_to_json(ideal);
    emit(out, doc);
  } else if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows(1);
    for (std::size_t k = 1; k <= dim; ++k) rows[0].push_back(variable_label(in.cd.d, in.cd.g, k));
    rows[0].push_back("xi_M");
    for (const auto& g : ideal.generators()) {
      std::vector<std::string> row;
      for (const auto& x : g) row.push_back(to_string(x));
      row.push_back(xi_of(in.cd, table, g).to_string());
      rows.push_back(row);
    }
    print_aligned(out, rows, ", ");
  } else {
    out << "J(" << xi.to_string() << " D) = (";
    for (std::size_t k = 0; k < ideal.generators().size(); ++k) {
      out << (k ? ", " : "") << monomial_label(in.cd.d, in.cd.g, ideal.generators()[k]);
    }
    out << ")\n";
  }
}

void cmd_trop(const Input& in, const Options& opt, const std::string& point_text, std::ostream& out) {
  const QVector w = parse_point(point_text);
  const FanTheta fan = build_fan(in.cd);
  const MembershipResult m = fan_member(fan, w);
  std::optional<Rational> lambda;
  if (m.inside) lambda = lambda_eval(fan, w);
  if (opt.format == "json") {
    Json doc = header();
    doc["point"] = to_json(w);
    doc["inside"] = m.inside;
    doc["cones"] = m.cones;
    doc["lambda"] = lambda ? Json(lambda->to_string()) : Json(nullptr);
    emit(out, doc);
  } else if (opt.format == "csv") {
    std::string cones;
    for (const auto& c : m.cones) cones += (cones.empty() ? "" : " ") + c;
    print_aligned(out, {{"point", "inside", "lambda", "cones"},
                        {csv_quote(to_string(w)), m.inside ? "true" : "false", lambda ? lambda->to_string() : "",
                         csv_quote(cones)}},
                  ", ");
  } else {
    out << to_string(w) << (m.inside ? " lies in " : " lies outside the fan");
    for (std::size_t k = 0; k < m.cones.size(); ++k) out << (k ? ", " : "") << m.cones[k];
    out << '\n';
    if (lambda) out << "Lambda = " << lambda->to_string() << '\n';
  }
}

void cmd_fan(const Input& in, const Options& opt, const std::string& export_path, std::ostream& out) {
  const FanTheta fan = build_fan(in.cd);
  const Json doc = fan_to_json(fan);
  if (!export_path.empty()) {
    std::ofstream file(export_path);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + export_path);
    file << doc.dump(2) << '\n';
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + export_path);
    // the export has to read back into the same fan
    check(fan_from_json(read_json_file(export_path)) == fan, "fan export does not round trip");
  }
  if (opt.format == "json") {
    if (export_path.empty()) emit(out, doc);
    return;
  }
  std::vector<std::vector<std::string>> rows{{"tag", "generators"}};
  for (const auto* group : {&fan.rho, &fan.maximal}) {
    for (const auto& c : *group) {
      std::string gens;
      for (const auto& g : c.generators) gens += (gens.empty() ? "" : " ") + to_string(g);
      rows.push_back({c.tag(), opt.format == "csv" ? csv_quote(gens) : gens});
    }
  }
  print_aligned(out, rows, opt.format == "csv" ? ", " : "  ");
  if (opt.format == "text") {
    for (std::size_t j = 0; j < fan.lambda_forms.size(); ++j) {
      out << "Lambda_" << j + 1 << " = " << to_string(fan.lambda_forms[j]) << '\n';
    }
  }
}

void cmd_membership(const Input& in, const Options& opt, const std::string& poly_path, const std::string& xi_text,
                    std::ostream& out) {
  const Rational xi = Rational::parse(xi_text);
  const Polynomial h = polynomial_from_json(read_json_file(poly_path), in.cd.d);
  const GeneralizedExpansion e = expand(h, semiroots_for(in));
  const DivisorTable table = divisor_table(in.cd);
  const bool member = membership_of_polynomial(in.cd, table, e, xi);
  // the parameter where h leaves the ideal, min over exceptional divisors
  Rational bound;
  bool first = true;
  for (const auto* r : table.exceptional()) {
    QVector base;
    for (std::size_t i = 0; i < in.cd.d; ++i) base.push_back(Rational(r->lattice_vector[i]));
    const QuasiMonomialPoint p{r->level, base, Rational(0)};
    const Rational v = value_on_expansion(in.cd, p, e);
    const Rational ratio = (v + Rational(r->log_discrepancy)) * Rational(1, r->trop.back());
    if (first || ratio < bound) bound = ratio;
    first = false;
  }
  check(member == (xi < bound), "membership disagrees with the divisor bound");
  if (opt.format == "json") {
    Json doc = header();
    doc["xi"] = xi.to_string();
    doc["member"] = member;
    doc["xi_h"] = bound.to_string();
    if (opt.approx) doc["xi_h_approx_nonauthoritative"] = bound.to_decimal();
    Json terms = Json::array();
    for (const auto& t : e.terms) terms.push_back(Json{{"coeff", t.coeff.to_string()}, {"exponent", to_json(t.exponent)}});
    doc["expansion"] = terms;
    emit(out, doc);
  } else if (opt.format == "csv") {
    print_aligned(out, {{"xi", "member", "xi_h"}, {xi.to_string(), member ? "true" : "false", bound.to_string()}},
                  ", ");
  } else {
    out << "h " << (member ? "lies" : "does not lie") << " in J(" << xi.to_string() << " D); it leaves at xi = "
        << bound.to_string() << '\n';
  }
}

}  // namespace

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return kSchemaFailure;
    case ErrorKind::InternalInconsistency:
      return kInternalFailure;
    default:
      return kValidationFailure;
  }
}

unsigned threads_from_env() {
  const char* raw = std::getenv("QOJUMP_THREADS");
  if (!raw || !*raw) return 1;
  const std::string s(raw);
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 4) {
    throw SchemaError("QOJUMP_THREADS must be a positive integer, got '" + s + "'");
  }
  const unsigned n = static_cast<unsigned>(std::stoul(s));
  if (n == 0) throw SchemaError("QOJUMP_THREADS must be positive");
  return n;
}

Json analyze_report(const Input& in, unsigned threads, bool approx, const Rational* xi) {
  const auto& cd = in.cd;
  const DivisorTable table = divisor_table(cd);
  const FanTheta fan = build_fan(cd);
  const JumpingReport report = jumping_numbers(cd, table, threads);
  assert_consistent(cd, table, fan, report);
  Json doc = header();
  doc["chardata"] = chardata_to_json(cd);
  doc["divisors"] = divisors_to_json(table);
  Json diagnostics = Json::array();
  for (const auto& d : table.diagnostics) diagnostics.push_back(d);
  doc["diagnostics"] = diagnostics;
  Json fan_doc = fan_to_json(fan);
  fan_doc.erase("schema");
  doc["fan"] = fan_doc;
  doc["lct"] = report.lct.to_string();
  if (approx) doc["approx_note"] = "xi_approx values are decimal approximations and not authoritative";
  doc["candidates_examined"] = report.candidates_examined;
  doc["jumps"] = jumps_to_json(report, approx);
  if (xi) {
    doc["ideal"] = Json{{"xi", xi->to_string()},
                        {"generators", ideal_to_json(multiplier_ideal_periodic(cd, table, *xi, threads))}};
  }
  return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplier ideals and jumping numbers of quasi-ordinary hypersurfaces", "qojump"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_flag("--approx", opt.approx, "add decimal approximations (not authoritative)");

  std::string input;
  std::string xi_text;
  std::string point_text;
  std::string export_path;
  std::string poly_path;
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "characteristic data or branch JSON")->required();
    return sub;
  };
  auto* analyze = with_input(app.add_subcommand("analyze", "full report"));
  auto* analyze_xi = analyze->add_option("--xi", xi_text, "also report J(xi D)");
  auto* branch = with_input(app.add_subcommand("branch", "characteristic exponents and semi-roots of a branch"));
  auto* jumping = with_input(app.add_subcommand("jumping-numbers", "lct and jumping numbers in (0,1]"));
  auto* ideal = with_input(app.add_subcommand("ideal", "generators of the multiplier ideal"));
  ideal->add_option("--xi", xi_text, "parameter p/q")->required();
  auto* trop = with_input(app.add_subcommand("trop", "membership of a point in the fan and its Lambda value"));
  trop->add_option("--point", point_text, "comma separated coordinates")->required();
  auto* fan = with_input(app.add_subcommand("fan", "the fan and its Lambda forms"));
  fan->add_option("--export", export_path, "write the fan JSON to this path");
  auto* membership = with_input(app.add_subcommand("membership", "membership of a polynomial in J(xi D)"));
  membership->add_option("--poly", poly_path, "polynomial JSON")->required();
  membership->add_option("--xi", xi_text, "parameter p/q")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSchemaFailure;
  }

  try {
    opt.threads = threads_from_env();
    const Json doc = read_json_file(input);
    if (branch->parsed()) {
      cmd_branch(doc, opt, out);
      return kOk;
    }
    const Input in = read_input(doc);
    if (analyze->parsed()) {
      cmd_analyze(in, opt, analyze_xi->count() ? &xi_text : nullptr, out);
    } else if (jumping->parsed()) {
      cmd_jumping(in, opt, out);
    } else if (ideal->parsed()) {
      cmd_ideal(in, opt, xi_text, out);
    } else if (trop->parsed()) {
      cmd_trop(in, opt, point_text, out);
    } else if (fan->parsed()) {
      cmd_fan(in, opt, export_path, out);
    } else if (membership->parsed()) {
      cmd_membership(in, opt, poly_path, xi_text, out);
    }
    return kOk;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kSchemaFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
}

}  // namespace qojump::cli
