#include "hermcert/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hermcert {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  if (text.find('/') != std::string::npos) return to_double(parse_rational(text));
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) throw FormatError("not a decimal number: \"" + text + "\"");
  return value;
}

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw FormatError("expected a rational string, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw FormatError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw FormatError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Complex complex_from_json(const Json& j) {
  if (j.is_string()) return {parse_double(j.get<std::string>()), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return {parse_double(j[0].get<std::string>()), parse_double(j[1].get<std::string>())};
  throw FormatError("coordinate must be \"re\" or [\"re\", \"im\"], got " + j.dump());
}

}  // namespace

Json matrix_to_json(const RatMatrix& m, const Ring& ring) {
  Json out = Json::object();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  if (m.has_labels()) out["labels"] = monomial_strings(m.labels(), ring);
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& v : m.row(i)) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

Json matrix_to_json(const RatMatrix& m) {
  RatMatrix unlabeled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) unlabeled(i, j) = m(i, j);
  return matrix_to_json(unlabeled, Ring{});
}

RatMatrix matrix_from_json(const Json& j, const Ring& ring) {
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) throw FormatError("entries must have one array per row");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols)
      throw FormatError("row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(entries[i][c]);
  }
  if (j.contains("labels")) {
    std::vector<Monomial> labels;
    for (const auto& t : string_list(j.at("labels"), "labels")) labels.push_back(parse_monomial(t, ring));
    m.set_labels(std::move(labels));
  }
  return m;
}

Json system_to_json(const PolySystem& system) {
  Json out = Json::object();
  out["variables"] = system.ring.names();
  Json polys = Json::array();
  for (const auto& p : system.polys) polys.push_back(to_string(p));
  out["polynomials"] = std::move(polys);
  return out;
}

PolySystem system_from_json(const Json& j) {
  PolySystem out{Ring(string_list(field(j, "variables"), "variables")), {}};
  for (const auto& t : string_list(field(j, "polynomials"), "polynomials"))
    out.polys.push_back(parse_poly(t, out.ring));
  return out;
}

Json roots_to_json(const ApproxRootSet& roots) {
  Json out = Json::object();
  out["accuracy_E"] = to_string(roots.accuracy());
  out["bound_M"] = to_string(roots.bound());
  Json points = Json::array();
  for (const auto& p : roots.points()) {
    Json coords = Json::array();
    for (const auto& c : p) coords.push_back(Json::array({format_double(c.real()), format_double(c.imag())}));
    points.push_back(std::move(coords));
  }
  out["points"] = std::move(points);
  if (!roots.radii().empty()) {
    Json radii = Json::array();
    for (double r : roots.radii()) radii.push_back(format_double(r));
    out["radii"] = std::move(radii);
  }
  return out;
}

ApproxRootSet roots_from_json(const Json& j) {
  const Rational e = rational_from_json(field(j, "accuracy_E"));
  const Rational m = rational_from_json(field(j, "bound_M"));
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw FormatError("points must be an array");
  std::vector<ComplexPoint> points;
  for (const auto& p : pts) {
    if (!p.is_array()) throw FormatError("each point must be an array of coordinates");
    ComplexPoint z;
    for (const auto& c : p) z.push_back(complex_from_json(c));
    points.push_back(std::move(z));
  }
  std::vector<double> radii;
  if (j.contains("radii"))
    for (const auto& t : string_list(j.at("radii"), "radii")) radii.push_back(parse_double(t));
  return ApproxRootSet(std::move(points), e, m, std::move(radii));
}

std::vector<std::string> monomial_strings(std::span<const Monomial> ms, const Ring& ring) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m, ring));
  return out;
}

MonomialBasis basis_from_strings(const std::vector<std::string>& texts, const Ring& ring) {
  std::vector<Monomial> ms;
  for (const auto& t : texts) ms.push_back(parse_monomial(t, ring));
  return MonomialBasis(std::move(ms));
}

Json hermite_to_json(const HermitePlus& h, const Ring& ring) {
  Json out = matrix_to_json(h.matrix, ring);
  out["variables"] = ring.names();
  out["basis"] = monomial_strings(h.basis.monomials(), ring);
  if (h.provenance) {
    Json prov = Json::object();
    prov["E"] = to_string(h.provenance->accuracy);
    prov["M"] = to_string(h.provenance->bound);
    prov["k"] = h.provenance->points;
    prov["n"] = h.provenance->variables;
    Json bounds = Json::object();
    for (const auto& [m, b] : h.provenance->denominator_bounds) bounds[to_string(m, ring)] = to_string(b);
    prov["denominator_bounds"] = std::move(bounds);
    out["provenance"] = std::move(prov);
  }
  if (h.total_points) out["total_points"] = *h.total_points;
  return out;
}

HermitePlus hermite_from_json(const Json& j, const Ring& ring) {
  if (j.contains("variables") && string_list(j.at("variables"), "variables") != ring.names())
    throw FormatError("Hermite matrix variables do not match the system");
  MonomialBasis basis = basis_from_strings(string_list(field(j, "basis"), "basis"), ring);
  HermitePlus h = make_hermite_plus(std::move(basis), matrix_from_json(j, ring));
  if (j.contains("provenance")) {
    const Json& p = j.at("provenance");
    ReconstructionProvenance prov;
    prov.accuracy = rational_from_json(field(p, "E"));
    prov.bound = rational_from_json(field(p, "M"));
    prov.points = count_field(p, "k");
    if (p.contains("n")) prov.variables = count_field(p, "n");
    if (p.contains("denominator_bounds"))
      for (const auto& [key, value] : p.at("denominator_bounds").items())
        prov.denominator_bounds.emplace_back(parse_monomial(key, ring), Integer(value.get<std::string>()));
    h.provenance = std::move(prov);
  }
  if (j.contains("total_points")) h.total_points = count_field(j, "total_points");
  return h;
}

Json certificate_to_json(const CertificationOutcome& outcome, const Ring& ring) {
  Json out = Json::object();
  out["status"] = outcome.certified() ? "certified" : "fail";
  if (outcome.failure) {
    out["failed_step"] = outcome.failure->step;
    out["reason"] = outcome.failure->reason;
    out["detail"] = outcome.failure->detail;
  }
  if (outcome.certified()) {
    out["H1"] = matrix_to_json(*outcome.h1);
    out["Hg"] = matrix_to_json(*outcome.hg);
    Json mults = Json::array();
    for (const auto& m : outcome.mult_matrices) mults.push_back(matrix_to_json(m));
    out["mult_matrices"] = std::move(mults);
    out["signatures"] = {{"H1", certified_signature(*outcome.h1)}, {"Hg", certified_signature(*outcome.hg)}};
    if (outcome.weighted_h1) {
      out["weighted_H1"] = matrix_to_json(*outcome.weighted_h1);
      out["weighted_Hg"] = matrix_to_json(*outcome.weighted_hg);
    }
  }
  out["basis"] = monomial_strings(outcome.basis.monomials(), ring);
  out["diagnostics"] = outcome.diagnostics;
  return out;
}

Json verdict_to_json(const Verdict& verdict, const Ring& ring) {
  Json out = Json::object();
  out["verdict"] = to_string(verdict.kind);
  if (verdict.sigma_h1) out["sigma_H1"] = *verdict.sigma_h1;
  if (verdict.sigma_hg) out["sigma_Hg"] = *verdict.sigma_hg;
  if (verdict.sigma_hg2) out["sigma_Hg2"] = *verdict.sigma_hg2;
  if (verdict.hg2) out["Hg2"] = matrix_to_json(*verdict.hg2);
  if (!verdict.assumptions.empty()) out["assumptions"] = verdict.assumptions;
  out["certificate"] = certificate_to_json(verdict.certificate, ring);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace hermcert
