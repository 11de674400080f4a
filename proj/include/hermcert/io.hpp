#pragma once

// JSON encodings. Every number that is not a count or an index is written as
// a string: rationals as "p/q" or "p", floating values as decimal text that
// reads back to the same double.

#include "hermcert/applications.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace hermcert {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double value);
// Decimal or "p/q" text to the nearest double.
double parse_double(const std::string& text);

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

// {"rows", "cols", "labels"?, "entries"}; labels need the ring to print.
Json matrix_to_json(const RatMatrix& m, const Ring& ring);
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j, const Ring& ring);

// {"variables": [...], "polynomials": [...]}
Json system_to_json(const PolySystem& system);
PolySystem system_from_json(const Json& j);

// {"accuracy_E", "bound_M", "points": [[[re, im], ...], ...], "radii"?}
Json roots_to_json(const ApproxRootSet& roots);
ApproxRootSet roots_from_json(const Json& j);

std::vector<std::string> monomial_strings(std::span<const Monomial> ms, const Ring& ring);
MonomialBasis basis_from_strings(const std::vector<std::string>& texts, const Ring& ring);

// Matrix JSON plus "variables", "basis", "provenance" and, for matrices of a
// radical built from repeated points, "total_points".
Json hermite_to_json(const HermitePlus& h, const Ring& ring);
HermitePlus hermite_from_json(const Json& j, const Ring& ring);

Json certificate_to_json(const CertificationOutcome& outcome, const Ring& ring);
Json verdict_to_json(const Verdict& verdict, const Ring& ring);

Json read_json_file(const std::string& path);

}  // namespace hermcert
