#pragma once

// JSON and CSV encodings. Rationals are {"num": "...", "den": "..."} with
// decimal strings, integer polynomials are ascending arrays of decimal
// strings, so nothing loses precision.

#include "jm/exactmath.hpp"
#include "jm/moments_asymptotic.hpp"
#include "jm/moments_derived.hpp"
#include "jm/polynomial.hpp"
#include "jm/roots.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace jm {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const IntPolynomial& p);
Json to_json(const MomentFunction& m);
Json to_json(const DerivedMomentFunction& m);
Json to_json(const RealRoot& r);
Json to_json(const ComplexRoot& r);
Json to_json(const RootReport& r);

/// Throws std::invalid_argument on malformed input.
Rational rational_from_json(const Json& j);
IntPolynomial polynomial_from_json(const Json& j);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

} // namespace jm
