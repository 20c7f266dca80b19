#pragma once

#include "qrook/laurent_poly.hpp"
#include "qrook/partition.hpp"
#include "qrook/rational_fn.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace qrook {

/// Polynomial text: terms in decreasing exponent order, "q^3 + 2*q + 1",
/// "q^-2"; the zero polynomial renders as "0".
std::string to_string(const LaurentPoly& p);

/// Parses the grammar produced by to_string (whitespace insensitive).
/// \throws std::invalid_argument naming the offending token.
LaurentPoly parse_laurent(std::string_view text);

/// Rational functions render as the plain polynomial text when den == 1
/// and as "(num)/(den)" otherwise.
std::string to_string(const RationalFn& f);
RationalFn parse_rational_fn(std::string_view text);

/// Partition text: comma-separated parts "4,3,3"; the empty partition
/// renders as "-".
std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);

/// JSON form of a Laurent polynomial: {"exp": coeff} with string keys.
/// Coefficients that fit in 64 bits are emitted as JSON numbers; larger
/// ones as decimal strings.  The parser accepts both.
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

} // namespace qrook
