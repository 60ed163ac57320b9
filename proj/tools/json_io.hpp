#pragma once

// JSON encodings of matrices, classes, certificates and rationals for the CLI.

#include <json.hpp>

#include <string>
#include <string_view>

#include "malcolmson/matrix.hpp"
#include "malcolmson/modules.hpp"
#include "malcolmson/rational.hpp"
#include "malcolmson/ring.hpp"
#include "malcolmson/semigroup.hpp"
#include "malcolmson/states.hpp"

namespace malcolmson::io {

using json = nlohmann::json;

/// Throws ParseError on malformed text.
json parse_json(std::string_view text);

/// Array of rows; entries are strings parsed by the ring, or integers.
Matrix matrix_from_json(const Ring& ring, const json& j);
json matrix_to_json(const Ring& ring, const Matrix& a);

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

MonoidElement monoid_from_json(const Ring& ring, const json& j);
json monoid_to_json(const MonoidElement& a);

/// A matrix literal (array of arrays) is reduced to its class; a flat array
/// is read as class coordinates.
MonoidElement monoid_operand(const Ring& ring, const json& j);

Exponents exponents_from_json(const json& j);

json certificate_to_json(const Ring& ring, const Certificate& cert);
Certificate certificate_from_json(const Ring& ring, const json& j);

json signature_to_json(const ModuleSignature& s);

/// {"generators": m, "relations": [[...]]}
Presentation presentation_from_json(const Ring& ring, const json& j);
json presentation_to_json(const Ring& ring, const Presentation& p);

json group_to_json(const GroupElement& g);

}  // namespace malcolmson::io
