#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "hamlie/algebra.hpp"
#include "hamlie/bialgebra.hpp"
#include "hamlie/tensor.hpp"

namespace hamlie {

using Json = nlohmann::ordered_json;

/// ["<rational>", ...] in block order.
Json to_json(const Exponent& e);
/// {"n": n, "terms": [{"c": "<rational>", "e": [...]}, ...]}, canonical order.
Json to_json(const BarElement& u);
Json to_json(const HElement& u);
/// {"n": n, "m": m, "terms": [{"c": "<rational>", "e": [[...], ...]}, ...]}.
Json to_json(const TensorElement& v);
/// {"passed": bool, "defect": tensor|null, "witness": element|null, "description": str}.
Json to_json(const CheckReport& r);

/// Compact single-line dump followed by a newline. This is the canonical
/// byte form of every document the library writes.
std::string serialize(const Json& j);

template <class T>
std::string serialize(const T& value)
{
    return serialize(to_json(value));
}

/// Parses JSON text; syntax errors become ParseError.
Json parse_json(std::string_view text);

/// Element documents. Duplicate exponents, zero coefficients, malformed
/// rationals and exponents of the wrong length are ParseErrors whose
/// location names the offending field.
BarElement parse_bar_element(const Json& j);
/// As parse_bar_element, and additionally rejects the exponent 0.
HElement parse_h_element(const Json& j);
/// Tensor documents; any zero slot exponent is rejected.
TensorElement parse_tensor(const Json& j);

/// An element document (no "m" key) or a tensor document.
using Document = std::variant<BarElement, TensorElement>;
Document parse_document(std::string_view text);

/// The ambient n of a parsed document.
std::size_t ambient_n(const Document& d);

} // namespace hamlie
