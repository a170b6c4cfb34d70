#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "svt/tseries.hpp"

namespace svt {

enum class TextStyle { Plain, Latex };

std::string to_text(const Rational& x);
std::string to_text(const Scalar& c, TextStyle style = TextStyle::Plain);
std::string to_text(const PbwMonomial& m, TextStyle style = TextStyle::Plain);
std::string to_text(const UeaElement& x, TextStyle style = TextStyle::Plain);
std::string to_text(const TensorElement& x, TextStyle style = TextStyle::Plain);
std::string to_text(const LieElement& x, TextStyle style = TextStyle::Plain);
std::string to_text(const TSeries<UeaElement>& s, TextStyle style = TextStyle::Plain);
std::string to_text(const TSeries<TensorElement>& s,
                    TextStyle style = TextStyle::Plain);

/// Canonical JSON: a polynomial is [{"pow", "num", "den"}...] ascending by
/// pow with base-10 big-integer strings; an element is {"rank", "terms":
/// [{"legs", "coeff"}...]} with terms sorted lexicographically by legs; a
/// series is {"order", "coeffs"} with all order+1 coefficients explicit.
/// U(L)-valued series use rank 1.
nlohmann::json to_json(const Scalar& c);
nlohmann::json to_json(const UeaElement& x);
nlohmann::json to_json(const TensorElement& x);
nlohmann::json to_json(const TSeries<UeaElement>& s);
nlohmann::json to_json(const TSeries<TensorElement>& s);

using ParsedSeries = std::variant<TSeries<UeaElement>, TSeries<TensorElement>>;

/// Strict inverse of to_json on series; throws ParseError on malformed input
/// or non-canonical monomials.
ParsedSeries series_from_json(const nlohmann::json& j);

/// Substitutes alpha := value throughout.
Scalar specialize_alpha(const Scalar& c, const Rational& value);
UeaElement specialize_alpha(const UeaElement& x, const Rational& value);
TensorElement specialize_alpha(const TensorElement& x, const Rational& value);
TSeries<UeaElement> specialize_alpha(const TSeries<UeaElement>& s,
                                     const Rational& value);
TSeries<TensorElement> specialize_alpha(const TSeries<TensorElement>& s,
                                        const Rational& value);

}  // namespace svt
