#include "svt/format.hpp"

#include <vector>

#include "svt/errors.hpp"

namespace svt {

namespace {

struct Piece {
  bool neg = false;
  std::string body;
};

std::string join(const std::vector<Piece>& ps) {
  if (ps.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i == 0)
      out += ps[i].neg ? "-" : "";
    else
      out += ps[i].neg ? " - " : " + ";
    out += ps[i].body;
  }
  return out;
}

std::string rat_text(const Rational& x) {
  std::string s = x.get_num().get_str();
  if (x.get_den() != 1) s += "/" + x.get_den().get_str();
  return s;
}

std::string rat_latex(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  std::string s = sgn(x) < 0 ? "-" : "";
  return s + "\\frac{" + mpz_class(abs(x.get_num())).get_str() + "}{" +
         x.get_den().get_str() + "}";
}

std::string gen_text(const Generator& g, TextStyle style) {
  const std::string name = g.kind == GenKind::L ? "L" : "G";
  if (g.index2 % 2 == 0) {
    const long idx = g.index2 / 2;
    const std::string is = std::to_string(idx);
    if (style == TextStyle::Latex || idx < 0 || idx > 9)
      return name + "_{" + is + "}";
    return name + "_" + is;
  }
  if (style == TextStyle::Latex) {
    const std::string sign = g.index2 < 0 ? "-" : "";
    return name + "_{" + sign + "\\frac{" +
           std::to_string(g.index2 < 0 ? -g.index2 : g.index2) + "}{2}}";
  }
  return name + "_{" + std::to_string(g.index2) + "/2}";
}

std::string alpha_pow(int pow, TextStyle style) {
  const std::string a = style == TextStyle::Latex ? "\\alpha" : "α";
  if (pow == 1) return a;
  if (style == TextStyle::Latex) return a + "^{" + std::to_string(pow) + "}";
  return a + "^" + std::to_string(pow);
}

/// One signed display piece per alpha power.
std::vector<Piece> scalar_pieces(const Scalar& c, TextStyle style) {
  std::vector<Piece> ps;
  for (const auto& [pow, coeff] : c.coefficients()) {
    Piece p;
    p.neg = sgn(coeff) < 0;
    const Rational mag = abs(coeff);
    if (pow == 0) {
      p.body = style == TextStyle::Latex ? rat_latex(mag) : rat_text(mag);
    } else {
      std::string pre;
      if (mag != 1) {
        if (style == TextStyle::Latex)
          pre = rat_latex(mag);
        else
          pre = mag.get_den() == 1 ? rat_text(mag) : "(" + rat_text(mag) + ")";
      }
      p.body = pre + alpha_pow(pow, style);
    }
    ps.push_back(std::move(p));
  }
  return ps;
}

std::string monomial_text(const PbwMonomial& m, TextStyle style) {
  if (m.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < m.size()) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    out += gen_text(m[i], style);
    const std::size_t n = j - i;
    if (n > 1) {
      if (style == TextStyle::Latex)
        out += "^{" + std::to_string(n) + "}";
      else
        out += "^" + std::to_string(n);
    }
    i = j;
  }
  return out;
}

std::string legs_text(const Legs& legs, TextStyle style) {
  const std::string times = style == TextStyle::Latex ? " \\otimes " : "⊗";
  std::string out;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (i) out += times;
    out += monomial_text(legs[i], style);
  }
  return out;
}

/// Combines a coefficient polynomial with a rendered carrier ("L_0",
/// "L_0 x L_1", ...). An empty carrier means the coefficient stands alone.
Piece term_piece(const Scalar& c, const std::string& carrier, TextStyle style) {
  auto ps = scalar_pieces(c, style);
  if (carrier.empty()) {
    if (ps.size() == 1) return ps[0];
    return Piece{false, "(" + join(ps) + ")"};
  }
  if (ps.size() == 1) {
    Piece p = ps[0];
    if (p.body == "1")
      p.body = carrier;
    else
      p.body += carrier;
    return p;
  }
  return Piece{false, "(" + join(ps) + ")" + carrier};
}

std::vector<Piece> uea_pieces(const UeaElement& x, TextStyle style) {
  // Display order is descending lex so primitive parts read as g x 1 + 1 x g.
  std::vector<Piece> ps;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    ps.push_back(term_piece(
        it->second, it->first.empty() ? "" : monomial_text(it->first, style),
        style));
  return ps;
}

std::vector<Piece> tensor_pieces(const TensorElement& x, TextStyle style) {
  std::vector<Piece> ps;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    ps.push_back(term_piece(it->second, legs_text(it->first, style), style));
  return ps;
}

std::string t_pow(int d, TextStyle style) {
  if (d == 1) return "t";
  if (style == TextStyle::Latex) return "t^{" + std::to_string(d) + "}";
  return "t^" + std::to_string(d);
}

template <class SeriesT, class PiecesFn>
std::string series_text(const SeriesT& s, TextStyle style,
                        const PiecesFn& pieces_of) {
  std::vector<Piece> ps;
  for (int d = 0; d <= s.order(); ++d) {
    if (s.at(d).is_zero()) continue;
    auto ps_d = pieces_of(s.at(d), style);
    if (d == 0) {
      ps.insert(ps.end(), ps_d.begin(), ps_d.end());
      continue;
    }
    bool all_neg = true;
    for (const Piece& p : ps_d) all_neg = all_neg && p.neg;
    if (all_neg)
      for (Piece& p : ps_d) p.neg = false;
    ps.push_back(Piece{all_neg, "(" + join(ps_d) + ")" + t_pow(d, style)});
  }
  return join(ps);
}

}  // namespace

std::string to_text(const Rational& x) { return rat_text(x); }

std::string to_text(const Scalar& c, TextStyle style) {
  return join(scalar_pieces(c, style));
}

std::string to_text(const PbwMonomial& m, TextStyle style) {
  return monomial_text(m, style);
}

std::string to_text(const UeaElement& x, TextStyle style) {
  return join(uea_pieces(x, style));
}

std::string to_text(const TensorElement& x, TextStyle style) {
  return join(tensor_pieces(x, style));
}

std::string to_text(const LieElement& x, TextStyle style) {
  return to_text(UeaElement::from_lie(x), style);
}

std::string to_text(const TSeries<UeaElement>& s, TextStyle style) {
  return series_text(
      s, style,
      [](const UeaElement& c, TextStyle st) { return uea_pieces(c, st); });
}

std::string to_text(const TSeries<TensorElement>& s, TextStyle style) {
  return series_text(
      s, style,
      [](const TensorElement& c, TextStyle st) { return tensor_pieces(c, st); });
}

namespace {

using nlohmann::json;

json factor_json(const Generator& g) {
  return json{{"g", g.kind == GenKind::L ? "L" : "G"}, {"i2", g.index2}};
}

json legs_json(const Legs& legs) {
  json out = json::array();
  for (const auto& leg : legs) {
    json jl = json::array();
    for (const Generator& g : leg) jl.push_back(factor_json(g));
    out.push_back(std::move(jl));
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const Scalar& c) {
  json out = json::array();
  for (const auto& [pow, coeff] : c.coefficients())
    out.push_back(json{{"pow", pow},
                       {"num", coeff.get_num().get_str()},
                       {"den", coeff.get_den().get_str()}});
  return out;
}

nlohmann::json to_json(const UeaElement& x) {
  json jt = json::array();
  for (const auto& [m, coeff] : x.terms())
    jt.push_back(json{{"legs", legs_json(Legs{m})}, {"coeff", to_json(coeff)}});
  return json{{"rank", 1}, {"terms", std::move(jt)}};
}

nlohmann::json to_json(const TensorElement& x) {
  json jt = json::array();
  for (const auto& [legs, coeff] : x.terms())
    jt.push_back(json{{"legs", legs_json(legs)}, {"coeff", to_json(coeff)}});
  return json{{"rank", x.rank()}, {"terms", std::move(jt)}};
}

nlohmann::json to_json(const TSeries<UeaElement>& s) {
  json coeffs = json::array();
  for (int d = 0; d <= s.order(); ++d) coeffs.push_back(to_json(s.at(d)));
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json to_json(const TSeries<TensorElement>& s) {
  json coeffs = json::array();
  for (int d = 0; d <= s.order(); ++d) coeffs.push_back(to_json(s.at(d)));
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

namespace {

Scalar scalar_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("coeff must be an array");
  Scalar out;
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("pow") || !t.contains("num") ||
        !t.contains("den"))
      throw ParseError("bad poly term");
    const int pow = t.at("pow").get<int>();
    if (pow < 0) throw ParseError("negative alpha power");
    const Rational c = rational_from_string(
        t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
    out += Scalar::term(c, pow);
  }
  return out;
}

PbwMonomial monomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("leg must be an array");
  PbwMonomial m;
  for (const json& f : j) {
    if (!f.is_object() || !f.contains("g") || !f.contains("i2"))
      throw ParseError("bad factor");
    const std::string kind = f.at("g").get<std::string>();
    const long i2 = f.at("i2").get<long>();
    if (kind == "L")
      m.push_back(Generator{GenKind::L, i2});
    else if (kind == "G")
      m.push_back(gen_G2(i2));
    else
      throw ParseError("factor kind must be L or G");
  }
  if (!is_pbw_canonical(m)) throw ParseError("leg monomial is not canonical");
  return m;
}

template <class AddTerm>
void element_terms_from_json(const json& j, int rank, const AddTerm& add) {
  if (!j.is_object() || !j.contains("terms"))
    throw ParseError("element must have terms");
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("legs") || !t.contains("coeff"))
      throw ParseError("bad element term");
    const json& jl = t.at("legs");
    if (!jl.is_array() || static_cast<int>(jl.size()) != rank)
      throw ParseError("legs arity mismatch");
    Legs legs;
    for (const json& leg : jl) legs.push_back(monomial_from_json(leg));
    add(legs, scalar_from_json(t.at("coeff")));
  }
}

}  // namespace

ParsedSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ParseError("series must have order and coeffs");
  const int order = j.at("order").get<int>();
  const json& coeffs = j.at("coeffs");
  if (order < 0 || !coeffs.is_array() ||
      static_cast<int>(coeffs.size()) != order + 1)
    throw ParseError("series coeffs must have order+1 entries");
  int rank = -1;
  for (const json& c : coeffs) {
    if (!c.is_object() || !c.contains("rank"))
      throw ParseError("element must have rank");
    const int r = c.at("rank").get<int>();
    if (rank == -1) rank = r;
    if (r != rank) throw ParseError("mixed ranks in series");
  }
  if (rank == 1) {
    TSeries<UeaElement> out(order, UeaElement());
    for (int d = 0; d <= order; ++d) {
      UeaElement& e = out.at(d);
      element_terms_from_json(
          coeffs[static_cast<std::size_t>(d)], 1,
          [&](const Legs& legs, const Scalar& c) { e.add_term(legs[0], c); });
    }
    return out;
  }
  if (rank == 2 || rank == 3) {
    TSeries<TensorElement> out(order, TensorElement(rank));
    for (int d = 0; d <= order; ++d) {
      TensorElement& e = out.at(d);
      element_terms_from_json(
          coeffs[static_cast<std::size_t>(d)], rank,
          [&](const Legs& legs, const Scalar& c) { e.add_term(legs, c); });
    }
    return out;
  }
  throw ParseError("rank must be 1, 2 or 3");
}

Scalar specialize_alpha(const Scalar& c, const Rational& value) {
  return Scalar(c.eval(value));
}

UeaElement specialize_alpha(const UeaElement& x, const Rational& value) {
  UeaElement out;
  for (const auto& [m, c] : x.terms()) out.add_term(m, specialize_alpha(c, value));
  return out;
}

TensorElement specialize_alpha(const TensorElement& x, const Rational& value) {
  TensorElement out(x.rank());
  for (const auto& [legs, c] : x.terms())
    out.add_term(legs, specialize_alpha(c, value));
  return out;
}

TSeries<UeaElement> specialize_alpha(const TSeries<UeaElement>& s,
                                     const Rational& value) {
  TSeries<UeaElement> out(s.order(), UeaElement());
  for (int d = 0; d <= s.order(); ++d)
    out.at(d) = specialize_alpha(s.at(d), value);
  return out;
}

TSeries<TensorElement> specialize_alpha(const TSeries<TensorElement>& s,
                                        const Rational& value) {
  TSeries<TensorElement> out(s.order(), s.at(0).zero_like());
  for (int d = 0; d <= s.order(); ++d)
    out.at(d) = specialize_alpha(s.at(d), value);
  return out;
}

}  // namespace svt
