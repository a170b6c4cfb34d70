#include "svt/pbw.hpp"

#include <cassert>
#include <cstddef>
#include <utility>

#include "svt/errors.hpp"

namespace svt {

int parity(const PbwMonomial& m) {
  int odd = 0;
  for (const Generator& g : m) odd += g.parity();
  return odd & 1;
}

bool is_pbw_canonical(const PbwMonomial& m) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i + 1] < m[i]) return false;
    if (m[i] == m[i + 1] && m[i].kind == GenKind::G) return false;
  }
  return true;
}

UeaElement UeaElement::from_scalar(const Scalar& c) {
  UeaElement e;
  e.add_term({}, c);
  return e;
}

UeaElement UeaElement::of_generator(Generator g, const Scalar& c) {
  UeaElement e;
  e.add_term({g}, c);
  return e;
}

UeaElement UeaElement::from_lie(const LieElement& x) {
  UeaElement e;
  for (const auto& [g, c] : x.terms()) e.add_term({g}, c);
  return e;
}

UeaElement UeaElement::from_canonical(PbwMonomial m, const Scalar& c) {
  assert(is_pbw_canonical(m));
  UeaElement e;
  e.add_term(std::move(m), c);
  return e;
}

bool UeaElement::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second.is_one();
}

std::optional<int> UeaElement::homogeneous_parity() const {
  int p = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const int mp = parity(m);
    if (first) {
      p = mp;
      first = false;
    } else if (mp != p) {
      return std::nullopt;
    }
  }
  return p;
}

void UeaElement::add_term(const PbwMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UeaElement& UeaElement::operator+=(const UeaElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UeaElement UeaElement::operator-() const {
  UeaElement out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

UeaElement operator*(const UeaElement& x, const Scalar& c) {
  UeaElement out;
  for (const auto& [m, xc] : x.terms()) out.add_term(m, xc * c);
  return out;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool is_defect(const Generator& u, const Generator& v) {
  if (u == v) return u.kind == GenKind::G;  // odd square
  return v < u;                             // inversion
}

std::size_t find_defect(const PbwMonomial& w, RewriteOrder order) {
  if (w.size() < 2) return kNone;
  if (order == RewriteOrder::LeftmostFirst) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (is_defect(w[i], w[i + 1])) return i;
  } else {
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (is_defect(w[i], w[i + 1])) return i;
  }
  return kNone;
}

void accumulate(std::map<PbwMonomial, Scalar>& into, PbwMonomial w, Scalar c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(std::move(w), std::move(c));
  if (!inserted) it->second += c;  // try_emplace left c intact on failure
}

/// Shared rewriting loop: drains `pending` into canonical form, merging
/// intermediate words so duplicated branches are processed once.
UeaElement normalize(std::map<PbwMonomial, Scalar> pending, RewriteOrder order) {
  UeaElement out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const PbwMonomial& w = node.key();
    const Scalar& c = node.mapped();
    if (c.is_zero()) continue;
    const std::size_t pos = find_defect(w, order);
    if (pos == kNone) {
      out.add_term(w, c);
      continue;
    }
    const Generator u = w[pos], v = w[pos + 1];
    if (u == v) {
      // G_k G_k = L_{2k}
      PbwMonomial shorter(w);
      shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(pos + 1));
      shorter[pos] = Generator{GenKind::L, 2 * u.index2};
      accumulate(pending, std::move(shorter), c);
      continue;
    }
    // u v = (-1)^{[u][v]} v u + [u, v]
    PbwMonomial swapped(w);
    std::swap(swapped[pos], swapped[pos + 1]);
    accumulate(pending, std::move(swapped),
               (u.parity() && v.parity()) ? -c : c);
    const LieElement br = bracket(u, v);
    for (const auto& [g, bc] : br.terms()) {
      PbwMonomial contracted(w);
      contracted.erase(contracted.begin() + static_cast<std::ptrdiff_t>(pos + 1));
      contracted[pos] = g;
      accumulate(pending, std::move(contracted), c * bc);
    }
  }
  return out;
}

}  // namespace

UeaElement normal_order(const std::vector<Generator>& word, const Scalar& coeff,
                        RewriteOrder order) {
  if (coeff.is_zero()) return {};
  std::map<PbwMonomial, Scalar> pending;
  pending.emplace(word, coeff);
  return normalize(std::move(pending), order);
}

UeaElement operator*(const UeaElement& x, const UeaElement& y) {
  std::map<PbwMonomial, Scalar> pending;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      Scalar c = cx * cy;
      if (c.is_zero()) continue;
      PbwMonomial w;
      w.reserve(mx.size() + my.size());
      w.insert(w.end(), mx.begin(), mx.end());
      w.insert(w.end(), my.begin(), my.end());
      accumulate(pending, std::move(w), std::move(c));
    }
  return normalize(std::move(pending), RewriteOrder::LeftmostFirst);
}

UeaElement uea_pow(const UeaElement& x, long r) {
  UeaElement acc = UeaElement::unit();
  for (long j = 0; j < r; ++j) acc = acc * x;
  return acc;
}

UeaElement shifted_factorial(const UeaElement& e, const Rational& a, long r,
                             Shift dir) {
  UeaElement acc = UeaElement::unit();
  for (long j = 0; j < r; ++j) {
    Rational shift = dir == Shift::Rising ? Rational(a + j) : Rational(a - j);
    acc = acc * (e + UeaElement::from_scalar(Scalar(shift)));
  }
  return acc;
}

UeaElement antipode0(const UeaElement& x) {
  UeaElement out;
  for (const auto& [m, c] : x.terms()) {
    const long n = static_cast<long>(m.size());
    long odd = 0;
    for (const Generator& g : m) odd += g.parity();
    // S0(g_1...g_n) = (-1)^{n + C(odd,2)} g_n...g_1, from iterating the sign rule.
    const bool neg = ((n + odd * (odd - 1) / 2) % 2) != 0;
    PbwMonomial rev(m.rbegin(), m.rend());
    out += normal_order(rev, neg ? -c : c);
  }
  return out;
}

Scalar counit0(const UeaElement& x) {
  auto it = x.terms().find(PbwMonomial{});
  return it == x.terms().end() ? Scalar() : it->second;
}

}  // namespace svt
