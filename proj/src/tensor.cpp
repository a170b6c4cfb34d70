#include "svt/tensor.hpp"

#include <array>
#include <cassert>
#include <string>

#include "svt/errors.hpp"

namespace svt {

TensorElement::TensorElement(int rank) : rank_(rank) {
  assert(rank == 2 || rank == 3);
}

TensorElement TensorElement::unit(int rank) {
  TensorElement t(rank);
  t.add_term(Legs(static_cast<std::size_t>(rank)), Scalar(1));
  return t;
}

bool TensorElement::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& [legs, c] = *terms_.begin();
  for (const auto& leg : legs)
    if (!leg.empty()) return false;
  return c.is_one();
}

void TensorElement::add_term(const Legs& legs, const Scalar& c) {
  assert(static_cast<int>(legs.size()) == rank_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(legs, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (rank_ != o.rank_) throw RankMismatch("tensor sum of unequal ranks");
  for (const auto& [legs, c] : o.terms_) add_term(legs, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (rank_ != o.rank_) throw RankMismatch("tensor difference of unequal ranks");
  for (const auto& [legs, c] : o.terms_) add_term(legs, -c);
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement out(rank_);
  for (const auto& [legs, c] : terms_) out.terms_.emplace(legs, -c);
  return out;
}

TensorElement operator*(const TensorElement& x, const Scalar& c) {
  TensorElement out(x.rank_);
  for (const auto& [legs, xc] : x.terms_) out.add_term(legs, xc * c);
  return out;
}

namespace {

/// Distributes the product of per-leg UeaElements over one accumulated sign.
void spread(TensorElement& out, const std::array<UeaElement, 3>& leg, int rank,
            const Scalar& c) {
  Legs legs(static_cast<std::size_t>(rank));
  for (const auto& [m0, c0] : leg[0].terms()) {
    legs[0] = m0;
    for (const auto& [m1, c1] : leg[1].terms()) {
      legs[1] = m1;
      if (rank == 2) {
        out.add_term(legs, c * c0 * c1);
      } else {
        for (const auto& [m2, c2] : leg[2].terms()) {
          legs[2] = m2;
          out.add_term(legs, c * c0 * c1 * c2);
        }
      }
    }
  }
}

PbwMonomial concat(const PbwMonomial& a, const PbwMonomial& b) {
  PbwMonomial w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

TensorElement operator*(const TensorElement& x, const TensorElement& y) {
  if (x.rank_ != y.rank_)
    throw RankMismatch("tensor product of ranks " + std::to_string(x.rank_) +
                       " and " + std::to_string(y.rank_));
  const int n = x.rank_;
  TensorElement out(n);
  for (const auto& [lx, cx] : x.terms_) {
    for (const auto& [ly, cy] : y.terms_) {
      // Each odd leg of y crosses every later odd leg of x.
      int cross = 0;
      for (int j = 0; j < n - 1; ++j)
        if (parity(ly[static_cast<std::size_t>(j)]))
          for (int i = j + 1; i < n; ++i)
            cross += parity(lx[static_cast<std::size_t>(i)]);
      Scalar c = cx * cy;
      if (cross & 1) c = -c;
      std::array<UeaElement, 3> leg;
      for (int i = 0; i < n; ++i)
        leg[static_cast<std::size_t>(i)] =
            normal_order(concat(lx[static_cast<std::size_t>(i)],
                                ly[static_cast<std::size_t>(i)]),
                         Scalar(1));
      spread(out, leg, n, c);
    }
  }
  return out;
}

TensorElement outer(const UeaElement& a, const UeaElement& b) {
  TensorElement out(2);
  Legs legs(2);
  for (const auto& [ma, ca] : a.terms()) {
    legs[0] = ma;
    for (const auto& [mb, cb] : b.terms()) {
      legs[1] = mb;
      out.add_term(legs, ca * cb);
    }
  }
  return out;
}

TensorElement coproduct0(const UeaElement& x) {
  TensorElement out(2);
  for (const auto& [m, c] : x.terms()) {
    TensorElement t = TensorElement::unit(2);
    for (const Generator& g : m) {
      const UeaElement ge = UeaElement::of_generator(g);
      t = t * (outer(ge, UeaElement::unit()) + outer(UeaElement::unit(), ge));
    }
    out += t * c;
  }
  return out;
}

UeaElement mul_legs(const TensorElement& x) {
  if (x.rank() != 2) throw RankMismatch("mul_legs needs rank 2");
  UeaElement out;
  for (const auto& [legs, c] : x.terms())
    out += normal_order(concat(legs[0], legs[1]), c);
  return out;
}

TensorElement pad_unit_left(const TensorElement& x) {
  if (x.rank() != 2) throw RankMismatch("pad_unit_left needs rank 2");
  TensorElement out(3);
  for (const auto& [legs, c] : x.terms())
    out.add_term(Legs{{}, legs[0], legs[1]}, c);
  return out;
}

TensorElement pad_unit_right(const TensorElement& x) {
  if (x.rank() != 2) throw RankMismatch("pad_unit_right needs rank 2");
  TensorElement out(3);
  for (const auto& [legs, c] : x.terms())
    out.add_term(Legs{legs[0], legs[1], {}}, c);
  return out;
}

TensorElement graded_flip(const TensorElement& x) {
  if (x.rank() != 2) throw RankMismatch("graded_flip needs rank 2");
  TensorElement out(2);
  for (const auto& [legs, c] : x.terms()) {
    const bool neg = parity(legs[0]) && parity(legs[1]);
    out.add_term(Legs{legs[1], legs[0]}, neg ? -c : c);
  }
  return out;
}

TensorElement apply_coproduct0_leg(const TensorElement& x, std::size_t leg) {
  if (leg >= static_cast<std::size_t>(x.rank()))
    throw LegOutOfRange("leg " + std::to_string(leg) + " of rank " +
                        std::to_string(x.rank()));
  if (x.rank() != 2) throw RankMismatch("coproduct would exceed rank 3");
  TensorElement out(3);
  for (const auto& [legs, c] : x.terms()) {
    const TensorElement d =
        coproduct0(UeaElement::from_canonical(legs[leg], Scalar(1)));
    for (const auto& [dl, dc] : d.terms()) {
      Legs nl(3);
      if (leg == 0) {
        nl[0] = dl[0];
        nl[1] = dl[1];
        nl[2] = legs[1];
      } else {
        nl[0] = legs[0];
        nl[1] = dl[0];
        nl[2] = dl[1];
      }
      out.add_term(nl, c * dc);
    }
  }
  return out;
}

TensorElement apply_antipode0_leg(const TensorElement& x, std::size_t leg) {
  if (leg >= static_cast<std::size_t>(x.rank()))
    throw LegOutOfRange("leg " + std::to_string(leg) + " of rank " +
                        std::to_string(x.rank()));
  TensorElement out(x.rank());
  for (const auto& [legs, c] : x.terms()) {
    const UeaElement s =
        antipode0(UeaElement::from_canonical(legs[leg], Scalar(1)));
    for (const auto& [sm, sc] : s.terms()) {
      Legs nl(legs);
      nl[leg] = sm;
      out.add_term(nl, c * sc);
    }
  }
  return out;
}

namespace {

/// Keeps only terms whose selected leg is the empty monomial, dropping it.
template <class Sink>
void counit_contract(const TensorElement& x, std::size_t leg, Sink&& sink) {
  if (leg >= static_cast<std::size_t>(x.rank()))
    throw LegOutOfRange("leg " + std::to_string(leg) + " of rank " +
                        std::to_string(x.rank()));
  for (const auto& [legs, c] : x.terms()) {
    if (!legs[leg].empty()) continue;
    Legs rest;
    rest.reserve(legs.size() - 1);
    for (std::size_t i = 0; i < legs.size(); ++i)
      if (i != leg) rest.push_back(legs[i]);
    sink(rest, c);
  }
}

}  // namespace

UeaElement apply_counit0_rank2(const TensorElement& x, std::size_t leg) {
  if (x.rank() != 2) throw RankMismatch("expected rank 2");
  UeaElement out;
  counit_contract(x, leg,
                  [&](const Legs& rest, const Scalar& c) { out.add_term(rest[0], c); });
  return out;
}

TensorElement apply_counit0_rank3(const TensorElement& x, std::size_t leg) {
  if (x.rank() != 3) throw RankMismatch("expected rank 3");
  TensorElement out(2);
  counit_contract(x, leg,
                  [&](const Legs& rest, const Scalar& c) { out.add_term(rest, c); });
  return out;
}

std::variant<UeaElement, TensorElement> apply_leg(const TensorElement& x,
                                                  std::size_t leg, LegMap f) {
  switch (f) {
    case LegMap::Coproduct0:
      return apply_coproduct0_leg(x, leg);
    case LegMap::Antipode0:
      return apply_antipode0_leg(x, leg);
    case LegMap::Counit0:
      if (x.rank() == 2) return apply_counit0_rank2(x, leg);
      return apply_counit0_rank3(x, leg);
    case LegMap::Identity:
      if (leg >= static_cast<std::size_t>(x.rank()))
        throw LegOutOfRange("leg " + std::to_string(leg) + " of rank " +
                            std::to_string(x.rank()));
      return x;
  }
  throw Error("unreachable");
}

}  // namespace svt
