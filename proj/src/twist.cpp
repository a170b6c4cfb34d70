#include "svt/twist.hpp"

#include <vector>

#include "svt/errors.hpp"

namespace svt {

TwistContext::TwistContext(long m_, int order_)
    : m(m_), order(order_), xy(build_xy(m_)) {
  X = UeaElement::from_lie(xy.X);
  Y = UeaElement::from_lie(xy.Y);
}

Rational coeff_a(long s, long r, long i, long m) {
  const Rational step(m);
  Rational total(0);
  for (long p = 0; p <= s; ++p) {
    Rational term = m_binomial(Rational(i + m), p, step) *
                    m_binomial(Rational(i + (r - p - 2) * m), r, step) *
                    m_binomial(Rational(i + (r - p + 1) * m), s - p, step);
    if (p & 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

Rational coeff_b(long s, long r, const Rational& k, long m) {
  const Rational step(m);
  Rational total(0);
  for (long p = 0; p <= s; ++p) {
    // shifts: m/2, (r-p-3/2)m, (r-p+1/2)m
    Rational term =
        m_binomial(k + make_rational(m, 2), p, step) *
        m_binomial(k + make_rational((2 * (r - p) - 3) * m, 2), r, step) *
        m_binomial(k + make_rational((2 * (r - p) + 1) * m, 2), s - p, step);
    if (p & 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

namespace {

/// Y^0, Y^1, ..., Y^n.
std::vector<UeaElement> y_powers(const TwistContext& ctx, int n) {
  std::vector<UeaElement> pw;
  pw.reserve(static_cast<std::size_t>(n) + 1);
  pw.push_back(UeaElement::unit());
  for (int r = 1; r <= n; ++r) pw.push_back(pw.back() * ctx.Y);
  return pw;
}

Rational alternating_inv_factorial(long r) {
  Rational c = 1 / factorial(r);
  return (r & 1) ? Rational(-c) : c;
}

}  // namespace

TSeries<TensorElement> twist_Fcal(const Rational& a, const TwistContext& ctx) {
  TSeries<TensorElement> out(ctx.order, TensorElement(2));
  const auto ypw = y_powers(ctx, ctx.order);
  for (int r = 0; r <= ctx.order; ++r) {
    const UeaElement xf = shifted_factorial(ctx.X, a, r, Shift::Falling);
    out.at(r) = outer(xf, ypw[static_cast<std::size_t>(r)]) *
                Scalar(alternating_inv_factorial(r));
  }
  return out;
}

TSeries<TensorElement> twist_F(const Rational& a, const TwistContext& ctx) {
  TSeries<TensorElement> out(ctx.order, TensorElement(2));
  const auto ypw = y_powers(ctx, ctx.order);
  for (int r = 0; r <= ctx.order; ++r) {
    const UeaElement xf = shifted_factorial(ctx.X, a, r, Shift::Rising);
    out.at(r) =
        outer(xf, ypw[static_cast<std::size_t>(r)]) * Scalar(1 / factorial(r));
  }
  return out;
}

TSeries<UeaElement> twist_u(const Rational& a, const TwistContext& ctx) {
  TSeries<UeaElement> out(ctx.order, UeaElement());
  const auto ypw = y_powers(ctx, ctx.order);
  for (int r = 0; r <= ctx.order; ++r) {
    const UeaElement xf =
        shifted_factorial(ctx.X, Rational(-a), r, Shift::Falling);
    out.at(r) = xf * ypw[static_cast<std::size_t>(r)] *
                Scalar(alternating_inv_factorial(r));
  }
  return out;
}

TSeries<UeaElement> twist_v(const Rational& a, const TwistContext& ctx) {
  TSeries<UeaElement> out(ctx.order, UeaElement());
  const auto ypw = y_powers(ctx, ctx.order);
  for (int r = 0; r <= ctx.order; ++r) {
    const UeaElement xf = shifted_factorial(ctx.X, a, r, Shift::Falling);
    out.at(r) =
        xf * ypw[static_cast<std::size_t>(r)] * Scalar(1 / factorial(r));
  }
  return out;
}

namespace {

/// Shared shape of the closed formulas. For L_i the head binomial argument is
/// (r-2)m - i and the tail coefficients are a_s(r, i); for G_k they are
/// (r-3/2)m - k and b_s(r, k).
struct ClosedShape {
  GenKind kind;
  long idx2;
  long m;

  Rational head_binom_arg(long r) const {
    if (kind == GenKind::L) return Rational((r - 2) * m - idx2 / 2);
    return make_rational((2 * r - 3) * m - idx2, 2);
  }
  Rational index_over_m() const { return make_rational(idx2, 2 * m); }
  Rational tail_coeff(long s, long r) const {
    if (kind == GenKind::L) return coeff_a(s, r, idx2 / 2, m);
    return coeff_b(s, r, make_rational(idx2, 2), m);
  }
  Generator shifted_gen(long steps_of_m) const {
    return Generator{kind, idx2 + 2 * steps_of_m * m};
  }
};

}  // namespace

TSeries<TensorElement> delta_closed(Generator g, const TwistContext& ctx) {
  if (g.kind == GenKind::L && (g.index2 % 2) != 0)
    throw Error("closed coproduct takes integer L indices");
  const int N = ctx.order;
  const ClosedShape sh{g.kind, g.index2, ctx.m};
  const auto ypw = y_powers(ctx, N);
  TSeries<TensorElement> out(N, TensorElement(2));

  // sum_r alpha^r [head; r]_m ( g_{-rm} x (1-Yt)^{i/m - r} Y^r t^r )
  for (long r = 0; r <= N; ++r) {
    const Rational mb = m_binomial(sh.head_binom_arg(r), r, Rational(ctx.m));
    if (mb == 0) continue;
    const Scalar c = Scalar::term(mb, static_cast<int>(r));
    const UeaElement left = UeaElement::of_generator(sh.shifted_gen(-r));
    const auto pow = binomial_power(ctx.Y, sh.index_over_m() - r, N);
    const UeaElement& yr = ypw[static_cast<std::size_t>(r)];
    for (int d = 0; d + r <= N; ++d) {
      if (pow.at(d).is_zero()) continue;
      out.at(d + static_cast<int>(r)) += outer(left, pow.at(d) * yr) * c;
    }
  }

  // sum_r (-1)^r sum_{s<=2r} alpha^s c_s (X^{<r>} x (1-Yt)^{-r} g_{(r-s)m} t^r)
  for (long r = 0; r <= N; ++r) {
    const UeaElement xr =
        shifted_factorial(ctx.X, Rational(0), r, Shift::Rising);
    const auto pow = binomial_power(ctx.Y, Rational(-r), N);
    for (long s = 0; s <= 2 * r; ++s) {
      Rational cs = sh.tail_coeff(s, r);
      if (cs == 0) continue;
      if (r & 1) cs = -cs;
      const Scalar c = Scalar::term(cs, static_cast<int>(s));
      const UeaElement right = UeaElement::of_generator(sh.shifted_gen(r - s));
      for (int d = 0; d + r <= N; ++d) {
        if (pow.at(d).is_zero()) continue;
        out.at(d + static_cast<int>(r)) += outer(xr, pow.at(d) * right) * c;
      }
    }
  }
  return out;
}

TSeries<UeaElement> antipode_closed(Generator g, const TwistContext& ctx) {
  if (g.kind == GenKind::L && (g.index2 % 2) != 0)
    throw Error("closed antipode takes integer L indices");
  const int N = ctx.order;
  const ClosedShape sh{g.kind, g.index2, ctx.m};
  const auto ypw = y_powers(ctx, N);

  std::vector<UeaElement> xfall;
  xfall.reserve(static_cast<std::size_t>(N) + 1);
  for (long p = 0; p <= N; ++p)
    xfall.push_back(shifted_factorial(ctx.X, Rational(-sh.index_over_m()), p,
                                      Shift::Falling));

  TSeries<UeaElement> inner(N, UeaElement());
  for (long r = 0; r <= N; ++r) {
    Rational mb = m_binomial(sh.head_binom_arg(r), r, Rational(ctx.m));
    if (mb == 0) continue;
    if (r & 1) mb = -mb;
    // tail coefficients are taken at the index shifted by -rm
    const ClosedShape shifted{sh.kind, sh.idx2 - 2 * r * ctx.m, ctx.m};
    for (long p = 0; r + p <= N; ++p) {
      for (long q = 0; q <= 2 * p; ++q) {
        const Rational cq = shifted.tail_coeff(q, p);
        if (cq == 0) continue;
        const Scalar c = Scalar::term(mb * cq, static_cast<int>(r + q));
        const UeaElement mid = UeaElement::of_generator(
            Generator{sh.kind, sh.idx2 + 2 * (p - r - q) * ctx.m});
        inner.at(static_cast<int>(r + p)) +=
            xfall[static_cast<std::size_t>(p)] * mid *
            ypw[static_cast<std::size_t>(r)] * c;
      }
    }
  }
  const auto prefactor = binomial_power(ctx.Y, Rational(-sh.index_over_m()), N);
  return -(prefactor * inner);
}

TSeries<TensorElement> twisted_delta(const UeaElement& x,
                                     const TwistContext& ctx) {
  const auto fc = twist_Fcal(Rational(0), ctx);
  const auto f = twist_F(Rational(0), ctx);
  const auto mid = TSeries<TensorElement>::constant(ctx.order, coproduct0(x));
  return fc * mid * f;
}

TSeries<UeaElement> twisted_antipode(const UeaElement& x,
                                     const TwistContext& ctx) {
  const auto v = twist_v(Rational(0), ctx);
  const auto u = twist_u(Rational(0), ctx);
  const auto mid = TSeries<UeaElement>::constant(ctx.order, antipode0(x));
  return v * mid * u;
}

namespace {

const TSeries<TensorElement>& delta_of_monomial(const PbwMonomial& u,
                                                const TwistContext& ctx,
                                                DeformedCache& cache) {
  auto it = cache.delta.find(u);
  if (it == cache.delta.end())
    it = cache.delta
             .emplace(u, twisted_delta(UeaElement::from_canonical(u, Scalar(1)),
                                       ctx))
             .first;
  return it->second;
}

const TSeries<UeaElement>& antipode_of_monomial(const PbwMonomial& u,
                                                const TwistContext& ctx,
                                                DeformedCache& cache) {
  auto it = cache.antipode.find(u);
  if (it == cache.antipode.end())
    it = cache.antipode
             .emplace(u, twisted_antipode(
                             UeaElement::from_canonical(u, Scalar(1)), ctx))
             .first;
  return it->second;
}

}  // namespace

TSeries<TensorElement> twisted_delta_cached(const UeaElement& x,
                                            const TwistContext& ctx,
                                            DeformedCache& cache) {
  TSeries<TensorElement> out(ctx.order, TensorElement(2));
  for (const auto& [u, c] : x.terms())
    out += delta_of_monomial(u, ctx, cache) * c;
  return out;
}

TSeries<UeaElement> twisted_antipode_cached(const UeaElement& x,
                                            const TwistContext& ctx,
                                            DeformedCache& cache) {
  TSeries<UeaElement> out(ctx.order, UeaElement());
  for (const auto& [u, c] : x.terms())
    out += antipode_of_monomial(u, ctx, cache) * c;
  return out;
}

TSeries<TensorElement> apply_twisted_delta_leg(const TSeries<TensorElement>& s,
                                               std::size_t leg,
                                               const TwistContext& ctx,
                                               DeformedCache& cache) {
  if (leg > 1) throw LegOutOfRange("deformed coproduct leg must be 0 or 1");
  const int N = s.order();
  TSeries<TensorElement> out(N, TensorElement(3));
  for (int n = 0; n <= N; ++n) {
    for (const auto& [legs, c] : s.at(n).terms()) {
      const auto& d = delta_of_monomial(legs[leg], ctx, cache);
      for (int dd = 0; n + dd <= N; ++dd) {
        for (const auto& [dl, dc] : d.at(dd).terms()) {
          const Legs nl = leg == 0 ? Legs{dl[0], dl[1], legs[1]}
                                   : Legs{legs[0], dl[0], dl[1]};
          out.at(n + dd).add_term(nl, c * dc);
        }
      }
    }
  }
  return out;
}

TSeries<UeaElement> contract_twisted_antipode(const TSeries<TensorElement>& s,
                                              const TwistContext& ctx,
                                              DeformedCache& cache) {
  const int N = s.order();
  TSeries<UeaElement> out(N, UeaElement());
  for (int n = 0; n <= N; ++n) {
    for (const auto& [legs, c] : s.at(n).terms()) {
      const auto& sa = antipode_of_monomial(legs[0], ctx, cache);
      const UeaElement right = UeaElement::from_canonical(legs[1], Scalar(1));
      for (int dd = 0; n + dd <= N; ++dd) {
        if (sa.at(dd).is_zero()) continue;
        out.at(n + dd) += sa.at(dd) * right * c;
      }
    }
  }
  return out;
}

std::pair<TSeries<TensorElement>, TSeries<TensorElement>> mixed_relation_tensor(
    MixedRelation which, const Rational& a, long idx2, const TwistContext& ctx) {
  const int N = ctx.order;
  const auto ypw = y_powers(ctx, N);
  const bool is_l = which == MixedRelation::GenTensorF_L ||
                    which == MixedRelation::FTensorGen_L;
  const GenKind kind = is_l ? GenKind::L : GenKind::G;
  if (kind == GenKind::L && (idx2 % 2) != 0)
    throw UnknownIdentity("L index must be an integer");
  const ClosedShape sh{kind, idx2, ctx.m};
  const UeaElement gen = UeaElement::of_generator(Generator{kind, idx2});

  switch (which) {
    case MixedRelation::GenTensorF_L:
    case MixedRelation::GenTensorF_G: {
      // (g x 1) F_a = sum_s alpha^s [head; s]_m F_{a-i/m+s} (g_{-sm} x Y^s t^s)
      const auto lhs =
          TSeries<TensorElement>::constant(N, outer(gen, UeaElement::unit())) *
          twist_F(a, ctx);
      TSeries<TensorElement> rhs(N, TensorElement(2));
      for (long s = 0; s <= N; ++s) {
        const Rational mb =
            m_binomial(sh.head_binom_arg(s), s, Rational(ctx.m));
        if (mb == 0) continue;
        const Scalar c = Scalar::term(mb, static_cast<int>(s));
        const auto fa = twist_F(a - sh.index_over_m() + s, ctx);
        const auto tail = TSeries<TensorElement>::single(
            N, static_cast<int>(s),
            outer(UeaElement::of_generator(sh.shifted_gen(-s)),
                  ypw[static_cast<std::size_t>(s)]));
        rhs += (fa * tail) * c;
      }
      return {lhs, rhs};
    }
    case MixedRelation::FTensorGen_L:
    case MixedRelation::FTensorGen_G: {
      // (1 x g) F_a = sum_s (-1)^s F_{a+s}
      //               (sum_p alpha^p c_p X_a^{<s>} x g_{(s-p)m} t^s)
      const auto lhs =
          TSeries<TensorElement>::constant(N, outer(UeaElement::unit(), gen)) *
          twist_F(a, ctx);
      TSeries<TensorElement> rhs(N, TensorElement(2));
      for (long s = 0; s <= N; ++s) {
        const UeaElement xs = shifted_factorial(ctx.X, a, s, Shift::Rising);
        TensorElement block(2);
        for (long p = 0; p <= 2 * s; ++p) {
          const Rational cp = sh.tail_coeff(p, s);
          if (cp == 0) continue;
          block += outer(xs, UeaElement::of_generator(sh.shifted_gen(s - p))) *
                   Scalar::term(cp, static_cast<int>(p));
        }
        if (block.is_zero()) continue;
        const auto fa = twist_F(a + s, ctx);
        auto term =
            fa * TSeries<TensorElement>::single(N, static_cast<int>(s), block);
        if (s & 1) term = -term;
        rhs += term;
      }
      return {lhs, rhs};
    }
    default:
      throw UnknownIdentity("not a tensor-valued relation");
  }
}

std::pair<TSeries<UeaElement>, TSeries<UeaElement>> mixed_relation_u(
    MixedRelation which, const Rational& a, long idx2, const TwistContext& ctx) {
  if (which != MixedRelation::GenTimesU_L &&
      which != MixedRelation::GenTimesU_G)
    throw UnknownIdentity("not a U-valued relation");
  const int N = ctx.order;
  const auto ypw = y_powers(ctx, N);
  const GenKind kind =
      which == MixedRelation::GenTimesU_L ? GenKind::L : GenKind::G;
  if (kind == GenKind::L && (idx2 % 2) != 0)
    throw UnknownIdentity("L index must be an integer");
  const ClosedShape sh{kind, idx2, ctx.m};
  const UeaElement gen = UeaElement::of_generator(Generator{kind, idx2});

  // g u_a = u_{a+i/m} sum_{s,p,q} (-1)^s alpha^{s+q} [head; s]_m
  //         c_q(p, i-sm) X_{-a-i/m}^{[p]} g_{(p-s-q)m} Y^s t^{s+p}
  const auto lhs = TSeries<UeaElement>::constant(N, gen) * twist_u(a, ctx);

  std::vector<UeaElement> xfall;
  xfall.reserve(static_cast<std::size_t>(N) + 1);
  for (long p = 0; p <= N; ++p)
    xfall.push_back(shifted_factorial(ctx.X, Rational(-a - sh.index_over_m()),
                                      p, Shift::Falling));

  TSeries<UeaElement> inner(N, UeaElement());
  for (long s = 0; s <= N; ++s) {
    Rational mb = m_binomial(sh.head_binom_arg(s), s, Rational(ctx.m));
    if (mb == 0) continue;
    if (s & 1) mb = -mb;
    const ClosedShape shifted{sh.kind, sh.idx2 - 2 * s * ctx.m, ctx.m};
    for (long p = 0; s + p <= N; ++p) {
      for (long q = 0; q <= 2 * p; ++q) {
        const Rational cq = shifted.tail_coeff(q, p);
        if (cq == 0) continue;
        const Scalar c = Scalar::term(mb * cq, static_cast<int>(s + q));
        const UeaElement mid = UeaElement::of_generator(
            Generator{sh.kind, sh.idx2 + 2 * (p - s - q) * ctx.m});
        inner.at(static_cast<int>(s + p)) +=
            xfall[static_cast<std::size_t>(p)] * mid *
            ypw[static_cast<std::size_t>(s)] * c;
      }
    }
  }
  const auto rhs = twist_u(a + sh.index_over_m(), ctx) * inner;
  return {lhs, rhs};
}

bool noncocommutative_at_degree1(const TwistContext& ctx) {
  if (ctx.order < 1) throw Error("witness needs order >= 1");
  const auto d = delta_closed(gen_L(ctx.m), ctx);
  return !(graded_flip(d.at(1)) == d.at(1));
}

}  // namespace svt
