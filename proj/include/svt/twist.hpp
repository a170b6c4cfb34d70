#pragma once

#include <map>
#include <utility>

#include "svt/tensor.hpp"
#include "svt/tseries.hpp"

namespace svt {

/// Fixed deformation data: the integer m, the pair (X, Y), and the t-order.
/// X and Y are held both as Lie elements and as enveloping-algebra elements.
struct TwistContext {
  long m;
  int order;
  XYPair xy;
  UeaElement X;
  UeaElement Y;

  TwistContext(long m_, int order_);
};

/// Coefficient a_s(r, i): alternating sum over p <= s of triple stepped
/// binomials [i+m; p]_m [i+(r-p-2)m; r]_m [i+(r-p+1)m; s-p]_m. Vanishes for
/// s > 2r.
Rational coeff_a(long s, long r, long i, long m);

/// Half-integer analogue b_s(r, k) with shifts m/2, (r-p-3/2)m, (r-p+1/2)m.
Rational coeff_b(long s, long r, const Rational& k, long m);

/// The four twist element families, truncated at ctx.order:
///   Fcal_a = sum_r ((-1)^r/r!) X_a^{[r]} x Y^r t^r
///   F_a    = sum_r (1/r!)     X_a^{<r>} x Y^r t^r
///   u_a    = sum_r ((-1)^r/r!) X_{-a}^{[r]} Y^r t^r
///   v_a    = sum_r (1/r!)     X_a^{[r]} Y^r t^r
TSeries<TensorElement> twist_Fcal(const Rational& a, const TwistContext& ctx);
TSeries<TensorElement> twist_F(const Rational& a, const TwistContext& ctx);
TSeries<UeaElement> twist_u(const Rational& a, const TwistContext& ctx);
TSeries<UeaElement> twist_v(const Rational& a, const TwistContext& ctx);

/// Closed-form deformed coproduct of a generator, fully PBW-normalized.
TSeries<TensorElement> delta_closed(Generator g, const TwistContext& ctx);

/// Closed-form deformed antipode of a generator.
TSeries<UeaElement> antipode_closed(Generator g, const TwistContext& ctx);

/// Conjugation route: Fcal_0 Delta0(x) F_0.
TSeries<TensorElement> twisted_delta(const UeaElement& x, const TwistContext& ctx);

/// Conjugation route: v_0 S0(x) u_0.
TSeries<UeaElement> twisted_antipode(const UeaElement& x, const TwistContext& ctx);

/// Memo for monomial-level deformed maps; owned by callers, safe to reuse
/// for a fixed (m, order).
struct DeformedCache {
  std::map<PbwMonomial, TSeries<TensorElement>> delta;
  std::map<PbwMonomial, TSeries<UeaElement>> antipode;
};

TSeries<TensorElement> twisted_delta_cached(const UeaElement& x,
                                            const TwistContext& ctx,
                                            DeformedCache& cache);
TSeries<UeaElement> twisted_antipode_cached(const UeaElement& x,
                                            const TwistContext& ctx,
                                            DeformedCache& cache);

/// Applies the deformed coproduct to one leg of a rank-2 tensor series,
/// composing t-degrees (the map is even, so no Koszul sign).
TSeries<TensorElement> apply_twisted_delta_leg(const TSeries<TensorElement>& s,
                                               std::size_t leg,
                                               const TwistContext& ctx,
                                               DeformedCache& cache);

/// mu (S~ x Id) applied to a rank-2 tensor series.
TSeries<UeaElement> contract_twisted_antipode(const TSeries<TensorElement>& s,
                                              const TwistContext& ctx,
                                              DeformedCache& cache);

/// Single-generator mixing relations between generators and the twist
/// elements; each evaluator returns (lhs, rhs) computed by independent
/// routes, lhs by direct series multiplication and rhs by the closed formula.
enum class MixedRelation {
  GenTensorF_L,  // (L_i x 1) F_a
  GenTensorF_G,  // (G_k x 1) F_a
  FTensorGen_L,  // (1 x L_i) F_a
  FTensorGen_G,  // (1 x G_k) F_a
  GenTimesU_L,   // L_i u_a
  GenTimesU_G,   // G_k u_a
};

/// Tensor-valued relations (the first four). idx2 is the doubled index.
std::pair<TSeries<TensorElement>, TSeries<TensorElement>> mixed_relation_tensor(
    MixedRelation which, const Rational& a, long idx2, const TwistContext& ctx);

/// U-valued relations (the last two).
std::pair<TSeries<UeaElement>, TSeries<UeaElement>> mixed_relation_u(
    MixedRelation which, const Rational& a, long idx2, const TwistContext& ctx);

/// True when the graded flip of delta_closed(L_m) differs from it at t-degree
/// 1 (the noncocommutativity witness).
bool noncocommutative_at_degree1(const TwistContext& ctx);

}  // namespace svt
