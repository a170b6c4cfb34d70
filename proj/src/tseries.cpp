#include "svt/tseries.hpp"

namespace svt {

namespace {

TSeries<TensorElement> map_tensor(const TSeries<TensorElement>& s,
                                  TensorElement (*fn)(const TensorElement&,
                                                      std::size_t),
                                  std::size_t leg) {
  TSeries<TensorElement> out(s.order(), fn(s.at(0), leg).zero_like());
  for (int d = 0; d <= s.order(); ++d) out.at(d) = fn(s.at(d), leg);
  return out;
}

}  // namespace

TSeries<TensorElement> series_apply_coproduct0(const TSeries<TensorElement>& s,
                                               std::size_t leg) {
  return map_tensor(s, &apply_coproduct0_leg, leg);
}

TSeries<TensorElement> series_apply_antipode0(const TSeries<TensorElement>& s,
                                              std::size_t leg) {
  return map_tensor(s, &apply_antipode0_leg, leg);
}

TSeries<UeaElement> series_apply_counit0_rank2(const TSeries<TensorElement>& s,
                                               std::size_t leg) {
  TSeries<UeaElement> out(s.order(), UeaElement());
  for (int d = 0; d <= s.order(); ++d) out.at(d) = apply_counit0_rank2(s.at(d), leg);
  return out;
}

TSeries<TensorElement> series_apply_counit0_rank3(const TSeries<TensorElement>& s,
                                                  std::size_t leg) {
  return map_tensor(s, &apply_counit0_rank3, leg);
}

std::variant<TSeries<UeaElement>, TSeries<TensorElement>> series_apply_leg(
    const TSeries<TensorElement>& s, std::size_t leg, LegMap f) {
  switch (f) {
    case LegMap::Coproduct0:
      return series_apply_coproduct0(s, leg);
    case LegMap::Antipode0:
      return series_apply_antipode0(s, leg);
    case LegMap::Counit0:
      if (s.at(0).rank() == 2) return series_apply_counit0_rank2(s, leg);
      return series_apply_counit0_rank3(s, leg);
    case LegMap::Identity:
      return s;
  }
  throw Error("unreachable");
}

TSeries<TensorElement> series_pad_unit_left(const TSeries<TensorElement>& s) {
  TSeries<TensorElement> out(s.order(), TensorElement(3));
  for (int d = 0; d <= s.order(); ++d) out.at(d) = pad_unit_left(s.at(d));
  return out;
}

TSeries<TensorElement> series_pad_unit_right(const TSeries<TensorElement>& s) {
  TSeries<TensorElement> out(s.order(), TensorElement(3));
  for (int d = 0; d <= s.order(); ++d) out.at(d) = pad_unit_right(s.at(d));
  return out;
}

TSeries<UeaElement> series_mul_legs(const TSeries<TensorElement>& s) {
  TSeries<UeaElement> out(s.order(), UeaElement());
  for (int d = 0; d <= s.order(); ++d) out.at(d) = mul_legs(s.at(d));
  return out;
}

TSeries<TensorElement> series_graded_flip(const TSeries<TensorElement>& s) {
  TSeries<TensorElement> out(s.order(), TensorElement(2));
  for (int d = 0; d <= s.order(); ++d) out.at(d) = graded_flip(s.at(d));
  return out;
}

}  // namespace svt
