#pragma once

#include <random>
#include <vector>

#include "svt/pbw.hpp"

namespace svt::testing {

inline Generator random_generator(std::mt19937& rng, long max_index2) {
  std::bernoulli_distribution is_g(0.5);
  if (is_g(rng)) {
    std::uniform_int_distribution<long> k2(-max_index2, max_index2);
    return gen_G2(k2(rng));
  }
  std::uniform_int_distribution<long> i(-max_index2 / 2, max_index2 / 2);
  return gen_L(i(rng));
}

inline std::vector<Generator> random_word(std::mt19937& rng, std::size_t max_len,
                                          long max_index2) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::vector<Generator> w;
  const std::size_t n = len(rng);
  for (std::size_t j = 0; j < n; ++j) w.push_back(random_generator(rng, max_index2));
  return w;
}

inline Rational random_rational(std::mt19937& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> n(-max_num, max_num), d(1, max_den);
  return make_rational(n(rng), d(rng));
}

inline Scalar random_scalar(std::mt19937& rng, int max_deg, long max_num,
                            long max_den) {
  std::uniform_int_distribution<int> nterms(0, 3), pw(0, max_deg);
  Scalar s;
  const int k = nterms(rng);
  for (int j = 0; j < k; ++j)
    s += Scalar::term(random_rational(rng, max_num, max_den), pw(rng));
  return s;
}

inline UeaElement random_uea(std::mt19937& rng, int terms, std::size_t max_len,
                             long max_index2) {
  UeaElement x;
  std::uniform_int_distribution<int> nterms(1, terms);
  const int k = nterms(rng);
  for (int j = 0; j < k; ++j)
    x += normal_order(random_word(rng, max_len, max_index2),
                      Scalar(random_rational(rng, 5, 3)));
  return x;
}

}  // namespace svt::testing
