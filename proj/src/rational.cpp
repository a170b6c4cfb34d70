#include "svt/rational.hpp"

#include "svt/errors.hpp"

namespace svt {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& s) {
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw ParseError("malformed rational: '" + s + "'");
  }
  Rational q(raw);
  mpq_clear(raw);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational factorial(long r) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(r));
  return Rational(f);
}

Rational rat_binomial(const Rational& a, long r) {
  Rational num(1);
  for (long j = 0; j < r; ++j) num *= a - j;
  return num / factorial(r);
}

Rational m_binomial(const Rational& a, long r, const Rational& k) {
  Rational num(1);
  for (long j = 0; j < r; ++j) num *= a - j * k;
  return num / factorial(r);
}

}  // namespace svt
