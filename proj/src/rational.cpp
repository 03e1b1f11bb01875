#include "hurwitz/rational.hpp"

namespace hurwitz {

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt pow2(unsigned n) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n);
  return p;
}

Rational pow2_rational(long e) {
  if (e >= 0) return Rational(pow2(static_cast<unsigned>(e)));
  return Rational(1, pow2(static_cast<unsigned>(-e)));
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace hurwitz
