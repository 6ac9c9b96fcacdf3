#include "quigen/field.hpp"

namespace quigen {

Field Field::prime(long p) {
  if (p < 2) throw Error("field characteristic must be a prime >= 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::reduce(const Scalar& x) const {
  Scalar y = x;
  y.canonicalize();
  if (p_ == 0) return y;
  mpz_class den = y.get_den();
  mpz_class num = y.get_num();
  mpz_class p(static_cast<long>(p_));
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error("denominator divisible by field characteristic");
  mpz_class r = (num * dinv) % p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  Scalar x = reduce(a);
  if (is_zero(x)) throw Error("division by zero");
  if (p_ == 0) return Scalar(1) / x;
  mpz_class v = x.get_num(), p(static_cast<long>(p_)), r;
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

bool Field::is_zero(const Scalar& x) const {
  if (p_ == 0) return sgn(x) == 0;
  return sgn(reduce(x)) == 0;
}

Scalar Field::parse(const std::string& text) const {
  try {
    Scalar x(text);
    return reduce(x);
  } catch (const std::invalid_argument&) {
    throw Error("bad scalar literal '" + text + "'");
  }
}

std::string Field::str(const Scalar& x) const { return reduce(x).get_str(); }

}  // namespace quigen
