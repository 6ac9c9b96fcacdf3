#pragma once

#include <gmpxx.h>

#include <string>

#include "quigen/errors.hpp"

namespace quigen {

// Exact scalar. Rationals are arbitrary-precision normalized fractions;
// GF(p) elements are carried as integer representatives in [0, p).
using Scalar = mpq_class;

class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(long p);

  bool is_rationals() const { return p_ == 0; }
  long characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  // canonical representative (normalized fraction, or least nonnegative
  // residue with denominator cleared)
  Scalar reduce(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& x) const;
  bool eq(const Scalar& a, const Scalar& b) const { return is_zero(a - b); }

  Scalar parse(const std::string& text) const;  // "p" or "p/q"
  std::string str(const Scalar& x) const;

  std::string name() const { return p_ == 0 ? "Q" : "GF " + std::to_string(p_); }

 private:
  explicit Field(long p) : p_(p) {}
  long p_;  // 0 marks the rationals
};

}  // namespace quigen
