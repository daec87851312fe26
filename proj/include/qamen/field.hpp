#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qamen/error.hpp"

namespace qamen {

/// Exact scalar. Over GF(p) the value is an integer in [0, p); over the
/// rationals it is kept in lowest terms with positive denominator.
using Scalar = mpq_class;

enum class FieldKind { Rationals, Prime };

/// The coefficient field: either Q or GF(p) for a prime p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::int64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::Prime; }
  std::int64_t characteristic() const noexcept { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  /// Maps an arbitrary rational into canonical form for this field.
  Scalar normalize(const Scalar& x) const;
  Scalar from_int(long v) const { return normalize(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string format(const Scalar& x) const;
  Scalar parse(const std::string& text) const;

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return !(a == b); }

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::int64_t p_ = 0;
};

bool is_prime_number(std::int64_t n);

void require_same_field(const Field& a, const Field& b);

}  // namespace qamen
