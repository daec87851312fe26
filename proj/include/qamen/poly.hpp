#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qamen/matrix.hpp"

namespace qamen {

/// Univariate polynomial over an exact field, coefficients lowest degree
/// first. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field field) : field_(field) {}
  Poly(Field field, std::vector<Scalar> coeffs);

  static Poly from_ints(Field field, std::initializer_list<long> coeffs);
  static Poly monomial(Field field, std::size_t degree, const Scalar& c = Scalar(1));
  static Poly constant(Field field, const Scalar& c) { return monomial(field, 0, c); }
  /// x - c
  static Poly linear(Field field, const Scalar& c);

  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Poly scaled(const Scalar& s) const;
  Poly pow(unsigned n) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const { return divmod(o).second; }
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  /// p(A) by Horner's rule; A square.
  Matrix evaluate(const Matrix& a) const;

  std::string to_string(const std::string& var = "x") const;
  /// Coefficients formatted as scalar strings, lowest degree first.
  std::vector<std::string> coefficient_strings() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Degree first, then coefficients lexicographically from the constant term.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void trim();

  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Companion matrix: ones on the subdiagonal, last column holds the negated
/// lower coefficients. Its characteristic polynomial is p.
Matrix companion(const Poly& p);

struct PolyFactor {
  Poly factor;
  int exponent;
  friend bool operator==(const PolyFactor& a, const PolyFactor& b) {
    return a.factor == b.factor && a.exponent == b.exponent;
  }
};

/// Factorization of a monic polynomial over GF(p) into monic irreducibles,
/// sorted by degree then coefficients. Throws UnsupportedField over Q.
std::vector<PolyFactor> factor_monic(const Poly& p);

/// Yun decomposition f = prod g_k^k of a monic f into squarefree, pairwise
/// coprime g_k (any field; p-th roots handled over GF(p)).
std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& monic_f);
/// Irreducibility over a prime field. Throws UnsupportedField over Q.
bool is_irreducible(const Poly& p);

}  // namespace qamen
