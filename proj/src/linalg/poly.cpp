#include "qamen/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qamen {

Poly::Poly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.normalize(c);
  trim();
}

Poly Poly::from_ints(Field field, std::initializer_list<long> coeffs) {
  std::vector<Scalar> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(field, std::move(c));
}

Poly Poly::monomial(Field field, std::size_t degree, const Scalar& c) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::linear(Field field, const Scalar& c) {
  return Poly(field, {field.neg(field.normalize(c)), Scalar(1)});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(field_.mul(field_.from_int(static_cast<long>(i)), coeffs_[i]));
  return Poly(field_, std::move(d));
}

Poly Poly::scaled(const Scalar& s) const {
  std::vector<Scalar> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.mul(coeffs_[i], s);
  return Poly(field_, std::move(c));
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(field_, Scalar(1));
  Poly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(field_, o.field_);
  std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.add(coeff(i), o.coeff(i));
  Poly r(field_);
  r.coeffs_ = std::move(c);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  require_same_field(field_, o.field_);
  std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.sub(coeff(i), o.coeff(i));
  Poly r(field_);
  r.coeffs_ = std::move(c);
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_field(field_, o.field_);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = field_.add(c[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  }
  Poly r(field_);
  r.coeffs_ = std::move(c);
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  require_same_field(field_, divisor.field_);
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidInput, "polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly(field_), *this};
  std::vector<Scalar> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<Scalar> quot(rem.size() - dd);
  Scalar lead_inv = field_.inv(divisor.leading());
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    Scalar q = field_.mul(rem[k], lead_inv);
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[k - dd + j] = field_.sub(rem[k - dd + j], field_.mul(q, divisor.coeffs_[j]));
  }
  rem.resize(dd);
  Poly q(field_), r(field_);
  q.coeffs_ = std::move(quot);
  q.trim();
  r.coeffs_ = std::move(rem);
  r.trim();
  return {q, r};
}

Matrix Poly::evaluate(const Matrix& a) const {
  if (a.rows() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "evaluate at non-square matrix");
  const std::size_t n = a.rows();
  Matrix acc(a.field(), n, n);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc.set_raw(i, i, field_.add(acc(i, i), coeffs_[k]));
  }
  return acc;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = (c == 1);
    if (k == 0 || !unit) os << field_.format(c);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::vector<std::string> Poly::coefficient_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(field_.format(c));
  return out;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Matrix companion(const Poly& p) {
  if (!p.is_monic()) throw Error(ErrorCode::NotMonic, p.to_string());
  if (p.degree() < 1) throw Error(ErrorCode::NotMonic, "companion of a constant");
  const Field& f = p.field();
  const std::size_t n = static_cast<std::size_t>(p.degree());
  Matrix c(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c.set_raw(i + 1, i, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) c.set_raw(i, n - 1, f.neg(p.coeff(i)));
  return c;
}

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(Poly base, mpz_class e, const Poly& m) {
  Poly result = Poly::constant(m.field(), Scalar(1)) % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mulmod(result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

// p-th root of a polynomial whose derivative vanishes: coefficients of x^{kp}
// become those of x^k (the Frobenius is the identity on GF(p)).
Poly pth_root(const Poly& f) {
  const std::int64_t p = f.field().characteristic();
  std::vector<Scalar> c;
  for (std::size_t k = 0; static_cast<std::int64_t>(k) * p <= f.degree(); ++k)
    c.push_back(f.coeff(static_cast<std::size_t>(k * p)));
  return Poly(f.field(), std::move(c));
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() < 1) return;
  const Field& field = f.field();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0)
    squarefree(pth_root(c.monic()), mult * static_cast<int>(field.characteristic()), out);
}

// Splits a squarefree product of irreducibles all of degree d.
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Field& field = f.field();
  const std::int64_t p = field.characteristic();
  std::uniform_int_distribution<std::int64_t> coin(0, p - 1);
  for (;;) {
    std::vector<Scalar> rc(static_cast<std::size_t>(f.degree()));
    for (auto& x : rc) x = Scalar(static_cast<long>(coin(rng)));
    Poly a(field, rc);
    if (a.degree() < 1) continue;
    Poly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
    Poly b(field);
    if (p == 2) {
      Poly t = a % f;
      b = t;
      for (int k = 1; k < d; ++k) {
        t = mulmod(t, t, f);
        b = b + t;
      }
    } else {
      mpz_class q;
      mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
      b = powmod(a, (q - 1) / 2, f) - Poly::constant(field, Scalar(1));
    }
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<Poly> split_squarefree(Poly f, std::mt19937_64& rng) {
  const Field& field = f.field();
  std::vector<Poly> out;
  Poly x = Poly::monomial(field, 1);
  Poly h = x % f;
  const mpz_class p = static_cast<long>(field.characteristic());
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, p, f);
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      equal_degree(g, d, rng, out);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f.monic());
  return out;
}

}  // namespace

std::vector<PolyFactor> factor_monic(const Poly& p) {
  if (!p.field().is_prime())
    throw Error(ErrorCode::UnsupportedField, "factorization is only implemented over GF(p)");
  if (!p.is_monic()) throw Error(ErrorCode::NotMonic, p.to_string());
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(p, 1, sqf);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<PolyFactor> out;
  for (const auto& [part, mult] : sqf)
    for (auto& irr : split_squarefree(part, rng)) {
      bool found = false;
      for (auto& pf : out)
        if (pf.factor == irr) {
          pf.exponent += mult;
          found = true;
        }
      if (!found) out.push_back({irr, mult});
    }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.exponent < b.exponent;
  });
  return out;
}

std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& monic_f) {
  if (!monic_f.is_monic()) throw Error(ErrorCode::NotMonic, monic_f.to_string());
  std::vector<std::pair<Poly, int>> out;
  squarefree(monic_f, 1, out);
  // Over GF(p) the recursion may report the same exponent twice.
  std::vector<std::pair<Poly, int>> merged;
  for (auto& [g, k] : out) {
    bool found = false;
    for (auto& [h, j] : merged)
      if (j == k) {
        h = h * g;
        found = true;
      }
    if (!found) merged.emplace_back(g, k);
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return merged;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_monic(p.monic());
  return f.size() == 1 && f[0].exponent == 1;
}

}  // namespace qamen
