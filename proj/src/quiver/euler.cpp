#include "qamen/euler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qamen/matrix.hpp"

namespace qamen {

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMatrix c(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

DimVector int_apply(const IntMatrix& m, const DimVector& x) {
  if (!m.empty() && m[0].size() != x.size())
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match matrix");
  DimVector y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

const char* to_string(QuiverClass c) noexcept {
  switch (c) {
    case QuiverClass::Dynkin: return "dynkin";
    case QuiverClass::Euclidean: return "euclidean";
    case QuiverClass::Wild: return "wild";
  }
  return "unknown";
}

namespace {

IntMatrix euler_matrix_of(const Quiver& q) {
  IntMatrix e = int_identity(q.num_vertices());
  for (std::size_t a = 0; a < q.num_arrows(); ++a) e[q.source(a)][q.target(a)] -= 1;
  return e;
}

Matrix to_rational(const IntMatrix& m) {
  Field f = Field::rationals();
  Matrix out(f, m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out.set(i, j, Scalar(static_cast<long>(m[i][j])));
  return out;
}

IntMatrix to_integer(const Matrix& m) {
  IntMatrix out(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error(ErrorCode::InvalidInput, "non-integral Coxeter entry");
      out[i][j] = m(i, j).get_num().get_si();
    }
  return out;
}

// Tubular type from the shape of the underlying graph of a Euclidean quiver.
Classification euclidean_shape(const Quiver& q) {
  const std::size_t n = q.num_vertices();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    incident[q.source(a)].push_back(a);
    incident[q.target(a)].push_back(a);
  }
  Classification c;
  c.kind = QuiverClass::Euclidean;
  if (q.num_arrows() == n) {
    int forward = 0, backward = 0;
    std::size_t current = 0, prev_arrow = q.num_arrows();
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t next_arrow = prev_arrow;
      for (auto a : incident[current])
        if (a != prev_arrow) {
          next_arrow = a;
          break;
        }
      if (q.source(next_arrow) == current) {
        ++forward;
        current = q.target(next_arrow);
      } else {
        ++backward;
        current = q.source(next_arrow);
      }
      prev_arrow = next_arrow;
    }
    c.tubular_type = {forward, backward};
    std::sort(c.tubular_type.begin(), c.tubular_type.end());
    c.family = "A~(" + std::to_string(c.tubular_type[1]) + "," + std::to_string(c.tubular_type[0]) + ")";
    return c;
  }
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (incident[v].size() >= 3) branch.push_back(v);
  if (branch.size() == 1 && incident[branch[0]].size() == 4) {
    c.tubular_type = {2, 2, 2};
    c.family = "D~4";
    return c;
  }
  if (branch.size() == 2) {
    int m = static_cast<int>(n) - 1;
    c.tubular_type = {2, 2, m - 2};
    std::sort(c.tubular_type.begin(), c.tubular_type.end());
    c.family = "D~" + std::to_string(m);
    return c;
  }
  // One trivalent vertex: measure the three arm lengths.
  std::size_t center = branch.at(0);
  std::vector<int> arms;
  for (auto a0 : incident[center]) {
    int len = 0;
    std::size_t prev = center, arrow = a0;
    for (;;) {
      std::size_t v = q.source(arrow) == prev ? q.target(arrow) : q.source(arrow);
      ++len;
      std::size_t next = q.num_arrows();
      for (auto a : incident[v])
        if (a != arrow) next = a;
      if (next == q.num_arrows()) break;
      prev = v;
      arrow = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms == std::vector<int>{2, 2, 2}) c.tubular_type = {2, 3, 3}, c.family = "E~6";
  else if (arms == std::vector<int>{1, 3, 3}) c.tubular_type = {2, 3, 4}, c.family = "E~7";
  else if (arms == std::vector<int>{1, 2, 5}) c.tubular_type = {2, 3, 5}, c.family = "E~8";
  else throw Error(ErrorCode::InvalidInput, "semidefinite quiver of unrecognised shape");
  return c;
}

}  // namespace

Inertia tits_inertia(const Quiver& q) {
  const std::size_t n = q.num_vertices();
  IntMatrix e = euler_matrix_of(q);
  std::vector<std::vector<Scalar>> s(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = Scalar(static_cast<long>(e[i][j] + e[j][i]));
  Inertia inertia;
  std::vector<std::size_t> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  auto remove = [&](std::size_t v) { alive.erase(std::find(alive.begin(), alive.end(), v)); };
  while (!alive.empty()) {
    std::size_t piv = n;
    for (auto i : alive)
      if (s[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv != n) {
      (s[piv][piv] > 0 ? inertia.positive : inertia.negative) += 1;
      Scalar d = s[piv][piv];
      remove(piv);
      for (auto i : alive)
        for (auto j : alive) s[i][j] -= s[i][piv] * s[piv][j] / d;
      continue;
    }
    std::size_t pi = n, pj = n;
    for (auto i : alive)
      for (auto j : alive)
        if (pi == n && s[i][j] != 0) pi = i, pj = j;
    if (pi == n) {
      inertia.zero += alive.size();
      break;
    }
    // Zero diagonal with b = s[pi][pj] != 0: the 2x2 block [[0,b],[b,0]]
    // contributes one positive and one negative direction.
    inertia.positive += 1;
    inertia.negative += 1;
    Scalar b = s[pi][pj];
    remove(pi);
    remove(pj);
    for (auto i : alive)
      for (auto j : alive) s[i][j] -= (s[i][pi] * s[pj][j] + s[i][pj] * s[pi][j]) / b;
  }
  return inertia;
}

Classification classify(const Quiver& q) {
  if (!q.is_connected()) throw Error(ErrorCode::Disconnected, "classify needs a connected quiver");
  Inertia in = tits_inertia(q);
  if (in.negative == 0 && in.zero == 0) return Classification{QuiverClass::Dynkin, {}, {}};
  if (in.negative == 0 && in.zero == 1) return euclidean_shape(q);
  return Classification{QuiverClass::Wild, {}, {}};
}

std::optional<DimVector> radical_generator(const Quiver& q) {
  if (!q.is_connected()) throw Error(ErrorCode::Disconnected, "radical generator needs a connected quiver");
  Inertia in = tits_inertia(q);
  if (in.negative != 0 || in.zero != 1) return std::nullopt;
  IntMatrix e = euler_matrix_of(q);
  const std::size_t n = q.num_vertices();
  IntMatrix s(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = e[i][j] + e[j][i];
  Matrix k = kernel_basis(to_rational(s));
  mpz_class lcm_den = 1;
  for (std::size_t i = 0; i < n; ++i) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), k(i, 0).get_den().get_mpz_t());
  std::vector<mpz_class> ints(n);
  mpz_class g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar v = k(i, 0) * lcm_den;
    ints[i] = v.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  DimVector h(n);
  int sign = ints[0] < 0 ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i) h[i] = sign * mpz_class(ints[i] / g).get_si();
  return h;
}

EulerData::EulerData(QuiverPtr quiver) : quiver_(std::move(quiver)) {
  euler_ = euler_matrix_of(*quiver_);
  Matrix e = to_rational(euler_);
  Matrix einv = *inverse(e);
  Matrix et_inv = *inverse(e.transpose());
  coxeter_ = to_integer(einv.scaled(Scalar(-1)) * e.transpose());
  coxeter_inv_ = to_integer(et_inv.scaled(Scalar(-1)) * e);
  if (quiver_->is_connected()) {
    class_ = classify(*quiver_);
    if (class_.kind == QuiverClass::Euclidean) radical_ = qamen::radical_generator(*quiver_);
  }
}

std::int64_t euler_form(const EulerData& e, const DimVector& x, const DimVector& y) {
  const std::size_t n = e.quiver().num_vertices();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "euler_form arguments");
  const auto& m = e.euler_matrix();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += x[i] * m[i][j] * y[j];
  return s;
}

std::int64_t tits_form(const EulerData& e, const DimVector& x) { return euler_form(e, x, x); }

std::int64_t defect(const EulerData& e, const DimVector& x) {
  if (!e.radical_generator()) throw Error(ErrorCode::NotEuclidean, "defect needs a Euclidean quiver");
  return euler_form(e, *e.radical_generator(), x);
}

IntMatrix coxeter_matrix(const EulerData& e) { return e.coxeter(); }

namespace {

// Largest possible order of a finite-order element of GL_r(Z) divides the
// lcm of all k with phi(k) <= r.
std::int64_t finite_order_bound(std::size_t r) {
  auto phi = [](std::int64_t k) {
    std::int64_t result = k;
    for (std::int64_t p = 2; p * p <= k; ++p)
      if (k % p == 0) {
        while (k % p == 0) k /= p;
        result -= result / p;
      }
    if (k > 1) result -= result / k;
    return result;
  };
  std::int64_t l = 1;
  // phi(k) >= sqrt(k/2), so k <= 2 r^2 covers every k with phi(k) <= r.
  for (std::int64_t k = 1; k <= 2 * static_cast<std::int64_t>(r * r) + 2; ++k)
    if (phi(k) <= static_cast<std::int64_t>(r)) l = std::lcm(l, k);
  return l;
}

bool multiple_of(const DimVector& v, const DimVector& h) {
  // v = t h for rational t; h has positive entries.
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] * h[0] != v[0] * h[i]) return false;
  return true;
}

}  // namespace

int coxeter_number(const EulerData& e) {
  auto kind = e.classification().kind;
  if (kind == QuiverClass::Wild) throw Error(ErrorCode::NotFiniteOrder, "wild quiver");
  const std::size_t n = e.quiver().num_vertices();
  const std::size_t rank = kind == QuiverClass::Euclidean ? n - 1 : n;
  const std::int64_t bound = finite_order_bound(rank);
  IntMatrix power = int_identity(n);
  for (std::int64_t d = 1; d <= bound; ++d) {
    power = int_multiply(power, e.coxeter());
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      DimVector col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = power[r][i] - (r == i ? 1 : 0);
      if (kind == QuiverClass::Dynkin)
        ok = std::all_of(col.begin(), col.end(), [](auto v) { return v == 0; });
      else
        ok = multiple_of(col, *e.radical_generator());
    }
    if (ok) return static_cast<int>(d);
  }
  throw Error(ErrorCode::NotFiniteOrder, "Coxeter transformation exceeded its order bound");
}

std::vector<std::vector<DimVector>> simple_regular_orbits(const EulerData& e) {
  if (!e.is_euclidean()) throw Error(ErrorCode::NotEuclidean, "orbits need a Euclidean quiver");
  const DimVector& h = *e.radical_generator();
  const std::size_t n = h.size();
  auto in_box = [&](const DimVector& x) {
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] < 0 || x[i] > h[i]) return false;
    return true;
  };

  std::vector<DimVector> candidates;
  DimVector x(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && x[i] == h[i]) x[i++] = 0;
    if (i == n) break;
    ++x[i];
    if (x == h) continue;
    if (tits_form(e, x) == 1 && defect(e, x) == 0) candidates.push_back(x);
  }

  std::set<DimVector> seen;
  std::vector<std::vector<DimVector>> orbits;
  const std::size_t max_len = 4 * n + 4;
  for (const auto& start : candidates) {
    if (seen.count(start)) continue;
    std::vector<DimVector> orbit{start};
    bool valid = true;
    DimVector y = int_apply(e.coxeter_inverse(), start);
    while (y != start) {
      if (!in_box(y) || orbit.size() > max_len) {
        valid = false;
        break;
      }
      orbit.push_back(y);
      y = int_apply(e.coxeter_inverse(), y);
    }
    for (const auto& v : orbit) seen.insert(v);
    if (!valid) continue;
    DimVector sum(n, 0);
    for (const auto& v : orbit)
      for (std::size_t i = 0; i < n; ++i) sum[i] += v[i];
    if (sum != h) continue;
    auto first = std::min_element(orbit.begin(), orbit.end()) - orbit.begin();
    std::rotate(orbit.begin(), orbit.begin() + first, orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return orbits;
}

}  // namespace qamen
