#include <cstdlib>
#include <string>

#include "qamen/random.hpp"

namespace qamen {

Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.is_prime()) return Scalar(static_cast<long>(rng() % static_cast<std::uint64_t>(f.characteristic())));
  return Scalar(static_cast<long>(rng() % 7) - 3);
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(f, rng));
  return m;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

Representation random_conjugate(const Representation& m, Rng& rng, std::vector<Matrix>* applied) {
  std::vector<Matrix> g;
  for (std::size_t v = 0; v < m.quiver().num_vertices(); ++v) g.push_back(random_invertible(m.field(), m.dim(v), rng));
  Representation out = change_basis(m, g);
  if (applied) *applied = std::move(g);
  return out;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("QAMEN_SEED");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace qamen
