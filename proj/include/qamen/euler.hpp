#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qamen/quiver.hpp"

namespace qamen {

/// Small dense integer matrix (Euler and Coxeter matrices).
using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix int_identity(std::size_t n);
IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);
DimVector int_apply(const IntMatrix& m, const DimVector& x);

enum class QuiverClass { Dynkin, Euclidean, Wild };

const char* to_string(QuiverClass c) noexcept;

struct Classification {
  QuiverClass kind = QuiverClass::Wild;
  /// Sorted ascending; empty unless Euclidean.
  std::vector<int> tubular_type;
  /// Diagram name such as "A~(2,1)", "D~5", "E~8"; empty unless Euclidean.
  std::string family;
};

/// Everything derived from the Euler form of a quiver, computed once.
class EulerData {
 public:
  explicit EulerData(QuiverPtr quiver);
  explicit EulerData(const Quiver& quiver) : EulerData(std::make_shared<const Quiver>(quiver)) {}

  const Quiver& quiver() const noexcept { return *quiver_; }
  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  /// E[i][j] = delta_ij - #{arrows i -> j}, so <x,y> = x^T E y.
  const IntMatrix& euler_matrix() const noexcept { return euler_; }
  /// C = -E^{-1} E^T: the unique matrix with <x,y> = -<y,Cx>.
  const IntMatrix& coxeter() const noexcept { return coxeter_; }
  const IntMatrix& coxeter_inverse() const noexcept { return coxeter_inv_; }
  const std::optional<DimVector>& radical_generator() const noexcept { return radical_; }
  const Classification& classification() const noexcept { return class_; }
  bool is_euclidean() const noexcept { return class_.kind == QuiverClass::Euclidean; }

 private:
  QuiverPtr quiver_;
  IntMatrix euler_;
  IntMatrix coxeter_;
  IntMatrix coxeter_inv_;
  std::optional<DimVector> radical_;
  Classification class_;
};

std::int64_t euler_form(const EulerData& e, const DimVector& x, const DimVector& y);
std::int64_t tits_form(const EulerData& e, const DimVector& x);
/// <h_Q, x>; throws NotEuclidean when the quiver has no radical generator.
std::int64_t defect(const EulerData& e, const DimVector& x);

IntMatrix coxeter_matrix(const EulerData& e);
/// Least d >= 1 with C^d e_i - e_i in rad q for every basis vector.
int coxeter_number(const EulerData& e);

/// Sign behaviour of the Tits form plus, for Euclidean quivers, the tubular
/// type read off the underlying graph. Throws Disconnected.
Classification classify(const Quiver& q);
/// Minimal positive generator of rad q for Euclidean quivers; nullopt otherwise.
std::optional<DimVector> radical_generator(const Quiver& q);

/// C-orbits of simple regular dimension vectors in the inhomogeneous tubes.
/// Each orbit is listed x, C^{-1}x, C^{-2}x, ... starting from its
/// lexicographically smallest member; orbits sorted by size then first member.
std::vector<std::vector<DimVector>> simple_regular_orbits(const EulerData& e);

/// Inertia of the symmetric form x^T (E + E^T) x: counts of positive,
/// zero and negative eigenvalues (exact, by symmetric elimination).
struct Inertia {
  std::size_t positive = 0, zero = 0, negative = 0;
};
Inertia tits_inertia(const Quiver& q);

}  // namespace qamen
