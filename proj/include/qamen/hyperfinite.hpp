#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qamen/representation.hpp"

namespace qamen {

/// One spanning basis per vertex. Certificates keep raw bases rather than
/// validated Subrepresentations so that the verifier can reject bad data.
using SubspaceFamily = std::vector<Matrix>;

SubspaceFamily family_of(const Subrepresentation& s);
std::size_t family_dim(const SubspaceFamily& f);

/// Witness that dim P >= (1 - epsilon) dim M with P an internal direct sum
/// of blocks of dimension at most L.
struct HyperfiniteCertificate {
  RepPtr ambient;
  Scalar epsilon;
  std::int64_t L = 0;
  SubspaceFamily submodule;
  std::vector<SubspaceFamily> blocks;

  std::size_t dim_P() const { return family_dim(submodule); }
  std::size_t dim_M() const { return ambient->total_dim(); }
  std::size_t max_block() const;
};

/// Certificate with P = M as a single block (or no block when M = 0).
HyperfiniteCertificate trivial_certificate(RepPtr m, const Scalar& epsilon, std::int64_t L);

enum class VerifyCode { Ok, NotSubrep, NotDirect, SpanMismatch, BlockTooBig, EpsilonViolated };

const char* to_string(VerifyCode c) noexcept;

struct VerifyResult {
  VerifyCode code = VerifyCode::Ok;
  std::string detail;
  bool ok() const noexcept { return code == VerifyCode::Ok; }
};

/// Checks every certificate condition from scratch against m.
VerifyResult verify_certificate(const Representation& m, const HyperfiniteCertificate& c);

/// Certificate for the direct sum of the ambients; all inputs share (epsilon, L).
HyperfiniteCertificate combine_direct_sum(const std::vector<HyperfiniteCertificate>& certs);
HyperfiniteCertificate combine_direct_sum(QuiverPtr quiver, Field field,
                                          const std::vector<HyperfiniteCertificate>& certs);

struct ExtendResult {
  HyperfiniteCertificate certificate;
  /// (codim + eps_P * dim P) / dim M, the bookkeeping bound.
  Scalar epsilon_effective;
  /// (dim M - dim Y) / dim M actually attained.
  Scalar epsilon_achieved;
};

/// Pushes a certificate for P along an injective morphism P -> M. Succeeds
/// iff epsilon_effective <= target; L is kept.
ExtendResult extend_bounded_codim(const HyperfiniteCertificate& c, const Morphism& inclusion, const Scalar& target);

struct ProfileResult {
  std::size_t best_dim = 0;
  bool exact = false;
  HyperfiniteCertificate certificate;
};

/// Largest submodule found that splits into blocks of dimension <= L.
/// Exhaustive over coordinate-generated blocks for GF(2) and total dim <= 12.
ProfileResult profile_search(const Representation& m, std::int64_t L);

/// ceil(1/eps) + 3.
std::int64_t L_epsilon(const Scalar& eps);
/// Throws BadEpsilon unless 0 < eps < 1.
void require_epsilon(const Scalar& eps);

}  // namespace qamen
