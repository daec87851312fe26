#pragma once

#include <string>

#include <json.hpp>

#include "qamen/euler.hpp"
#include "qamen/functors.hpp"
#include "qamen/hyperfinite.hpp"
#include "qamen/kronecker.hpp"
#include "qamen/representation.hpp"

namespace qamen {

using json = nlohmann::ordered_json;

/// Reads and parses a file; ParseError on I/O or syntax failure.
json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline; "-" writes to stdout.
void write_text(const std::string& path, const std::string& text);

/// "q" or "gf:P".
Field parse_field(const std::string& text);
json field_to_json(const Field& f);
Field field_from_json(const json& j);

/// "a/b" or "a"; ParseError otherwise.
Scalar parse_rational(const std::string& text);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols);

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);
/// Built-in quivers: kronecker:N, path:N, subspace:N, a_tilde:P,Q, d_tilde:N, e_tilde:N.
Quiver named_quiver(const std::string& name);

json dimv_to_json(const Quiver& q, const DimVector& d);
json classification_to_json(const Classification& c, const std::optional<DimVector>& h, const Quiver& q);

json rep_to_json(const Representation& m);
/// "quiver" is inline, a built-in name, or absent when `fallback` is given.
Representation rep_from_json(const json& j, QuiverPtr fallback = nullptr);

json block_to_json(const KroneckerBlock& b);
/// "pre:I", "inj:I", "reginf:M" or "reg:c0,c1,...,cn[:E]" (coefficients low to high).
KroneckerBlock parse_block(const std::string& text, const Field& f);
json canonical_to_json(const PencilCanonicalForm& f);

json family_to_json(const SubspaceFamily& f);
json certificate_to_json(const HyperfiniteCertificate& c);
/// Reads epsilon, L, submodule and blocks against the given ambient.
HyperfiniteCertificate certificate_from_json(const json& j, RepPtr ambient);

json pair_report_to_json(const ExceptionalPairReport& r);
json fixture_to_json(const PairFixture& fx);

}  // namespace qamen
