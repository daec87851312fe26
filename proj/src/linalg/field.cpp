#include "qamen/field.hpp"

#include <cctype>

namespace qamen {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Cyclic: return "Cyclic";
    case ErrorCode::NotEuclidean: return "NotEuclidean";
    case ErrorCode::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorCode::VertexUnknown: return "VertexUnknown";
    case ErrorCode::ArrowUnknown: return "ArrowUnknown";
    case ErrorCode::QuiverMismatch: return "QuiverMismatch";
    case ErrorCode::NotIntertwining: return "NotIntertwining";
    case ErrorCode::NotSubrep: return "NotSubrep";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::WrongQuiver: return "WrongQuiver";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::NotRegularIndecomposable: return "NotRegularIndecomposable";
    case ErrorCode::EpsilonMismatch: return "EpsilonMismatch";
    case ErrorCode::EpsilonUnachievable: return "EpsilonUnachievable";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnsupportedFunctor: return "UnsupportedFunctor";
    case ErrorCode::NotSinkOrSource: return "NotSinkOrSource";
  }
  return "Unknown";
}

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime_number(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
  Field f;
  f.kind_ = FieldKind::Prime;
  f.p_ = p;
  return f;
}

namespace {

std::int64_t mod_reduce(const mpz_class& z, std::int64_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return t;
}

}  // namespace

Scalar Field::normalize(const Scalar& x) const {
  if (kind_ == FieldKind::Rationals) {
    Scalar y = x;
    y.canonicalize();
    return y;
  }
  std::int64_t num = mod_reduce(x.get_num(), p_);
  std::int64_t den = mod_reduce(x.get_den(), p_);
  if (den == 0)
    throw Error(ErrorCode::InvalidInput, "denominator divisible by the characteristic");
  return Scalar(static_cast<long>((num * mod_inverse(den, p_)) % p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a + b;
  long s = a.get_num().get_si() + b.get_num().get_si();
  if (s >= p_) s -= p_;
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a - b;
  long s = a.get_num().get_si() - b.get_num().get_si();
  if (s < 0) s += p_;
  return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a * b;
  return Scalar(static_cast<long>((a.get_num().get_si() * b.get_num().get_si()) % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == FieldKind::Rationals) return -a;
  long v = a.get_num().get_si();
  return Scalar(v == 0 ? 0 : p_ - v);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  if (kind_ == FieldKind::Rationals) return 1 / a;
  return Scalar(static_cast<long>(mod_inverse(a.get_num().get_si(), p_)));
}

std::string Field::format(const Scalar& x) const {
  if (kind_ == FieldKind::Prime) return x.get_num().get_str();
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar Field::parse(const std::string& text) const {
  auto bad = [&] { return Error(ErrorCode::ParseError, "malformed scalar '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto check_int = [&](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  Scalar value;
  if (slash == std::string::npos) {
    check_int(text, true);
    value = Scalar(mpz_class(text));
  } else {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    mpz_class d(den);
    if (d == 0) throw bad();
    value = Scalar(mpz_class(num), d);
    value.canonicalize();
  }
  return normalize(value);
}

std::string Field::name() const {
  return kind_ == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

}  // namespace qamen
