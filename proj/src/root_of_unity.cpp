#include "orbideg/root_of_unity.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>

#include "orbideg/errors.hpp"

namespace orbideg {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NewtonDiverged: return "NewtonDiverged";
    case ErrorKind::IrregularPoint: return "IrregularPoint";
    case ErrorKind::CriticalValue: return "CriticalValue";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NoHomomorphism: return "NoHomomorphism";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

namespace detail {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "64-bit multiplication overflow");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "64-bit addition overflow");
  }
  return out;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

namespace {

// Reduces num/den (den > 0, num arbitrary 128-bit) to the canonical phase.
std::pair<std::int64_t, std::int64_t> reduce_phase(__int128 num, std::int64_t den) {
  __int128 r = num % den;
  if (r < 0) r += den;
  auto a = static_cast<std::int64_t>(r);
  std::int64_t g = std::gcd(a, den);
  if (a == 0) return {0, 1};
  return {a / g, den / g};
}

}  // namespace

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw Error(ErrorKind::InvalidInput, "root of unity order must be positive");
  }
  std::tie(num_, den_) = reduce_phase(num, den);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  std::int64_t g = std::gcd(den_, other.den_);
  std::int64_t l = detail::checked_mul(den_ / g, other.den_);
  __int128 n = static_cast<__int128>(num_) * (l / den_) +
               static_cast<__int128>(other.num_) * (l / other.den_);
  RootOfUnity out;
  std::tie(out.num_, out.den_) = reduce_phase(n, l);
  return out;
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  RootOfUnity out;
  std::tie(out.num_, out.den_) = reduce_phase(static_cast<__int128>(num_) * k, den_);
  return out;
}

RootOfUnity RootOfUnity::inverse() const { return pow(-1); }

RootOfUnity RootOfUnity::principal_root(std::int64_t k) const {
  if (k <= 0) throw Error(ErrorKind::InvalidInput, "root index must be positive");
  return {num_, detail::checked_mul(den_, k)};
}

double RootOfUnity::angle() const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RootOfUnity::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

const RootOfUnity& ExactCoordinate::unit() const {
  if (!unit_) throw Error(ErrorKind::PreconditionViolated, "coordinate is zero");
  return *unit_;
}

ExactCoordinate ExactCoordinate::operator*(const RootOfUnity& g) const {
  if (!unit_) return {};
  return ExactCoordinate(*unit_ * g);
}

ExactCoordinate ExactCoordinate::pow(std::int64_t k) const {
  if (!unit_) return {};
  return ExactCoordinate(unit_->pow(k));
}

std::strong_ordering operator<=>(const ExactCoordinate& a, const ExactCoordinate& b) {
  if (a.is_zero() || b.is_zero()) {
    return static_cast<int>(!a.is_zero()) <=> static_cast<int>(!b.is_zero());
  }
  return *a.unit_ <=> *b.unit_;
}

std::string ExactCoordinate::str() const { return unit_ ? unit_->str() : "0"; }

ExactCoordinate ExactCoordinate::parse(const std::string& text) {
  if (text == "0") return zero();
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw Error(ErrorKind::InvalidInput, "coordinate '" + text + "' is neither 0 nor a/m");
  }
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw Error(ErrorKind::InvalidInput, "malformed coordinate '" + text + "'");
    }
    return v;
  };
  std::string_view sv(text);
  std::int64_t a = parse_int(sv.substr(0, slash));
  std::int64_t m = parse_int(sv.substr(slash + 1));
  if (m <= 0) throw Error(ErrorKind::InvalidInput, "coordinate order must be positive");
  return ExactCoordinate(RootOfUnity(a, m));
}

}  // namespace orbideg
