#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace orbideg {

/// exp(2*pi*i * num/den), kept in lowest terms with 0 <= num < den.
/// The identity is 0/1.
class RootOfUnity {
 public:
  constexpr RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity identity() { return {}; }
  /// The primitive generator exp(2*pi*i/order).
  static RootOfUnity generator(std::int64_t order) { return {1, order}; }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::int64_t order() const noexcept { return den_; }
  bool is_identity() const noexcept { return num_ == 0; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity pow(std::int64_t k) const;
  RootOfUnity inverse() const;
  /// One principal k-th root: exp(2*pi*i * num/(den*k)).
  RootOfUnity principal_root(std::int64_t k) const;

  double angle() const noexcept;  // in [0, 2*pi)

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  /// Orders by the phase num/den in [0,1).
  friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b);

  std::string str() const;  // "a/m"

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A point coordinate: exactly zero or an exact root of unity.
class ExactCoordinate {
 public:
  constexpr ExactCoordinate() = default;
  ExactCoordinate(RootOfUnity unit) : unit_(unit) {}  // NOLINT(google-explicit-constructor)

  static ExactCoordinate zero() { return {}; }
  static ExactCoordinate one() { return ExactCoordinate(RootOfUnity::identity()); }

  bool is_zero() const noexcept { return !unit_.has_value(); }
  const RootOfUnity& unit() const;

  ExactCoordinate operator*(const RootOfUnity& g) const;
  ExactCoordinate pow(std::int64_t k) const;

  friend bool operator==(const ExactCoordinate&, const ExactCoordinate&) = default;
  /// Zero sorts before every unit.
  friend std::strong_ordering operator<=>(const ExactCoordinate& a, const ExactCoordinate& b);

  /// "0" or "a/m"; the command-line encoding.
  std::string str() const;
  static ExactCoordinate parse(const std::string& text);

 private:
  std::optional<RootOfUnity> unit_;
};

namespace detail {
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t m);
}  // namespace detail

}  // namespace orbideg
