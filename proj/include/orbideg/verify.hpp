#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orbideg/circle_map.hpp"
#include "orbideg/degree.hpp"
#include "orbideg/monomial_map.hpp"
#include "orbideg/slice_lift.hpp"

namespace orbideg {

struct Witness {
  std::string input;   // enough to replay the case
  std::string detail;  // what went wrong
};

struct PropertyReport {
  std::string name;
  std::string statement;  // the property being checked, in one line
  std::size_t cases = 0;
  std::vector<Witness> failures;

  bool passed() const noexcept { return failures.empty() && cases > 0; }
  /// Counts one case and records a witness when ok is false.
  void check(bool ok, const std::string& input, const std::string& detail = {});
  /// Folds another report of the same property into this one.
  void merge(const PropertyReport& other);
};

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi], independent of the standard library's
/// distribution implementations so seeds replay across toolchains.
std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Random effective weights of the given length with entries in [1, max_weight].
Weights random_weights(Rng& rng, std::size_t len, std::int64_t max_weight);
/// A chain of f-type and g-type generators starting at the given source
/// weights; every step keeps prod(e) at most max_product.
MonomialMap random_chain(Rng& rng, const Weights& source, int steps, std::int64_t max_weight,
                         std::uint64_t max_product);
/// A random composed monomial map on CP^n(q) with 1 <= n <= max_n.
MonomialMap random_map(Rng& rng, std::size_t max_n = 3, std::uint64_t max_product = 100'000);
/// A random regular value of f with the given support (indices outside it
/// must carry exponent 1) and random root-of-unity phases.
WpsPoint random_value(Rng& rng, const MonomialMap& f, const std::vector<std::size_t>& support);
/// All supports at which f has regular values.
std::vector<std::vector<std::size_t>> regular_supports(const MonomialMap& f);

std::string describe(const MonomialMap& f);

PropertyReport check_local_constancy(const MonomialMap& f, const WpsPoint& y, int perturbations,
                                     Rng& rng, const EnumerationConfig& cfg = {});
/// Numeric variant along a straight arc of values; exact weighted counts must
/// agree at every sample and every numeric preimage must certify.
PropertyReport check_local_constancy_arc(const MonomialMap& f,
                                         const std::vector<std::complex<double>>& from,
                                         const std::vector<std::complex<double>>& to, int samples,
                                         const NumericTolerances& tol = {});

PropertyReport check_value_independence(const MonomialMap& f, int samples_per_support, Rng& rng,
                                        const EnumerationConfig& cfg = {});
/// When the domain has no codimension-one stratum, every sampled regular
/// value must give the same weighted count. Otherwise the check demands a
/// pair of regular values whose mod-2 degrees differ.
PropertyReport check_value_independence(const CircleMap& m, int samples);

PropertyReport check_multiplicativity(const MonomialMap& f, const MonomialMap& g,
                                      const EnumerationConfig& cfg = {});

/// Compares the quotient evaluations on a grid, then the mod-2 degrees at
/// regular values of the codomain's smooth part.
PropertyReport check_same_underlying(const CircleMap& a, const CircleMap& b, int grid,
                                     int values);
PropertyReport check_same_underlying(const MonomialMap& a, const MonomialMap& b, int samples,
                                     Rng& rng, const EnumerationConfig& cfg = {});

/// Degree of S^1 -> S^1//Z_k for each k, plus the relation between a power
/// map and its quotient over a grid of (m, k, b).
PropertyReport check_covering(std::int64_t max_k = 6);

/// Enumeration against the closed form.
PropertyReport check_oracle(const MonomialMap& f, const EnumerationConfig& cfg = {});
PropertyReport check_surjectivity(const MonomialMap& f, int samples, Rng& rng,
                                  const EnumerationConfig& cfg = {});
/// Numeric Jacobian signs and regularity against the exact preimage records.
PropertyReport check_numeric_agreement(const MonomialMap& f, const WpsPoint& y,
                                       std::size_t max_points = 8,
                                       const NumericTolerances& tol = {},
                                       const EnumerationConfig& cfg = {});
/// Newton residuals on random slice perturbations and equivariance of the
/// phase under the isotropy of x.
PropertyReport check_slice_lift(const MonomialMap& f, const WpsPoint& x, int perturbations,
                                Rng& rng, const NumericTolerances& tol = {});

/// Suite selectors: all, counterexample, multiplicativity, local-constancy,
/// value-independence, same-underlying, covering, oracle, numeric.
const std::vector<std::string>& suite_selectors();
/// Runs the selected suites (in parallel) and returns reports sorted by name.
/// Throws InvalidInput for an unknown selector.
std::vector<PropertyReport> run_suite(const std::string& selector, std::uint64_t seed = 0,
                                      const EnumerationConfig& cfg = {});

}  // namespace orbideg
