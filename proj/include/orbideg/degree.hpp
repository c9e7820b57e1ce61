#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orbideg/monomial_map.hpp"
#include "orbideg/wps.hpp"

namespace orbideg {

struct EnumerationConfig {
  /// Refuse to enumerate when the number of candidate root tuples
  /// (product of exponents over the support of the value) exceeds this.
  std::uint64_t cap = 10'000'000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct PreimageRecord {
  WpsPoint point;
  std::int64_t isotropy = 1;  // |Gamma_x|
  std::int64_t weight = 1;    // |Gamma_y| / |Gamma_x|
  int sign = 1;
};

/// Why a value is (or is not) regular: the chart lift at every preimage is a
/// coordinate-power map, singular exactly along zero coordinates of the value
/// that carry an exponent above one.
struct RegularityCertificate {
  bool regular = true;
  std::vector<std::size_t> support;
  std::vector<std::size_t> critical_coordinates;
};

struct DegreeResult {
  std::int64_t weighted_count = 0;
  int mod2 = 0;
  std::int64_t oriented = 0;
  WpsPoint value;
  RegularityCertificate certificate;
  std::vector<PreimageRecord> preimages;
};

/// Shape of the preimage set of a regular value: candidate root tuples form
/// the group prod Z_{e_i} (i in the support), and two tuples give the same
/// preimage point iff they differ by a multiple of `shift`. Lex-minimal
/// orbit representatives are exactly the tuples with t_i < rep_bound[i].
struct OrbitLayout {
  std::vector<std::size_t> support;
  std::vector<std::int64_t> radices;    // e_i over the support
  std::vector<std::int64_t> shift;      // r_i / gcd_S(r) mod e_i
  std::vector<std::int64_t> rep_bound;  // c_i
  std::int64_t source_isotropy = 1;     // gcd_S(q)
  std::int64_t target_isotropy = 1;     // gcd_S(r)
  std::uint64_t tuple_count = 1;        // prod e_i
  std::uint64_t orbit_count = 1;        // prod c_i
  std::uint64_t orbit_size = 1;
};

RegularityCertificate certify_regular(const MonomialMap& f, const WpsPoint& y);
bool is_regular_value(const MonomialMap& f, const WpsPoint& y);

OrbitLayout orbit_layout(const MonomialMap& f, const WpsPoint& y);

/// Preimages of a regular value, one record per point, ordered by the
/// lexicographic order of their orbit-minimal root tuples.
std::vector<PreimageRecord> preimages(const MonomialMap& f, const WpsPoint& y,
                                      const EnumerationConfig& cfg = {});

/// Raw number of preimage points, from the layout alone (no enumeration).
std::uint64_t preimage_count(const MonomialMap& f, const WpsPoint& y);

/// Sum over preimages of |Gamma_y|/|Gamma_x|, accumulated exactly.
std::int64_t weighted_cardinality(const MonomialMap& f, const WpsPoint& y,
                                  const EnumerationConfig& cfg = {});

/// Degree at y, or at [1:...:1] when y is omitted.
DegreeResult degree(const MonomialMap& f, const std::optional<WpsPoint>& y = std::nullopt,
                    const EnumerationConfig& cfg = {});

/// prod(e_i) / d.
std::int64_t degree_closed_form(const MonomialMap& f);

/// For a smooth regular value, checks that every preimage is smooth.
bool smooth_preimage_check(const MonomialMap& f, const WpsPoint& y,
                           const EnumerationConfig& cfg = {});

}  // namespace orbideg
