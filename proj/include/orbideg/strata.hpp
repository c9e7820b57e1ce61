#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orbideg/circle.hpp"
#include "orbideg/wps.hpp"

namespace orbideg {

/// Points of one stratum sharing an isotropy order. For weighted projective
/// spaces each support set (nonzero coordinates) is listed.
struct StratumComponent {
  std::int64_t isotropy_order = 1;
  std::vector<std::vector<std::size_t>> supports;
  std::vector<std::string> descriptions;
};

struct StratumRecord {
  std::size_t singular_dim = 0;  // real dimension
  bool open_dense = false;       // the top (smooth) stratum
  std::vector<StratumComponent> components;
};

struct StrataReport {
  std::size_t dim = 0;
  std::vector<StratumRecord> strata;  // by singular dimension, descending
  bool codim1_empty = true;
  bool orientable = true;

  /// Number of singular points (zero-dimensional strata components counted
  /// by support, or by description for circle quotients).
  std::size_t singular_point_count() const;
};

StrataReport strata(const WpsOrbifold& o);
StrataReport strata(const CircleQuotient& o);

}  // namespace orbideg
