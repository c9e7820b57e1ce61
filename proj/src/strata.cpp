#include "orbideg/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orbideg/errors.hpp"

namespace orbideg {

namespace {

std::string support_pattern(std::size_t n, const std::vector<std::size_t>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ':';
    const bool on = std::find(s.begin(), s.end(), i) != s.end();
    out += on ? (s.size() == 1 ? "1" : "*") : "0";
  }
  return out + "]";
}

}  // namespace

std::size_t StrataReport::singular_point_count() const {
  std::size_t n = 0;
  for (const auto& st : strata) {
    if (st.singular_dim != 0 || st.open_dense) continue;
    for (const auto& c : st.components) {
      n += c.supports.empty() ? c.descriptions.size() : c.supports.size();
    }
  }
  return n;
}

StrataReport strata(const WpsOrbifold& o) {
  const std::size_t n = o.size();
  if (n > 24) throw Error(ErrorKind::InvalidInput, "too many weights for support enumeration");
  const auto& q = o.weights();

  // singular dim -> isotropy order -> supports
  std::map<std::size_t, std::map<std::int64_t, std::vector<std::vector<std::size_t>>>> table;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    const std::int64_t g = gcd_over(q, s);
    const auto fixed = std::count_if(q.begin(), q.end(), [g](auto w) { return w % g == 0; });
    const std::size_t sdim = 2 * static_cast<std::size_t>(fixed - 1);
    table[sdim][g].push_back(std::move(s));
  }

  StrataReport report;
  report.dim = o.real_dim();
  for (auto it = table.rbegin(); it != table.rend(); ++it) {
    StratumRecord rec;
    rec.singular_dim = it->first;
    rec.open_dense = it->first == report.dim;
    for (auto& [order, supports] : it->second) {
      StratumComponent comp;
      comp.isotropy_order = order;
      std::sort(supports.begin(), supports.end());
      for (const auto& s : supports) comp.descriptions.push_back(support_pattern(n, s));
      comp.supports = std::move(supports);
      rec.components.push_back(std::move(comp));
    }
    report.strata.push_back(std::move(rec));
  }
  report.codim1_empty =
      std::none_of(report.strata.begin(), report.strata.end(),
                   [&](const auto& st) { return st.singular_dim + 1 == report.dim; });
  report.orientable = true;
  return report;
}

StrataReport strata(const CircleQuotient& o) {
  StrataReport report;
  report.dim = 1;
  if (o.kind() == CircleQuotient::Kind::Rotation) {
    StratumRecord top{1, true, {}};
    top.components.push_back({1, {}, {"S^1/Z_" + std::to_string(o.rotation_order())}});
    report.strata.push_back(std::move(top));
    report.codim1_empty = true;
    report.orientable = true;
    return report;
  }
  StratumRecord top{1, true, {}};
  top.components.push_back({1, {}, {"open interval (0,pi)"}});
  StratumRecord boundary{0, false, {}};
  boundary.components.push_back({2, {}, {"theta=0", "theta=pi"}});
  report.strata.push_back(std::move(top));
  report.strata.push_back(std::move(boundary));
  report.codim1_empty = false;
  report.orientable = false;
  return report;
}

}  // namespace orbideg
