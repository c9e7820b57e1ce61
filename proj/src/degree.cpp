#include "orbideg/degree.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <numeric>
#include <thread>

#include "orbideg/errors.hpp"

namespace orbideg {

namespace {

using Rational = boost::rational<std::int64_t>;

void require_value_in_target(const MonomialMap& f, const WpsPoint& y) {
  if (y.weights() != f.target()) {
    throw Error(ErrorKind::WeightMismatch, "value does not lie in the target of the map");
  }
}

void require_regular(const MonomialMap& f, const WpsPoint& y) {
  const auto cert = certify_regular(f, y);
  if (!cert.regular) {
    throw Error(ErrorKind::NotRegular, y.str() + " is a critical value");
  }
}

void require_under_cap(const OrbitLayout& layout, const EnumerationConfig& cfg) {
  if (layout.tuple_count > cfg.cap) {
    throw Error(ErrorKind::EnumerationCapExceeded,
                std::to_string(layout.tuple_count) + " root tuples exceed the cap of " +
                    std::to_string(cfg.cap));
  }
}

// Decodes a flat index over prod [0, rep_bound_i) into a tuple (last
// coordinate fastest, so increasing index is increasing lex order).
void decode(const OrbitLayout& layout, std::uint64_t index, std::vector<std::int64_t>& t) {
  for (std::size_t k = layout.rep_bound.size(); k-- > 0;) {
    const auto b = static_cast<std::uint64_t>(layout.rep_bound[k]);
    t[k] = static_cast<std::int64_t>(index % b);
    index /= b;
  }
}

void advance(const OrbitLayout& layout, std::vector<std::int64_t>& t) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (++t[k] < layout.rep_bound[k]) return;
    t[k] = 0;
  }
}

struct PreimageBuilder {
  const MonomialMap& f;
  const WpsPoint& y;
  const OrbitLayout& layout;
  std::vector<RootOfUnity> principal;  // fixed e_i-th roots of y_i

  PreimageBuilder(const MonomialMap& map, const WpsPoint& value, const OrbitLayout& lay)
      : f(map), y(value), layout(lay) {
    for (std::size_t k = 0; k < layout.support.size(); ++k) {
      const std::size_t i = layout.support[k];
      principal.push_back(y.coords()[i].unit().principal_root(layout.radices[k]));
    }
  }

  WpsPoint point(const std::vector<std::int64_t>& t) const {
    std::vector<ExactCoordinate> z(y.size());
    for (std::size_t k = 0; k < layout.support.size(); ++k) {
      z[layout.support[k]] = principal[k] * RootOfUnity(t[k], layout.radices[k]);
    }
    return WpsPoint(f.source(), std::move(z)).canonical();
  }
};

}  // namespace

RegularityCertificate certify_regular(const MonomialMap& f, const WpsPoint& y) {
  require_value_in_target(f, y);
  RegularityCertificate cert;
  cert.support = y.support();
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y.coords()[j].is_zero() && f.exponents()[j] > 1) cert.critical_coordinates.push_back(j);
  }
  cert.regular = cert.critical_coordinates.empty();
  return cert;
}

bool is_regular_value(const MonomialMap& f, const WpsPoint& y) {
  return certify_regular(f, y).regular;
}

OrbitLayout orbit_layout(const MonomialMap& f, const WpsPoint& y) {
  require_value_in_target(f, y);
  OrbitLayout layout;
  layout.support = y.support();
  layout.source_isotropy = gcd_over(f.source(), layout.support);
  layout.target_isotropy = gcd_over(f.target(), layout.support);

  // The residual group mu_{d * g_S(r)} acts on root tuples by translating
  // the index of coordinate i by r_i / g_S(r).
  std::int64_t stabilizer_step = 1;  // current subgroup is <stabilizer_step * shift>
  std::uint64_t orbit_size = 1;
  for (std::size_t i : layout.support) {
    const std::int64_t e = f.exponents()[i];
    const std::int64_t v = (f.target()[i] / layout.target_isotropy) % e;
    layout.radices.push_back(e);
    layout.shift.push_back(v);
    layout.tuple_count = static_cast<std::uint64_t>(
        detail::checked_mul(static_cast<std::int64_t>(layout.tuple_count), e));

    const auto u = static_cast<std::int64_t>((static_cast<__int128>(stabilizer_step) * v) % e);
    const std::int64_t c = std::gcd(u, e);  // gcd(0, e) = e
    const std::int64_t step_order = e / c;
    layout.rep_bound.push_back(c);
    layout.orbit_count *= static_cast<std::uint64_t>(c);
    orbit_size *= static_cast<std::uint64_t>(step_order);
    stabilizer_step = detail::checked_mul(stabilizer_step, step_order);
  }
  layout.orbit_size = orbit_size;
  return layout;
}

std::uint64_t preimage_count(const MonomialMap& f, const WpsPoint& y) {
  require_regular(f, y);
  return orbit_layout(f, y).orbit_count;
}

std::vector<PreimageRecord> preimages(const MonomialMap& f, const WpsPoint& y,
                                      const EnumerationConfig& cfg) {
  require_regular(f, y);
  const OrbitLayout layout = orbit_layout(f, y);
  require_under_cap(layout, cfg);
  const PreimageBuilder builder(f, y, layout);
  const std::int64_t target_order = isotropy(y).order;

  auto fill = [&](std::uint64_t begin, std::uint64_t end, std::vector<PreimageRecord>& out) {
    out.reserve(end - begin);
    std::vector<std::int64_t> t(layout.support.size());
    decode(layout, begin, t);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      WpsPoint x = builder.point(t);
      const std::int64_t src_order = isotropy(x).order;
      const Rational w(target_order, src_order);
      if (w.denominator() != 1) {
        throw Error(ErrorKind::NonIntegralWeight, "weight " + std::to_string(target_order) + "/" +
                                                      std::to_string(src_order) + " at " +
                                                      x.str());
      }
      out.push_back({std::move(x), src_order, w.numerator(), 1});
      advance(layout, t);
    }
  };

  const std::uint64_t total = layout.orbit_count;
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (total < (1u << 14)) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total ? total : 1));

  std::vector<std::vector<PreimageRecord>> parts(threads);
  if (threads == 1) {
    fill(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned k = 0; k < threads; ++k) {
      const std::uint64_t begin = total * k / threads;
      const std::uint64_t end = total * (k + 1) / threads;
      pool.emplace_back([&, k, begin, end] {
        try {
          fill(begin, end, parts[k]);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<PreimageRecord> out;
  out.reserve(total);
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  // Points are already canonical, so comparing coordinates orders them as points.
  std::sort(out.begin(), out.end(), [](const PreimageRecord& a, const PreimageRecord& b) {
    return a.point.coords() < b.point.coords();
  });

  // Translation action: every orbit has the same stabilizer.
  for (const auto& rec : out) {
    if (rec.isotropy != out.front().isotropy) {
      throw Error(ErrorKind::PreconditionViolated, "preimages report differing isotropy orders");
    }
  }
  return out;
}

std::int64_t weighted_cardinality(const MonomialMap& f, const WpsPoint& y,
                                  const EnumerationConfig& cfg) {
  require_regular(f, y);
  const OrbitLayout layout = orbit_layout(f, y);
  require_under_cap(layout, cfg);
  const Rational weight(isotropy(y).order, layout.source_isotropy);
  Rational sum(0);
  std::vector<std::int64_t> t(layout.support.size(), 0);
  for (std::uint64_t idx = 0; idx < layout.orbit_count; ++idx) {
    sum += weight;
    advance(layout, t);
  }
  if (sum.denominator() != 1) {
    throw Error(ErrorKind::NonIntegralWeight, "weighted cardinality is not an integer");
  }
  return sum.numerator();
}

DegreeResult degree(const MonomialMap& f, const std::optional<WpsPoint>& y,
                    const EnumerationConfig& cfg) {
  const WpsPoint value = y.value_or(WpsPoint::ones(f.target()));
  auto cert = certify_regular(f, value);
  if (!cert.regular) throw Error(ErrorKind::NotRegular, value.str() + " is a critical value");
  auto records = preimages(f, value, cfg);

  Rational weighted(0);
  Rational oriented(0);
  for (const auto& rec : records) {
    weighted += rec.weight;
    oriented += rec.sign * rec.weight;
  }
  if (weighted.denominator() != 1 || oriented.denominator() != 1) {
    throw Error(ErrorKind::NonIntegralWeight, "degree sum is not an integer");
  }
  DegreeResult out{weighted.numerator(), static_cast<int>(weighted.numerator() % 2),
                   oriented.numerator(), value, std::move(cert), std::move(records)};
  return out;
}

std::int64_t degree_closed_form(const MonomialMap& f) {
  std::int64_t prod = 1;
  for (auto e : f.exponents()) prod = detail::checked_mul(prod, e);
  if (prod % f.equivariance_degree() != 0) {
    throw Error(ErrorKind::NonIntegralWeight, "prod(e)/d is not an integer");
  }
  return prod / f.equivariance_degree();
}

bool smooth_preimage_check(const MonomialMap& f, const WpsPoint& y, const EnumerationConfig& cfg) {
  if (!isotropy(y).smooth()) {
    throw Error(ErrorKind::PreconditionViolated, y.str() + " is not a smooth point");
  }
  if (!is_regular_value(f, y)) {
    throw Error(ErrorKind::PreconditionViolated, y.str() + " is not a regular value");
  }
  const auto recs = preimages(f, y, cfg);
  return std::all_of(recs.begin(), recs.end(), [](const auto& r) { return r.isotropy == 1; });
}

}  // namespace orbideg
