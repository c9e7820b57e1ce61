#include "orbideg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "orbideg/errors.hpp"
#include "orbideg/strata.hpp"

namespace orbideg {

namespace {

constexpr double kPi = std::numbers::pi;

std::string join(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::uint64_t exponent_product(const MonomialMap& f) {
  std::uint64_t p = 1;
  for (auto e : f.exponents()) {
    if (p > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(e)) return UINT64_MAX;
    p *= static_cast<std::uint64_t>(e);
  }
  return p;
}

bool all_ones(const Weights& w) {
  return std::all_of(w.begin(), w.end(), [](auto v) { return v == 1; });
}

PropertyReport make_report(std::string name, std::string statement) {
  PropertyReport r;
  r.name = std::move(name);
  r.statement = std::move(statement);
  return r;
}

const char* kLocalConstancy = "the weighted preimage count is locally constant on regular values";
const char* kIndependence =
    "with no codimension-one singular stratum, the degree is the same at every regular value";
const char* kCounterexample =
    "on a quotient with a codimension-one stratum the mod-2 count can depend on the value";
const char* kMultiplicativity = "the degree of a composition is the product of the degrees";
const char* kSameUnderlying = "maps with equal underlying maps have equal mod-2 degrees";
const char* kCovering = "S^1 -> S^1//Z_k has degree k, and quotients of power maps scale by b/k";
const char* kOracle = "orbit enumeration matches prod(e)/d and preimages of smooth values are smooth";
const char* kSurjectivity = "a map of nonzero degree hits every regular value";
const char* kNumeric = "numeric Jacobian signs and regularity match the exact preimage records";
const char* kSliceLift =
    "the slice correction converges, is invariant under isotropy and vanishes linearly at x";
const char* kVertexArc =
    "along an arc through a singular value the raw count jumps while the weighted count stays put";

template <class F>
void guarded(PropertyReport& rep, const std::string& input, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    rep.check(false, input, std::string(to_string(e.kind())) + ": " + e.what());
  }
}

}  // namespace

void PropertyReport::check(bool ok, const std::string& input, const std::string& detail) {
  ++cases;
  if (!ok) failures.push_back({input, detail});
}

void PropertyReport::merge(const PropertyReport& other) {
  cases += other.cases;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Weights random_weights(Rng& rng, std::size_t len, std::int64_t max_weight) {
  for (;;) {
    Weights w(len);
    for (auto& v : w) v = draw(rng, 1, max_weight);
    std::int64_t g = 0;
    for (auto v : w) g = std::gcd(g, v);
    if (g == 1) return w;
  }
}

MonomialMap random_chain(Rng& rng, const Weights& source, int steps, std::int64_t max_weight,
                         std::uint64_t max_product) {
  MonomialMap cur = MonomialMap::identity(source);
  for (int s = 0; s < steps; ++s) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const Weights& w = cur.target();
      const MonomialMap next = all_ones(w)
                                   ? MonomialMap::f_type(random_weights(rng, w.size(), max_weight))
                                   : MonomialMap::g_type(w);
      MonomialMap cand = compose(cur, next);
      if (exponent_product(cand) <= max_product) {
        cur = std::move(cand);
        break;
      }
    }
  }
  return cur;
}

MonomialMap random_map(Rng& rng, std::size_t max_n, std::uint64_t max_product) {
  const auto len = static_cast<std::size_t>(draw(rng, 2, static_cast<std::int64_t>(max_n) + 1));
  const Weights source = draw(rng, 0, 1) ? Weights(len, 1) : random_weights(rng, len, 6);
  return random_chain(rng, source, static_cast<int>(draw(rng, 1, 3)), 6, max_product);
}

WpsPoint random_value(Rng& rng, const MonomialMap& f, const std::vector<std::size_t>& support) {
  std::vector<ExactCoordinate> coords(f.size());
  for (auto j : support) {
    const std::int64_t m = draw(rng, 1, 12);
    coords[j] = ExactCoordinate(RootOfUnity(draw(rng, 0, m - 1), m));
  }
  return WpsPoint(f.target(), std::move(coords));
}

std::vector<std::vector<std::size_t>> regular_supports(const MonomialMap& f) {
  const std::size_t n = f.size();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        s.push_back(j);
      } else if (f.exponents()[j] != 1) {
        ok = false;
      }
    }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

std::string describe(const MonomialMap& f) {
  return "q=" + join(f.source()) + " r=" + join(f.target()) + " e=" + join(f.exponents());
}

PropertyReport check_local_constancy(const MonomialMap& f, const WpsPoint& y, int perturbations,
                                     Rng& rng, const EnumerationConfig& cfg) {
  auto rep = make_report("local-constancy", kLocalConstancy);
  guarded(rep, describe(f) + " y=" + y.str(), [&] {
    const std::int64_t base = weighted_cardinality(f, y, cfg);
    const auto s = y.support();
    for (int i = 0; i < perturbations; ++i) {
      std::vector<std::size_t> support;
      for (std::size_t j = 0; j < f.size(); ++j) {
        const bool in = std::find(s.begin(), s.end(), j) != s.end();
        if (in || (i % 2 == 1 && draw(rng, 0, 1))) support.push_back(j);
      }
      const WpsPoint near = random_value(rng, f, support);
      const std::int64_t w = weighted_cardinality(f, near, cfg);
      rep.check(w == base, describe(f) + " y=" + y.str() + " y'=" + near.str(),
                std::to_string(base) + " vs " + std::to_string(w));
    }
  });
  return rep;
}

PropertyReport check_local_constancy_arc(const MonomialMap& f,
                                         const std::vector<std::complex<double>>& from,
                                         const std::vector<std::complex<double>>& to, int samples,
                                         const NumericTolerances& tol) {
  auto rep = make_report("local-constancy", kLocalConstancy);
  guarded(rep, describe(f) + " arc", [&] {
    const auto arc = value_arc(f, from, to, samples, tol);
    for (const auto& a : arc) {
      const std::string input = describe(f) + " t=" + fmt(a.t);
      rep.check(a.weighted_count == arc.front().weighted_count, input,
                "weighted count " + std::to_string(a.weighted_count));
      rep.check(a.signs_positive && a.min_singular_value > tol.singular_threshold, input,
                "numeric certificate failed, sigma_min=" + fmt(a.min_singular_value));
      rep.check(a.max_lift_residual < tol.residual, input,
                "rebuilt preimage misses the value by " + fmt(a.max_lift_residual));
    }
  });
  return rep;
}

PropertyReport check_value_independence(const MonomialMap& f, int samples_per_support, Rng& rng,
                                        const EnumerationConfig& cfg) {
  auto rep = make_report("value-independence", kIndependence);
  guarded(rep, describe(f), [&] {
    const std::int64_t expected = degree(f, std::nullopt, cfg).weighted_count;
    for (const auto& s : regular_supports(f)) {
      for (int k = 0; k < samples_per_support; ++k) {
        const WpsPoint y = random_value(rng, f, s);
        const std::int64_t w = weighted_cardinality(f, y, cfg);
        rep.check(w == expected, describe(f) + " y=" + y.str(),
                  std::to_string(w) + " != " + std::to_string(expected));
      }
    }
  });
  return rep;
}

PropertyReport check_value_independence(const CircleMap& m, int samples) {
  const bool codim1_empty = strata(m.domain()).codim1_empty;
  auto rep = codim1_empty ? make_report("value-independence", kIndependence)
                          : make_report("counterexample", kCounterexample);
  std::vector<double> values{kPi / 2, 3 * kPi / 2};
  for (int k = 0; k < samples; ++k) values.push_back(2 * kPi * (k + 0.5) / samples);

  std::vector<std::pair<double, CircleDegree>> regular;
  for (double y : values) {
    try {
      regular.emplace_back(y, circle_degree2(m, y));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CriticalValue) {
        rep.check(false, m.name() + " y=" + fmt(y), e.what());
      }
    }
  }
  if (codim1_empty) {
    for (const auto& [y, d] : regular) {
      rep.check(d.weighted_count == regular.front().second.weighted_count,
                m.name() + " y=" + fmt(y), "weighted count " + std::to_string(d.weighted_count));
    }
    if (regular.empty()) rep.check(false, m.name(), "no regular values sampled");
    return rep;
  }
  for (std::size_t i = 0; i < regular.size(); ++i) {
    for (std::size_t j = i + 1; j < regular.size(); ++j) {
      if (regular[i].second.mod2 != regular[j].second.mod2) {
        rep.check(true, m.name() + " y=" + fmt(regular[i].first) + " y'=" +
                            fmt(regular[j].first));
        return rep;
      }
    }
  }
  rep.check(false, m.name(), "every sampled regular value has the same mod-2 degree");
  return rep;
}

PropertyReport check_multiplicativity(const MonomialMap& f, const MonomialMap& g,
                                      const EnumerationConfig& cfg) {
  auto rep = make_report("multiplicativity", kMultiplicativity);
  const std::string input = "f: " + describe(f) + " g: " + describe(g);
  guarded(rep, input, [&] {
    const std::int64_t df = degree(f, std::nullopt, cfg).oriented;
    const std::int64_t dg = degree(g, std::nullopt, cfg).oriented;
    const std::int64_t dh = degree(compose(f, g), std::nullopt, cfg).oriented;
    rep.check(dh == df * dg, input,
              std::to_string(dh) + " != " + std::to_string(df) + "*" + std::to_string(dg));
  });
  return rep;
}

PropertyReport check_same_underlying(const CircleMap& a, const CircleMap& b, int grid,
                                     int values) {
  auto rep = make_report("same-underlying", kSameUnderlying);
  const std::string pair = a.name() + " vs " + b.name();
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain())) {
    rep.check(false, pair, "domains or codomains differ");
    return rep;
  }
  const CircleQuotient& cod = a.codomain();
  double worst = 0;
  for (int k = 0; k < grid; ++k) {
    const double t = 2 * kPi * k / grid;
    const double d =
        std::abs(angle_diff(cod.fold(circle_eval(a, t)), cod.fold(circle_eval(b, t))));
    worst = std::max(worst, d);
  }
  rep.check(worst < 1e-12, pair, "underlying maps differ by " + fmt(worst));

  const bool oriented = a.domain().orientable() && cod.orientable();
  const double span = cod.kind() == CircleQuotient::Kind::Reflection
                          ? kPi
                          : 2 * kPi / static_cast<double>(cod.rotation_order());
  for (int k = 0; k < values; ++k) {
    const double y = cod.kind() == CircleQuotient::Kind::Reflection
                         ? span * (k + 1) / (values + 1)
                         : span * (k + 0.5) / values;
    const std::string input = pair + " y=" + fmt(y);
    try {
      const auto da = circle_degree2(a, y);
      const auto db = circle_degree2(b, y);
      rep.check(da.mod2 == db.mod2, input,
                "mod-2 degrees " + std::to_string(da.mod2) + " and " + std::to_string(db.mod2));
      if (oriented) {
        rep.check(da.oriented == db.oriented, input,
                  "oriented degrees " + std::to_string(da.oriented) + " and " +
                      std::to_string(db.oriented));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CriticalValue) rep.check(false, input, e.what());
    }
  }
  return rep;
}

PropertyReport check_same_underlying(const MonomialMap& a, const MonomialMap& b, int samples,
                                     Rng& rng, const EnumerationConfig& cfg) {
  auto rep = make_report("same-underlying", kSameUnderlying);
  const std::string pair = describe(a) + " vs " + describe(b);
  if (a.source() != b.source() || a.target() != b.target()) {
    rep.check(false, pair, "domains or codomains differ");
    return rep;
  }
  guarded(rep, pair, [&] {
    for (int k = 0; k < samples; ++k) {
      std::vector<ExactCoordinate> coords(a.size());
      for (auto& c : coords) {
        const std::int64_t m = draw(rng, 1, 24);
        if (draw(rng, 0, 3)) c = ExactCoordinate(RootOfUnity(draw(rng, 0, m - 1), m));
      }
      if (std::all_of(coords.begin(), coords.end(), [](auto& c) { return c.is_zero(); })) {
        coords.front() = ExactCoordinate::one();
      }
      const WpsPoint x(a.source(), std::move(coords));
      rep.check(underlying_image(a, x) == underlying_image(b, x), pair + " x=" + x.str(),
                "underlying images differ");
    }
    const auto supports = regular_supports(a);
    for (int k = 0; k < samples; ++k) {
      const auto& s = supports[static_cast<std::size_t>(draw(rng, 0, supports.size() - 1))];
      const WpsPoint y = random_value(rng, a, s);
      if (!is_regular_value(b, y)) {
        rep.check(false, pair + " y=" + y.str(), "regular for one map only");
        continue;
      }
      const auto wa = weighted_cardinality(a, y, cfg);
      const auto wb = weighted_cardinality(b, y, cfg);
      rep.check(wa == wb, pair + " y=" + y.str(),
                std::to_string(wa) + " vs " + std::to_string(wb));
    }
  });
  return rep;
}

PropertyReport check_covering(std::int64_t max_k) {
  auto rep = make_report("covering", kCovering);
  for (std::int64_t k = 2; k <= max_k; ++k) {
    const std::string input = "covering k=" + std::to_string(k);
    guarded(rep, input, [&] {
      const auto d = circle_degree2(CircleMap::covering_projection(k), 0.3);
      rep.check(d.weighted_count == k && d.oriented == k, input,
                "degree " + std::to_string(d.oriented));
    });
  }
  // (m, k, b): theta -> m theta from S^1//Z_k to S^1//Z_b.
  const std::int64_t grid[][3] = {{6, 3, 1}, {3, 3, 1}, {4, 2, 1}, {5, 1, 1}, {-3, 1, 1},
                                  {1, 1, 4}, {3, 1, 3}, {6, 2, 3}, {2, 4, 2}, {4, 6, 3}};
  for (const auto& c : grid) {
    const std::string input = "m=" + std::to_string(c[0]) + " k=" + std::to_string(c[1]) +
                              " b=" + std::to_string(c[2]);
    guarded(rep, input, [&] {
      const std::int64_t d = covering_degree(c[1], c[0], c[2]);
      rep.check(d * c[1] == c[0] * c[2], input, "degree " + std::to_string(d));
    });
  }
  return rep;
}

PropertyReport check_oracle(const MonomialMap& f, const EnumerationConfig& cfg) {
  auto rep = make_report("oracle", kOracle);
  guarded(rep, describe(f), [&] {
    const WpsPoint y = WpsPoint::ones(f.target());
    const std::int64_t closed = degree_closed_form(f);
    const auto records = preimages(f, y, cfg);
    std::int64_t sum = 0;
    for (const auto& r : records) sum += r.sign * r.weight;
    rep.check(sum == closed, describe(f),
              "enumeration " + std::to_string(sum) + " vs closed form " + std::to_string(closed));
    rep.check(weighted_cardinality(f, y, cfg) == closed, describe(f), "transversal walk disagrees");
    rep.check(preimage_count(f, y) == records.size(), describe(f), "orbit count disagrees");
    rep.check(smooth_preimage_check(f, y, cfg), describe(f), "singular preimage of smooth value");
  });
  return rep;
}

PropertyReport check_surjectivity(const MonomialMap& f, int samples, Rng& rng,
                                  const EnumerationConfig& cfg) {
  auto rep = make_report("surjectivity", kSurjectivity);
  guarded(rep, describe(f), [&] {
    if (degree(f, std::nullopt, cfg).oriented == 0) return;
    const auto supports = regular_supports(f);
    for (int k = 0; k < samples; ++k) {
      const auto& s = supports[static_cast<std::size_t>(draw(rng, 0, supports.size() - 1))];
      const WpsPoint y = random_value(rng, f, s);
      rep.check(preimage_count(f, y) > 0, describe(f) + " y=" + y.str(), "empty preimage");
    }
  });
  return rep;
}

PropertyReport check_numeric_agreement(const MonomialMap& f, const WpsPoint& y,
                                       std::size_t max_points, const NumericTolerances& tol,
                                       const EnumerationConfig& cfg) {
  auto rep = make_report("numeric-agreement", kNumeric);
  const std::string input = describe(f) + " y=" + y.str();
  guarded(rep, input, [&] {
    const auto records = preimages(f, y, cfg);
    std::vector<double> moduli(f.size(), 0.0);
    for (auto j : y.support()) moduli[j] = 1.0;
    const CVector target = to_sphere(y);
    for (std::size_t i = 0; i < std::min(max_points, records.size()); ++i) {
      const std::string at = input + " x=" + records[i].point.str();
      const CVector z = sphere_preimage(f, records[i].point, moduli);
      const double miss = orbit_distance(f.target(), monomial_lift(f, z), target);
      rep.check(miss < tol.residual, at, "lift misses the value by " + fmt(miss));
      const auto cert = jacobian_certificate(f, z, tol);
      rep.check(cert.regular && cert.sign == records[i].sign, at,
                "sign " + std::to_string(cert.sign) + ", sigma_min " +
                    fmt(cert.smallest_singular_value));
    }
  });
  return rep;
}

PropertyReport check_slice_lift(const MonomialMap& f, const WpsPoint& x, int perturbations,
                                Rng& rng, const NumericTolerances& tol) {
  auto rep = make_report("slice-lift", kSliceLift);
  const std::string input = describe(f) + " x=" + x.str();
  guarded(rep, input, [&] {
    // Random moduli over the support keep x generic within its stratum.
    std::uniform_real_distribution<double> unit(0.2, 1.0);
    CVector base = to_sphere(x);
    for (Eigen::Index j = 0; j < base.size(); ++j) base(j) *= unit(rng);
    const SliceChart source(f.source(), base);
    const SliceChart target(f.target(), monomial_lift(f, source.base()));
    const std::int64_t g = isotropy(x).order;
    std::normal_distribution<double> normal;

    for (int k = 0; k < perturbations; ++k) {
      RVector dir(source.dim());
      for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = normal(rng);
      dir.normalize();
      const double h = std::pow(10.0, -2.0 - 2.0 * unit(rng));
      const std::string at = input + " s=" + fmt(h) + "*dir#" + std::to_string(k);
      const auto ev = slice_lift(f, source, target, h * dir, tol);
      const double direct = target.slice_residual(ev.output);
      rep.check(std::abs(ev.residual) < tol.residual && std::abs(direct) < tol.residual, at,
                "residual " + fmt(ev.residual) + ", substituted " + fmt(direct));

      for (std::int64_t j = 1; j < g; ++j) {
        const CVector moved = circle_act(f.source(), source.point(h * dir),
                                         2 * kPi * static_cast<double>(j) / static_cast<double>(g));
        const auto ev2 = slice_lift(f, source, target, source.coordinates(moved), tol);
        rep.check(std::abs(ev2.phase - ev.phase) < 1e-9, at + " gamma=" + std::to_string(j) + "/" +
                                                             std::to_string(g),
                  "phase " + fmt(ev.phase) + " vs " + fmt(ev2.phase));
      }
    }

    RVector dir(source.dim());
    for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = normal(rng);
    dir.normalize();
    double prev = std::abs(slice_lift(f, source, target, 1e-2 * dir, tol).phase);
    for (double h : {1e-3, 1e-4}) {
      const double cur = std::abs(slice_lift(f, source, target, h * dir, tol).phase);
      rep.check(cur <= 0.15 * prev + 1e-12, input + " h=" + fmt(h),
                "phase " + fmt(cur) + " after " + fmt(prev));
      prev = cur;
    }
  });
  return rep;
}

namespace {

std::vector<MonomialMap> corpus(std::uint64_t seed, int count, std::uint64_t max_product,
                                std::size_t max_n = 3) {
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + 0x51ED);
  std::vector<MonomialMap> out;
  while (static_cast<int>(out.size()) < count) {
    out.push_back(random_map(rng, max_n, max_product));
  }
  return out;
}

std::vector<MonomialMap> named_maps() {
  return {MonomialMap::f_type({1, 3}),
          MonomialMap::f_type({2, 3, 5}),
          MonomialMap::g_type({1, 2, 3}),
          MonomialMap::g_type({2, 3}),
          compose(MonomialMap::g_type({1, 3}), MonomialMap::f_type({1, 2})),
          MonomialMap::identity({1, 1})};
}

using Suite = std::function<std::vector<PropertyReport>(std::uint64_t, const EnumerationConfig&)>;

std::vector<PropertyReport> suite_counterexample(std::uint64_t, const EnumerationConfig&) {
  return {check_value_independence(CircleMap::half_fold(), 64)};
}

std::vector<PropertyReport> suite_value_independence(std::uint64_t seed,
                                                     const EnumerationConfig& cfg) {
  Rng rng(seed + 11);
  auto rep = make_report("value-independence", kIndependence);
  for (const auto& f : named_maps()) rep.merge(check_value_independence(f, 2, rng, cfg));
  for (const auto& f : corpus(seed, 50, 100'000)) rep.merge(check_value_independence(f, 1, rng, cfg));
  rep.merge(check_value_independence(CircleMap::power(3), 32));
  rep.merge(check_value_independence(CircleMap::covering_projection(3), 32));
  return {rep};
}

std::vector<PropertyReport> suite_local_constancy(std::uint64_t seed,
                                                  const EnumerationConfig& cfg) {
  Rng rng(seed + 13);
  auto rep = make_report("local-constancy", kLocalConstancy);
  const Weights q13{1, 3};
  rep.merge(check_local_constancy(MonomialMap::f_type(q13),
                                  WpsPoint(q13, {ExactCoordinate::zero(), ExactCoordinate::one()}),
                                  16, rng, cfg));
  rep.merge(check_local_constancy(MonomialMap::identity({1, 1}), WpsPoint::ones({1, 1}), 8, rng,
                                  cfg));
  const MonomialMap h = compose(MonomialMap::g_type(q13), MonomialMap::f_type({1, 2}));
  rep.merge(check_local_constancy(h, WpsPoint::ones({1, 2}), 8, rng, cfg));
  for (const auto& f : corpus(seed + 1, 20, 20'000)) {
    const auto supports = regular_supports(f);
    const auto& s = supports[static_cast<std::size_t>(draw(rng, 0, supports.size() - 1))];
    rep.merge(check_local_constancy(f, random_value(rng, f, s), 4, rng, cfg));
  }
  rep.merge(check_local_constancy_arc(MonomialMap::f_type(q13), {-1.0, 1.0}, {1.0, 1.0}, 41));
  return {rep};
}

std::vector<PropertyReport> suite_multiplicativity(std::uint64_t seed,
                                                   const EnumerationConfig& cfg) {
  Rng rng(seed + 17);
  auto rep = make_report("multiplicativity", kMultiplicativity);
  const Weights q13{1, 3};
  rep.merge(check_multiplicativity(MonomialMap::f_type(q13), MonomialMap::g_type(q13), cfg));
  rep.merge(check_multiplicativity(MonomialMap::g_type(q13), MonomialMap::f_type({1, 2}), cfg));
  rep.merge(check_multiplicativity(MonomialMap::f_type(q13), MonomialMap::identity(q13), cfg));
  for (int k = 0; k < 20; ++k) {
    for (;;) {
      const MonomialMap f = random_map(rng, 3, 2'000);
      const MonomialMap g = random_chain(rng, f.target(), static_cast<int>(draw(rng, 1, 2)), 6,
                                         2'000);
      if (exponent_product(compose(f, g)) > 100'000) continue;
      rep.merge(check_multiplicativity(f, g, cfg));
      break;
    }
  }
  return {rep};
}

std::vector<PropertyReport> suite_same_underlying(std::uint64_t seed,
                                                  const EnumerationConfig& cfg) {
  Rng rng(seed + 19);
  auto rep = check_same_underlying(CircleMap::essential_f(), CircleMap::essential_g(), 10'000, 60);
  rep.merge(check_same_underlying(CircleMap::half_fold(), CircleMap::half_fold(), 1'000, 20));
  rep.merge(check_same_underlying(MonomialMap::f_type({2, 3, 5}),
                                  MonomialMap(Weights{1, 1, 1}, Weights{2, 3, 5}, {2, 3, 5}), 8,
                                  rng, cfg));
  for (const auto& f : corpus(seed + 2, 10, 20'000)) {
    const MonomialMap copy(f.source(), f.target(), f.exponents());
    rep.merge(check_same_underlying(f, copy, 4, rng, cfg));
  }
  return {rep};
}

std::vector<PropertyReport> suite_covering(std::uint64_t, const EnumerationConfig&) {
  return {check_covering(6)};
}

std::vector<PropertyReport> suite_oracle(std::uint64_t seed, const EnumerationConfig& cfg) {
  Rng rng(seed + 23);
  auto oracle = make_report("oracle", kOracle);
  auto onto = make_report("surjectivity", kSurjectivity);
  auto maps = named_maps();
  for (auto& f : corpus(seed, 50, 100'000)) maps.push_back(std::move(f));
  for (const auto& f : maps) {
    oracle.merge(check_oracle(f, cfg));
    onto.merge(check_surjectivity(f, 3, rng, cfg));
  }
  return {oracle, onto};
}

std::vector<PropertyReport> suite_numeric(std::uint64_t seed, const EnumerationConfig& cfg) {
  Rng rng(seed + 29);
  auto agree = make_report("numeric-agreement", kNumeric);
  for (const auto& f : corpus(seed + 3, 100, 2'000)) {
    const auto supports = regular_supports(f);
    const auto& s = supports[static_cast<std::size_t>(draw(rng, 0, supports.size() - 1))];
    agree.merge(check_numeric_agreement(f, random_value(rng, f, s), 4, {}, cfg));
  }

  auto lift = make_report("slice-lift", kSliceLift);
  for (const auto& f : corpus(seed + 4, 25, 200, 2)) {
    lift.merge(check_slice_lift(f, WpsPoint::ones(f.source()), 4, rng));
  }
  const Weights q13{1, 3};
  const WpsPoint pole(q13, {ExactCoordinate::zero(), ExactCoordinate::one()});
  lift.merge(check_slice_lift(MonomialMap::g_type(q13), pole, 8, rng));
  lift.merge(check_slice_lift(MonomialMap::identity(q13), pole, 4, rng));
  const Weights q133{1, 3, 3};
  lift.merge(check_slice_lift(
      MonomialMap(q133, q133, {2, 2, 2}),
      WpsPoint(q133, {ExactCoordinate::zero(), ExactCoordinate::one(), ExactCoordinate::one()}), 8,
      rng));
  const Weights q112{1, 1, 2};
  lift.merge(check_slice_lift(
      MonomialMap::g_type(q112),
      WpsPoint(q112, {ExactCoordinate::zero(), ExactCoordinate::zero(), ExactCoordinate::one()}),
      4, rng));

  auto arc = make_report("vertex-arc", kVertexArc);
  guarded(arc, "f q=(1,3)", [&] {
    const auto samples =
        value_arc(MonomialMap::f_type(q13), {-1.0, 1.0}, {1.0, 1.0}, 41, {}, cfg);
    std::vector<std::uint64_t> raw;
    for (const auto& a : samples) {
      raw.push_back(a.raw_count);
      arc.check(a.weighted_count == 3 && a.signs_positive && a.min_singular_value > 1e-6,
                "t=" + fmt(a.t), "weighted " + std::to_string(a.weighted_count));
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    arc.check(raw == std::vector<std::uint64_t>{1, 3}, "f q=(1,3) raw counts",
              "raw counts do not take exactly the values 1 and 3");
  });
  return {agree, arc, lift};
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"counterexample", suite_counterexample},
      {"covering", suite_covering},
      {"local-constancy", suite_local_constancy},
      {"multiplicativity", suite_multiplicativity},
      {"numeric", suite_numeric},
      {"oracle", suite_oracle},
      {"same-underlying", suite_same_underlying},
      {"value-independence", suite_value_independence},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_selectors() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [k, _] : suites()) v.push_back(k);
    return v;
  }();
  return names;
}

std::vector<PropertyReport> run_suite(const std::string& selector, std::uint64_t seed,
                                      const EnumerationConfig& cfg) {
  std::vector<Suite> chosen;
  if (selector == "all") {
    for (const auto& [_, s] : suites()) chosen.push_back(s);
  } else if (auto it = suites().find(selector); it != suites().end()) {
    chosen.push_back(it->second);
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown suite '" + selector + "'");
  }
  std::vector<std::future<std::vector<PropertyReport>>> jobs;
  for (const auto& s : chosen) jobs.push_back(std::async(std::launch::async, s, seed, cfg));
  std::vector<PropertyReport> out;
  for (auto& j : jobs) {
    for (auto& r : j.get()) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace orbideg
