// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "orbideg/circle_map.hpp"
#include "orbideg/degree.hpp"
#include "orbideg/errors.hpp"
#include "orbideg/slice_lift.hpp"
#include "orbideg/verify.hpp"

using namespace orbideg;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Weights> family() {
  // (1,...,1,k) for k in {2,3,5}, n = 1 and 2.
  std::vector<Weights> out{{1, 3}, {2, 3}, {1, 2, 3}, {3, 4, 5}};
  for (std::int64_t k : {2, 3, 5}) {
    out.push_back({1, k});
    out.push_back({1, 1, k});
  }
  return out;
}

std::int64_t product(const Weights& q) {
  return std::accumulate(q.begin(), q.end(), std::int64_t{1}, std::multiplies<>());
}

std::int64_t lcm_all(const Weights& q) {
  return std::accumulate(q.begin(), q.end(), std::int64_t{1},
                         [](auto a, auto b) { return std::lcm(a, b); });
}

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

using Criterion = std::function<Outcome()>;

Outcome c1() {
  Outcome o;
  for (const auto& q : family()) {
    const auto d = degree(MonomialMap::f_type(q));
    o.require(d.oriented == product(q) && d.weighted_count == product(q), "f_q mismatch");
  }
  o.note = o.ok ? "f_q degree = prod(q) on 10 weight vectors" : o.note;
  return o;
}

Outcome c2() {
  Outcome o;
  for (const auto& q : family()) {
    const std::int64_t expected = ipow(lcm_all(q), q.size() - 1) / product(q);
    o.require(ipow(lcm_all(q), q.size() - 1) % product(q) == 0, "closed form not integral");
    o.require(degree(MonomialMap::g_type(q)).oriented == expected, "g_q mismatch");
  }
  o.note = o.ok ? "g_q degree = lcm(q)^n/prod(q) on 10 weight vectors" : o.note;
  return o;
}

Outcome c3() {
  Outcome o;
  const std::vector<std::pair<Weights, Weights>> pairs{
      {{1, 3}, {1, 2}}, {{2, 3}, {1, 5}}, {{1, 2, 3}, {1, 1, 2}}};
  std::string got;
  for (const auto& [q, r] : pairs) {
    const auto h = compose(MonomialMap::g_type(q), MonomialMap::f_type(r));
    const std::int64_t expected = ipow(lcm_all(q), q.size() - 1) / product(q) * product(r);
    const auto d = degree(h).oriented;
    got += (got.empty() ? "" : ",") + std::to_string(d);
    o.require(d == expected, "h_rq mismatch");
  }
  o.note = o.ok ? "h_rq degrees " + got : o.note;
  return o;
}

WpsPoint vertex(const Weights& q, std::size_t i) { return WpsPoint::vertex(q, i); }

Outcome c4() {
  Outcome o;
  for (std::int64_t k : {2, 3, 5}) {
    for (std::size_t n : {1, 2}) {
      Weights q(n + 1, 1);
      q.back() = k;
      const auto f = MonomialMap::f_type(q);
      const WpsPoint y = vertex(q, n);
      o.require(is_regular_value(f, y), "vertex not certified regular");
      const auto recs = preimages(f, y);
      o.require(recs.size() == 1, "expected one preimage");
      if (recs.size() == 1) o.require(recs[0].weight == k, "weight differs from k");
      o.require(weighted_cardinality(f, y) == k, "weighted count differs from k");
    }
  }
  o.note = o.ok ? "[0:...:0:1] regular, one preimage of weight k (6 maps)" : o.note;
  return o;
}

Outcome c5() {
  Outcome o;
  for (std::int64_t k : {2, 3, 5}) {
    for (std::size_t n : {1, 2}) {
      Weights q(n + 1, 1);
      q.back() = k;
      o.require(!is_regular_value(MonomialMap::f_type(q), vertex(q, 0)),
                "[1:0:...:0] certified regular");
    }
  }
  o.note = o.ok ? "[1:0:...:0] certified critical (6 maps)" : o.note;
  return o;
}

Outcome c6() {
  Outcome o;
  const auto h = CircleMap::half_fold();
  const auto up = circle_degree2(h, kPi / 2);
  const auto down = circle_degree2(h, 3 * kPi / 2);
  o.require(up.mod2 == 1 && up.weighted_count == 1, "deg2 at (0,1) is not 1");
  o.require(down.mod2 == 0 && down.weighted_count == 0, "deg2 at (0,-1) is not 0");
  // (x, y^2)/sqrt(x^2+y^4) = (0,1) forces x = 0, so the preimage is theta = pi/2.
  o.require(up.preimages.size() == 1 && std::abs(up.preimages[0].angle - kPi / 2) < 1e-10,
            "preimage angle off");
  o.note = o.ok ? "deg2 = 1 at (0,1), 0 at (0,-1); angle error " +
                      std::to_string(std::abs(up.preimages[0].angle - kPi / 2))
                : o.note;
  return o;
}

Outcome c7() {
  Outcome o;
  for (std::int64_t k = 2; k <= 6; ++k) {
    o.require(circle_degree2(CircleMap::covering_projection(k), 0.37).weighted_count == k,
              "deg(p) != k");
  }
  const std::int64_t grid[][3] = {{6, 3, 1}, {3, 3, 1}, {4, 2, 1}, {5, 1, 1}, {-3, 1, 1},
                                  {1, 1, 4}, {3, 1, 3}, {6, 2, 3}, {2, 4, 2}, {4, 6, 3}};
  for (const auto& c : grid) {
    o.require(covering_degree(c[1], c[0], c[2]) * c[1] == c[0] * c[2], "relation fails");
  }
  o.note = o.ok ? "deg(p)=k for k=2..6; relation holds on 10 (m,k,b) cases" : o.note;
  return o;
}

Outcome c8() {
  Outcome o;
  Rng rng(8);
  int n = 0;
  while (n < 60) {
    const auto f = random_map(rng, 3, 100'000);
    const auto y = WpsPoint::ones(f.target());
    const auto recs = preimages(f, y);
    std::int64_t sum = 0;
    for (const auto& r : recs) sum += r.weight;
    o.require(sum == degree_closed_form(f), "enumeration != closed form for " + describe(f));
    o.require(weighted_cardinality(f, y) == degree_closed_form(f), "walk != closed form");
    ++n;
  }
  o.note = o.ok ? "60 random composed maps, prod(e) <= 1e5" : o.note;
  return o;
}

Outcome c9() {
  Outcome o;
  const Weights q13{1, 3};
  auto rep = check_multiplicativity(MonomialMap::f_type(q13), MonomialMap::g_type(q13));
  rep.merge(check_multiplicativity(MonomialMap::g_type(q13), MonomialMap::f_type({1, 2})));
  rep.merge(check_multiplicativity(MonomialMap::f_type(q13), MonomialMap::identity(q13)));
  Rng rng(9);
  int pairs = 0;
  while (pairs < 25) {
    const auto f = random_map(rng, 3, 2'000);
    const auto g = random_chain(rng, f.target(), 2, 6, 2'000);
    const auto h = compose(f, g);
    std::uint64_t p = 1;
    for (auto e : h.exponents()) p *= static_cast<std::uint64_t>(e);
    if (p > 100'000) continue;
    rep.merge(check_multiplicativity(f, g));
    ++pairs;
  }
  o.require(rep.passed(), rep.failures.empty() ? "no cases" : rep.failures[0].input);
  o.note = o.ok ? std::to_string(rep.cases) + " compositions (3 named + 25 random)" : o.note;
  return o;
}

Outcome c10() {
  Outcome o;
  const auto arc = value_arc(MonomialMap::f_type({1, 3}), {-1.0, 1.0}, {1.0, 1.0}, 41);
  std::set<std::uint64_t> raw;
  double sigma = 1e300, resid = 0;
  for (const auto& a : arc) {
    raw.insert(a.raw_count);
    o.require(a.weighted_count == 3, "weighted count != 3");
    o.require(a.signs_positive, "negative Jacobian sign");
    sigma = std::min(sigma, a.min_singular_value);
    resid = std::max(resid, a.max_lift_residual);
  }
  o.require(raw == std::set<std::uint64_t>{1, 3}, "raw counts not {1,3}");
  o.require(sigma > 1e-6, "singular value below 1e-6");
  o.require(resid < 1e-9, "numeric preimage misses the value");
  o.note = o.ok ? "41 samples, raw {1,3}, weighted 3, min sigma " + std::to_string(sigma) : o.note;
  return o;
}

Outcome c11() {
  Outcome o;
  Rng rng(11);
  std::mt19937_64 pts(11);
  std::normal_distribution<double> g;
  double worst = 0;
  int triples = 0;
  while (triples < 100) {
    const auto f = random_map(rng, 2, 200);
    CVector x(static_cast<Eigen::Index>(f.size()));
    for (auto& c : x) c = {g(pts), g(pts)};
    const SliceChart src(f.source(), x);
    const SliceChart dst(f.target(), monomial_lift(f, src.base()));
    RVector s(src.dim());
    for (auto& c : s) c = g(pts);
    s *= std::pow(10.0, -2.0 - 2.0 * static_cast<double>(pts() % 1000) / 1000) / s.norm();
    const auto ev = slice_lift(f, src, dst, s);
    worst = std::max({worst, std::abs(ev.residual), std::abs(dst.slice_residual(ev.output))});
    ++triples;
  }
  o.require(worst < 1e-9, "residual above 1e-9");

  auto eq = check_slice_lift(MonomialMap::g_type({1, 3}),
                             WpsPoint({1, 3}, {ExactCoordinate::zero(), ExactCoordinate::one()}),
                             20, rng);
  eq.merge(check_slice_lift(
      MonomialMap::g_type({1, 1, 2}),
      WpsPoint({1, 1, 2}, {ExactCoordinate::zero(), ExactCoordinate::zero(), ExactCoordinate::one()}),
      20, rng));
  const Weights q133{1, 3, 3};
  eq.merge(check_slice_lift(
      MonomialMap(q133, q133, {2, 2, 2}),
      WpsPoint(q133, {ExactCoordinate::zero(), ExactCoordinate::one(), ExactCoordinate::one()}), 20,
      rng));
  o.require(eq.passed(), eq.failures.empty() ? "no cases" : eq.failures[0].detail);
  char buf[96];
  std::snprintf(buf, sizeof buf, "100 triples, max residual %.2e; isotropy invariance ok", worst);
  if (o.ok) o.note = buf;
  return o;
}

Outcome c12() {
  Outcome o;
  const auto f = CircleMap::essential_f();
  const auto g = CircleMap::essential_g();
  double worst = 0;
  for (int k = 0; k < 10'000; ++k) {
    const double t = 2 * kPi * k / 10'000;
    const auto& cod = f.codomain();
    worst = std::max(worst, std::abs(cod.fold(circle_eval(f, t)) - cod.fold(circle_eval(g, t))));
  }
  o.require(worst < 1e-12, "underlying maps differ");
  int compared = 0;
  for (int k = 0; k < 60; ++k) {
    const double y = kPi * (k + 1) / 61;
    const auto df = circle_degree2(f, y);
    const auto dg = circle_degree2(g, y);
    o.require(df.mod2 == dg.mod2 && df.weighted_count == dg.weighted_count, "degrees differ");
    ++compared;
  }
  o.require(compared >= 50, "too few values");
  o.note = o.ok ? std::to_string(compared) + " smooth regular values agree" : o.note;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"degree of f_q", c1},
      {"degree of g_q", c2},
      {"degree of h_rq", c3},
      {"non-smooth regular value", c4},
      {"smooth critical value", c5},
      {"reflection counterexample", c6},
      {"covering degree", c7},
      {"oracle equivalence", c8},
      {"multiplicativity", c9},
      {"vertex arc", c10},
      {"slice-lift contract", c11},
      {"same underlying map", c12},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome out;
    try {
      out = run();
    } catch (const Error& e) {
      out.ok = false;
      out.note = e.what();
    }
    failed += !out.ok;
    std::printf("[%s] %2d %-26s %s\n", out.ok ? "PASS" : "FAIL", index, name, out.note.c_str());
    std::fflush(stdout);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
