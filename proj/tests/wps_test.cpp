#include <doctest.h>

#include <numeric>
#include <random>

#include "orbideg/errors.hpp"
#include "orbideg/strata.hpp"
#include "orbideg/wps.hpp"

using namespace orbideg;

namespace {

ExactCoordinate u(std::int64_t a, std::int64_t m) { return ExactCoordinate(RootOfUnity(a, m)); }
const ExactCoordinate Z = ExactCoordinate::zero();

// Orbit membership by trying every candidate gamma of order dividing M*lcm(q).
bool same_orbit_brute(const WpsPoint& a, const WpsPoint& b, std::int64_t m) {
  if (a.support() != b.support()) return false;
  std::int64_t l = 1;
  for (auto q : a.weights()) l = std::lcm(l, q);
  const std::int64_t n = m * l;
  for (std::int64_t k = 0; k < n; ++k) {
    const RootOfUnity g(k, n);
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      ok = a.coords()[i] * g.pow(a.weights()[i]) == b.coords()[i];
    }
    if (ok) return true;
  }
  return false;
}

WpsPoint random_point(std::mt19937_64& rng, const Weights& q, std::int64_t m) {
  std::vector<ExactCoordinate> c(q.size());
  for (auto& x : c) {
    const auto a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m + 1));
    x = a == m ? Z : u(a, m);
  }
  if (std::all_of(c.begin(), c.end(), [](auto& x) { return x.is_zero(); })) c[0] = u(0, 1);
  return WpsPoint(q, c);
}

}  // namespace

TEST_CASE("weights are validated") {
  CHECK_NOTHROW(WpsOrbifold({1, 3}));
  CHECK(WpsOrbifold({1, 2, 3}).complex_dim() == 2);
  CHECK(WpsOrbifold({1, 2, 3}).real_dim() == 4);
  auto kind = [](Weights w) {
    try {
      WpsOrbifold o(std::move(w));
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidInput;
  };
  CHECK(kind({}) == ErrorKind::InvalidInput);
  CHECK(kind({0, 1}) == ErrorKind::InvalidInput);
  CHECK(kind({-1, 2}) == ErrorKind::InvalidInput);
  CHECK(kind({2, 4}) == ErrorKind::NotEffective);
  CHECK_NOTHROW(WpsOrbifold({6, 10, 15}));  // pairwise non-coprime but effective
}

TEST_CASE("points reject bad coordinates") {
  CHECK_THROWS_AS(WpsPoint({1, 3}, {Z, Z}), Error);
  CHECK_THROWS_AS(WpsPoint({1, 3}, {Z}), Error);
}

TEST_CASE("isotropy and singular dimension of examples") {
  const WpsPoint pole({1, 3}, {Z, u(0, 1)});
  CHECK(isotropy(pole).order == 3);
  CHECK(singular_dimension(pole) == 0);
  CHECK(isotropy(WpsPoint({1, 3}, {u(0, 1), Z})).order == 1);
  CHECK(isotropy(WpsPoint::ones({1, 3})).smooth());

  const WpsPoint v({1, 1, 2}, {Z, Z, u(0, 1)});
  CHECK(isotropy(v).order == 2);
  CHECK(isotropy(v).chart_weights == std::vector<std::int64_t>{1, 1});
  CHECK(singular_dimension(v) == 0);

  // In CP^2(1,2,2) the line z_0 = 0 carries Z_2 isotropy and is 2-dimensional.
  const WpsPoint line({1, 2, 2}, {Z, u(0, 1), u(1, 5)});
  CHECK(isotropy(line).order == 2);
  CHECK(singular_dimension(line) == 2);
  CHECK(singular_dimension(WpsPoint::ones({1, 2, 2})) == 4);
}

TEST_CASE("gamma action fixes points and canonical form is an orbit invariant") {
  std::mt19937_64 rng(3);
  const std::vector<Weights> spaces{{1, 3}, {2, 3}, {1, 2, 3}, {1, 1, 2}, {3, 4, 5}};
  for (const auto& q : spaces) {
    for (int k = 0; k < 60; ++k) {
      const WpsPoint x = random_point(rng, q, 6);
      const RootOfUnity g(static_cast<std::int64_t>(rng() % 24), 24);
      CAPTURE(x.str());
      CHECK(x.act(g) == x);
      CHECK(x.canonical() == x.canonical().canonical());
      CHECK(x.act(g).canonical().coords() == x.canonical().coords());
    }
  }
}

TEST_CASE("point equality agrees with a brute-force orbit search") {
  std::mt19937_64 rng(11);
  const std::vector<Weights> spaces{{1, 3}, {2, 3}, {1, 2, 3}, {1, 1, 2}};
  int equal = 0;
  for (const auto& q : spaces) {
    for (int k = 0; k < 400; ++k) {
      const WpsPoint a = random_point(rng, q, 4);
      const WpsPoint b = random_point(rng, q, 4);
      CAPTURE(a.str());
      CAPTURE(b.str());
      const bool brute = same_orbit_brute(a, b, 4);
      CHECK((a == b) == brute);
      equal += brute;
    }
  }
  CHECK(equal > 20);  // the sample must exercise both outcomes
}

TEST_CASE("equal points in CP^1(1,3)") {
  // gamma acts by (gamma, gamma^3); fixing the first coordinate forces gamma = 1.
  CHECK_FALSE(WpsPoint({1, 3}, {u(0, 1), u(1, 3)}) == WpsPoint::ones({1, 3}));
  // [-1:1] = [1:-1] via gamma = -1.
  CHECK(WpsPoint({1, 3}, {u(1, 2), u(0, 1)}) == WpsPoint({1, 3}, {u(0, 1), u(1, 2)}));
  CHECK(WpsPoint({1, 3}, {Z, u(1, 3)}) == WpsPoint({1, 3}, {Z, u(0, 1)}));
  CHECK(WpsPoint({1, 3}, {Z, u(1, 3)}).str() == "[0:1/3]_(1,3)");
}

TEST_CASE("strata of CP^1(1,3)") {
  const auto s = strata(WpsOrbifold({1, 3}));
  CHECK(s.dim == 2);
  CHECK(s.codim1_empty);
  CHECK(s.orientable);
  CHECK(s.singular_point_count() == 1);
  REQUIRE(s.strata.size() == 2);
  CHECK(s.strata[0].open_dense);
  CHECK(s.strata[1].singular_dim == 0);
  REQUIRE(s.strata[1].components.size() == 1);
  CHECK(s.strata[1].components[0].isotropy_order == 3);
  CHECK(s.strata[1].components[0].descriptions == std::vector<std::string>{"[0:1]"});
}

TEST_CASE("strata of smooth and higher-dimensional spaces") {
  const auto p1 = strata(WpsOrbifold::projective(1));
  CHECK(p1.singular_point_count() == 0);
  CHECK(p1.strata.size() == 1);

  const auto s = strata(WpsOrbifold({1, 2, 3}));
  CHECK(s.singular_point_count() == 2);  // [0:1:0] and [0:0:1]
  CHECK(s.codim1_empty);

  const auto t = strata(WpsOrbifold({1, 2, 2}));
  CHECK(t.codim1_empty);  // the singular line has real codimension 2
  bool found_line = false;
  for (const auto& st : t.strata) {
    if (st.singular_dim == 2) found_line = !st.components.empty();
  }
  CHECK(found_line);
}

TEST_CASE("strata of circle quotients") {
  const auto r = strata(CircleQuotient::reflection());
  CHECK_FALSE(r.codim1_empty);
  CHECK_FALSE(r.orientable);
  CHECK(r.singular_point_count() == 2);
  const auto k = strata(CircleQuotient::rotation(3));
  CHECK(k.codim1_empty);
  CHECK(k.orientable);
  CHECK(k.singular_point_count() == 0);
}
