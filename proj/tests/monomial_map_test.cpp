#include <doctest.h>

#include <random>

#include "orbideg/errors.hpp"
#include "orbideg/monomial_map.hpp"
#include "orbideg/verify.hpp"

using namespace orbideg;

namespace {

ExactCoordinate u(std::int64_t a, std::int64_t m) { return ExactCoordinate(RootOfUnity(a, m)); }
const ExactCoordinate Z = ExactCoordinate::zero();

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("generator maps") {
  const auto f = MonomialMap::f_type({1, 3});
  CHECK(f.source() == Weights{1, 1});
  CHECK(f.target() == Weights{1, 3});
  CHECK(f.exponents() == std::vector<std::int64_t>{1, 3});
  CHECK(f.equivariance_degree() == 1);

  const auto g = MonomialMap::g_type({1, 2, 3});
  CHECK(g.source() == Weights{1, 2, 3});
  CHECK(g.target() == Weights{1, 1, 1});
  CHECK(g.exponents() == std::vector<std::int64_t>{6, 3, 2});
  CHECK(g.equivariance_degree() == 6);

  const auto id = MonomialMap::identity({2, 3});
  CHECK(id.exponents() == std::vector<std::int64_t>{1, 1});
  CHECK(id.equivariance_degree() == 1);
}

TEST_CASE("construction errors") {
  CHECK(error_of([] { MonomialMap({1, 1}, {1, 3}, {1, 2}); }) == ErrorKind::NotEquivariant);
  // Each coordinate divides, but the ratios 4 and 8 differ.
  CHECK(error_of([] { MonomialMap({1, 2}, {1, 1}, {4, 4}); }) == ErrorKind::NotEquivariant);
  CHECK(error_of([] { MonomialMap({1, 1}, {1, 3}, {1}); }) == ErrorKind::InvalidInput);
  CHECK(error_of([] { MonomialMap({1, 1}, {1, 1}, {0, 1}); }) == ErrorKind::InvalidInput);
  CHECK(error_of([] { MonomialMap({2, 2}, {1, 1}, {1, 1}); }) == ErrorKind::NotEffective);
  CHECK(error_of([] { compose(MonomialMap::f_type({1, 3}), MonomialMap::f_type({1, 2})); }) ==
        ErrorKind::WeightMismatch);
}

TEST_CASE("composition examples") {
  // g_q then f_r, q = (1,3), r = (1,2).
  const auto h = compose(MonomialMap::g_type({1, 3}), MonomialMap::f_type({1, 2}));
  CHECK(h.source() == Weights{1, 3});
  CHECK(h.target() == Weights{1, 2});
  CHECK(h.exponents() == std::vector<std::int64_t>{3, 2});
  CHECK(h.equivariance_degree() == 3);

  const auto q = Weights{2, 3, 5};
  const auto gf = compose(MonomialMap::f_type(q), MonomialMap::g_type(q));
  CHECK(gf.exponents() == std::vector<std::int64_t>{30, 30, 30});

  const auto f = MonomialMap::f_type({1, 3});
  CHECK(compose(MonomialMap::identity(f.source()), f) == f);
  CHECK(compose(f, MonomialMap::identity(f.target())) == f);
}

TEST_CASE("composition is associative and degrees multiply") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_map(rng, 3, 1'000'000);
    const auto b = random_chain(rng, a.target(), 2, 6, 1'000'000);
    const auto c = random_chain(rng, b.target(), 2, 6, 1'000'000);
    CAPTURE(describe(a));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, b).equivariance_degree() ==
          a.equivariance_degree() * b.equivariance_degree());
  }
}

TEST_CASE("isotropy homomorphisms") {
  const auto f = MonomialMap::f_type({1, 1, 3});
  const auto t = theta_at(f, WpsPoint({1, 1, 1}, {Z, Z, u(0, 1)}));
  CHECK(t.source_order == 1);
  CHECK(t.target_order == 3);
  CHECK(t.injective());

  const auto g = MonomialMap::g_type({1, 3});
  const auto tg = theta_at(g, WpsPoint({1, 3}, {Z, u(0, 1)}));
  CHECK(tg.source_order == 3);
  CHECK(tg.target_order == 1);
  CHECK(tg.kernel_order() == 3);
  CHECK_FALSE(tg.injective());

  const auto id = MonomialMap::identity({1, 3});
  const auto ti = theta_at(id, WpsPoint({1, 3}, {Z, u(0, 1)}));
  CHECK(ti.source_order == 3);
  CHECK(ti.target_order == 3);
  for (std::int64_t k = 0; k < 3; ++k) CHECK(ti.apply(k) == k);
  CHECK(ti.injective());

  // Full support in a space with coprime weights: trivial isotropy.
  CHECK(theta_at(MonomialMap::f_type({2, 3}), WpsPoint::ones({1, 1})).injective());
}

TEST_CASE("underlying images") {
  const auto f = MonomialMap::f_type({1, 3});
  CHECK(underlying_image(f, WpsPoint({1, 1}, {u(0, 1), u(1, 3)})) == WpsPoint::ones({1, 3}));
  const WpsPoint x({2, 3}, {u(1, 5), Z});
  CHECK(underlying_image(MonomialMap::identity({2, 3}), x) == x);
  const auto h = compose(MonomialMap::g_type({1, 3}), MonomialMap::f_type({1, 2}));
  CHECK(underlying_image(h, WpsPoint::ones({1, 3})) == WpsPoint::ones({1, 2}));
  CHECK(underlying_image(f, WpsPoint({1, 1}, {Z, u(1, 2)})).support() ==
        std::vector<std::size_t>{1});
}

TEST_CASE("underlying images are equivariant under roots of unity up to order 24") {
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    const auto f = random_map(rng, 3, 100'000);
    std::vector<ExactCoordinate> c(f.size());
    for (auto& x : c) x = u(draw(rng, 0, 11), 12);
    const WpsPoint x(f.source(), c);
    const std::int64_t m = draw(rng, 1, 24);
    const RootOfUnity g(draw(rng, 0, m - 1), m);
    CAPTURE(describe(f));
    // Representatives, not just orbits, must match.
    CHECK(underlying_image(f, x.act(g)).coords() ==
          underlying_image(f, x).act(g.pow(f.equivariance_degree())).coords());
  }
}
