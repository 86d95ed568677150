#include "doctest.h"

#include "repdescent/affine.hpp"
#include "repdescent/error.hpp"

using namespace repdescent;

namespace {

RingPtr share(FiniteCommRing r) { return std::make_shared<const FiniteCommRing>(std::move(r)); }

// Tries all |S|^|R| maps.
std::size_t exhaustive_hom_count(const FiniteCommRing& r, const FiniteCommRing& s) {
  std::vector<std::size_t> f(r.order(), 0);
  std::size_t count = 0;
  while (true) {
    count += is_ring_hom(r, s, f);
    std::size_t k = 0;
    while (k < f.size() && ++f[k] == s.order()) f[k++] = 0;
    if (k == f.size()) break;
  }
  return count;
}

struct Pairs {
  RingPtr z2 = share(FiniteCommRing::zmod(2));
  RingPtr z3 = share(FiniteCommRing::zmod(3));
  RingPtr dual2 = share(FiniteCommRing::polynomial_quotient(2, {0, 0, 1}));
  RingPtr f3f3 = share(FiniteCommRing::product(FiniteCommRing::zmod(3), FiniteCommRing::zmod(3)));
};

std::vector<PresentedModule> battery(const RingPtr& r) {
  std::vector<PresentedModule> out{free_module(r, 0), free_module(r, 1), free_module(r, 2)};
  for (std::size_t a = 0; a < r->order(); ++a) out.push_back(cyclic_module(r, a));
  for (std::size_t a = 0; a < r->order(); ++a) {
    for (std::size_t b = 0; b < r->order(); ++b) out.push_back(PresentedModule{r, 1, 2, {a, b}});
  }
  return out;
}

}  // namespace

TEST_CASE("shipped ring pairs") {
  Pairs p;
  const auto id = ring_homs(p.z2, p.z2);
  REQUIRE(id.size() == 1);
  CHECK(id.front().image == std::vector<std::size_t>{0, 1});
  const auto nil = ring_homs(p.dual2, p.z2);
  REQUIRE(nil.size() == 1);
  CHECK(nil.front()(2) == 0);  // x -> 0
  const auto proj = ring_homs(p.f3f3, p.z3);
  REQUIRE(proj.size() == 2);
  for (const auto& f : proj) {
    const bool first = f(1 * 3 + 0) == 1;
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) CHECK(f(a * 3 + b) == (first ? a : b));
    }
  }
  CHECK(exhaustive_hom_count(*p.z2, *p.z2) == 1);
  CHECK(exhaustive_hom_count(*p.dual2, *p.z2) == 1);
  CHECK(exhaustive_hom_count(*p.f3f3, *p.z3) == 2);
  CHECK(ring_homs(p.z2, p.z3).empty());
  CHECK(ring_homs(p.z3, p.f3f3).size() == exhaustive_hom_count(*p.z3, *p.f3f3));
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(FiniteCommRing::from_tables({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(FiniteCommRing::from_tables({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}), Error);
  CHECK_THROWS_WITH(FiniteCommRing::from_tables({{0, 1}, {1, 0}}, {{0, 0}, {1, 1}}),
                    doctest::Contains("commutative"));
  CHECK_THROWS_AS(ring_homs(share(FiniteCommRing::zmod(4)), share(FiniteCommRing::zmod(2)), 3), Error);
  const auto f9 = FiniteCommRing::polynomial_quotient(3, {1, 0, 1});
  std::size_t units = 0;
  for (std::size_t x = 0; x < 9; ++x) {
    for (std::size_t y = 0; y < 9; ++y) units += f9.mul(x, y) == f9.one();
  }
  CHECK(units == 8);
}

TEST_CASE("base change of presentations") {
  Pairs p;
  const auto f = ring_homs(p.f3f3, p.z3).front();
  CHECK(modules_isomorphic(base_change(f, free_module(p.f3f3, 1)), free_module(p.z3, 1)));
  const std::size_t a = 1 * 3 + 2;
  const auto m = base_change(f, cyclic_module(p.f3f3, a));
  CHECK(m.entries == std::vector<std::size_t>{f(a)});
  const auto zero = base_change(f, PresentedModule{p.f3f3, 1, 1, {p.f3f3->one()}});
  CHECK(module_order(zero) == 1);
  for (const auto& x : battery(p.f3f3)) {
    for (const auto& y : {cyclic_module(p.f3f3, 1), free_module(p.f3f3, 1)}) {
      CHECK(base_change(f, direct_sum(x, y)).entries == direct_sum(base_change(f, x), base_change(f, y)).entries);
    }
  }
  const auto g = ring_homs(p.z3, p.z3).front();
  for (const auto& x : battery(p.f3f3)) CHECK(base_change(compose(g, f), x).entries == base_change(g, base_change(f, x)).entries);
}

TEST_CASE("module isomorphism by brute force") {
  const auto z4 = share(FiniteCommRing::zmod(4));
  CHECK(modules_isomorphic(cyclic_module(z4, 1), cyclic_module(z4, 3)));
  CHECK(modules_isomorphic(cyclic_module(z4, 2), PresentedModule{z4, 1, 1, {2}}));
  CHECK(!modules_isomorphic(cyclic_module(z4, 2), cyclic_module(z4, 0)));
  CHECK(!modules_isomorphic(direct_sum(cyclic_module(z4, 2), cyclic_module(z4, 2)), free_module(z4, 1)));
  CHECK(module_order(direct_sum(cyclic_module(z4, 2), cyclic_module(z4, 2))) == 4);
  CHECK(modules_isomorphic(PresentedModule{z4, 1, 2, {1, 2}}, free_module(z4, 1)));
  CHECK(modules_isomorphic(tensor(cyclic_module(z4, 2), cyclic_module(z4, 0)), cyclic_module(z4, 2)));
  CHECK(module_order(tensor(free_module(z4, 2), free_module(z4, 2))) == 256);
}

TEST_CASE("distinct homs are told apart by a cyclic module") {
  Pairs p;
  const auto homs = ring_homs(p.f3f3, p.z3);
  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t j = i + 1; j < homs.size(); ++j) {
      bool found = false;
      for (std::size_t a = 0; a < p.f3f3->order() && !found; ++a) {
        const auto m = cyclic_module(p.f3f3, a);
        found = !modules_isomorphic(base_change(homs[i], m), base_change(homs[j], m));
      }
      CHECK(found);
    }
  }
}

TEST_CASE("a hom is recovered from its functor") {
  Pairs p;
  const std::vector<std::pair<RingPtr, RingPtr>> pairs{{p.z2, p.z2}, {p.dual2, p.z2}, {p.f3f3, p.z3}};
  for (const auto& [r, s] : pairs) {
    for (const auto& f : ring_homs(r, s)) {
      CHECK(reconstruct_hom(base_change_functor(f)).image == f.image);
    }
  }
  const auto id = ring_homs(p.z3, p.z3).front();
  CHECK(reconstruct_hom(base_change_functor(id)).image == std::vector<std::size_t>{0, 1, 2});
  FunctorDatum broken{p.z3, p.z3, {0, 1, 1}};
  CHECK_THROWS_AS(reconstruct_hom(broken), Error);
}

TEST_CASE("functors with equal value on the unit agree on modules") {
  Pairs p;
  for (const auto& f : ring_homs(p.f3f3, p.z3)) {
    const PresentedModule killed{p.z3, 1, 1, {p.z3->one()}};
    for (const auto& m : battery(p.f3f3)) {
      const auto plain = base_change(f, m);
      const auto padded = direct_sum(plain, killed);
      CHECK(!(plain.entries == padded.entries));
      CHECK(modules_isomorphic(plain, padded));
    }
  }
}

TEST_CASE("two-point example") {
  const auto r3 = two_point_example(3);
  CHECK(r3.idempotents == std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 1}});
  CHECK(r3.split_isomorphism);
  CHECK(r3.unit_X == std::vector<long>{1, 1});
  CHECK(r3.unit_G == std::vector<long>{1, 0});
  CHECK(r3.unit_X != r3.unit_G);
  CHECK(r3.square_roots_of_unit == 1);
  const auto r5 = two_point_example(5);
  CHECK(r5.idempotents == std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {3, 2}});
  CHECK(r5.square_roots_of_unit == 1);
  CHECK_THROWS_AS(two_point_example(2), Error);
  CHECK_THROWS_AS(two_point_example(9), Error);
}
