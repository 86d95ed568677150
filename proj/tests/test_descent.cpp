#include "doctest.h"

#include "repdescent/descent.hpp"
#include "repdescent/error.hpp"

#include <numeric>
#include <random>

using namespace repdescent;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// alpha_ij = iota(eps_ij), beta_ijk = eps_ij eps_jk eps_ik^-1 with eps_ji = eps_ij^-1.
CocycleDatum inner_gauge(const GroupPtr& g, std::size_t n, std::mt19937& rng) {
  std::vector<Element> eps(n * n, g->identity());
  std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      eps[i * n + j] = pick(rng);
      eps[j * n + i] = g->inv(eps[i * n + j]);
    }
  }
  CocycleDatum d(g, n);
  for (const auto& [i, j] : ordered_pairs(n)) d.set_alpha(i, j, inner(*g, eps[i * n + j]));
  for (const auto& [i, j, k] : ordered_triples(n)) {
    d.set_beta(i, j, k, g->mul(g->mul(eps[i * n + j], eps[j * n + k]), g->inv(eps[i * n + k])));
  }
  return d;
}

struct ExtensionCase {
  RefinedCocycleDatum refined;
  TablePtr table;
};

ExtensionCase extension_case(FiniteGroup h, const std::vector<Element>& kernel_gens) {
  auto hp = share(std::move(h));
  const auto ext = make_extension(hp, hp->generated_subgroup(kernel_gens));
  auto refined = extension_cocycle(ext);
  auto table = character_table(refined.G);
  return {std::move(refined), std::move(table)};
}

std::vector<ExtensionCase> extension_cases() {
  std::vector<ExtensionCase> out;
  {
    auto s3 = builtin::symmetric(3);
    std::vector<Element> rot;
    for (Element x = 0; x < 6; ++x) {
      if (s3.element_order(x) == 3) rot.push_back(x);
    }
    out.push_back(extension_case(s3, rot));
  }
  out.push_back(extension_case(builtin::cyclic(4), {2}));
  out.push_back(extension_case(builtin::quaternion(), {1}));
  {
    auto s4 = builtin::symmetric(4);
    std::vector<Element> squares;
    for (Element x = 0; x < s4.order(); ++x) squares.push_back(s4.mul(x, x));
    out.push_back(extension_case(s4, squares));
  }
  return out;
}

bool has_rule_at(const CheckReport& r, const std::string& rule) {
  for (const auto& v : r.violations) {
    if (v.rule == rule && !v.at.empty()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("trivial datum passes everything") {
  const auto g = share(builtin::symmetric(3));
  const auto t = character_table(g);
  const CocycleDatum d(g, 4);
  CHECK(verify_cocycle(d).status == CheckStatus::pass);
  CHECK(tetrahedron_check(d, *t).status == CheckStatus::pass);
  const auto tw = compute_twist(d, *t);
  for (const auto& [key, c] : tw.scalars) CHECK(c.is_one());
  CHECK(tw.scalars.size() == 24 * t->size());
  CHECK(verify_twist_cocycle(tw, d, *t).status == CheckStatus::pass);
  CHECK(verify_gerbe_side(d, t->order()).status == CheckStatus::pass);
  for (const auto& [key, taus] : compute_tau(d, *t)) {
    for (const auto& m : taus) CHECK(m.is_identity());
  }
}

TEST_CASE("small index sets are vacuous") {
  const auto g = share(builtin::cyclic(3));
  const auto t = character_table(g);
  CHECK(verify_cocycle(CocycleDatum(g, 2)).status == CheckStatus::vacuous);
  CHECK(verify_cocycle(CocycleDatum(g, 3)).status == CheckStatus::pass);
  CHECK(tetrahedron_check(CocycleDatum(g, 3), *t).status == CheckStatus::vacuous);
  CHECK(verify_gerbe_side(CocycleDatum(g, 1), t->order()).status == CheckStatus::vacuous);
  const CocycleDatum three(g, 3);
  CHECK(verify_twist_cocycle(compute_twist(three, *t), three, *t).status == CheckStatus::vacuous);
}

TEST_CASE("inner-gauge data satisfy every identity") {
  std::mt19937 rng(7);
  for (const auto& g : {share(builtin::symmetric(3)), share(builtin::dihedral(4)), share(builtin::quaternion())}) {
    const auto t = character_table(g);
    for (int trial = 0; trial < 3; ++trial) {
      const auto d = inner_gauge(g, 4, rng);
      CHECK(verify_cocycle(d).violations.empty());
      CHECK(tetrahedron_check(d, *t).status == CheckStatus::pass);
      const auto tw = compute_twist(d, *t);
      CHECK(verify_twist_cocycle(tw, d, *t).status == CheckStatus::pass);
      CHECK(verify_gerbe_side(d, t->order()).status == CheckStatus::pass);
    }
  }
}

TEST_CASE("a non-central beta breaks the datum at named quadruples") {
  std::mt19937 rng(11);
  const auto g = share(builtin::symmetric(3));
  const auto t = character_table(g);
  auto d = inner_gauge(g, 4, rng);
  // a transposition is not central in S3
  Element bad = 0;
  while (g->element_order(bad) != 2 || bad == d.beta(0, 1, 2)) ++bad;
  d.set_beta(0, 1, 2, bad);
  const auto report = verify_cocycle(d);
  CHECK(report.status == CheckStatus::fail);
  CHECK(has_rule_at(report, "beta-associativity"));
  bool named = false;
  for (const auto& v : report.violations) named = named || (v.rule == "beta-associativity" && v.at.size() == 4);
  CHECK(named);
  CHECK(std::is_sorted(report.violations.begin(), report.violations.end()));
  CHECK(tetrahedron_check(d, *t).status == CheckStatus::fail);
  CHECK(verify_gerbe_side(d, t->order()).status == CheckStatus::fail);
}

TEST_CASE("mu is natural and composes") {
  std::mt19937 rng(3);
  for (const auto& g : {share(builtin::symmetric(3)), share(builtin::dihedral(4))}) {
    const auto t = character_table(g);
    const auto auts = automorphism_group(*g);
    for (const auto& m : mu(auts.front(), g->identity(), *t)) CHECK(m.is_identity());
    std::uniform_int_distribution<std::size_t> pa(0, auts.size() - 1), pb(0, g->order() - 1);
    for (int sample = 0; sample < 10; ++sample) {
      const auto& a = auts[pa(rng)];
      const auto& a2 = auts[pa(rng)];
      const Element b = pb(rng);
      const auto ms = mu(a, b, *t);
      for (std::size_t s = 0; s < t->size(); ++s) {
        const auto& rho = *t->model(s);
        CHECK(ms[s] == rho(a(b)));
        // rho(alpha(beta)) rho(alpha(beta^-1 x beta)) = rho(alpha(x)) rho(alpha(beta))
        for (Element x = 0; x < g->order(); ++x) {
          const Element lhs = g->mul(a(b), a(g->mul(g->mul(g->inv(b), x), b)));
          CHECK(lhs == g->mul(a(x), a(b)));
        }
      }
      CHECK(mu_composition_checks(a, b, a2, *t).empty());
    }
  }
}

TEST_CASE("extension-derived data") {
  // C3 -> S3 -> C2, C2 -> C4 -> C2 (Q acts trivially on two characters), C4 -> Q8 -> C2
  const std::vector<std::size_t> orbit_counts{2, 2, 3};
  const auto cases = extension_cases();
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& [refined, table] = cases[c];
    CHECK(verify_refined(refined).empty());
    const auto d = datum_from_extension(refined, 4);
    CHECK(verify_cocycle(d).status == CheckStatus::pass);
    CHECK(tetrahedron_check(d, *table).status == CheckStatus::pass);
    CHECK(verify_gerbe_side(d, table->order()).status == CheckStatus::pass);

    const auto dual = dual_space(refined, *table);
    std::size_t total = 0;
    for (const auto& o : dual.orbits) total += o.size();
    CHECK(total == table->size());
    for (const auto& s : dual.stabilizers) CHECK(refined.Q->order() % s.size() == 0);
    if (c == 0) CHECK(dual.orbits.size() == 2);
    if (c == 2) {
      CHECK(dual.orbits.size() == 3);
      CHECK(dual_space(d, *table).orbits == dual.orbits);
    }
    if (c < orbit_counts.size()) CHECK(dual.orbits.size() == orbit_counts[c]);

    const auto tw = compute_twist(d, *table);
    for (const auto& [key, value] : tw.scalars) {
      CHECK(!value.is_zero());
      Cyclotomic p = Cyclotomic::one(table->order());
      for (unsigned k = 0; k < table->order(); ++k) p *= value;
      CHECK(p.is_rational());
    }
    CHECK(verify_twist_cocycle(tw, d, *table).status == CheckStatus::pass);
    for (const auto& [i, j, k] : ordered_triples(4)) {
      const auto& pij = tw.transport.at({i, j});
      const auto& pjk = tw.transport.at({j, k});
      const auto& pik = tw.transport.at({i, k});
      for (std::size_t s = 0; s < table->size(); ++s) CHECK(pij[pjk[s]] == pik[s]);
    }
    for (const auto& [key, taus] : tw.tau) {
      const auto& pair = key;
      const auto& phi = tw.transport.at(pair);
      for (std::size_t s = 0; s < taus.size(); ++s) {
        const auto src = pullback(dual_rep(*table->model(s)), d.alpha(pair[0], pair[1]));
        CHECK(is_intertwiner(taus[s], src, dual_rep(*table->model(phi[s]))));
        CHECK(taus[s].first_nonzero()->is_one());
      }
    }
  }
}

TEST_CASE("rescaling one tau changes c by the coboundary factor") {
  const auto cases = extension_cases();
  for (std::size_t c : {2u, 3u}) {
    const auto& [refined, table] = cases[c];
    const auto d = datum_from_extension(refined, 4);
    auto tau = compute_tau(d, *table);
    const auto base = compute_twist(d, *table, tau);
    const Cyclotomic lambda = Cyclotomic::root(table->order(), 1);
    const std::array<std::size_t, 2> ab{0, 1};
    const std::size_t w = table->size() - 1;
    tau[ab][w] *= lambda;
    const auto scaled = compute_twist(d, *table, tau);
    for (const auto& [key, value] : base.scalars) {
      const auto [s, i, j, k] = key;
      const std::size_t t = base.transport.at({k, i})[s];
      const std::size_t u = base.transport.at({j, k})[t];
      int count = 0;
      for (const auto& [pair, idx] : std::vector<std::pair<std::array<std::size_t, 2>, std::size_t>>{
               {{i, j}, u}, {{j, k}, t}, {{k, i}, s}}) {
        count += pair == ab && idx == w;
      }
      Cyclotomic expected = value;
      for (int n = 0; n < count; ++n) expected *= lambda;
      CHECK(scaled.scalars.at(key) == expected);
    }
    CHECK(verify_twist_cocycle(scaled, d, *table).status == CheckStatus::pass);
  }
}

TEST_CASE("a perturbed twist scalar fails at a named quadruple") {
  const auto cases = extension_cases();
  const auto& [refined, table] = cases[2];
  const auto d = datum_from_extension(refined, 4);
  auto tw = compute_twist(d, *table);
  auto& target = tw.scalars.begin()->second;
  target *= Cyclotomic::root(table->order(), 1);
  const auto report = verify_twist_cocycle(tw, d, *table);
  CHECK(report.status == CheckStatus::fail);
  REQUIRE(!report.violations.empty());
  CHECK(report.violations.front().at.size() == 5);
}

TEST_CASE("gerbe side catches a wrong beta") {
  const auto cases = extension_cases();
  const auto& [refined, table] = cases[3];
  auto d = datum_from_extension(refined, 3);
  CHECK(verify_gerbe_side(d, table->order()).status == CheckStatus::pass);
  Element other = 0;
  while (inner(*d.group(), other) == inner(*d.group(), d.beta(0, 1, 2))) ++other;
  d.set_beta(0, 1, 2, other);
  const auto r = verify_gerbe_side(d, table->order());
  CHECK(r.status == CheckStatus::fail);
  CHECK(has_rule_at(r, "gerbe-twist"));
}

TEST_CASE("datum accessors reject bad input") {
  const auto g = share(builtin::cyclic(3));
  CocycleDatum d(g, 3);
  CHECK_THROWS_AS(d.set_alpha(1, 1, identity_automorphism(*g)), Error);
  CHECK_THROWS_AS(d.set_beta(0, 0, 1, 0), Error);
  CHECK_THROWS_AS(d.set_beta(0, 1, 2, 7), Error);
  CHECK_THROWS_AS(d.set_alpha(0, 1, Automorphism{{0, 1, 1}}), Error);
  CHECK_THROWS_AS(d.alpha(0, 5), Error);
  CHECK(d.beta(0, 1, 1) == g->identity());
}
