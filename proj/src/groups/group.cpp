#include "repdescent/group.hpp"

#include "repdescent/error.hpp"
#include "repdescent/violation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace repdescent {

std::string format_tuple(const std::vector<std::size_t>& at) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < at.size(); ++k) out << (k ? "," : "") << at[k];
  out << ")";
  return out.str();
}

namespace {

[[noreturn]] void not_a_group(const std::string& why) { throw Error(ErrorCode::not_a_group, why); }

}  // namespace

FiniteGroup FiniteGroup::from_table(Table table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) not_a_group("empty multiplication table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      not_a_group("row " + std::to_string(r) + " has length " + std::to_string(table[r].size()) +
                  ", expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n) {
        not_a_group("entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                    std::to_string(table[r][c]) + " is out of range");
      }
    }
  }
  std::optional<Element> found;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) found = e;
  }
  if (!found) not_a_group("no identity element");
  std::vector<Element> inverses(n);
  for (Element x = 0; x < n; ++x) {
    auto it = std::find(table[x].begin(), table[x].end(), *found);
    if (it == table[x].end() || table[static_cast<std::size_t>(it - table[x].begin())][x] != *found) {
      not_a_group("element " + std::to_string(x) + " has no two-sided inverse");
    }
    inverses[x] = static_cast<Element>(it - table[x].begin());
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = table[a][b];
      for (Element c = 0; c < n; ++c) {
        if (table[ab][c] != table[a][table[b][c]]) {
          not_a_group("not associative at triple " + format_tuple({a, b, c}));
        }
      }
    }
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.identity_ = *found;
  g.inverses_ = std::move(inverses);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators,
                                           std::string name) {
  using Perm = std::vector<std::size_t>;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Perm& p = generators[k];
    if (p.size() != degree) {
      not_a_group("generator " + std::to_string(k) + " has length " + std::to_string(p.size()) +
                  ", expected degree " + std::to_string(degree));
    }
    std::vector<bool> seen(degree, false);
    for (auto v : p) {
      if (v >= degree || seen[v]) not_a_group("generator " + std::to_string(k) + " is not a permutation");
      seen[v] = true;
    }
  }
  auto apply = [](const Perm& x, const Perm& y) {  // x after y
    Perm r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = x[y[i]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& gen : generators) {
      Perm next = apply(gen, elements[head]);
      if (index.emplace(next, elements.size()).second) elements.push_back(std::move(next));
    }
  }
  const std::size_t n = elements.size();
  Table table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(apply(elements[a], elements[b]));
  }
  return from_table(std::move(table), std::move(name));
}

void FiniteGroup::finish() {
  const std::size_t n = order();
  element_orders_.assign(n, 1);
  exponent_ = 1;
  for (Element x = 0; x < n; ++x) {
    std::size_t k = 1;
    for (Element y = x; y != identity_; y = mul(y, x)) ++k;
    element_orders_[x] = k;
    exponent_ = static_cast<unsigned>(std::lcm<std::size_t>(exponent_, k));
  }
  classes_ = conjugacy_classes(*this);
  std::vector<bool> covered(n, false);
  covered[identity_] = true;
  for (Element x = 0; x < n; ++x) {
    if (covered[x]) continue;
    generators_.push_back(x);
    for (auto y : generated_subgroup(generators_)) covered[y] = true;
  }
}

Element FiniteGroup::power(Element a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element r = identity_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a) {
    for (Element b = 0; b < a; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<Element> FiniteGroup::generated_subgroup(const std::vector<Element>& gens) const {
  std::vector<bool> in(order(), false);
  std::deque<Element> queue{identity_};
  in[identity_] = true;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (auto g : gens) {
      const Element y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Element> out;
  for (Element x = 0; x < order(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Element>> found;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Element> orbit;
    for (Element b = 0; b < n; ++b) {
      const Element y = g.conjugate(x, b);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    found.push_back(std::move(orbit));
  }
  const Element id = g.identity();
  std::stable_sort(found.begin(), found.end(), [id](const auto& a, const auto& b) {
    const bool ai = a.front() == id, bi = b.front() == id;
    if (ai != bi) return ai;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  ConjugacyClasses cc;
  cc.class_of.assign(n, 0);
  for (std::size_t c = 0; c < found.size(); ++c) {
    for (auto x : found[c]) cc.class_of[x] = c;
    cc.representatives.push_back(found[c].front());
    cc.sizes.push_back(found[c].size());
  }
  cc.members = std::move(found);
  return cc;
}

FiniteGroup direct_product(const FiniteGroup& h1, const FiniteGroup& h2) {
  const std::size_t n1 = h1.order(), n2 = h2.order();
  Table table(n1 * n2, std::vector<Element>(n1 * n2));
  for (std::size_t a = 0; a < n1 * n2; ++a) {
    for (std::size_t b = 0; b < n1 * n2; ++b) {
      table[a][b] = h1.mul(a / n2, b / n2) * n2 + h2.mul(a % n2, b % n2);
    }
  }
  std::string name;
  if (!h1.name().empty() && !h2.name().empty()) name = h1.name() + "x" + h2.name();
  return FiniteGroup::from_table(std::move(table), std::move(name));
}

namespace builtin {

FiniteGroup cyclic(std::size_t n) {
  Table table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(table), "C" + std::to_string(n));
}

FiniteGroup klein_four() {
  Table table(4, std::vector<Element>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) table[a][b] = a ^ b;
  }
  return FiniteGroup::from_table(std::move(table), "C2xC2");
}

FiniteGroup symmetric(std::size_t n) {
  std::vector<std::size_t> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  if (n >= 2) std::swap(transposition[0], transposition[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return FiniteGroup::from_permutations(n, {transposition, cycle}, "S" + std::to_string(n));
}

FiniteGroup alternating(std::size_t n) {
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<std::size_t> c(n);
    std::iota(c.begin(), c.end(), 0);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(std::move(c));
  }
  return FiniteGroup::from_permutations(n, gens, "A" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  std::vector<std::size_t> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutations(n, {rot, refl}, "D" + std::to_string(n));
}

FiniteGroup quaternion() {
  // Regular action on {1, i, j, k, -1, -i, -j, -k}.
  // Left multiplication by i and by j, as permutations of those 8 points.
  const std::vector<std::size_t> left_i{1, 4, 3, 6, 5, 0, 7, 2};
  const std::vector<std::size_t> left_j{2, 7, 4, 1, 6, 3, 0, 5};
  return FiniteGroup::from_permutations(8, {left_i, left_j}, "Q8");
}

}  // namespace builtin

bool Automorphism::is_identity() const {
  for (Element x = 0; x < image.size(); ++x) {
    if (image[x] != x) return false;
  }
  return true;
}

Automorphism Automorphism::inverse() const {
  Automorphism r{std::vector<Element>(image.size())};
  for (Element x = 0; x < image.size(); ++x) r.image[image[x]] = x;
  return r;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism r{std::vector<Element>(b.image.size())};
  for (Element x = 0; x < b.image.size(); ++x) r.image[x] = a.image[b.image[x]];
  return r;
}

Automorphism identity_automorphism(const FiniteGroup& g) {
  Automorphism a{std::vector<Element>(g.order())};
  std::iota(a.image.begin(), a.image.end(), 0);
  return a;
}

Automorphism make_automorphism(const FiniteGroup& g, std::vector<Element> image) {
  const std::size_t n = g.order();
  if (image.size() != n) throw Error(ErrorCode::invalid_argument, "automorphism image has the wrong length");
  std::vector<bool> hit(n, false);
  for (auto y : image) {
    if (y >= n || hit[y]) throw Error(ErrorCode::invalid_argument, "automorphism image is not a bijection");
    hit[y] = true;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (image[g.mul(a, b)] != g.mul(image[a], image[b])) {
        throw Error(ErrorCode::invalid_argument,
                    "map does not preserve the product at " + format_tuple({a, b}));
      }
    }
  }
  return Automorphism{std::move(image)};
}

Automorphism inner(const FiniteGroup& g, Element beta) {
  Automorphism a{std::vector<Element>(g.order())};
  for (Element x = 0; x < g.order(); ++x) a.image[x] = g.conjugate(x, beta);
  return a;
}

std::vector<Automorphism> automorphism_group(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound) {
    throw Error(ErrorCode::bound_exceeded, "group order " + std::to_string(g.order()) +
                                               " exceeds the automorphism search bound " + std::to_string(bound));
  }
  const auto& gens = g.generators();
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (Element y = 0; y < n; ++y) {
      if (g.element_order(y) == g.element_order(gens[k]) &&
          g.classes().sizes[g.classes().class_of[y]] == g.classes().sizes[g.classes().class_of[gens[k]]]) {
        candidates[k].push_back(y);
      }
    }
  }
  std::vector<Automorphism> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  // Extends generator images along the Cayley graph; f(x g) = f(x) f(g).
  auto extend = [&](std::vector<Element>& f) {
    constexpr Element unset = static_cast<Element>(-1);
    f.assign(n, unset);
    f[g.identity()] = g.identity();
    std::deque<Element> queue{g.identity()};
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Element y = g.mul(x, gens[k]);
        const Element fy = g.mul(f[x], candidates[k][choice[k]]);
        if (f[y] == unset) {
          f[y] = fy;
          queue.push_back(y);
        } else if (f[y] != fy) {
          return false;
        }
      }
    }
    std::vector<bool> hit(n, false);
    for (auto y : f) {
      if (y == unset || hit[y]) return false;
      hit[y] = true;
    }
    return true;
  };
  if (gens.empty()) return {identity_automorphism(g)};
  std::vector<Element> f;
  while (true) {
    bool empty = false;
    for (const auto& c : candidates) empty = empty || c.empty();
    if (empty) break;
    if (extend(f)) out.push_back(Automorphism{f});
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == candidates[k].size()) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace repdescent
