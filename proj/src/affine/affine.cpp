#include "repdescent/affine.hpp"

#include "repdescent/error.hpp"
#include "repdescent/modular.hpp"

#include <algorithm>
#include <functional>

namespace repdescent {

namespace {

[[noreturn]] void bad_ring(const std::string& why) { throw Error(ErrorCode::invalid_argument, "not a commutative ring: " + why); }

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteCommRing FiniteCommRing::from_tables(Table add, Table mul, std::string name) {
  const std::size_t n = add.size();
  if (n == 0) bad_ring("empty table");
  if (mul.size() != n) bad_ring("addition and multiplication tables differ in size");
  for (std::size_t a = 0; a < n; ++a) {
    if (add[a].size() != n || mul[a].size() != n) bad_ring("row " + std::to_string(a) + " has the wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] >= n || mul[a][b] >= n) bad_ring("entry out of range in row " + std::to_string(a));
    }
  }
  auto find_identity = [n](const Table& t) -> std::size_t {
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
      if (ok) return e;
    }
    return n;
  };
  FiniteCommRing r;
  r.zero_ = find_identity(add);
  r.one_ = find_identity(mul);
  if (r.zero_ == n) bad_ring("no additive identity");
  if (r.one_ == n) bad_ring("no multiplicative identity");
  r.neg_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] == r.zero_) r.neg_[a] = b;
    }
    if (r.neg_[a] == n) bad_ring("element " + std::to_string(a) + " has no additive inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) bad_ring("addition is not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (mul[a][b] != mul[b][a]) bad_ring("multiplication is not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      for (std::size_t c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) bad_ring("addition is not associative at " + triple(a, b, c));
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) bad_ring("multiplication is not associative at " + triple(a, b, c));
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) bad_ring("distributivity fails at " + triple(a, b, c));
      }
    }
  }
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.name_ = std::move(name);
  return r;
}

FiniteCommRing FiniteCommRing::zmod(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "Z/0 is infinite");
  Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = (a + b) % n;
      mul[a][b] = a * b % n;
    }
  }
  return from_tables(std::move(add), std::move(mul), "Z/" + std::to_string(n));
}

FiniteCommRing FiniteCommRing::polynomial_quotient(std::size_t p, const std::vector<std::size_t>& monic) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
  if (monic.size() < 2 || monic.back() % p != 1) {
    throw Error(ErrorCode::invalid_argument, "modulus must be monic of degree at least 1");
  }
  const std::size_t deg = monic.size() - 1;
  std::size_t n = 1;
  for (std::size_t k = 0; k < deg; ++k) n *= p;
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> c(deg);
    for (std::size_t k = 0; k < deg; ++k, x /= p) c[k] = x % p;
    return c;
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t x = 0;
    for (std::size_t k = deg; k-- > 0;) x = x * p + c[k];
    return x;
  };
  Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const auto ca = digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto cb = digits(b);
      std::vector<std::size_t> sum(deg);
      for (std::size_t k = 0; k < deg; ++k) sum[k] = (ca[k] + cb[k]) % p;
      add[a][b] = encode(sum);
      std::vector<std::size_t> prod(2 * deg, 0);
      for (std::size_t i = 0; i < deg; ++i) {
        for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      }
      for (std::size_t k = prod.size(); k-- > deg;) {
        const std::size_t c = prod[k];
        if (c == 0) continue;
        for (std::size_t m = 0; m <= deg; ++m) prod[k - deg + m] = (prod[k - deg + m] + (p - c) * (monic[m] % p)) % p;
      }
      prod.resize(deg);
      mul[a][b] = encode(prod);
    }
  }
  std::string name = "F" + std::to_string(p) + "[t]/(";
  bool first = true;
  for (std::size_t k = monic.size(); k-- > 0;) {
    if (monic[k] % p == 0) continue;
    if (!first) name += " + ";
    first = false;
    if (k == 0 || monic[k] % p != 1) name += std::to_string(monic[k] % p);
    if (k > 0) name += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  name += ")";
  return from_tables(std::move(add), std::move(mul), std::move(name));
}

FiniteCommRing FiniteCommRing::product(const FiniteCommRing& r, const FiniteCommRing& s) {
  const std::size_t n = r.order() * s.order(), m = s.order();
  Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = r.add(a / m, b / m) * m + s.add(a % m, b % m);
      mul[a][b] = r.mul(a / m, b / m) * m + s.mul(a % m, b % m);
    }
  }
  std::string name;
  if (!r.name().empty() && !s.name().empty()) name = r.name() + " x " + s.name();
  return from_tables(std::move(add), std::move(mul), std::move(name));
}

RingHom compose(const RingHom& g, const RingHom& f) {
  RingHom h{f.source, g.target, std::vector<std::size_t>(f.image.size())};
  for (std::size_t x = 0; x < f.image.size(); ++x) h.image[x] = g(f(x));
  return h;
}

bool is_ring_hom(const FiniteCommRing& r, const FiniteCommRing& s, const std::vector<std::size_t>& f) {
  if (f.size() != r.order()) return false;
  for (auto y : f) {
    if (y >= s.order()) return false;
  }
  if (f[r.one()] != s.one()) return false;
  for (std::size_t a = 0; a < r.order(); ++a) {
    for (std::size_t b = 0; b < r.order(); ++b) {
      if (f[r.add(a, b)] != s.add(f[a], f[b]) || f[r.mul(a, b)] != s.mul(f[a], f[b])) return false;
    }
  }
  return true;
}

std::vector<RingHom> ring_homs(const RingPtr& r, const RingPtr& s, std::size_t bound) {
  if (r->order() > bound || s->order() > bound) {
    throw Error(ErrorCode::bound_exceeded, "ring order exceeds the search bound " + std::to_string(bound));
  }
  const std::size_t n = r->order();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  // Closes a partial assignment under + and *; false on a contradiction.
  auto propagate = [&](std::vector<std::size_t>& f) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (f[a] == unset) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (f[b] == unset) continue;
          const std::pair<std::size_t, std::size_t> rules[] = {{r->add(a, b), s->add(f[a], f[b])},
                                                               {r->mul(a, b), s->mul(f[a], f[b])}};
          for (const auto& [x, y] : rules) {
            if (f[x] == unset) {
              f[x] = y;
              changed = true;
            } else if (f[x] != y) {
              return false;
            }
          }
        }
      }
    }
    return true;
  };
  std::vector<RingHom> out;
  std::function<void(std::vector<std::size_t>)> search = [&](std::vector<std::size_t> f) {
    if (!propagate(f)) return;
    const auto next = std::find(f.begin(), f.end(), unset);
    if (next == f.end()) {
      if (is_ring_hom(*r, *s, f)) out.push_back(RingHom{r, s, f});
      return;
    }
    const std::size_t x = static_cast<std::size_t>(next - f.begin());
    for (std::size_t y = 0; y < s->order(); ++y) {
      auto g = f;
      g[x] = y;
      search(std::move(g));
    }
  };
  std::vector<std::size_t> start(n, unset);
  start[r->zero()] = s->zero();
  // the zero ring only maps to the zero ring
  if (start[r->one()] != unset && s->one() != s->zero()) return out;
  start[r->one()] = s->one();
  search(std::move(start));
  std::sort(out.begin(), out.end(), [](const RingHom& a, const RingHom& b) { return a.image < b.image; });
  return out;
}

PresentedModule free_module(const RingPtr& r, std::size_t rank) { return PresentedModule{r, 0, rank, {}}; }

PresentedModule cyclic_module(const RingPtr& r, std::size_t a) {
  if (a >= r->order()) throw Error(ErrorCode::invalid_argument, "element outside the ring");
  return PresentedModule{r, 1, 1, {a}};
}

PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n) {
  PresentedModule s{m.ring, m.rows + n.rows, m.cols + n.cols, {}};
  s.entries.assign(s.rows * s.cols, m.ring->zero());
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) s.entries[r * s.cols + c] = m.at(r, c);
  }
  for (std::size_t r = 0; r < n.rows; ++r) {
    for (std::size_t c = 0; c < n.cols; ++c) s.entries[(m.rows + r) * s.cols + m.cols + c] = n.at(r, c);
  }
  return s;
}

PresentedModule tensor(const PresentedModule& m, const PresentedModule& n) {
  const auto& ring = *m.ring;
  PresentedModule t{m.ring, m.rows * n.cols + m.cols * n.rows, m.cols * n.cols, {}};
  t.entries.assign(t.rows * t.cols, ring.zero());
  std::size_t row = 0;
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t b = 0; b < n.cols; ++b, ++row) {
      for (std::size_t a = 0; a < m.cols; ++a) t.entries[row * t.cols + a * n.cols + b] = m.at(i, a);
    }
  }
  for (std::size_t a = 0; a < m.cols; ++a) {
    for (std::size_t k = 0; k < n.rows; ++k, ++row) {
      for (std::size_t b = 0; b < n.cols; ++b) t.entries[row * t.cols + a * n.cols + b] = n.at(k, b);
    }
  }
  return t;
}

PresentedModule base_change(const RingHom& f, const PresentedModule& m) {
  PresentedModule out{f.target, m.rows, m.cols, {}};
  out.entries.reserve(m.entries.size());
  for (auto x : m.entries) out.entries.push_back(f(x));
  return out;
}

namespace {

// Elements of R^cols encoded base |R|, with the cokernel's coset structure.
struct Cokernel {
  const FiniteCommRing* ring;
  std::size_t cols;
  std::size_t total;
  std::vector<std::size_t> canon;
  std::vector<std::size_t> reps;

  std::vector<std::size_t> decode(std::size_t x) const {
    std::vector<std::size_t> v(cols);
    for (std::size_t k = 0; k < cols; ++k, x /= ring->order()) v[k] = x % ring->order();
    return v;
  }
  std::size_t encode(const std::vector<std::size_t>& v) const {
    std::size_t x = 0;
    for (std::size_t k = cols; k-- > 0;) x = x * ring->order() + v[k];
    return x;
  }
  std::size_t add(std::size_t x, std::size_t y) const {
    auto a = decode(x), b = decode(y);
    for (std::size_t k = 0; k < cols; ++k) a[k] = ring->add(a[k], b[k]);
    return encode(a);
  }
  std::size_t scale(std::size_t r, std::size_t x) const {
    auto a = decode(x);
    for (auto& c : a) c = ring->mul(r, c);
    return encode(a);
  }
};

Cokernel cokernel(const PresentedModule& m, std::size_t bound) {
  const std::size_t q = m.ring->order();
  std::size_t total = 1;
  for (std::size_t k = 0; k < m.cols; ++k) {
    if (total > bound / q) throw Error(ErrorCode::bound_exceeded, "module too large for brute force");
    total *= q;
  }
  Cokernel ck{m.ring.get(), m.cols, total, {}, {}};
  std::vector<bool> in(total, false);
  std::vector<std::size_t> sub{0};
  in[0] = true;
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::vector<std::size_t> row(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
    const std::size_t enc = ck.encode(row);
    // N + R*row; the old N is already a submodule
    const std::size_t before = sub.size();
    for (std::size_t i = 0; i < before; ++i) {
      for (std::size_t s = 0; s < q; ++s) {
        const std::size_t y = ck.add(sub[i], ck.scale(s, enc));
        if (!in[y]) {
          in[y] = true;
          sub.push_back(y);
        }
      }
    }
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  ck.canon.assign(total, unset);
  for (std::size_t x = 0; x < total; ++x) {
    if (ck.canon[x] != unset) continue;
    ck.reps.push_back(x);
    for (auto n : sub) ck.canon[ck.add(x, n)] = x;
  }
  return ck;
}

}  // namespace

std::size_t module_order(const PresentedModule& m, std::size_t bound) { return cokernel(m, bound).reps.size(); }

bool modules_isomorphic(const PresentedModule& m, const PresentedModule& n, std::size_t bound) {
  if (m.ring->add_table() != n.ring->add_table() || m.ring->mul_table() != n.ring->mul_table()) {
    throw Error(ErrorCode::invalid_argument, "modules over different rings");
  }
  const auto a = cokernel(m, bound);
  const auto b = cokernel(n, bound);
  if (a.reps.size() != b.reps.size()) return false;
  if (a.reps.size() == 1) return true;
  const std::size_t gens = m.cols;
  std::vector<std::size_t> pick(gens, 0);
  while (true) {
    std::vector<std::size_t> images(gens);
    for (std::size_t j = 0; j < gens; ++j) images[j] = b.reps[pick[j]];
    bool ok = true;
    for (std::size_t r = 0; r < m.rows && ok; ++r) {
      std::size_t acc = 0;
      for (std::size_t j = 0; j < gens; ++j) acc = b.add(acc, b.scale(m.at(r, j), images[j]));
      ok = b.canon[acc] == b.canon[0];
    }
    if (ok) {
      std::vector<bool> hit(b.total, false);
      std::size_t count = 0;
      for (std::size_t x = 0; x < a.total; ++x) {
        const auto coeffs = a.decode(x);
        std::size_t acc = 0;
        for (std::size_t j = 0; j < gens; ++j) acc = b.add(acc, b.scale(coeffs[j], images[j]));
        const std::size_t c = b.canon[acc];
        if (!hit[c]) {
          hit[c] = true;
          ++count;
        }
      }
      if (count == b.reps.size()) return true;
    }
    std::size_t k = 0;
    while (k < gens && ++pick[k] == b.reps.size()) pick[k++] = 0;
    if (k == gens) break;
  }
  return false;
}

FunctorDatum base_change_functor(const RingHom& f) {
  FunctorDatum d{f.source, f.target, {}};
  for (std::size_t r = 0; r < f.source->order(); ++r) {
    // the endomorphism x -> r x of R^1 is the 1x1 matrix [r]
    const PresentedModule endo{f.source, 1, 1, {r}};
    d.on_endomorphisms.push_back(base_change(f, endo).entries.front());
  }
  return d;
}

RingHom reconstruct_hom(const FunctorDatum& d) {
  if (d.on_endomorphisms.size() != d.source->order()) {
    throw Error(ErrorCode::invalid_argument, "functor datum has the wrong length");
  }
  if (!is_ring_hom(*d.source, *d.target, d.on_endomorphisms)) {
    throw Error(ErrorCode::invalid_argument, "functor datum is not additive, multiplicative and unital");
  }
  return RingHom{d.source, d.target, d.on_endomorphisms};
}

TwoPointReport two_point_example(std::size_t p) {
  if (p == 2 || !is_prime(p)) {
    throw Error(ErrorCode::invalid_argument, "two-point example needs an odd prime, got " + std::to_string(p));
  }
  auto r = std::make_shared<const FiniteCommRing>(FiniteCommRing::polynomial_quotient(p, {p - 1, 0, 1}));
  TwoPointReport rep;
  rep.p = p;
  const std::size_t half = static_cast<std::size_t>(mod_inv(2, p));
  auto element = [p](std::size_t c0, std::size_t c1) { return c0 + c1 * p; };
  const std::size_t t = element(0, 1);
  std::vector<std::size_t> found;
  for (std::size_t x = 0; x < r->order(); ++x) {
    if (x != r->zero() && x != r->one() && r->mul(x, x) == x) found.push_back(x);
  }
  for (const auto& [c0, c1] : {std::pair{half, half}, std::pair{half, (p - half) % p}}) {
    if (std::find(found.begin(), found.end(), element(c0, c1)) != found.end()) rep.idempotents.emplace_back(c0, c1);
  }
  if (rep.idempotents.size() != found.size()) throw Error(ErrorCode::corrupt, "unexpected idempotents");

  // a + b t -> (a + b, a - b)
  auto fp = std::make_shared<const FiniteCommRing>(FiniteCommRing::zmod(p));
  const auto split = FiniteCommRing::product(*fp, *fp);
  std::vector<std::size_t> image(r->order());
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) image[element(a, b)] = ((a + b) % p) * p + (a + p - b) % p;
  }
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  rep.split_isomorphism = is_ring_hom(*r, split, image) && sorted.size() == r->order();

  // t generates C2; an R-module is a C2-representation and its multiplicities
  // are the dimensions of the +1 and -1 eigenspaces of t.
  auto multiplicities = [&](const PresentedModule& m) {
    const auto ck = cokernel(m, 6561);
    std::vector<long> out;
    for (std::size_t sign : {r->one(), r->neg(r->one())}) {
      std::size_t count = 0;
      for (auto x : ck.reps) {
        const std::size_t diff = ck.add(ck.scale(t, x), ck.scale(r->neg(sign), x));
        count += ck.canon[diff] == ck.canon[0];
      }
      long dim = 0;
      for (std::size_t c = count; c > 1; c /= p) ++dim;
      out.push_back(dim);
    }
    return out;
  };
  rep.unit_X = multiplicities(free_module(r, 1));
  rep.unit_G = multiplicities(cyclic_module(r, r->sub(t, r->one())));

  std::vector<PresentedModule> roots;
  for (std::size_t a = 0; a < r->order(); ++a) {
    const auto l = cyclic_module(r, a);
    if (!modules_isomorphic(tensor(l, l), free_module(r, 1))) continue;
    bool seen = false;
    for (const auto& other : roots) seen = seen || modules_isomorphic(other, l);
    if (!seen) roots.push_back(l);
  }
  rep.square_roots_of_unit = roots.size();
  return rep;
}

}  // namespace repdescent
