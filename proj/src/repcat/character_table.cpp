#include "repdescent/character_table.hpp"

#include "repdescent/error.hpp"
#include "repdescent/linalg.hpp"
#include "repdescent/modular.hpp"

#include <algorithm>
#include <numeric>

namespace repdescent {

GroupAlgebraElement convolve(const FiniteGroup& g, const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  const unsigned order = a.front().order();
  GroupAlgebraElement out(g.order(), Cyclotomic(order));
  for (Element x = 0; x < g.order(); ++x) {
    if (a[x].is_zero()) continue;
    for (Element y = 0; y < g.order(); ++y) {
      if (!b[y].is_zero()) out[g.mul(x, y)] += a[x] * b[y];
    }
  }
  return out;
}

ClassSumSpectrum class_sum_spectrum(const FiniteGroup& g, std::uint64_t p) {
  const auto& cc = g.classes();
  const std::size_t k = cc.count();
  // a[r][s][t] = #{(x, y) : x in C_r, y in C_s, xy = z_t}
  std::vector<std::vector<std::vector<std::uint64_t>>> a(
      k, std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(k, 0)));
  for (std::size_t t = 0; t < k; ++t) {
    const Element z = cc.representatives[t];
    for (Element x = 0; x < g.order(); ++x) {
      const Element y = g.mul(g.inv(x), z);
      ++a[cc.class_of[x]][cc.class_of[y]][t];
    }
  }
  std::vector<std::vector<ModRow>> spaces(1);
  for (std::size_t i = 0; i < k; ++i) {
    ModRow unit(k, 0);
    unit[i] = 1;
    spaces[0].push_back(std::move(unit));
  }
  for (std::size_t r = 0; r < k && spaces.size() < k; ++r) {
    std::vector<std::vector<ModRow>> next;
    for (const auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(basis);
        continue;
      }
      for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
        // (M_r - lambda) applied to each basis vector, as columns of E
        std::vector<ModRow> e(k, ModRow(basis.size(), 0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
          for (std::size_t s = 0; s < k; ++s) {
            std::uint64_t acc = (p - lambda) * basis[j][s] % p;
            for (std::size_t t = 0; t < k; ++t) acc = (acc + a[r][s][t] % p * basis[j][t]) % p;
            e[s][j] = acc;
          }
        }
        const auto coeffs = nullspace_mod_p(e, basis.size(), p);
        if (coeffs.empty()) continue;
        std::vector<ModRow> sub;
        for (const auto& c : coeffs) {
          ModRow v(k, 0);
          for (std::size_t j = 0; j < basis.size(); ++j) {
            for (std::size_t t = 0; t < k; ++t) v[t] = (v[t] + c[j] * basis[j][t]) % p;
          }
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) {
    throw Error(ErrorCode::no_valid_lift, "class multiplication matrices do not split mod " + std::to_string(p));
  }
  std::vector<std::size_t> inverse_class(k);
  for (std::size_t r = 0; r < k; ++r) inverse_class[r] = cc.class_of[g.inv(cc.representatives[r])];

  ClassSumSpectrum out{p, {}, {}, {}};
  for (const auto& basis : spaces) {
    ModRow v = basis.front();
    const std::uint64_t scale = mod_inv(v[0], p);
    for (auto& x : v) x = x * scale % p;
    // d^2 sum_r omega_r omega_r' / |C_r| = |G|
    std::uint64_t sum = 0;
    for (std::size_t r = 0; r < k; ++r) {
      sum = (sum + v[r] * v[inverse_class[r]] % p * mod_inv(cc.sizes[r] % p, p)) % p;
    }
    const std::uint64_t d2 = g.order() % p * mod_inv(sum, p) % p;
    std::size_t degree = 0;
    for (std::size_t d = 1; d * d <= g.order(); ++d) {
      if (d * d % p == d2) degree = d;
    }
    if (degree == 0) throw Error(ErrorCode::no_valid_lift, "no degree matches the class-sum eigenvector");
    ModRow chi(k);
    for (std::size_t r = 0; r < k; ++r) chi[r] = v[r] * (degree % p) % p * mod_inv(cc.sizes[r] % p, p) % p;
    out.omega.push_back(std::move(v));
    out.degrees.push_back(degree);
    out.character_residues.push_back(std::move(chi));
  }
  return out;
}

Cyclotomic class_inner_product(const FiniteGroup& g, const std::vector<Cyclotomic>& a,
                               const std::vector<Cyclotomic>& b) {
  const auto& cc = g.classes();
  Cyclotomic sum(a.front().order());
  for (std::size_t c = 0; c < cc.count(); ++c) sum += a[c] * b[c].conj() * Rational(static_cast<long>(cc.sizes[c]));
  return sum * Rational(1, static_cast<long>(g.order()));
}

namespace {

std::size_t left_ideal_dim(const FiniteGroup& g, const GroupAlgebraElement& b) {
  std::vector<Vector> rows;
  rows.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Vector v(g.order(), Cyclotomic(b.front().order()));
    for (Element y = 0; y < g.order(); ++y) v[g.mul(x, y)] = b[y];
    rows.push_back(std::move(v));
  }
  return row_reduce(std::move(rows), g.order(), b.front().order()).rows.size();
}

// (1/o) sum_j lambda^-j g^j with lambda = zeta_e^(k e / o)
GroupAlgebraElement spectral_projector(const FiniteGroup& g, Element x, std::size_t k, unsigned e) {
  const std::size_t o = g.element_order(x);
  const long step = static_cast<long>(k * (e / o));
  GroupAlgebraElement p(g.order(), Cyclotomic(e));
  Element power = g.identity();
  for (std::size_t j = 0; j < o; ++j) {
    p[power] += Cyclotomic::root(e, -step * static_cast<long>(j)) * Rational(1, static_cast<long>(o));
    power = g.mul(power, x);
  }
  return p;
}

// Cuts the block of e_i down to an element of rank one in that block by
// multiplying with spectral projectors of group elements.
GroupAlgebraElement primitive_part(const FiniteGroup& g, GroupAlgebraElement b, std::size_t degree, unsigned e) {
  std::size_t rank = left_ideal_dim(g, b) / degree;
  while (rank > 1) {
    bool progressed = false;
    for (Element x = 0; x < g.order() && !progressed; ++x) {
      if (x == g.identity()) continue;
      for (std::size_t k = 0; k < g.element_order(x) && !progressed; ++k) {
        const auto proj = spectral_projector(g, x, k, e);
        for (int side = 0; side < 2 && !progressed; ++side) {
          auto candidate = side == 0 ? convolve(g, b, proj) : convolve(g, proj, b);
          const std::size_t r = left_ideal_dim(g, candidate) / degree;
          if (r > 0 && r < rank) {
            b = std::move(candidate);
            rank = r;
            progressed = true;
          }
        }
      }
    }
    if (!progressed) {
      throw Error(ErrorCode::no_valid_lift,
                  "spectral projectors do not split a block of degree " + std::to_string(degree));
    }
  }
  return b;
}

Representation model_from_ideal(const GroupPtr& group, const GroupAlgebraElement& b, unsigned e) {
  const FiniteGroup& g = *group;
  std::vector<Vector> rows;
  for (Element x = 0; x < g.order(); ++x) {
    Vector v(g.order(), Cyclotomic(e));
    for (Element y = 0; y < g.order(); ++y) v[g.mul(x, y)] = b[y];
    rows.push_back(std::move(v));
  }
  const Echelon basis = row_reduce(std::move(rows), g.order(), e);
  const std::size_t d = basis.rows.size();
  std::vector<Matrix> mats;
  for (Element x = 0; x < g.order(); ++x) {
    Matrix m(d, d, e);
    for (std::size_t j = 0; j < d; ++j) {
      Vector moved(g.order(), Cyclotomic(e));
      for (Element y = 0; y < g.order(); ++y) moved[g.mul(x, y)] = basis.rows[j][y];
      const auto coords = echelon_coordinates(basis, moved);
      if (!coords) throw Error(ErrorCode::corrupt, "left ideal is not closed under translation");
      for (std::size_t r = 0; r < d; ++r) m(r, j) = (*coords)[r];
    }
    mats.push_back(std::move(m));
  }
  return make_representation(group, std::move(mats));
}

}  // namespace

std::shared_ptr<const CharacterTable> CharacterTable::compute(GroupPtr group, std::uint64_t prime_bound) {
  const FiniteGroup& g = *group;
  const auto& cc = g.classes();
  const std::size_t k = cc.count();
  const unsigned e = g.exponent();
  auto table = std::shared_ptr<CharacterTable>(new CharacterTable());
  table->group_ = group;
  table->order_ = e;
  table->prime_ = dixon_prime(e, g.order(), prime_bound);
  table->embedding_ = root_of_unity_mod(e, table->prime_);

  table->power_map_.assign(k, std::vector<std::size_t>(e));
  for (std::size_t c = 0; c < k; ++c) {
    Element x = g.identity();
    for (unsigned j = 0; j < e; ++j) {
      table->power_map_[c][j] = cc.class_of[x];
      x = g.mul(x, cc.representatives[c]);
    }
  }

  const auto spectrum = class_sum_spectrum(g, table->prime_);
  struct Row {
    std::size_t degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < spectrum.degrees.size(); ++i) {
    std::vector<ModularScalar> residues;
    for (auto r : spectrum.character_residues[i]) residues.push_back({table->prime_, r});
    rows.push_back({spectrum.degrees[i], dixon_lift(residues, table->power_map_, e, table->embedding_)});
  }
  auto is_trivial = [](const Row& r) {
    return std::all_of(r.values.begin(), r.values.end(), [](const Cyclotomic& v) { return v.is_one(); });
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (is_trivial(a) != is_trivial(b)) return is_trivial(a);
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values > b.values;
  });

  std::size_t total = 0;
  for (const auto& r : rows) total += r.degree * r.degree;
  if (total != g.order()) throw Error(ErrorCode::no_valid_lift, "squared degrees do not sum to the group order");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const auto ip = class_inner_product(g, rows[i].values, rows[j].values);
      if (!(ip == Cyclotomic(e, Rational(i == j ? 1 : 0)))) {
        throw Error(ErrorCode::no_valid_lift, "lifted characters are not orthonormal");
      }
    }
  }
  for (auto& r : rows) {
    table->degrees_.push_back(r.degree);
    table->values_.push_back(std::move(r.values));
  }

  const auto idempotents = central_idempotents(*table);
  for (std::size_t i = 0; i < table->size(); ++i) {
    const auto b = primitive_part(g, idempotents[i], table->degrees_[i], e);
    auto model = model_from_ideal(group, b, e);
    if (model.dim != table->degrees_[i]) throw Error(ErrorCode::corrupt, "model has the wrong dimension");
    for (std::size_t c = 0; c < k; ++c) {
      if (!(model(cc.representatives[c]).trace() == table->values_[i][c])) {
        throw Error(ErrorCode::corrupt, "model character differs from its table row");
      }
    }
    table->models_.push_back(std::make_shared<const Representation>(std::move(model)));
  }
  return table;
}

const Cyclotomic& CharacterTable::value_at(std::size_t i, Element x) const {
  return values_[i][group_->classes().class_of[x]];
}

std::optional<std::size_t> CharacterTable::find_row(const std::vector<Cyclotomic>& class_values) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == class_values) return i;
  }
  return std::nullopt;
}

MultiplicityVector decompose(const Representation& rho, const TablePtr& table) {
  const FiniteGroup& g = *table->group();
  if (rho.matrices.size() != g.order()) throw Error(ErrorCode::invalid_argument, "representation of another group");
  const Representation r = rho.order == table->order() ? rho : lift(rho, table->order());
  std::vector<Cyclotomic> per_class;
  for (auto x : g.classes().representatives) per_class.push_back(r(x).trace());
  MultiplicityVector m{table, {}};
  for (std::size_t i = 0; i < table->size(); ++i) {
    const auto ip = class_inner_product(g, per_class, table->values()[i]);
    if (!ip.is_rational() || !ip.rational_part().is_integer() || ip.rational_part() < Rational(0) ||
        !ip.rational_part().fits_long()) {
      throw Error(ErrorCode::invalid_argument,
                  "multiplicity of irreducible " + std::to_string(i) + " is " + ip.str() +
                      ", not a non-negative integer");
    }
    m.mults.push_back(ip.rational_part().to_long());
  }
  return m;
}

Representation chi_inverse(const MultiplicityVector& m) {
  const auto& table = *m.table;
  if (m.mults.size() != table.size()) throw Error(ErrorCode::dimension_mismatch, "multiplicity vector length");
  const std::size_t n = table.group()->order();
  Representation out{table.group(), 0, table.order(),
                     std::vector<Matrix>(n, Matrix(0, 0, table.order()))};
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (m.mults[i] < 0) throw Error(ErrorCode::invalid_argument, "negative multiplicity");
    for (long c = 0; c < m.mults[i]; ++c) out = direct_sum(out, *table.model(i));
  }
  return out;
}

MultiplicityVector tensor_Z(const MultiplicityVector& a, const MultiplicityVector& b) {
  if (a.table != b.table || a.mults.size() != b.mults.size()) {
    throw Error(ErrorCode::invalid_argument, "multiplicity vectors over different tables");
  }
  MultiplicityVector out{a.table, a.mults};
  for (std::size_t i = 0; i < out.mults.size(); ++i) out.mults[i] *= b.mults[i];
  return out;
}

MultiplicityVector unit_Z(const TablePtr& table) { return {table, std::vector<long>(table->size(), 1)}; }

MultiplicityVector unit_G(const TablePtr& table) {
  return decompose(trivial_representation(table->group(), table->order()), table);
}

std::vector<std::size_t> char_action(const Automorphism& alpha, const CharacterTable& table) {
  const FiniteGroup& g = *table.group();
  const auto& cc = g.classes();
  std::vector<std::size_t> phi;
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<Cyclotomic> moved;
    for (auto x : cc.representatives) moved.push_back(table.value_at(i, alpha(x)));
    const auto j = table.find_row(moved);
    if (!j) throw Error(ErrorCode::corrupt, "pulled-back character " + std::to_string(i) + " matches no row");
    phi.push_back(*j);
  }
  return phi;
}

std::vector<GroupAlgebraElement> central_idempotents(const CharacterTable& table) {
  const FiniteGroup& g = *table.group();
  std::vector<GroupAlgebraElement> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Rational scale(static_cast<long>(table.degree(i)), static_cast<long>(g.order()));
    GroupAlgebraElement e(g.order(), Cyclotomic(table.order()));
    for (Element x = 0; x < g.order(); ++x) e[x] = table.value_at(i, x).conj() * scale;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace repdescent
