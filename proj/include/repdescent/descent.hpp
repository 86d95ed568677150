#pragma once

#include "repdescent/character_table.hpp"
#include "repdescent/extension.hpp"
#include "repdescent/violation.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace repdescent {

/// Factor set on the index set {0, ..., n-1}. alpha is stored for i != j,
/// beta for pairwise distinct (i, j, k). The diagonal alpha_ii is the
/// identity and beta with a repeated index is the identity element.
class CocycleDatum {
 public:
  CocycleDatum(GroupPtr group, std::size_t n);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return n_; }

  const Automorphism& alpha(std::size_t i, std::size_t j) const;
  Element beta(std::size_t i, std::size_t j, std::size_t k) const;
  /// Throws ErrorCode::invalid_argument for i == j or a non-automorphism.
  void set_alpha(std::size_t i, std::size_t j, Automorphism a);
  void set_beta(std::size_t i, std::size_t j, std::size_t k, Element b);

 private:
  void check_index(std::size_t i) const;

  GroupPtr group_;
  std::size_t n_;
  Automorphism identity_;
  std::vector<Automorphism> alpha_;
  std::vector<Element> beta_;
};

/// Index i sits over q_i = i mod |Q|; alpha_ij = alpha^{r_ij} and
/// beta_ijk = beta^{r_ij, r_jk} with r_ij = q_i^-1 q_j.
CocycleDatum datum_from_extension(const RefinedCocycleDatum& refined, std::size_t n);

/// All (i, j) with i != j, and all pairwise distinct triples and quadruples,
/// in lexicographic order.
std::vector<std::array<std::size_t, 2>> ordered_pairs(std::size_t n);
std::vector<std::array<std::size_t, 3>> ordered_triples(std::size_t n);
std::vector<std::array<std::size_t, 4>> ordered_quadruples(std::size_t n);

enum class CheckStatus { pass, fail, vacuous };
const char* status_name(CheckStatus s);

struct CheckReport {
  CheckStatus status = CheckStatus::pass;
  std::size_t checked = 0;
  std::vector<Violation> violations;
};

/// Checks alpha_jk o alpha_ij = alpha_ik o iota(beta_ijk) on triples,
/// alpha_ij^-1(beta_jkl) beta_ijl = beta_ijk beta_ikl on quadruples and
/// alpha_ji o alpha_ij = id on pairs. Vacuous when n < 3.
CheckReport verify_cocycle(const CocycleDatum& datum);

/// rho(alpha(beta)) for a representation of the datum's group; verified to
/// intertwine pullback(rho, alpha o iota(beta)) -> pullback(rho, alpha).
/// Throws ErrorCode::corrupt when the check fails.
Matrix mu_component(const Representation& rho, const Automorphism& alpha, Element beta);

/// mu_component on every model of the table.
std::vector<Matrix> mu(const Automorphism& alpha, Element beta, const CharacterTable& table);

/// Composition laws of mu for (alpha, beta) and a second automorphism
/// alpha2, on every model rho:
///   mu at rho o alpha2 equals rho(alpha2(alpha(beta)))              "mu-whisker"
///   it intertwines the pullbacks of rho o alpha2 along alpha o iota(beta) and alpha
///   rho(alpha(beta)) intertwines rho o alpha o iota(beta) o alpha2
///     -> rho o alpha o alpha2                                       "mu-precompose"
std::vector<Violation> mu_composition_checks(const Automorphism& alpha, Element beta, const Automorphism& alpha2,
                                             const CharacterTable& table);

/// For every quadruple (i,j,k,l) and irreducible s compares the two composite
/// mu routes
///   rho(alpha_il(beta_ikl)) rho(alpha_kl(alpha_ik(beta_ijk)))
///   rho(alpha_il(beta_ijl)) rho(alpha_jl(beta_jkl))
/// with each other and with their closed forms
///   rho(alpha_il(beta_ijk beta_ikl)), rho(alpha_il(alpha_ij^-1(beta_jkl) beta_ijl)).
CheckReport tetrahedron_check(const CocycleDatum& datum, const CharacterTable& table);

/// Orbits of the irreducible indices. `acting` holds one permutation per
/// acting element; stabilizers list indices into `acting`.
struct DualSpaceDatum {
  std::vector<std::vector<std::size_t>> acting;
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::vector<std::size_t>> stabilizers;
};

/// Acting elements are Q itself (acting[r] = char_action(alpha^r)), so
/// stabilizers are subgroups of Q.
DualSpaceDatum dual_space(const RefinedCocycleDatum& refined, const CharacterTable& table);
/// Acting elements are the permutation group generated by all Phi_ij,
/// sorted, identity first.
DualSpaceDatum dual_space(const CocycleDatum& datum, const CharacterTable& table);

/// tau[(i, j)][s] for i != j: the normalized intertwiner
/// pullback(rho*_s, alpha_ij) -> rho*_{Phi_ij(s)}.
using TauMap = std::map<std::array<std::size_t, 2>, std::vector<Matrix>>;

inline constexpr const char* kTauNormalization = "first nonzero entry (row-major) equals 1";

/// Throws ErrorCode::corrupt when some Hom space is not one-dimensional.
TauMap compute_tau(const CocycleDatum& datum, const CharacterTable& table);

struct TwistClass {
  std::size_t n = 0;
  /// (s, i, j, k) -> c_{s,ijk}
  std::map<std::array<std::size_t, 4>, Cyclotomic> scalars;
  /// (i, j) -> Phi_ij
  std::map<std::array<std::size_t, 2>, std::vector<std::size_t>> transport;
  std::string tau_normalization;
  TauMap tau;
};

/// c_{s,ijk} is the scalar of tau_{ij,u} tau_{jk,t} tau_{ki,s} rho*_s(beta_ijk^-1)
/// with t = Phi_ki(s), u = Phi_jk(t). Uses compute_tau unless `tau` is given.
/// Throws ErrorCode::not_scalar or ErrorCode::corrupt on inconsistent input.
TwistClass compute_twist(const CocycleDatum& datum, const CharacterTable& table);
TwistClass compute_twist(const CocycleDatum& datum, const CharacterTable& table, TauMap tau);

/// Reads d_{t,ijk} off the recorded scalars through c_{s,ijk} = d_{t,ijk} e_{s,ik},
/// where e_{s,ik} is the scalar of tau_{ik,t} tau_{ki,s}, and d is defined by
///   tau_{ij,u} tau_{jk,t} = d_{t,ijk} tau_{ik,t} rho*_t(alpha_ik(beta_ijk)).
/// For each quadruple and corner w it composes X = tau_ij tau_jk tau_kl and
/// compares X with both bracketings
///   d_{w',ijk} d_{w,ikl} tau_{il,w} rho*_w(alpha_il(beta_ijk beta_ikl))
///   d_{w,jkl} d_{w,ijl} tau_{il,w} rho*_w(alpha_il(alpha_ij^-1(beta_jkl) beta_ijl))
/// with w' = Phi_kl(w). Vacuous when n < 4.
CheckReport verify_twist_cocycle(const TwistClass& tw, const CocycleDatum& datum, const CharacterTable& table);

/// delta_ij is the permutation e_x -> e_{alpha_ij(x)} of the group-algebra
/// basis. Checks that each delta_ij intertwines the left regular
/// representation with its pullback along alpha_ij, and that
/// delta_ki delta_jk delta_ij equals the basis permutation of iota(beta_ijk),
/// e_x -> e_{beta^-1 x beta}. Vacuous when n < 3.
CheckReport verify_gerbe_side(const CocycleDatum& datum, unsigned order);

}  // namespace repdescent
