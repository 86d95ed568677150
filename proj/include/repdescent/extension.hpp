#pragma once

#include "repdescent/group.hpp"
#include "repdescent/violation.hpp"

#include <vector>

namespace repdescent {

/// 1 -> G -> H -> Q -> 1 with G the given normal subgroup of H.
struct GroupExtension {
  GroupPtr H;
  GroupPtr G;
  GroupPtr Q;
  /// G element -> H element. G is indexed by the sorted kernel list.
  std::vector<Element> embed;
  /// H element -> coset index. Coset 0 contains the identity; the others
  /// are numbered by their least element.
  std::vector<Element> proj;
  /// Q element -> least H element of the coset (the identity for coset 0).
  std::vector<Element> section;
};

/// Checks that `kernel` is a normal subgroup of H and builds G, Q, the
/// projection and the least-element section. Throws ErrorCode::not_normal
/// with a conjugation witness, or ErrorCode::invalid_argument when `kernel`
/// is not a subgroup.
GroupExtension make_extension(GroupPtr H, std::vector<Element> kernel);

/// Factor set with upper indices in Q and a single lower index:
/// alpha[r](x) = r~^-1 x r~, and beta[r][s] = r~ s~ (rs)~^-1 as an element of G.
struct RefinedCocycleDatum {
  GroupPtr G;
  GroupPtr Q;
  std::vector<Automorphism> alpha;
  std::vector<std::vector<Element>> beta;

  Element beta_at(Element r, Element s) const { return beta[r][s]; }
};

/// Computes the datum and verifies both refined cocycle identities before
/// returning. Throws ErrorCode::corrupt if either identity fails.
RefinedCocycleDatum extension_cocycle(const GroupExtension& ext);

/// Every violated instance of
///   alpha^s o alpha^r = alpha^t o iota(beta^{rst})                     (r, s)
///   (alpha^r)^-1(beta^{swv}) beta^{rvu} = beta^{rst} beta^{twu}        (r, s, w)
/// with t = rs, v = sw, u = rsw. Empty when the datum is consistent.
std::vector<Violation> verify_refined(const RefinedCocycleDatum& datum);

}  // namespace repdescent
