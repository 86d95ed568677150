#include "repdescent/extension.hpp"

#include "repdescent/error.hpp"

#include <algorithm>

namespace repdescent {

GroupExtension make_extension(GroupPtr H, std::vector<Element> kernel) {
  if (!H) throw Error(ErrorCode::invalid_argument, "extension needs a group");
  const FiniteGroup& h = *H;
  const std::size_t n = h.order();
  std::sort(kernel.begin(), kernel.end());
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
  std::vector<bool> in(n, false);
  for (auto x : kernel) {
    if (x >= n) throw Error(ErrorCode::invalid_argument, "kernel element " + std::to_string(x) + " is out of range");
    in[x] = true;
  }
  if (kernel.empty() || !in[h.identity()]) {
    throw Error(ErrorCode::invalid_argument, "kernel does not contain the identity");
  }
  for (auto a : kernel) {
    for (auto b : kernel) {
      if (!in[h.mul(a, b)]) {
        throw Error(ErrorCode::invalid_argument,
                    "kernel is not closed: " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                        std::to_string(h.mul(a, b)));
      }
    }
  }
  for (auto x : kernel) {
    for (Element g = 0; g < n; ++g) {
      const Element y = h.conjugate(x, g);
      if (!in[y]) {
        throw Error(ErrorCode::not_normal, "kernel is not normal: conjugating " + std::to_string(x) + " by " +
                                               std::to_string(g) + " gives " + std::to_string(y) +
                                               ", which is outside the kernel");
      }
    }
  }

  const std::size_t m = kernel.size();
  std::vector<Element> to_g(n, 0);
  for (std::size_t k = 0; k < m; ++k) to_g[kernel[k]] = k;
  Table gt(m, std::vector<Element>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) gt[a][b] = to_g[h.mul(kernel[a], kernel[b])];
  }

  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> proj(n, unset);
  std::vector<Element> section;
  auto add_coset = [&](Element rep) {
    const Element q = section.size();
    section.push_back(rep);
    for (auto x : kernel) proj[h.mul(x, rep)] = q;
  };
  add_coset(h.identity());
  for (Element x = 0; x < n; ++x) {
    if (proj[x] == unset) add_coset(x);
  }
  const std::size_t qn = section.size();
  Table qt(qn, std::vector<Element>(qn));
  for (std::size_t a = 0; a < qn; ++a) {
    for (std::size_t b = 0; b < qn; ++b) qt[a][b] = proj[h.mul(section[a], section[b])];
  }

  GroupExtension ext;
  ext.H = std::move(H);
  ext.G = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(gt)));
  ext.Q = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(qt)));
  ext.embed = std::move(kernel);
  ext.proj = std::move(proj);
  ext.section = std::move(section);
  return ext;
}

RefinedCocycleDatum extension_cocycle(const GroupExtension& ext) {
  const FiniteGroup& h = *ext.H;
  const FiniteGroup& q = *ext.Q;
  const std::size_t m = ext.G->order();
  std::vector<Element> to_g(h.order(), static_cast<Element>(-1));
  for (std::size_t k = 0; k < m; ++k) to_g[ext.embed[k]] = k;

  RefinedCocycleDatum d;
  d.G = ext.G;
  d.Q = ext.Q;
  for (Element r = 0; r < q.order(); ++r) {
    std::vector<Element> image(m);
    for (Element x = 0; x < m; ++x) image[x] = to_g[h.conjugate(ext.embed[x], ext.section[r])];
    d.alpha.push_back(make_automorphism(*ext.G, std::move(image)));
  }
  d.beta.assign(q.order(), std::vector<Element>(q.order()));
  for (Element r = 0; r < q.order(); ++r) {
    for (Element s = 0; s < q.order(); ++s) {
      const Element t = q.mul(r, s);
      const Element b = h.mul(h.mul(ext.section[r], ext.section[s]), h.inv(ext.section[t]));
      if (to_g[b] == static_cast<Element>(-1)) {
        throw Error(ErrorCode::corrupt, "section product leaves the kernel at " + format_tuple({r, s}));
      }
      d.beta[r][s] = to_g[b];
    }
  }
  const auto bad = verify_refined(d);
  if (!bad.empty()) {
    throw Error(ErrorCode::corrupt, bad.front().rule + " fails at " + format_tuple(bad.front().at));
  }
  return d;
}

std::vector<Violation> verify_refined(const RefinedCocycleDatum& d) {
  const FiniteGroup& g = *d.G;
  const FiniteGroup& q = *d.Q;
  std::vector<Violation> out;
  for (Element r = 0; r < q.order(); ++r) {
    for (Element s = 0; s < q.order(); ++s) {
      const Element t = q.mul(r, s);
      const auto lhs = compose(d.alpha[s], d.alpha[r]);
      const auto rhs = compose(d.alpha[t], inner(g, d.beta[r][s]));
      if (lhs != rhs) out.push_back({"alpha-composition", {r, s}, "alpha^s o alpha^r != alpha^t o iota(beta)"});
    }
  }
  for (Element r = 0; r < q.order(); ++r) {
    const auto alpha_r_inv = d.alpha[r].inverse();
    for (Element s = 0; s < q.order(); ++s) {
      for (Element w = 0; w < q.order(); ++w) {
        const Element t = q.mul(r, s), v = q.mul(s, w), u = q.mul(t, w);
        const Element lhs = g.mul(alpha_r_inv(d.beta[s][w]), d.beta[r][v]);
        const Element rhs = g.mul(d.beta[r][s], d.beta[t][w]);
        if (lhs != rhs) {
          out.push_back({"beta-associativity", {r, s, w},
                         "lhs " + std::to_string(lhs) + " != rhs " + std::to_string(rhs) + " (u = " +
                             std::to_string(u) + ")"});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace repdescent
