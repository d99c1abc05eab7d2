#include "heckewalks/affine_system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "heckewalks/error.hpp"

namespace heckewalks {

namespace {

// Positive roots of a finite system together with their coroots, found by
// closing the simple (root, coroot) pairs under all simple reflections.
// The coroot transforms contragrediently.  A cap turns non-termination on
// infinite systems into a clean diagnostic.
struct RootCorootTable {
  std::vector<Root> roots;
  std::vector<std::vector<Int>> coroots;
};

std::vector<Int> coroot_reflect(const RootSystem& rs, int j, const std::vector<Int>& c) {
  Int coef = 0;
  for (int i = 0; i < rs.rank(); ++i) coef += c[static_cast<size_t>(i)] * rs.cartan(i, j);
  std::vector<Int> r = c;
  r[static_cast<size_t>(j)] -= coef;
  return r;
}

RootCorootTable enumerate_positive_roots(const RootSystem& rs) {
  constexpr size_t kCap = 100000;
  std::map<Root, std::vector<Int>> found;
  std::vector<Root> frontier;
  for (int i = 0; i < rs.rank(); ++i) {
    Root a = Root::simple(rs, i);
    std::vector<Int> av(static_cast<size_t>(rs.rank()), Int(0));
    av[static_cast<size_t>(i)] = 1;
    found.emplace(a, std::move(av));
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier) {
      const std::vector<Int> bv = found.at(b);
      for (int j = 0; j < rs.rank(); ++j) {
        Root rb = reflect(rs, j, b);
        if (!rb.is_positive()) continue;
        if (found.count(rb)) continue;
        found.emplace(rb, coroot_reflect(rs, j, bv));
        next.push_back(rb);
        if (found.size() > kCap)
          throw DomainError("Cartan matrix is not of finite type: positive-root enumeration "
                            "exceeded " + std::to_string(kCap) + " roots");
      }
    }
    frontier = std::move(next);
  }
  RootCorootTable t;
  for (const auto& [r, c] : found) {
    t.roots.push_back(r);
    t.coroots.push_back(c);
  }
  return t;
}

} // namespace

AffineSystem::AffineSystem(RootSystem fin, RootSystem aff, Root theta,
                           std::vector<Int> theta_coroot, std::vector<Int> two_rho,
                           std::vector<Root> positives, WeylElt s_theta)
    : finite_(std::move(fin)), affine_(std::move(aff)), theta_(std::move(theta)),
      theta_coroot_(std::move(theta_coroot)), two_rho_(std::move(two_rho)),
      positive_roots_(std::move(positives)), s_theta_(std::move(s_theta)) {}

AffineSystem AffineSystem::from_finite(const std::vector<std::vector<long long>>& cartan) {
  return from_finite(RootSystem::from_cartan(cartan));
}

AffineSystem AffineSystem::from_finite(const RootSystem& finite) {
  const int n = finite.rank();
  RootCorootTable table = enumerate_positive_roots(finite);

  // theta = the unique positive root of maximal height
  size_t hi = 0;
  for (size_t k = 1; k < table.roots.size(); ++k)
    if (table.roots[k].height() > table.roots[hi].height()) hi = k;
  const Root& theta = table.roots[hi];
  for (size_t k = 0; k < table.roots.size(); ++k)
    if (k != hi && table.roots[k].height() == theta.height())
      throw DomainError("highest root is not unique; Cartan matrix is not irreducible");
  // sanity: theta + alpha_i is never a root
  {
    std::set<Root> all(table.roots.begin(), table.roots.end());
    for (int i = 0; i < n; ++i) {
      std::vector<Int> c = theta.coords();
      c[static_cast<size_t>(i)] += 1;
      bool is_root = false;
      for (const Root& r : all)
        if (r.coords() == c) { is_root = true; break; }
      if (is_root) throw DomainError("internal error: theta + simple root is a root");
    }
  }
  const std::vector<Int>& theta_vee = table.coroots[hi];

  std::vector<Int> two_rho(static_cast<size_t>(n), Int(0));
  for (const Root& r : table.roots)
    for (int j = 0; j < n; ++j) two_rho[static_cast<size_t>(j)] += r.coords()[static_cast<size_t>(j)];

  // affine GCM: index 0 is the affine node
  std::vector<std::vector<long long>> aff(static_cast<size_t>(n + 1),
                                          std::vector<long long>(static_cast<size_t>(n + 1), 0));
  aff[0][0] = 2;
  for (int j = 0; j < n; ++j) {
    Int a0j = 0; // -<alpha_j, theta^vee>
    for (int i = 0; i < n; ++i) a0j += theta_vee[static_cast<size_t>(i)] * finite.cartan(i, j);
    aff[0][static_cast<size_t>(j + 1)] = -a0j.value();
    Int aj0 = 0; // -<theta, alpha_j^vee>
    for (int k = 0; k < n; ++k) aj0 += finite.cartan(j, k) * theta.coords()[static_cast<size_t>(k)];
    aff[static_cast<size_t>(j + 1)][0] = -aj0.value();
    for (int k = 0; k < n; ++k) aff[static_cast<size_t>(j + 1)][static_cast<size_t>(k + 1)] =
        finite.cartan(j, k).value();
  }
  RootSystem affine_rs = RootSystem::from_cartan(aff, /*label_base=*/0);

  // s_theta = u s_j u^{-1}, where u is read off by lowering theta to a
  // simple root alpha_j one reflection at a time.
  WeylElt s_theta = WeylElt::identity(finite);
  {
    std::vector<int> lowering;
    Root beta = theta;
    int simple_index = -1;
    for (;;) {
      simple_index = -1;
      for (int i = 0; i < n; ++i)
        if (beta == Root::simple(finite, i)) { simple_index = i; break; }
      if (simple_index >= 0) break;
      int drop = -1;
      for (int i = 0; i < n; ++i) {
        Int pairing = 0; // <beta, alpha_i^vee>
        for (int k = 0; k < n; ++k) pairing += finite.cartan(i, k) * beta.coords()[static_cast<size_t>(k)];
        if (pairing > Int(0)) { drop = i; break; }
      }
      if (drop < 0) throw DomainError("internal error: positive root cannot be lowered");
      lowering.push_back(drop);
      beta = reflect(finite, drop, beta);
    }
    std::vector<int> word = lowering;
    word.push_back(simple_index);
    for (auto it = lowering.rbegin(); it != lowering.rend(); ++it) word.push_back(*it);
    s_theta = product(finite, Expression(std::move(word)));
    // cross-check against the defining formula s_theta(alpha_j) = alpha_j - <alpha_j, theta^vee> theta
    IntMatrix st(n);
    for (int j = 0; j < n; ++j) {
      Int pairing = 0;
      for (int i = 0; i < n; ++i) pairing += theta_vee[static_cast<size_t>(i)] * finite.cartan(i, j);
      for (int r = 0; r < n; ++r)
        st.at(r, j) = Int(r == j ? 1 : 0) - pairing * theta.coords()[static_cast<size_t>(r)];
    }
    if (!(s_theta.matrix() == st))
      throw DomainError("internal error: reflection in theta does not match its formula");
  }

  return AffineSystem(finite, std::move(affine_rs), theta, theta_vee, std::move(two_rho),
                      std::move(table.roots), std::move(s_theta));
}

AffineSystem AffineSystem::from_affine_gcm(const std::vector<std::vector<long long>>& cartan) {
  RootSystem given = RootSystem::from_cartan(cartan); // syntax check first
  const int m = given.rank();
  if (m < 2) throw DomainError("affine GCM must have rank at least 2");
  std::vector<std::vector<long long>> fin(static_cast<size_t>(m - 1),
                                          std::vector<long long>(static_cast<size_t>(m - 1)));
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j)
      fin[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
  AffineSystem built = from_finite(fin);
  if (!(built.affine().cartan_matrix() == given.cartan_matrix()))
    throw DomainError("matrix is not the untwisted affinization of nodes 1..n with affine node 0");
  return built;
}

AffineRoot AffineSystem::split(const Root& affine_root) const {
  if (affine_root.rank() != affine_.rank())
    throw DomainError("root does not belong to the affine system");
  const std::vector<Int>& c = affine_root.coords();
  Int level = c[0];
  std::vector<Int> cls(static_cast<size_t>(finite_.rank()));
  for (int i = 0; i < finite_.rank(); ++i)
    cls[static_cast<size_t>(i)] = c[static_cast<size_t>(i + 1)] - level * theta_.coords()[static_cast<size_t>(i)];
  return AffineRoot{Root(finite_, std::move(cls)), level};
}

Root AffineSystem::join(const AffineRoot& r) const {
  std::vector<Int> c(static_cast<size_t>(affine_.rank()));
  c[0] = r.level;
  for (int i = 0; i < finite_.rank(); ++i)
    c[static_cast<size_t>(i + 1)] =
        r.classical.coords()[static_cast<size_t>(i)] + r.level * theta_.coords()[static_cast<size_t>(i)];
  return Root(affine_, std::move(c));
}

Int AffineSystem::pair(const std::vector<Int>& lambda, const Root& beta) const {
  if (static_cast<int>(lambda.size()) != finite_.rank() || beta.rank() != finite_.rank())
    throw DomainError("pairing arguments do not match the finite system rank");
  Int out = 0;
  for (int j = 0; j < finite_.rank(); ++j) {
    Int col = 0;
    for (int i = 0; i < finite_.rank(); ++i) col += lambda[static_cast<size_t>(i)] * finite_.cartan(i, j);
    out += col * beta.coords()[static_cast<size_t>(j)];
  }
  return out;
}

Int AffineSystem::pair_two_rho(const std::vector<Int>& lambda) const {
  Int out = 0;
  for (int j = 0; j < finite_.rank(); ++j) {
    Int col = 0;
    for (int i = 0; i < finite_.rank(); ++i) col += lambda[static_cast<size_t>(i)] * finite_.cartan(i, j);
    out += col * two_rho_[static_cast<size_t>(j)];
  }
  return out;
}

// --- AffineElt -------------------------------------------------------------

AffineElt AffineElt::identity(const AffineSystem& aff) {
  return AffineElt(std::vector<Int>(static_cast<size_t>(aff.finite().rank()), Int(0)),
                   WeylElt::identity(aff.finite()));
}

AffineElt AffineElt::translation(const AffineSystem& aff, std::vector<Int> lambda) {
  if (static_cast<int>(lambda.size()) != aff.finite().rank())
    throw DomainError("translation weight has wrong length");
  return AffineElt(std::move(lambda), WeylElt::identity(aff.finite()));
}

AffineElt AffineElt::simple(const AffineSystem& aff, int i) {
  if (i < 0 || i > aff.finite().rank())
    throw DomainError("affine generator index " + std::to_string(i) + " out of range");
  if (i == 0) return AffineElt(aff.theta_coroot(), aff.s_theta());
  std::vector<Int> zero(static_cast<size_t>(aff.finite().rank()), Int(0));
  return AffineElt(std::move(zero), WeylElt::simple(aff.finite(), i - 1));
}

std::vector<Int> coroot_act(const RootSystem& rs, const WeylElt& w, const std::vector<Int>& c) {
  Expression word = reduced_word(w);
  std::vector<Int> v = c;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    v = coroot_reflect(rs, *it, v);
  return v;
}

AffineElt affine_mul(const AffineSystem& aff, const AffineElt& a, const AffineElt& b) {
  std::vector<Int> lam = coroot_act(aff.finite(), a.u_, b.lambda_);
  for (int i = 0; i < aff.finite().rank(); ++i) lam[static_cast<size_t>(i)] += a.lambda_[static_cast<size_t>(i)];
  return AffineElt(std::move(lam), mul(a.u_, b.u_));
}

AffineElt affine_inv(const AffineSystem& aff, const AffineElt& x) {
  WeylElt ui = inv(x.u_);
  std::vector<Int> lam = coroot_act(aff.finite(), ui, x.lambda_);
  for (Int& v : lam) v = -v;
  return AffineElt(std::move(lam), std::move(ui));
}

AffineRoot affine_act(const AffineSystem& aff, const AffineElt& x, const AffineRoot& beta) {
  Root ub = act(x.direction(), beta.classical);
  Int level = beta.level - aff.pair(x.weight(), ub);
  return AffineRoot{std::move(ub), level};
}

WeylElt to_weyl(const AffineSystem& aff, const AffineElt& x) {
  // Fall back to the generator product along a word for exactness and to
  // keep a single definition of the matrix action.
  return product(aff.affine(), to_word(aff, x));
}

namespace {
bool affine_root_positive(const AffineRoot& r) {
  return r.level > Int(0) || (r.level == Int(0) && r.classical.is_positive());
}
} // namespace

Expression to_word(const AffineSystem& aff, const AffineElt& x) {
  // Smallest-descent stripping, phrased on (weight, direction) pairs; agrees
  // with reduced_word on the affine matrix representation.
  std::vector<int> tail;
  AffineElt y = x;
  const int n = aff.finite().rank();
  for (;;) {
    int descent = -1;
    for (int i = 0; i <= n; ++i) {
      AffineRoot ai = i == 0 ? AffineRoot{aff.theta().negated(), Int(1)}
                             : AffineRoot{Root::simple(aff.finite(), i - 1), Int(0)};
      if (!affine_root_positive(affine_act(aff, y, ai))) {
        descent = i;
        break;
      }
    }
    if (descent < 0) break;
    tail.push_back(descent);
    y = affine_mul(aff, y, AffineElt::simple(aff, descent));
  }
  std::reverse(tail.begin(), tail.end());
  return Expression(std::move(tail));
}

AffineElt from_word(const AffineSystem& aff, const Expression& expr) {
  AffineElt x = AffineElt::identity(aff);
  for (int i : expr.letters) x = affine_mul(aff, x, AffineElt::simple(aff, i));
  return x;
}

AffineElt from_weyl(const AffineSystem& aff, const WeylElt& w) {
  if (!w.system().compatible(aff.affine()))
    throw DomainError("element does not belong to the affine Weyl group of this system");
  return from_word(aff, reduced_word(w));
}

int affine_length(const AffineSystem& aff, const AffineElt& x) {
  return to_word(aff, x).length();
}

MinCosetRep min_coset_rep(const AffineSystem& aff, const std::vector<Int>& lambda) {
  AffineElt m = AffineElt::translation(aff, lambda);
  const int n = aff.finite().rank();
  // strip finite descents until none remain
  for (;;) {
    int descent = -1;
    for (int j = 1; j <= n; ++j) {
      AffineRoot aj{Root::simple(aff.finite(), j - 1), Int(0)};
      if (!affine_root_positive(affine_act(aff, m, aj))) {
        descent = j;
        break;
      }
    }
    if (descent < 0) break;
    m = affine_mul(aff, m, AffineElt::simple(aff, descent));
  }
  MinCosetRep rep{m, to_word(aff, m), inv(m.direction())};
  if (rep.m.weight() != lambda)
    throw DomainError("internal error: coset representative changed the weight");
  return rep;
}

Int periodic_length(const AffineSystem& aff, const AffineElt& x, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("periodic orientation sign must be +1 or -1");
  Int val = -aff.pair_two_rho(x.weight()) + Int(length(x.direction()));
  return sign > 0 ? val : -val;
}

} // namespace heckewalks
