#include "heckewalks/orientation.hpp"

#include <optional>
#include <sstream>

#include "heckewalks/error.hpp"

namespace heckewalks {

struct Orientation::Node {
  Kind kind;
  RootSystem rs; // ambient system (for Periodic: the affine system)

  // Negated / WeylTwisted
  std::shared_ptr<const Node> inner;
  // WeylTwisted: act by x_inv before querying inner
  std::optional<IntMatrix> x_inv;
  std::optional<Expression> x_word; // for printing
  // Cocharacter: precomputed pairings <eta, alpha_j>
  std::vector<Int> eta;
  std::vector<Int> eta_pairings;
  // Periodic
  std::optional<AffineSystem> aff;
  int periodic_sign = 0;

  Node(Kind k, RootSystem r) : kind(k), rs(std::move(r)) {}
};

Orientation Orientation::standard(const RootSystem& rs) {
  return Orientation(std::make_shared<Node>(Kind::Standard, rs));
}

Orientation Orientation::negated() const {
  if (n_->kind == Kind::Negated) return Orientation(n_->inner); // involution
  auto node = std::make_shared<Node>(Kind::Negated, n_->rs);
  node->inner = n_;
  return Orientation(node);
}

Orientation Orientation::twisted(const WeylElt& x, const Orientation& inner) {
  if (!x.system().compatible(inner.system()))
    throw DomainError("twisting element belongs to a different root system");
  // push the twist through a negation, and merge with an existing twist
  if (inner.n_->kind == Kind::Negated)
    return twisted(x, Orientation(inner.n_->inner)).negated();
  auto node = std::make_shared<Node>(Kind::WeylTwisted, inner.system());
  Expression xw = reduced_word(x);
  if (inner.n_->kind == Kind::WeylTwisted) {
    // x(y(A)) = (xy)(A); compose the inverse matrices in the other order
    node->inner = inner.n_->inner;
    node->x_inv = *inner.n_->x_inv * inv(x).matrix();
    Expression combined = xw;
    for (int i : inner.n_->x_word->letters) combined.letters.push_back(i);
    node->x_word = reduced_word(product(inner.system(), combined));
  } else {
    node->inner = inner.n_;
    node->x_inv = inv(x).matrix();
    node->x_word = xw;
  }
  return Orientation(node);
}

Orientation Orientation::cocharacter(const RootSystem& rs, std::vector<Int> eta) {
  if (static_cast<int>(eta.size()) != rs.rank())
    throw DomainError("cocharacter has length " + std::to_string(eta.size()) + ", rank is " +
                      std::to_string(rs.rank()));
  auto node = std::make_shared<Node>(Kind::Cocharacter, rs);
  node->eta_pairings.resize(static_cast<size_t>(rs.rank()));
  for (int j = 0; j < rs.rank(); ++j) {
    Int p = 0;
    for (int i = 0; i < rs.rank(); ++i) p += eta[static_cast<size_t>(i)] * rs.cartan(i, j);
    if (p == Int(0))
      throw DomainError("cocharacter is not regular: it pairs to zero with simple root " +
                        std::to_string(j + rs.label_base()));
    node->eta_pairings[static_cast<size_t>(j)] = p;
  }
  node->eta = std::move(eta);
  return Orientation(node);
}

Orientation Orientation::periodic(const AffineSystem& aff, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("periodic orientation sign must be +1 or -1");
  auto node = std::make_shared<Node>(Kind::Periodic, aff.affine());
  node->aff = aff;
  node->periodic_sign = sign;
  return Orientation(node);
}

int Orientation::sgn(const Root& beta) const {
  const Node* n = n_.get();
  if (beta.rank() != n->rs.rank())
    throw DomainError("root does not belong to this orientation's system");
  switch (n->kind) {
    case Kind::Standard:
      return beta.is_positive() ? 1 : -1;
    case Kind::Negated:
      return -Orientation(n->inner).sgn(beta);
    case Kind::WeylTwisted: {
      Root moved(n->rs, n->x_inv->apply(beta.coords()));
      return Orientation(n->inner).sgn(moved);
    }
    case Kind::Cocharacter: {
      Int p = 0;
      for (int j = 0; j < n->rs.rank(); ++j)
        p += n->eta_pairings[static_cast<size_t>(j)] * beta.coords()[static_cast<size_t>(j)];
      if (p == Int(0))
        throw DomainError("cocharacter is not regular: it pairs to zero with root " +
                          beta.str(n->rs.label_base()));
      return p > Int(0) ? 1 : -1;
    }
    case Kind::Periodic: {
      AffineRoot split = n->aff->split(beta);
      int s = split.classical.is_positive() ? 1 : -1;
      return n->periodic_sign * s;
    }
  }
  throw DomainError("corrupt orientation node");
}

const RootSystem& Orientation::system() const { return n_->rs; }
Orientation::Kind Orientation::kind() const { return n_->kind; }

std::string Orientation::str() const {
  const Node* n = n_.get();
  switch (n->kind) {
    case Kind::Standard:
      return "std";
    case Kind::Negated:
      return "-" + Orientation(n->inner).str();
    case Kind::WeylTwisted: {
      std::ostringstream out;
      out << "w:";
      for (size_t k = 0; k < n->x_word->letters.size(); ++k) {
        if (k) out << ",";
        out << n->x_word->letters[k];
      }
      out << "(" << Orientation(n->inner).str() << ")";
      return out.str();
    }
    case Kind::Cocharacter: {
      std::ostringstream out;
      out << "eta:";
      for (size_t k = 0; k < n->eta.size(); ++k) {
        if (k) out << ",";
        out << n->eta[k].value();
      }
      return out.str();
    }
    case Kind::Periodic:
      return n->periodic_sign > 0 ? "periodic:+" : "periodic:-";
  }
  return "?";
}

Int oriented_length(const Orientation& A, const WeylElt& w) {
  if (!w.system().compatible(A.system()))
    throw DomainError("element and orientation belong to different root systems");
  Int total = 0;
  for (const Root& beta : inversions(w)) total += Int(A.sgn(beta));
  return total;
}

namespace {
// determinant by cofactor expansion; ranks here are tiny
Int det(const IntMatrix& m) {
  int n = m.size();
  if (n == 1) return m.at(0, 0);
  Int d = 0;
  for (int k = 0; k < n; ++k) {
    if (m.at(0, k) == Int(0)) continue;
    IntMatrix minor(n - 1);
    for (int i = 1; i < n; ++i) {
      int cj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        minor.at(i - 1, cj++) = m.at(i, j);
      }
    }
    Int term = m.at(0, k) * det(minor);
    d += (k % 2 == 0) ? term : -term;
  }
  return d;
}
} // namespace

std::vector<Int> dominant_regular_cocharacter(const RootSystem& rs) {
  const int n = rs.rank();
  const IntMatrix& c = rs.cartan_matrix();
  // eta^T = 1^T adj(C), i.e. eta_i = sum_k adj(C)_{ki}; then
  // <eta, alpha_j> = (eta^T C)_j = det(C) for every j, uniformly positive in
  // finite type.  (Column sums, not row sums: adj(C) C = det(C) I.)
  std::vector<Int> eta(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Int sum = 0;
    for (int j = 0; j < n; ++j) {
      // adj(C)_{ji} = (-1)^{i+j} * minor with row i, column j deleted
      IntMatrix minor(n - 1);
      int mr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        int mc = 0;
        for (int cc = 0; cc < n; ++cc) {
          if (cc == j) continue;
          minor.at(mr, mc++) = c.at(r, cc);
        }
        ++mr;
      }
      Int cof = n == 1 ? Int(1) : det(minor);
      sum += ((i + j) % 2 == 0) ? cof : -cof;
    }
    eta[static_cast<size_t>(i)] = sum;
  }
  for (int j = 0; j < n; ++j) {
    Int p = 0;
    for (int i = 0; i < n; ++i) p += eta[static_cast<size_t>(i)] * rs.cartan(i, j);
    if (p <= Int(0))
      throw DomainError("no dominant regular cocharacter: system is not of finite type");
  }
  return eta;
}

} // namespace heckewalks
