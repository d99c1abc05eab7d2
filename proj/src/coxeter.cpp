#include "heckewalks/coxeter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "heckewalks/error.hpp"

namespace heckewalks {

// --- IntMatrix -----------------------------------------------------------

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("matrix size mismatch in product");
  IntMatrix r(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      Int aik = a.at(i, k);
      if (aik == Int(0)) continue;
      for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != n_) throw DomainError("matrix/vector size mismatch");
  std::vector<Int> r(v.size(), Int(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.a_ < b.a_;
}

// --- RootSystem ----------------------------------------------------------

struct RootSystem::Data {
  IntMatrix cartan;
  std::vector<IntMatrix> refl; // matrix of s_i on root coordinates
  int label_base = 1;
};

RootSystem RootSystem::from_cartan(const std::vector<std::vector<long long>>& cartan,
                                   int label_base) {
  const int n = static_cast<int>(cartan.size());
  if (n == 0) throw ParseError("Cartan matrix is empty");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(cartan[i].size()) != n)
      throw ParseError("Cartan matrix is not square: row " + std::to_string(i) + " has " +
                       std::to_string(cartan[i].size()) + " entries, expected " +
                       std::to_string(n));
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2)
      throw ParseError("Cartan matrix diagonal entry (" + std::to_string(i) + "," +
                       std::to_string(i) + ") is " + std::to_string(cartan[i][i]) +
                       ", must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0)
        throw ParseError("Cartan matrix off-diagonal entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") is positive");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw ParseError("Cartan matrix zero pattern is asymmetric at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  auto d = std::make_shared<Data>();
  d->cartan = IntMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d->cartan.at(i, j) = cartan[i][j];
  d->refl.reserve(n);
  for (int i = 0; i < n; ++i) {
    // s_i(alpha_j) = alpha_j - cartan(i,j) alpha_i: identity minus the i-th
    // row of the Cartan matrix placed in row i.
    IntMatrix m = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j) m.at(i, j) -= d->cartan.at(i, j);
    d->refl.push_back(std::move(m));
  }
  d->label_base = label_base;
  return RootSystem(std::move(d));
}

int RootSystem::rank() const { return d_->cartan.size(); }
int RootSystem::label_base() const { return d_->label_base; }
Int RootSystem::cartan(int i, int j) const { return d_->cartan.at(i, j); }
const IntMatrix& RootSystem::cartan_matrix() const { return d_->cartan; }

const IntMatrix& RootSystem::simple_reflection_matrix(int i) const {
  validate_generator_index(*this, i);
  return d_->refl[static_cast<size_t>(i)];
}

bool RootSystem::compatible(const RootSystem& o) const {
  return d_ == o.d_ || d_->cartan == o.d_->cartan;
}

void validate_generator_index(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank())
    throw DomainError("generator index " + std::to_string(i) + " out of range for rank " +
                      std::to_string(rs.rank()));
}

void validate_expression(const RootSystem& rs, const Expression& expr) {
  for (int i : expr.letters) validate_generator_index(rs, i);
}

// --- Root ----------------------------------------------------------------

namespace {
// +1 all nonnegative (nonzero), -1 all nonpositive (nonzero), 0 otherwise.
int sign_pattern(const std::vector<Int>& c) {
  bool has_pos = false, has_neg = false;
  for (Int x : c) {
    if (x > Int(0)) has_pos = true;
    if (x < Int(0)) has_neg = true;
  }
  if (has_pos && !has_neg) return 1;
  if (has_neg && !has_pos) return -1;
  return 0;
}
} // namespace

Root::Root(const RootSystem& rs, std::vector<Int> coords) : c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != rs.rank())
    throw DomainError("root coordinate vector has length " + std::to_string(c_.size()) +
                      ", rank is " + std::to_string(rs.rank()));
  int s = sign_pattern(c_);
  if (s == 0) {
    std::string repr;
    for (Int x : c_) repr += (repr.empty() ? "" : ",") + to_string(x);
    throw DomainError("coordinates (" + repr + ") are not a real root: mixed signs or zero");
  }
  positive_ = s > 0;
}

Root Root::simple(const RootSystem& rs, int i) {
  validate_generator_index(rs, i);
  std::vector<Int> c(static_cast<size_t>(rs.rank()), Int(0));
  c[static_cast<size_t>(i)] = 1;
  Root r(rs, std::move(c));
  return r;
}

Root Root::negated() const {
  Root r = *this;
  for (Int& x : r.c_) x = -x;
  r.positive_ = !positive_;
  return r;
}

Int Root::height() const {
  Int h = 0;
  for (Int x : c_) h += x;
  return h;
}

std::string Root::str(int label_base) const {
  std::ostringstream out;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    long long v = c_[j].value();
    if (v == 0) continue;
    if (first) {
      if (v < 0) out << "-";
    } else {
      out << (v < 0 ? "-" : "+");
    }
    long long a = v < 0 ? -v : v;
    if (a != 1) out << a;
    out << "a" << static_cast<long long>(j) + label_base;
    first = false;
  }
  return out.str();
}

// --- Expression / Subexpression ------------------------------------------

Expression Expression::reversed() const {
  Expression r = *this;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

Subexpression::Subexpression(Expression expr, std::uint64_t mask)
    : expr_(std::move(expr)), mask_(mask) {
  if (expr_.length() > 63) throw DomainError("expressions longer than 63 letters unsupported");
  if (expr_.length() == 0 ? mask != 0 : (mask >> expr_.length()) != 0)
    throw DomainError("mask has bits beyond the expression length");
}

Subexpression Subexpression::full(Expression expr) {
  int r = expr.length();
  if (r > 63) throw DomainError("expressions longer than 63 letters unsupported");
  std::uint64_t m = r == 0 ? 0 : ((std::uint64_t{1} << r) - 1);
  return Subexpression(std::move(expr), m);
}

bool Subexpression::kept(int k) const {
  if (k < 0 || k >= expr_.length()) throw DomainError("subexpression position out of range");
  return (mask_ >> (expr_.length() - 1 - k)) & 1;
}

int Subexpression::kept_count() const {
  int c = 0;
  for (int k = 0; k < expr_.length(); ++k)
    if (kept(k)) ++c;
  return c;
}

std::string Subexpression::mask_string() const {
  std::string s;
  for (int k = 0; k < expr_.length(); ++k) s += kept(k) ? '1' : '0';
  return s;
}

std::uint64_t Subexpression::mask_from_string(const std::string& s, int r) {
  if (static_cast<int>(s.size()) != r)
    throw ParseError("mask \"" + s + "\" has length " + std::to_string(s.size()) +
                     ", expression has length " + std::to_string(r));
  std::uint64_t m = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError("mask must consist of 0s and 1s, got \"" + s + "\"");
    m = (m << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return m;
}

bool Subexpression::refines(const Subexpression& tau) const {
  return expr_ == tau.expr_ && (mask_ & ~tau.mask_) == 0;
}

Subexpression Subexpression::reversed() const {
  int r = expr_.length();
  std::uint64_t m = 0;
  for (int k = 0; k < r; ++k)
    if (kept(k)) m |= std::uint64_t{1} << k;
  return Subexpression(expr_.reversed(), m);
}

// --- WeylElt and group operations ----------------------------------------

WeylElt WeylElt::identity(const RootSystem& rs) {
  return WeylElt(rs, IntMatrix::identity(rs.rank()), Expression{});
}

WeylElt WeylElt::simple(const RootSystem& rs, int i) {
  validate_generator_index(rs, i);
  return WeylElt(rs, rs.simple_reflection_matrix(i), Expression{i});
}

namespace {
void require_compatible(const RootSystem& a, const RootSystem& b, const char* what) {
  if (!a.compatible(b))
    throw DomainError(std::string("cannot ") + what + ": elements belong to different root systems");
}
} // namespace

Root reflect(const RootSystem& rs, int i, const Root& beta) {
  validate_generator_index(rs, i);
  if (beta.rank() != rs.rank()) throw DomainError("root rank does not match system rank");
  return Root(rs, rs.simple_reflection_matrix(i).apply(beta.coords()));
}

WeylElt mul(const WeylElt& a, const WeylElt& b) {
  require_compatible(a.rs_, b.rs_, "multiply");
  return WeylElt(a.rs_, a.m_ * b.m_, std::nullopt);
}

Root act(const WeylElt& w, const Root& beta) {
  if (beta.rank() != w.system().rank())
    throw DomainError("root rank does not match system rank");
  return Root(w.system(), w.matrix().apply(beta.coords()));
}

WeylElt product(const RootSystem& rs, const Expression& expr) {
  validate_expression(rs, expr);
  WeylElt w = WeylElt::identity(rs);
  for (int i : expr.letters) w = mul(w, WeylElt::simple(rs, i));
  return w;
}

WeylElt product(const RootSystem& rs, const Subexpression& tau) {
  WeylElt w = WeylElt::identity(rs);
  for (int k = 0; k < tau.length(); ++k)
    if (tau.kept(k)) w = mul(w, WeylElt::simple(rs, tau.expression().letters[k]));
  return w;
}

namespace {
// Is alpha_i sent negative by w?  (Right descent test: iff l(w s_i) < l(w).)
bool sends_simple_negative(const WeylElt& w, int i) {
  const IntMatrix& m = w.matrix();
  // image of alpha_i is column i of the matrix
  for (int r = 0; r < m.size(); ++r) {
    Int c = m.at(r, i);
    if (c < Int(0)) return true;
    if (c > Int(0)) return false;
  }
  throw DomainError("zero column in Weyl group matrix"); // unreachable for group elements
}

int smallest_descent(const WeylElt& w) {
  for (int i = 0; i < w.system().rank(); ++i)
    if (sends_simple_negative(w, i)) return i;
  return -1;
}
} // namespace

int length(const WeylElt& w) {
  if (w.cached_word()) return w.cached_word()->length();
  WeylElt x = w;
  int len = 0;
  for (;;) {
    int i = smallest_descent(x);
    if (i < 0) return len;
    x = mul(x, WeylElt::simple(x.system(), i));
    ++len;
  }
}

Expression reduced_word(const WeylElt& w) {
  if (w.cached_word()) return *w.cached_word();
  // Strip the smallest descent from the right: if i is a descent of w then
  // w = w' s_i with l(w') = l(w) - 1, and the word of w is word(w') ++ [i].
  std::vector<int> tail;
  WeylElt x = w;
  for (;;) {
    int i = smallest_descent(x);
    if (i < 0) break;
    tail.push_back(i);
    x = mul(x, WeylElt::simple(x.system(), i));
  }
  std::reverse(tail.begin(), tail.end());
  return Expression(std::move(tail));
}

WeylElt inv(const WeylElt& w) {
  // Inverse via any reduced word, reversed: exact, no rational arithmetic.
  Expression rw = reduced_word(w);
  return product(w.system(), rw.reversed());
}

bool is_reduced(const RootSystem& rs, const Expression& expr) {
  validate_expression(rs, expr);
  return length(product(rs, expr)) == expr.length();
}

std::vector<Root> inversions(const WeylElt& w) {
  const RootSystem& rs = w.system();
  Expression rw = reduced_word(w);
  std::set<Root> out;
  WeylElt prefix = WeylElt::identity(rs);
  for (int k = 0; k < rw.length(); ++k) {
    int i = rw.letters[static_cast<size_t>(k)];
    out.insert(act(prefix, Root::simple(rs, i)));
    prefix = mul(prefix, WeylElt::simple(rs, i));
  }
  if (static_cast<int>(out.size()) != rw.length())
    throw DomainError("inversion enumeration produced a repeat; word was not reduced");
  return std::vector<Root>(out.begin(), out.end());
}

bool bruhat_leq(const WeylElt& u, const WeylElt& w) {
  require_compatible(u.system(), w.system(), "compare in Bruhat order");
  WeylElt a = u, b = w;
  for (;;) {
    int i = smallest_descent(b);
    if (i < 0) return smallest_descent(a) < 0; // b = e: only e <= e
    WeylElt s = WeylElt::simple(b.system(), i);
    if (sends_simple_negative(a, i)) a = mul(a, s);
    b = mul(b, s);
  }
}

std::vector<Subexpression> subexpressions(const Expression& expr) {
  int r = expr.length();
  if (r > 24) throw DomainError("refusing to materialize 2^" + std::to_string(r) + " subexpressions");
  std::vector<Subexpression> out;
  out.reserve(std::uint64_t{1} << r);
  std::uint64_t top = std::uint64_t{1} << r;
  for (std::uint64_t m = 0; m < top; ++m) out.emplace_back(expr, m);
  return out;
}

std::vector<WeylElt> weyl_ball(const RootSystem& rs, int max_len) {
  std::set<WeylElt> seen;
  std::vector<WeylElt> frontier{WeylElt::identity(rs)};
  seen.insert(frontier.front());
  for (int l = 0; l < max_len; ++l) {
    std::vector<WeylElt> next;
    for (const WeylElt& w : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        // extend only upward, so each element is reached at its own length
        if (sends_simple_negative(w, i)) continue;
        WeylElt ws = mul(w, WeylElt::simple(rs, i));
        if (seen.insert(ws).second) next.push_back(ws);
      }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return std::vector<WeylElt>(seen.begin(), seen.end());
}

} // namespace heckewalks
