#ifndef HECKEWALKS_TEST_HELPERS_HPP
#define HECKEWALKS_TEST_HELPERS_HPP

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "heckewalks/affine_system.hpp"
#include "heckewalks/coxeter.hpp"
#include "heckewalks/orientation.hpp"

namespace heckewalks::testing {

// The standard battery of orientations a rank-2 system is exercised
// against: the standard orientation and its negation, two Weyl twists, and
// either a dominant cocharacter (finite type) or the two periodic
// orientations (affine type).
inline std::vector<std::pair<std::string, Orientation>> orientation_pool(
    const RootSystem& rs, const AffineSystem* aff) {
  std::vector<std::pair<std::string, Orientation>> pool;
  Orientation std0 = Orientation::standard(rs);
  pool.emplace_back("std", std0);
  pool.emplace_back("-std", std0.negated());
  pool.emplace_back("twist-first", Orientation::twisted(product(rs, Expression{0}), std0));
  pool.emplace_back("twist-second-first",
                    Orientation::twisted(product(rs, Expression{1, 0}), std0));
  if (aff) {
    pool.emplace_back("periodic+", Orientation::periodic(*aff, +1));
    pool.emplace_back("periodic-", Orientation::periodic(*aff, -1));
  } else {
    pool.emplace_back("eta-dominant",
                      Orientation::cocharacter(rs, dominant_regular_cocharacter(rs)));
  }
  return pool;
}

// Every word over the generators with the given length.
inline std::vector<Expression> all_expressions(int rank, int len) {
  std::vector<Expression> out;
  std::vector<int> cur(static_cast<size_t>(len), 0);
  if (len == 0) {
    out.emplace_back();
    return out;
  }
  while (true) {
    out.emplace_back(Expression(std::vector<int>(cur)));
    int p = len - 1;
    while (p >= 0 && cur[static_cast<size_t>(p)] == rank - 1) {
      cur[static_cast<size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++cur[static_cast<size_t>(p)];
  }
  return out;
}

inline std::vector<Expression> all_expressions_up_to(int rank, int max_len) {
  std::vector<Expression> out;
  for (int len = 0; len <= max_len; ++len)
    for (Expression& e : all_expressions(rank, len)) out.push_back(std::move(e));
  return out;
}

inline WeylElt random_element(const RootSystem& rs, std::mt19937& rng, int steps) {
  std::uniform_int_distribution<int> gen(0, rs.rank() - 1);
  WeylElt w = WeylElt::identity(rs);
  for (int k = 0; k < steps; ++k) w = mul(w, WeylElt::simple(rs, gen(rng)));
  return w;
}

// True iff f() throws an E whose message contains needle.
template <class E, class F>
bool throws_with(F&& f, const std::string& needle) {
  try {
    f();
  } catch (const E& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

// The subword characterization of Bruhat order: u <= w iff some kept-letter
// mask of a fixed reduced word of w is a reduced word for u.
inline bool bruhat_leq_subword_oracle(const WeylElt& u, const WeylElt& w) {
  const RootSystem& rs = u.system();
  Expression sigma = reduced_word(w);
  int lu = length(u);
  for (const Subexpression& tau : subexpressions(sigma)) {
    if (tau.kept_count() != lu) continue;
    if (product(rs, tau) == u) return true; // kept word has length(u) letters: reduced
  }
  return false;
}

} // namespace heckewalks::testing

#endif
