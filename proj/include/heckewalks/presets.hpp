#ifndef HECKEWALKS_PRESETS_HPP
#define HECKEWALKS_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "heckewalks/affine.hpp"
#include "heckewalks/affine_system.hpp"
#include "heckewalks/coxeter.hpp"
#include "heckewalks/hecke.hpp"
#include "heckewalks/orientation.hpp"
#include "heckewalks/walk.hpp"

namespace heckewalks {

// A named system as the command line sees it: the working root system,
// the affine bundle when there is one, and the label convention.
//
// Generator labels:
//   finite presets and inline Cartan matrices  1..n  (label k = index k-1)
//   affine presets (names ending in "~")       0..n  (0 = affine node)
struct SystemHandle {
  std::string name;
  RootSystem rs; // the system words and orientations live in
  std::optional<AffineSystem> aff;
  int label_base = 1;

  bool is_affine() const { return aff.has_value(); }
};

// Built-in presets: A1, A2, B2, G2, A1~, A2~.  The environment variable
// HECKE_WALKS_PRESETS may name a JSON file {"name": [[...]], ...} with
// additional Cartan matrices; names ending in "~" are taken as affine GCMs
// whose node 0 is the affine node.  An inline JSON matrix is also accepted
// as a system name.
SystemHandle resolve_system(const std::string& name_or_json);

// "1,2,1" -> Expression (internal indices); "e" or "" is the empty word.
Expression parse_word(const SystemHandle& sys, const std::string& text);
std::string format_word(const SystemHandle& sys, const Expression& expr); // "e" if empty

// Comma-separated integers (weights, cocharacters).
std::vector<Int> parse_int_vector(const std::string& text, int expected_size);

// Orientation descriptors:
//   std          standard
//   w:WORD       standard twisted by the word's product
//   eta:INTS     cocharacter
//   periodic     periodic (+); affine systems only
// and any of these prefixed with '-' for the negation.
Orientation parse_orientation(const SystemHandle& sys, const std::string& desc);

// --- JSON views -------------------------------------------------------------

nlohmann::json laurent_json(const LaurentPoly& p);
nlohmann::json walk_word_json(const SystemHandle& sys, const WalkWord& w);
nlohmann::json hecke_json(const SystemHandle& sys, const HeckeElt& h);
nlohmann::json group_algebra_json(const GroupAlgebraElt& g);
nlohmann::json bernstein_json(const SystemHandle& sys, const BernsteinElt& b);

std::string weight_key(const std::vector<Int>& lambda); // "1,-2"

} // namespace heckewalks

#endif
