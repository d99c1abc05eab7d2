#include "heckewalks/presets.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "heckewalks/error.hpp"

namespace heckewalks {

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix builtin(const std::string& name) {
  if (name == "A1") return {{2}};
  if (name == "A2") return {{2, -1}, {-1, 2}};
  if (name == "B2") return {{2, -1}, {-2, 2}};
  if (name == "G2") return {{2, -1}, {-3, 2}};
  if (name == "A1~") return {{2}};       // affinized below
  if (name == "A2~") return {{2, -1}, {-1, 2}};
  return {};
}

Matrix matrix_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array() || j.empty())
    throw ParseError(what + ": expected a nonempty JSON array of rows");
  Matrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(what + ": rows must be arrays");
    std::vector<long long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError(what + ": entries must be integers");
      r.push_back(x.get<long long>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

SystemHandle handle_from_matrix(const std::string& name, const Matrix& m, bool affine_gcm,
                                bool affinize) {
  if (affinize || affine_gcm) {
    // affinize: name of the form "X~" built from the finite matrix of X
    AffineSystem aff =
        affinize ? AffineSystem::from_finite(m) : AffineSystem::from_affine_gcm(m);
    RootSystem rs = aff.affine();
    return SystemHandle{name, std::move(rs), std::move(aff), 0};
  }
  return SystemHandle{name, RootSystem::from_cartan(m), std::nullopt, 1};
}

} // namespace

SystemHandle resolve_system(const std::string& name_or_json) {
  std::string s = name_or_json;
  if (!s.empty() && s.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("inline Cartan matrix is not valid JSON: ") + e.what());
    }
    return handle_from_matrix("inline", matrix_from_json(j, "inline Cartan matrix"),
                              /*affine_gcm=*/false, /*affinize=*/false);
  }
  bool tilde = !s.empty() && s.back() == '~';
  Matrix m = builtin(s);
  if (!m.empty()) return handle_from_matrix(s, m, /*affine_gcm=*/false, /*affinize=*/tilde);

  if (const char* path = std::getenv("HECKE_WALKS_PRESETS")) {
    std::ifstream in(path);
    if (!in) throw ParseError(std::string("cannot open preset file ") + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("preset file is not valid JSON: ") + e.what());
    }
    if (j.contains(s))
      return handle_from_matrix(s, matrix_from_json(j.at(s), "preset \"" + s + "\""),
                                /*affine_gcm=*/tilde, /*affinize=*/false);
  }
  throw ParseError("unknown system preset \"" + s + "\"");
}

Expression parse_word(const SystemHandle& sys, const std::string& text) {
  if (text.empty() || text == "e") return Expression{};
  std::vector<int> letters;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ParseError("empty letter in word \"" + text + "\"");
    size_t pos = 0;
    int label;
    try {
      label = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad letter \"" + tok + "\" in word \"" + text + "\"");
    }
    if (pos != tok.size()) throw ParseError("bad letter \"" + tok + "\" in word \"" + text + "\"");
    int idx = label - sys.label_base;
    if (idx < 0 || idx >= sys.rs.rank())
      throw ParseError("generator label " + tok + " out of range for system " + sys.name);
    letters.push_back(idx);
  }
  return Expression(std::move(letters));
}

std::string format_word(const SystemHandle& sys, const Expression& expr) {
  if (expr.length() == 0) return "e";
  std::string out;
  for (int i : expr.letters) {
    if (!out.empty()) out += ",";
    out += std::to_string(i + sys.label_base);
  }
  return out;
}

std::vector<Int> parse_int_vector(const std::string& text, int expected_size) {
  std::vector<Int> out;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t pos = 0;
      long long val;
      try {
        val = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad integer \"" + tok + "\"");
      }
      if (pos != tok.size()) throw ParseError("bad integer \"" + tok + "\"");
      out.emplace_back(val);
    }
  }
  if (static_cast<int>(out.size()) != expected_size)
    throw ParseError("expected " + std::to_string(expected_size) + " integers, got " +
                     std::to_string(out.size()));
  return out;
}

Orientation parse_orientation(const SystemHandle& sys, const std::string& desc) {
  if (desc.empty()) throw ParseError("empty orientation descriptor");
  if (desc.front() == '-') return parse_orientation(sys, desc.substr(1)).negated();
  if (desc == "std") return Orientation::standard(sys.rs);
  if (desc.rfind("w:", 0) == 0) {
    Expression word = parse_word(sys, desc.substr(2));
    return Orientation::twisted(product(sys.rs, word), Orientation::standard(sys.rs));
  }
  if (desc.rfind("eta:", 0) == 0) {
    std::vector<Int> eta = parse_int_vector(desc.substr(4), sys.rs.rank());
    return Orientation::cocharacter(sys.rs, std::move(eta));
  }
  if (desc == "periodic") {
    if (!sys.aff)
      throw DomainError("periodic orientation requires an affine system, got " + sys.name);
    return Orientation::periodic(*sys.aff, +1);
  }
  throw ParseError("bad orientation descriptor \"" + desc + "\" (expected std, w:WORD, "
                   "eta:INTS, periodic, optionally '-'-prefixed)");
}

// --- JSON views -------------------------------------------------------------

nlohmann::json laurent_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.value();
  return j;
}

nlohmann::json walk_word_json(const SystemHandle& sys, const WalkWord& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const WalkLetter& l : w)
    j.push_back({l.gen == Gen::C ? "c" : "f", l.index + sys.label_base, l.sign});
  return j;
}

nlohmann::json hecke_json(const SystemHandle& sys, const HeckeElt& h) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, p] : h.terms()) j[format_word(sys, reduced_word(w))] = laurent_json(p);
  return j;
}

std::string weight_key(const std::vector<Int>& lambda) {
  std::string out;
  for (size_t k = 0; k < lambda.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(lambda[k].value());
  }
  return out;
}

nlohmann::json group_algebra_json(const GroupAlgebraElt& g) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [l, c] : g.terms()) j[weight_key(l)] = laurent_json(c);
  return j;
}

nlohmann::json bernstein_json(const SystemHandle&, const BernsteinElt& b) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, c] : b.terms()) {
    nlohmann::json term;
    term["weight"] = weight_key(k.first);
    // directions live in the finite system: labels 1..n regardless of the
    // affine labels used for words
    std::string u;
    for (int i : reduced_word(k.second).letters) {
      if (!u.empty()) u += ",";
      u += std::to_string(i + 1);
    }
    term["u"] = u.empty() ? "e" : u;
    term["coeff"] = laurent_json(c);
    j.push_back(term);
  }
  return j;
}

} // namespace heckewalks
