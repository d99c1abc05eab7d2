// Command-line front end: named presets, orientation descriptors, and one
// subcommand per headline computation.  All JSON documents carry
// schema_version and are emitted with sorted keys, so byte-identical output
// is a supported contract.
//
// Exit codes: 0 success, 1 domain error (bad mathematical input, e.g. a
// non-reduced word where one is required), 2 parse error (bad syntax,
// unknown preset, malformed flags).

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckewalks/affine.hpp"
#include "heckewalks/error.hpp"
#include "heckewalks/presets.hpp"

namespace hw = heckewalks;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string system;
  std::string format = "json";
};

void add_common(CLI::App* sub, CommonOpts& c) {
  sub->add_option("--system", c.system, "preset name or inline Cartan matrix JSON")->required();
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
}

void emit(const CommonOpts& c, const json& doc, const std::vector<std::string>& text) {
  if (c.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const std::string& line : text) std::cout << line << "\n";
  }
}

json base_doc(const hw::SystemHandle& sys) {
  json doc;
  doc["schema_version"] = 1;
  doc["system"] = sys.name;
  return doc;
}

// Words over the finite generators, displayed 1-based regardless of the
// ambient label convention (used for the finite parts of affine data).
std::string finite_word_str(const hw::Expression& e) {
  if (e.letters.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < e.letters.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(e.letters[k] + 1);
  }
  return out;
}

hw::Expression parse_reduced_word(const hw::SystemHandle& sys, const std::string& text,
                                  const std::string& flag) {
  hw::Expression e = hw::parse_word(sys, text);
  if (!hw::is_reduced(sys.rs, e))
    throw hw::DomainError(flag + " word \"" + text + "\" is not reduced");
  return e;
}

hw::Subexpression parse_mask(const hw::Expression& sigma, const std::string& text) {
  if (text.empty()) return hw::Subexpression::full(sigma);
  return hw::Subexpression(sigma, hw::Subexpression::mask_from_string(
                                      text, static_cast<int>(sigma.letters.size())));
}

void run_change_basis(const CommonOpts& c, const std::string& expr, const std::string& mask,
                      const std::string& from, const std::string& to) {
  hw::SystemHandle sys = hw::resolve_system(c.system);
  hw::Expression sigma = hw::parse_word(sys, expr);
  hw::Subexpression tau = parse_mask(sigma, mask);
  hw::Orientation A = hw::parse_orientation(sys, from);
  hw::Orientation Ap = hw::parse_orientation(sys, to);

  hw::ChangeOfBasis cb = hw::change_of_basis(sys.rs, tau, A, Ap);

  json doc = base_doc(sys);
  doc["expr"] = hw::format_word(sys, sigma);
  doc["mask"] = tau.mask_string();
  doc["from"] = from;
  doc["to"] = to;
  doc["lhs"] = hw::walk_word_json(sys, cb.lhs);
  json terms = json::array();
  std::vector<std::string> text;
  text.push_back("L = " + hw::word_str(cb.lhs, sys.label_base));
  for (const hw::ChangeOfBasisTerm& t : cb.terms) {
    json jt;
    jt["mask"] = t.rho.mask_string();
    jt["sign"] = t.sign;
    jt["word"] = hw::walk_word_json(sys, t.word);
    terms.push_back(jt);
    text.push_back(std::string("  ") + (t.sign > 0 ? "+" : "-") + " L(" + t.rho.mask_string() +
                   ")  =  " + hw::word_str(t.word, sys.label_base));
  }
  doc["terms"] = terms;
  emit(c, doc, text);
}

void run_distinguished(const CommonOpts& c, const std::string& expr, const std::string& mask,
                       const std::string& from, const std::string& to) {
  hw::SystemHandle sys = hw::resolve_system(c.system);
  hw::Expression sigma = hw::parse_word(sys, expr);
  hw::Subexpression tau = parse_mask(sigma, mask);
  hw::Orientation A = hw::parse_orientation(sys, from);
  hw::Orientation Ap = hw::parse_orientation(sys, to);

  std::vector<hw::Subexpression> dist = hw::distinguished(sys.rs, tau, A, Ap);

  json doc = base_doc(sys);
  doc["expr"] = hw::format_word(sys, sigma);
  doc["mask"] = tau.mask_string();
  doc["from"] = from;
  doc["to"] = to;
  doc["count"] = dist.size();
  json elems = json::array();
  std::vector<std::string> text;
  text.push_back("count: " + std::to_string(dist.size()));
  for (const hw::Subexpression& rho : dist) {
    hw::FoldStats st = hw::fold_statistics(sys.rs, rho, Ap);
    json je;
    je["mask"] = rho.mask_string();
    je["product"] = hw::format_word(sys, hw::reduced_word(hw::product(sys.rs, rho)));
    je["kappa"] = st.kappa;
    je["zeta_plus"] = st.zeta_plus;
    je["zeta_minus"] = st.zeta_minus;
    elems.push_back(je);
    text.push_back("  " + rho.mask_string() + "  product " +
                   hw::format_word(sys, hw::reduced_word(hw::product(sys.rs, rho))) +
                   "  kappa " + std::to_string(st.kappa) + "  zeta+ " +
                   std::to_string(st.zeta_plus) + "  zeta- " + std::to_string(st.zeta_minus));
  }
  doc["elements"] = elems;
  emit(c, doc, text);
}

void run_r_poly(const CommonOpts& c, const std::string& u_text, const std::string& w_text) {
  hw::SystemHandle sys = hw::resolve_system(c.system);
  hw::WeylElt u = hw::product(sys.rs, parse_reduced_word(sys, u_text, "--u"));
  hw::WeylElt w = hw::product(sys.rs, parse_reduced_word(sys, w_text, "--w"));

  hw::LaurentPoly r = hw::r_polynomial(u, w).substitute_q(+1);

  json doc = base_doc(sys);
  doc["u"] = hw::format_word(sys, hw::reduced_word(u));
  doc["w"] = hw::format_word(sys, hw::reduced_word(w));
  doc["var"] = "q";
  doc["r"] = hw::laurent_json(r);
  emit(c, doc, {"R = " + r.str("q")});
}

void run_r_table(const CommonOpts& c, const std::string& w_text) {
  hw::SystemHandle sys = hw::resolve_system(c.system);
  hw::WeylElt w = hw::product(sys.rs, parse_reduced_word(sys, w_text, "--w"));

  json doc = base_doc(sys);
  doc["w"] = hw::format_word(sys, hw::reduced_word(w));
  doc["var"] = "q";
  json table;
  std::vector<std::string> text;
  for (const auto& [u, r] : hw::r_polynomial_row(w)) {
    hw::LaurentPoly rq = r.substitute_q(+1);
    std::string key = hw::format_word(sys, hw::reduced_word(u));
    table[key] = hw::laurent_json(rq);
    text.push_back(key + ": " + rq.str("q"));
  }
  doc["table"] = table;
  emit(c, doc, text);
}

void run_point_count(const CommonOpts& c, const std::string& expr, const std::string& orient,
                     const std::string& u_text) {
  hw::SystemHandle sys = hw::resolve_system(c.system);
  hw::Expression sigma = parse_reduced_word(sys, expr, "--expr");
  hw::Orientation Ap = hw::parse_orientation(sys, orient);

  json doc = base_doc(sys);
  doc["expr"] = hw::format_word(sys, sigma);
  doc["orientation"] = orient;
  doc["var"] = "q";
  std::vector<std::string> text;
  if (!u_text.empty()) {
    hw::WeylElt u = hw::product(sys.rs, hw::parse_word(sys, u_text));
    hw::LaurentPoly m = hw::point_count(sys.rs, sigma, Ap, u);
    doc["u"] = hw::format_word(sys, hw::reduced_word(u));
    doc["value"] = hw::laurent_json(m);
    text.push_back("M = " + m.str("q"));
  } else {
    json counts;
    for (const auto& [u, m] : hw::point_count_row(sys.rs, sigma, Ap)) {
      std::string key = hw::format_word(sys, hw::reduced_word(u));
      counts[key] = hw::laurent_json(m);
      text.push_back(key + ": " + m.str("q"));
    }
    doc["counts"] = counts;
  }
  emit(c, doc, text);
}

void run_ell_a(const CommonOpts& c, const std::string& w_text, const std::string& orient) {
  hw::SystemHandle sys = hw::resolve_system(c.system);
  hw::WeylElt w = hw::product(sys.rs, hw::parse_word(sys, w_text));
  hw::Orientation A = hw::parse_orientation(sys, orient);

  hw::Int value = hw::oriented_length(A, w);
  json doc = base_doc(sys);
  doc["w"] = hw::format_word(sys, hw::reduced_word(w));
  doc["orientation"] = orient;
  doc["value"] = value.value();
  emit(c, doc, {std::to_string(value.value())});
}

int run_macdonald(const CommonOpts& c, const std::string& lambda_text, const std::string& q_text) {
  hw::SystemHandle sys = hw::resolve_system(c.system);
  if (!sys.is_affine())
    throw hw::DomainError("macdonald requires an affine system (preset ending in \"~\")");
  const hw::AffineSystem& aff = *sys.aff;
  std::vector<hw::Int> lambda = hw::parse_int_vector(lambda_text, aff.finite().rank());
  hw::Specialization which =
      q_text == "0" ? hw::Specialization::AtZero : hw::Specialization::AtInfinity;

  hw::GroupAlgebraElt direct = hw::macdonald_direct(aff, lambda, which);
  hw::GroupAlgebraElt oriented = hw::macdonald_oriented(aff, lambda, which);
  hw::MinCosetRep rep = hw::min_coset_rep(aff, lambda);
  bool agree = direct == oriented;

  json doc = base_doc(sys);
  doc["lambda"] = hw::weight_key(lambda);
  doc["q"] = q_text;
  doc["m_word"] = hw::format_word(sys, rep.word);
  doc["u_lambda"] = finite_word_str(hw::reduced_word(rep.u_lambda));
  doc["value"] = hw::group_algebra_json(direct);
  doc["oriented"] = hw::group_algebra_json(oriented);
  doc["agree"] = agree;
  std::vector<std::string> text;
  text.push_back("E = " + direct.str());
  text.push_back("oriented route = " + oriented.str());
  text.push_back(std::string("agree: ") + (agree ? "yes" : "NO"));
  emit(c, doc, text);
  return agree ? 0 : 1;
}

int run_bernstein_check(const CommonOpts& c, const std::string& w_text) {
  hw::SystemHandle sys = hw::resolve_system(c.system);
  if (!sys.is_affine())
    throw hw::DomainError("bernstein-check requires an affine system (preset ending in \"~\")");
  const hw::AffineSystem& aff = *sys.aff;
  hw::WeylElt w = hw::product(sys.rs, hw::parse_word(sys, w_text));

  hw::BernsteinElt fold = hw::bernstein_of_T_fold(aff, w);
  hw::BernsteinElt oriented = hw::bernstein_of_T_oriented_sum(aff, w);
  bool agree = fold == oriented;

  json doc = base_doc(sys);
  doc["w"] = hw::format_word(sys, hw::reduced_word(w));
  doc["fold"] = hw::bernstein_json(sys, fold);
  doc["oriented_sum"] = hw::bernstein_json(sys, oriented);
  doc["agree"] = agree;
  std::vector<std::string> text;
  text.push_back("fold         = " + fold.str());
  text.push_back("oriented sum = " + oriented.str());
  text.push_back(std::string("agree: ") + (agree ? "yes" : "NO"));
  emit(c, doc, text);
  return agree ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"walk-algebra expansions, R-polynomials, and affine Hecke computations"};
  app.require_subcommand(1);

  int exit_code = 0;

  CommonOpts cb_c;
  std::string cb_expr, cb_mask, cb_from, cb_to;
  CLI::App* cb = app.add_subcommand("change-basis",
                                    "expand an oriented walk word in another orientation's basis");
  add_common(cb, cb_c);
  cb->add_option("--expr", cb_expr, "expression (comma-separated generator labels)")->required();
  cb->add_option("--mask", cb_mask, "kept-letter mask, leftmost = position 1 (default: all kept)");
  cb->add_option("--from", cb_from, "source orientation")->required();
  cb->add_option("--to", cb_to, "target orientation")->required();
  cb->callback([&] { run_change_basis(cb_c, cb_expr, cb_mask, cb_from, cb_to); });

  CommonOpts di_c;
  std::string di_expr, di_mask, di_from, di_to;
  CLI::App* di = app.add_subcommand("distinguished",
                                    "list the distinguished subexpressions of a masked word");
  add_common(di, di_c);
  di->add_option("--expr", di_expr, "expression")->required();
  di->add_option("--mask", di_mask, "kept-letter mask (default: all kept)");
  di->add_option("--from", di_from, "source orientation")->required();
  di->add_option("--to", di_to, "target orientation")->required();
  di->callback([&] { run_distinguished(di_c, di_expr, di_mask, di_from, di_to); });

  CommonOpts rp_c;
  std::string rp_u, rp_w;
  CLI::App* rp = app.add_subcommand("r-poly", "R-polynomial R_{u,w} in q");
  add_common(rp, rp_c);
  rp->add_option("--u", rp_u, "reduced word for u")->required();
  rp->add_option("--w", rp_w, "reduced word for w")->required();
  rp->callback([&] { run_r_poly(rp_c, rp_u, rp_w); });

  CommonOpts rt_c;
  std::string rt_w;
  CLI::App* rt = app.add_subcommand("r-table", "all R-polynomials R_{u,w} for fixed w");
  add_common(rt, rt_c);
  rt->add_option("--w", rt_w, "reduced word for w")->required();
  rt->callback([&] { run_r_table(rt_c, rt_w); });

  CommonOpts pc_c;
  std::string pc_expr, pc_orient, pc_u;
  CLI::App* pc = app.add_subcommand("point-count",
                                    "orientation-twisted cell point counts as polynomials in q");
  add_common(pc, pc_c);
  pc->add_option("--expr", pc_expr, "reduced expression")->required();
  pc->add_option("--orientation", pc_orient, "target orientation")->required();
  pc->add_option("--u", pc_u, "restrict to one group element (word)");
  pc->callback([&] { run_point_count(pc_c, pc_expr, pc_orient, pc_u); });

  CommonOpts el_c;
  std::string el_w, el_orient;
  CLI::App* el = app.add_subcommand("ell-a", "orientation-twisted length of a group element");
  add_common(el, el_c);
  el->add_option("--w", el_w, "word for the element")->required();
  el->add_option("--orientation", el_orient, "orientation")->required();
  el->callback([&] { run_ell_a(el_c, el_w, el_orient); });

  CommonOpts md_c;
  std::string md_lambda, md_q;
  CLI::App* md = app.add_subcommand("macdonald",
                                    "nonsymmetric Macdonald polynomial at a spectral limit");
  add_common(md, md_c);
  md->add_option("--lambda", md_lambda, "coroot-lattice weight (comma-separated)")->required();
  md->add_option("--q", md_q, "spectral limit")->required()->check(CLI::IsMember({"0", "inf"}));
  md->callback([&] { exit_code = run_macdonald(md_c, md_lambda, md_q); });

  CommonOpts bc_c;
  std::string bc_w;
  CLI::App* bc = app.add_subcommand("bernstein-check",
                                    "expand T_w in the X^lambda T_u basis by two routes");
  add_common(bc, bc_c);
  bc->add_option("--w", bc_w, "word for the affine element")->required();
  bc->callback([&] { exit_code = run_bernstein_check(bc_c, bc_w); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const hw::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hw::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hw::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
