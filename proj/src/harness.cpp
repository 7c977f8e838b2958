#include "qloop/harness.hpp"

#include "qloop/catalog.hpp"
#include "qloop/errors.hpp"
#include "qloop/identities.hpp"
#include "qloop/morphisms.hpp"
#include "qloop/structure.hpp"
#include "qloop/transforms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace qloop::harness {

using nlohmann::json;

std::string_view to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Verified:
    return "verified";
  case CheckStatus::Refuted:
    return "refuted-with-witness";
  case CheckStatus::HypothesisNeverSatisfied:
    return "hypothesis-never-satisfied";
  case CheckStatus::Deviation:
    return "deviation-from-paper";
  }
  return "?";
}

json table_json(const Magma& m) { return json{{"order", m.order()}, {"table", m.rows()}}; }

Magma table_from_json(const json& j) {
  return Magma::from_rows(j.at("table").get<std::vector<std::vector<Element>>>());
}

namespace {

// ---------------------------------------------------------------------------
// Claims. Each returns std::nullopt when it holds on the given table and
// parameters, or a short failure description. Witnesses store the claim name
// with its inputs so that replay_witness can re-run it.

using Failure = std::optional<std::string>;
using Params = json;
using ClaimFn = std::function<Failure(const Magma&, const Params&)>;

Permutation perm_from(const json& j) { return Permutation::from_images(j.get<std::vector<Element>>()); }
json perm_json(const Permutation& p) { return std::vector<Element>(p.images().begin(), p.images().end()); }

IsotopismTriple triple_from(const json& j) { return {perm_from(j.at("a")), perm_from(j.at("b")), perm_from(j.at("c"))}; }
json triple_json(const IsotopismTriple& t) {
  return json{{"a", perm_json(t.a)}, {"b", perm_json(t.b)}, {"c", perm_json(t.c)}};
}

Failure fail_if(bool bad, std::string what) { return bad ? Failure(std::move(what)) : std::nullopt; }

bool is_commutative_c_loop(const Magma& m) { return m.is_commutative() && is_c_loop(m); }

/// The tables that the derivative theorems relate, for one loop F and one a.
struct DerivativeSystem {
  Element a, a_left, a_right, e;
  Permutation la, ra;
  Magma left_der;        // F^{a⁻¹}, a⁻¹ the left inverse
  Magma right_der;       // F_{a⁻¹}, a⁻¹ the right inverse
  Magma left_principal;  // F_{a⁻¹,e}
  Magma right_principal; // F_{e,a⁻¹}

  DerivativeSystem(const Magma& f, Element a_)
      : a(a_), a_left(inverses(f, a_).left), a_right(inverses(f, a_).right), e(*f.identity()),
        la(left_translation(f, a_)), ra(right_translation(f, a_)), left_der(left_derivative(f, a_left)),
        right_der(right_derivative(f, a_right)), left_principal(principal_isotope(f, a_left, e)),
        right_principal(principal_isotope(f, e, a_right)) {}
};

Failure commutative_derivatives(const Magma& f, Element a, const IsotopismTriple& shape) {
  const DerivativeSystem s(f, a);
  if (s.la != s.ra)
    return "L_a differs from R_a";
  if (!is_commutative_c_loop(f))
    return "F is not a commutative C-loop";
  const Magma f1 = apply_isotopism(f, shape);
  if (f1 != s.left_der)
    return "isotope differs from the left derivative at a^-1";
  if (f1 != s.right_der)
    return "isotope differs from the right derivative at a^-1";
  if (!is_commutative_c_loop(f1))
    return "isotope is not a commutative C-loop";
  if (!is_isomorphism(s.left_principal, s.left_der, s.la))
    return "L_a is not an isomorphism from F_{a^-1,e} to F^{a^-1}";
  if (!is_isomorphism(s.right_principal, s.right_der, s.ra))
    return "R_a is not an isomorphism from F_{e,a^-1} to F_{a^-1}";
  if (!is_commutative_c_loop(s.left_principal))
    return "F_{a^-1,e} is not a commutative C-loop";
  if (!is_commutative_c_loop(s.right_principal))
    return "F_{e,a^-1} is not a commutative C-loop";
  return std::nullopt;
}

IsotopismTriple ibb(const Magma& f, Element a) {
  const auto b = left_translation(f, a);
  return {Permutation::identity(f.order()), b, b};
}

IsotopismTriple bib(const Magma& f, Element a) {
  const auto b = left_translation(f, a);
  return {b, Permutation::identity(f.order()), b};
}

/// Premise shared by the commutative derivative claims: the isotope under the
/// named triple is a commutative loop.
bool commutative_isotope_premise(const Magma& f, const IsotopismTriple& t) {
  const Magma f1 = apply_isotopism(f, t);
  return f1.is_loop() && f1.is_commutative();
}

Failure distributive_laws(const Magma& f, Element a) {
  const DerivativeSystem s(f, a);
  const int n = f.order();
  for (Element x = 1; x <= n; ++x)
    for (Element y = 1; y <= n; ++y) {
      const Element star = s.left_principal(x, y);
      if (f(a, star) != s.left_der(f(a, x), f(y, a)))
        return "a(x*y) != (ax)o(ya) at x=" + std::to_string(x) + ", y=" + std::to_string(y);
      if (f(star, a) != s.left_der(f(x, a), f(y, a)))
        return "(x*y)a != (xa)o(ya) at x=" + std::to_string(x) + ", y=" + std::to_string(y);
      const Element dot = s.right_principal(x, y);
      if (f(a, dot) != s.right_der(f(a, x), f(y, a)))
        return "a(x.y) != (ax)o'(ya) at x=" + std::to_string(x) + ", y=" + std::to_string(y);
      if (f(dot, a) != s.right_der(f(x, a), f(y, a)))
        return "(x.y)a != (xa)o'(ya) at x=" + std::to_string(x) + ", y=" + std::to_string(y);
    }
  return std::nullopt;
}

Failure lc_left_system(const Magma& f, Element a) {
  const DerivativeSystem s(f, a);
  const Magma f1 = apply_isotopism(f, {s.la, Permutation::identity(f.order()), s.la});
  if (f1 != s.left_der)
    return "(L_a, I, L_a)-isotope differs from the left derivative at a^-1";
  if (!is_isomorphism(s.left_principal, s.left_der, s.la))
    return "L_a is not an isomorphism from F_{a^-1,e} to F^{a^-1}";
  for (Element x = 1; x <= f.order(); ++x)
    for (Element y = 1; y <= f.order(); ++y)
      if (f(a, s.left_principal(x, y)) != s.left_der(f(a, x), f(a, y)))
        return "a(x*y) != (ax)o(ay) at x=" + std::to_string(x) + ", y=" + std::to_string(y);
  return std::nullopt;
}

Failure rc_right_system(const Magma& f, Element a) {
  const DerivativeSystem s(f, a);
  const Magma f1 = apply_isotopism(f, {Permutation::identity(f.order()), s.ra, s.ra});
  if (f1 != s.right_der)
    return "(I, R_a, R_a)-isotope differs from the right derivative at a^-1";
  if (!is_isomorphism(s.right_principal, s.right_der, s.ra))
    return "R_a is not an isomorphism from F_{e,a^-1} to F_{a^-1}";
  for (Element x = 1; x <= f.order(); ++x)
    for (Element y = 1; y <= f.order(); ++y)
      if (f(s.right_principal(x, y), a) != s.right_der(f(x, a), f(y, a)))
        return "(x.y)a != (xa)o(ya) at x=" + std::to_string(x) + ", y=" + std::to_string(y);
  return std::nullopt;
}

bool alternative_central_square_loop(const Magma& m) {
  return m.is_loop() && is_alternative(m) && satisfies(m, IdentityId::CentralSquare);
}

Magma left_shape_isotope(const Magma& f, Element a) {
  const auto la = left_translation(f, a);
  return apply_isotopism(f, {la, Permutation::identity(f.order()), la});
}

Failure central_square_alternative_isotope(const Magma& f, Element a) {
  const DerivativeSystem s(f, a);
  const Magma f1 = left_shape_isotope(f, a);
  if (!is_c_loop(f1))
    return "alternative central-square isotope is not a C-loop";
  if (!is_isomorphism(s.left_principal, f1, s.la))
    return "L_a is not an isomorphism from F_{a^-1,e} to the isotope";
  if (!is_c_loop(s.left_principal) || !is_central_square(s.left_principal))
    return "F_{a^-1,e} is not a central-square C-loop";
  return std::nullopt;
}

Magma shaped_isotope(const Magma& g, const Params& p) {
  const auto a = perm_from(p.at("a"));
  const auto b = perm_from(p.at("b"));
  const bool abb = p.at("shape") == "ABB";
  return apply_isotopism(g, {a, b, abb ? b : a});
}

Failure bridge_claim(const Magma& theta, const Params& p) {
  try {
    parastrophe_isotopy_bridge(theta, triple_from(p.at("theta_iso")), triple_from(p.at("tstar_iso")));
  } catch (const HypothesisError&) {
    return "premise not met";
  } catch (const ContractError& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

Failure swapped_bridge_claim(const Magma& theta, const Params& p) {
  const auto t1 = triple_from(p.at("theta_iso"));
  const auto t2 = triple_from(p.at("tstar_iso"));
  const Magma otimes = apply_isotopism(theta, t1);
  const Magma oplus = apply_isotopism(parastrophe(theta), t2);
  if (otimes.is_commutative())
    return fail_if(!is_isotopism(parastrophe(theta), otimes, {t1.b, t1.a, t1.c}),
                   "(B, A, C) does not carry the parastrophe onto the first isotope");
  if (oplus.is_commutative())
    return fail_if(!is_isotopism(theta, oplus, {t2.b, t2.a, t2.c}),
                   "(E, D, F) does not carry the loop onto the second isotope");
  return "premise not met";
}

Failure group_profile(const Magma& g, const Params& p) {
  if (!is_group(g))
    return "not a group";
  if (is_indecomposable(g) != p.at("indecomposable").get<bool>())
    return "indecomposability differs";
  const auto z = center(g);
  if (static_cast<int>(z.elements.size()) != p.at("center_size").get<int>())
    return "center size " + std::to_string(z.elements.size());
  if (center_rank(g).rank != p.at("rank").get<int>())
    return "center rank " + std::to_string(center_rank(g).rank);
  if (is_central_square(g) != p.at("central_square").get<bool>())
    return "central-square flag differs";
  return std::nullopt;
}

Failure morphism_agreement(const Magma& g, const Params& p) {
  const Magma h = table_from_json(p.at("other"));
  const auto iso = are_isomorphic(g, h);
  const auto triple = are_isotopic(g, h, default_node_budget, IsotopyStrategy::TripleSearch);
  const auto principal = are_isotopic(g, h, default_node_budget, IsotopyStrategy::PrincipalIsotopes);
  if (iso.verdict != triple.verdict || iso.verdict != principal.verdict)
    return "isomorphic " + std::string(to_string(iso.verdict)) + ", triple search " +
           std::string(to_string(triple.verdict)) + ", principal isotopes " + std::string(to_string(principal.verdict));
  return std::nullopt;
}

Failure isotope_centers(const Magma& f, const Params& p) {
  const Magma q = principal_isotope(f, p.at("f").get<Element>(), p.at("g").get<Element>());
  const Magma z1 = subtable(f, center(f).elements);
  const Magma z2 = subtable(q, center(q).elements);
  return fail_if(!are_isomorphic(z1, z2).related(), "centers of the loop and its principal isotope differ");
}

const std::map<std::string, ClaimFn, std::less<>>& claims() {
  static const std::map<std::string, ClaimFn, std::less<>> table = {
      {"commutative-lc-rc-c-agree",
       [](const Magma& m, const Params&) {
         const bool lc = is_lc_loop(m), rc = is_rc_loop(m), c = is_c_loop(m);
         return fail_if(lc != rc || rc != c, "LC, RC and C disagree");
       }},
      {"lc-forms-agree",
       [](const Magma& m, const Params&) {
         const auto r = check_family(m, Family::LC);
         return fail_if(std::any_of(r.begin(), r.end(), [&](auto& x) { return x.holds != r.front().holds; }),
                        "LC1..LC4 disagree");
       }},
      {"rc-forms-agree",
       [](const Magma& m, const Params&) {
         const auto r = check_family(m, Family::RC);
         return fail_if(std::any_of(r.begin(), r.end(), [&](auto& x) { return x.holds != r.front().holds; }),
                        "RC1..RC4 disagree");
       }},
      {"c-iff-lc-and-rc",
       [](const Magma& m, const Params&) {
         return fail_if((is_lc_loop(m) && is_rc_loop(m)) != is_c_loop(m), "C differs from LC and RC together");
       }},
      {"lc-forms-separate",
       [](const Magma& m, const Params&) {
         const auto r = check_family(m, Family::LC);
         return fail_if(std::all_of(r.begin(), r.end(), [&](auto& x) { return x.holds == r.front().holds; }),
                        "LC1..LC4 agree on this quasigroup");
       }},
      {"commutative-lc-derivatives",
       [](const Magma& f, const Params& p) {
         const Element a = p.at("a");
         if (!is_lc_loop(f))
           return Failure("F is not an LC-loop");
         return commutative_derivatives(f, a, ibb(f, a));
       }},
      {"commutative-c-derivatives",
       [](const Magma& f, const Params& p) {
         const Element a = p.at("a");
         return commutative_derivatives(f, a, bib(f, a));
       }},
      {"derivative-distributive-laws", [](const Magma& f, const Params& p) { return distributive_laws(f, p.at("a")); }},
      {"lc-left-derivative-system", [](const Magma& f, const Params& p) { return lc_left_system(f, p.at("a")); }},
      {"rc-right-derivative-system", [](const Magma& f, const Params& p) { return rc_right_system(f, p.at("a")); }},
      {"central-square-c-derivative-systems",
       [](const Magma& f, const Params& p) {
         if (auto r = lc_left_system(f, p.at("a")))
           return r;
         return rc_right_system(f, p.at("a"));
       }},
      {"central-square-c-alternative-isotope",
       [](const Magma& f, const Params& p) { return central_square_alternative_isotope(f, p.at("a")); }},
      {"parastrophe-swaps-lc-rc",
       [](const Magma& m, const Params&) {
         const Magma t = parastrophe(m);
         return fail_if(is_lc_loop(m) != is_rc_loop(t) || is_rc_loop(m) != is_lc_loop(t),
                        "LC/RC not exchanged by the parastrophe");
       }},
      {"parastrophe-preserves-c",
       [](const Magma& m, const Params&) {
         return fail_if(is_c_loop(m) != is_c_loop(parastrophe(m)), "C not preserved by the parastrophe");
       }},
      {"otimes-identity-profile",
       [](const Magma& m, const Params&) {
         if (m.left_identities() != std::vector<Element>{5})
           return Failure("left identities are not exactly {5}");
         if (!m.right_identities().empty())
           return Failure("has a right identity");
         if (m.is_loop())
           return Failure("is a loop");
         if (!satisfies(m, IdentityId::LC2))
           return Failure("LC2 fails");
         for (auto id : {IdentityId::LC1, IdentityId::LC3, IdentityId::LC4})
           if (satisfies(m, id))
             return Failure(std::string(to_string(id)) + " holds");
         return Failure();
       }},
      {"oplus-identity-profile",
       [](const Magma& m, const Params&) {
         if (m.right_identities() != std::vector<Element>{3})
           return Failure("right identities are not exactly {3}");
         if (!m.left_identities().empty())
           return Failure("has a left identity");
         if (!satisfies(m, IdentityId::RC2))
           return Failure("RC2 fails");
         for (auto id : {IdentityId::RC1, IdentityId::RC3, IdentityId::RC4})
           if (satisfies(m, id))
             return Failure(std::string(to_string(id)) + " holds");
         return Failure();
       }},
      {"theta-pair-profile",
       [](const Magma& theta, const Params& p) {
         const Magma tstar = table_from_json(p.at("parastrophe"));
         if (tstar != parastrophe(theta))
           return Failure("second table is not the transpose of the first");
         for (auto id : members(Family::LC))
           if (!satisfies(theta, id))
             return Failure("loop fails " + std::string(to_string(id)));
         for (auto id : members(Family::RC))
           if (!satisfies(tstar, id))
             return Failure("parastrophe fails " + std::string(to_string(id)));
         if (satisfies(theta, IdentityId::C) || satisfies(tstar, IdentityId::C))
           return Failure("a C-loop");
         return fail_if(!theta.is_loop() || !tstar.is_loop(), "not loops");
       }},
      {"lc2-quasigroup-not-loop",
       [](const Magma& m, const Params&) {
         return fail_if(!(m.is_latin() && satisfies(m, IdentityId::LC2) && !m.is_loop()),
                        "not an LC2 quasigroup that fails to be a loop");
       }},
      {"parastrophe-isotope-bridge", bridge_claim},
      {"parastrophe-isotope-bridge-swapped", swapped_bridge_claim},
      {"isotope-transfers-lc-rc",
       [](const Magma& g, const Params& p) {
         const Magma h = shaped_isotope(g, p);
         if (p.at("shape") == "ABB")
           return fail_if(is_lc_loop(g) != is_lc_loop(h), "LC not transferred along (A,B,B)");
         return fail_if(is_rc_loop(g) != is_rc_loop(h), "RC not transferred along (A,B,A)");
       }},
      {"central-square-c-isotope-transfer",
       [](const Magma& g, const Params& p) {
         return fail_if(!is_c_loop(shaped_isotope(g, p)), "isotope is not a C-loop");
       }},
      {"commutative-c-isotope-transfer",
       [](const Magma& g, const Params& p) {
         return fail_if(is_c_loop(g) != is_c_loop(shaped_isotope(g, p)), "C not transferred");
       }},
      {"group-structure-profile", group_profile},
      {"isomorphic-iff-isotopic", morphism_agreement},
      {"isotope-centers-isomorphic", isotope_centers},
  };
  return table;
}

Failure run_claim(std::string_view name, const Magma& m, const Params& p) {
  const auto& all = claims();
  auto it = all.find(name);
  if (it == all.end())
    throw Error("unknown claim " + std::string(name));
  return it->second(m, p);
}

// ---------------------------------------------------------------------------

class CheckBuilder {
public:
  CheckBuilder(std::string id, std::string universe) {
    check_.id = std::move(id);
    check_.universe = std::move(universe);
  }

  void vacuous(std::uint64_t count = 1) { check_.vacuous_instances += count; }

  void run(std::string_view claim, const Magma& m, const Params& p = json::object(), std::string_view label = "") {
    ++check_.instances_checked;
    Failure f = run_claim(claim, m, p);
    if (f && check_.status != CheckStatus::Refuted) {
      check_.status = CheckStatus::Refuted;
      json w{{"kind", "claim"}, {"claim", claim}, {"table", table_json(m)}, {"params", p}, {"failure", *f}};
      if (!label.empty())
        w["instance"] = label;
      check_.witness = std::move(w);
    }
  }

  void detail(std::string text) { check_.detail = std::move(text); }

  TheoremCheck finish() {
    if (check_.status == CheckStatus::Verified && check_.instances_checked == 0)
      check_.status = CheckStatus::HypothesisNeverSatisfied;
    return std::move(check_);
  }

private:
  TheoremCheck check_;
};

struct Named {
  std::string name;
  Magma table;
};

std::vector<Named> enumerated(const Options& opt, LoopFilter filter) {
  std::vector<Named> out;
  for (int n = 1; n <= std::min(opt.max_order, 6); ++n) {
    int k = 0;
    for_each_loop(n, filter, [&](const Magma& m) { out.push_back({"loop" + std::to_string(n) + "#" + std::to_string(++k), m}); });
  }
  return out;
}

std::vector<Named> catalog_groups() {
  std::vector<Named> out;
  for (int n = 1; n <= 8; ++n)
    out.push_back({"Z" + std::to_string(n), catalog::cyclic(n)});
  out.push_back({"klein", catalog::klein()});
  out.push_back({"S3", catalog::symmetric3()});
  out.push_back({"D4", catalog::dihedral4()});
  out.push_back({"Q8", catalog::quaternion8()});
  return out;
}

template <typename Pred>
std::vector<Named> select(std::vector<Named> in, Pred pred) {
  std::vector<Named> out;
  for (auto& x : in)
    if (pred(x.table))
      out.push_back(std::move(x));
  return out;
}

std::vector<Named> concat(std::vector<Named> a, const std::vector<Named>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string orders_text(const Options& opt) { return "order <= " + std::to_string(std::min(opt.max_order, 6)); }

/// Fisher-Yates on the raw engine output, so that a seed means the same
/// permutations on every standard library.
Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Element> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    images[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(images[static_cast<std::size_t>(i)], images[rng() % static_cast<std::uint64_t>(i + 1)]);
  return Permutation::from_images(std::move(images));
}

std::mt19937_64 rng_for(const Options& opt, std::uint64_t salt) { return std::mt19937_64(opt.seed * 0x9E3779B97F4A7C15ULL + salt); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<Element> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace

// ---------------------------------------------------------------------------

TheoremCheck verify_commutative_equivalences(const Options& opt) {
  CheckBuilder b("commutative-lc-rc-c-equivalence",
                 "all commutative loops of " + orders_text(opt) + " with identity 1; commutative catalog groups");
  auto universe = concat(enumerated(opt, LoopFilter::Commutative),
                         select(catalog_groups(), [](const Magma& m) { return m.is_commutative(); }));
  for (const auto& [name, m] : universe)
    b.run("commutative-lc-rc-c-agree", m, json::object(), name);
  return b.finish();
}

std::vector<TheoremCheck> verify_loop_identity_equivalences(const Options& opt) {
  auto universe = enumerated(opt, LoopFilter::None);
  universe.push_back({"theta", catalog::theta()});
  universe.push_back({"theta_star", catalog::theta_star()});
  universe = concat(universe, catalog_groups());
  const std::string text = "all loops of " + orders_text(opt) + " with identity 1; theta; theta_star; catalog groups";

  CheckBuilder lc("loop-lc-forms-agree", text), rc("loop-rc-forms-agree", text), c("loop-c-iff-lc-and-rc", text);
  for (const auto& [name, m] : universe) {
    lc.run("lc-forms-agree", m, json::object(), name);
    rc.run("rc-forms-agree", m, json::object(), name);
    c.run("c-iff-lc-and-rc", m, json::object(), name);
  }
  CheckBuilder sep("quasigroup-lc-forms-separate", "otimes_recomputed");
  sep.run("lc-forms-separate", catalog::otimes_recomputed(), json::object(), "otimes_recomputed");
  return {lc.finish(), rc.finish(), c.finish(), sep.finish()};
}

std::vector<TheoremCheck> verify_derivative_theorems(const Options& opt) {
  std::vector<TheoremCheck> out;
  const auto loops = concat(enumerated(opt, LoopFilter::None), catalog_groups());

  auto per_element = [](CheckBuilder& b, const Named& f, std::string_view claim,
                        const std::function<bool(const Magma&, Element)>& premise) {
    for (Element a = 1; a <= f.table.order(); ++a) {
      if (premise && !premise(f.table, a)) {
        b.vacuous();
        continue;
      }
      b.run(claim, f.table, json{{"a", a}}, f.name);
    }
  };

  const auto commutative_lc = select(loops, [](const Magma& m) { return m.is_commutative() && is_lc_loop(m); });
  const auto commutative_c = select(loops, is_commutative_c_loop);
  const auto commutative_central = select(loops, [](const Magma& m) {
    return m.is_commutative() && (is_lc_loop(m) || is_rc_loop(m) || is_c_loop(m));
  });
  const std::string suffix = " of " + orders_text(opt) + " and catalog groups, every element a";

  {
    CheckBuilder b("commutative-lc-derivative-isotopes", "commutative LC-loops" + suffix);
    for (const auto& f : commutative_lc)
      per_element(b, f, "commutative-lc-derivatives",
                  [](const Magma& m, Element a) { return commutative_isotope_premise(m, ibb(m, a)); });
    b.detail("premise: the (I,B,B)-isotope with B = L_a = R_a is a commutative loop");
    out.push_back(b.finish());
  }
  {
    CheckBuilder b("commutative-c-derivative-isotopes", "commutative C-loops" + suffix);
    for (const auto& f : commutative_c)
      per_element(b, f, "commutative-c-derivatives",
                  [](const Magma& m, Element a) { return commutative_isotope_premise(m, bib(m, a)); });
    b.detail("premise: the (B,I,B)-isotope with B = L_a = R_a is a commutative loop");
    out.push_back(b.finish());
  }
  {
    CheckBuilder b("commutative-derivative-distributive-laws", "commutative LC-, RC- or C-loops" + suffix);
    for (const auto& f : commutative_central)
      per_element(b, f, "derivative-distributive-laws",
                  [](const Magma& m, Element a) { return commutative_isotope_premise(m, ibb(m, a)); });
    b.detail("premise: the (I,B,B)-isotope with B = L_a = R_a is a commutative loop");
    out.push_back(b.finish());
  }
  {
    auto universe = select(loops, is_lc_loop);
    universe.insert(universe.begin(), {"theta", catalog::theta()});
    CheckBuilder b("lc-left-derivative-system", "theta, LC-loops" + suffix);
    for (const auto& f : universe)
      per_element(b, f, "lc-left-derivative-system", nullptr);
    out.push_back(b.finish());
  }
  {
    auto universe = select(loops, is_rc_loop);
    universe.insert(universe.begin(), {"theta_star", catalog::theta_star()});
    CheckBuilder b("rc-right-derivative-system", "theta_star, RC-loops" + suffix);
    for (const auto& f : universe)
      per_element(b, f, "rc-right-derivative-system", nullptr);
    out.push_back(b.finish());
  }
  const auto central_square_c =
      select(loops, [](const Magma& m) { return is_c_loop(m) && satisfies(m, IdentityId::CentralSquare); });
  {
    CheckBuilder b("central-square-c-derivative-systems", "central-square C-loops" + suffix);
    for (const auto& f : central_square_c)
      per_element(b, f, "central-square-c-derivative-systems", nullptr);
    out.push_back(b.finish());
  }
  {
    CheckBuilder b("central-square-c-alternative-isotope", "central-square C-loops" + suffix);
    for (const auto& f : central_square_c)
      per_element(b, f, "central-square-c-alternative-isotope",
                  [](const Magma& m, Element a) { return alternative_central_square_loop(left_shape_isotope(m, a)); });
    b.detail("premise: the (L_a,I,L_a)-isotope is an alternative central-square loop");
    out.push_back(b.finish());
  }
  return out;
}

std::vector<TheoremCheck> verify_parastrophe_lemmas(const Options& opt) {
  auto universe = enumerated(opt, LoopFilter::None);
  universe.push_back({"theta", catalog::theta()});
  universe.push_back({"theta_star", catalog::theta_star()});
  const std::string text = "all loops of " + orders_text(opt) + " with identity 1; theta; theta_star";
  CheckBuilder swap("parastrophe-swaps-lc-rc", text), keep("parastrophe-preserves-c", text);
  for (const auto& [name, m] : universe) {
    swap.run("parastrophe-swaps-lc-rc", m, json::object(), name);
    keep.run("parastrophe-preserves-c", m, json::object(), name);
  }
  return {swap.finish(), keep.finish()};
}

namespace {

TheoremCheck table_reproduction(std::string id, const Magma& source, std::string_view source_name,
                                const IsotopismTriple& t, const Magma& printed, std::string_view printed_name) {
  TheoremCheck c;
  c.id = std::move(id);
  c.universe = std::string(printed_name) + " against " + std::string(source_name) + " under the printed triple";
  c.instances_checked = 1;
  const Magma computed = apply_isotopism(source, t);
  json cells = json::array();
  for (Element x = 1; x <= computed.order(); ++x)
    for (Element y = 1; y <= computed.order(); ++y)
      if (computed(x, y) != printed(x, y))
        cells.push_back(json{{"row", x}, {"column", y}, {"printed", printed(x, y)}, {"computed", computed(x, y)}});
  const std::size_t total = static_cast<std::size_t>(computed.order() * computed.order());
  c.detail = std::to_string(total - cells.size()) + " of " + std::to_string(total) + " cells match";
  if (!cells.empty()) {
    c.status = CheckStatus::Deviation;
    c.witness = json{{"kind", "table-diff"},       {"source", table_json(source)}, {"triple", triple_json(t)},
                     {"printed", table_json(printed)}, {"cells", cells},            {"printed_name", printed_name},
                     {"printed_is_latin", printed.is_latin()}};
  }
  return c;
}

} // namespace

std::vector<TheoremCheck> verify_constructions() {
  std::vector<TheoremCheck> out;
  out.push_back(table_reproduction("otimes-table-reproduction", catalog::theta(), "theta",
                                   catalog::construction1_triple(), catalog::otimes_printed(), "otimes_printed"));
  out.push_back(table_reproduction("oplus-table-reproduction", catalog::theta_star(), "theta_star",
                                   catalog::construction2_triple(), catalog::oplus_printed(), "oplus_printed"));
  {
    CheckBuilder b("otimes-identity-profile", "otimes_recomputed");
    b.run("otimes-identity-profile", catalog::otimes_recomputed(), json::object(), "otimes_recomputed");
    out.push_back(b.finish());
  }
  {
    CheckBuilder b("oplus-identity-profile", "oplus_recomputed");
    b.run("oplus-identity-profile", catalog::oplus_recomputed(), json::object(), "oplus_recomputed");
    out.push_back(b.finish());
  }
  {
    CheckBuilder b("theta-pair-profile", "theta and theta_star");
    b.run("theta-pair-profile", catalog::theta(), json{{"parastrophe", table_json(catalog::theta_star())}}, "theta");
    out.push_back(b.finish());
  }
  {
    CheckBuilder b("lc2-quasigroup-not-loop", "otimes_recomputed");
    b.run("lc2-quasigroup-not-loop", catalog::otimes_recomputed(), json::object(), "otimes_recomputed");
    out.push_back(b.finish());
  }
  return out;
}

std::vector<TheoremCheck> verify_isotopy_bridge(const Options& opt) {
  const int top = std::min(opt.max_order, 5);
  const std::string text = "commutative loops of order 2.." + std::to_string(top) +
                           " with seeded triples making one isotope commutative; the printed order-6 pair";
  CheckBuilder bridge("parastrophe-isotope-bridge", text);
  CheckBuilder swapped("parastrophe-isotope-bridge-swapped", text);
  auto rng = rng_for(opt, 13);

  std::string per_order;
  bool short_order = false;
  for (int n = 2; n <= top; ++n) {
    const auto loops = enumerate_loops(n, LoopFilter::Commutative);
    int found = 0;
    std::uint64_t attempt = 0;
    for (; found < opt.bridge_instances && attempt < 20000; ++attempt) {
      const Magma& theta = loops[attempt % loops.size()];
      auto a = random_permutation(n, rng), b = random_permutation(n, rng), c = random_permutation(n, rng);
      auto d = random_permutation(n, rng), e = random_permutation(n, rng), f = random_permutation(n, rng);
      if (attempt % 3 == 0)
        b = a; // θ commutative, so (A, A, C) gives a commutative isotope
      else if (attempt % 3 == 1)
        e = d;
      const IsotopismTriple t1{a, b, c}, t2{d, e, f};
      const bool premise =
          apply_isotopism(theta, t1).is_commutative() || apply_isotopism(parastrophe(theta), t2).is_commutative();
      if (!premise) {
        bridge.vacuous();
        swapped.vacuous();
        continue;
      }
      ++found;
      const json params{{"theta_iso", triple_json(t1)}, {"tstar_iso", triple_json(t2)}};
      const std::string label = "order " + std::to_string(n) + " instance " + std::to_string(found);
      bridge.run("parastrophe-isotope-bridge", theta, params, label);
      swapped.run("parastrophe-isotope-bridge-swapped", theta, params, label);
    }
    per_order += (per_order.empty() ? "" : ", ") + std::to_string(n) + ": " + std::to_string(found);
    short_order = short_order || found < opt.bridge_instances;
  }

  // The printed construction pair: neither isotope is commutative.
  const bool construction_premise =
      catalog::otimes_recomputed().is_commutative() || catalog::oplus_recomputed().is_commutative();
  if (!construction_premise) {
    bridge.vacuous();
    swapped.vacuous();
  }
  const std::string detail = "satisfying instances per order {" + per_order + "}; printed order-6 pair: premise " +
                             (construction_premise ? "met" : "not met (neither isotope is commutative)") +
                             (short_order ? "; fewer instances than requested at some order" : "");
  bridge.detail(detail);
  swapped.detail(detail);
  return {bridge.finish(), swapped.finish()};
}

std::vector<TheoremCheck> verify_isotopic_invariance(const Options& opt) {
  auto universe = enumerated(opt, LoopFilter::None);
  universe.push_back({"theta", catalog::theta()});
  universe.push_back({"theta_star", catalog::theta_star()});
  const std::string text = "loops of " + orders_text(opt) +
                           ", theta, theta_star; every (A,B,B)/(A,B,A) loop isotope at order <= 4, "
                           "derivative-based and seeded random triples above";

  CheckBuilder lcrc("isotope-transfers-lc-rc", text);
  CheckBuilder cs("central-square-c-isotope-transfer", text);
  CheckBuilder comm("commutative-c-isotope-transfer", text);
  auto rng = rng_for(opt, 21);

  for (const auto& [name, g] : universe) {
    const int n = g.order();
    std::vector<std::pair<Permutation, Permutation>> pairs_abb, pairs_aba;
    if (n <= 4) {
      const auto perms = all_permutations(n);
      for (const auto& a : perms)
        for (const auto& b : perms) {
          pairs_abb.emplace_back(a, b);
          pairs_aba.emplace_back(a, b);
        }
    } else {
      std::vector<Permutation> alphas{Permutation::identity(n), random_permutation(n, rng), random_permutation(n, rng)};
      const auto id = Permutation::identity(n);
      for (Element c = 1; c <= n; ++c) {
        const auto rc = right_translation(g, c), lc = left_translation(g, c);
        for (const auto& al : alphas) {
          // (I, R, R)·α and (L, I, L)·α, with R, L translations or their inverses
          pairs_abb.emplace_back(al, rc * al);
          pairs_abb.emplace_back(al, rc.inverse() * al);
          pairs_aba.emplace_back(lc * al, al);
          pairs_aba.emplace_back(lc.inverse() * al, al);
        }
      }
      for (int k = 0; k < 40; ++k) {
        pairs_abb.emplace_back(random_permutation(n, rng), random_permutation(n, rng));
        pairs_aba.emplace_back(random_permutation(n, rng), random_permutation(n, rng));
      }
    }

    const bool g_cs_c = is_c_loop(g) && satisfies(g, IdentityId::CentralSquare);
    for (int shape = 0; shape < 2; ++shape) {
      const auto& pairs = shape == 0 ? pairs_abb : pairs_aba;
      for (const auto& [a, b] : pairs) {
        const IsotopismTriple t{a, b, shape == 0 ? b : a};
        const Magma h = apply_isotopism(g, t);
        if (!h.is_loop()) {
          lcrc.vacuous();
          cs.vacuous();
          comm.vacuous();
          continue;
        }
        const json params{{"shape", shape == 0 ? "ABB" : "ABA"}, {"a", perm_json(a)}, {"b", perm_json(b)}};
        lcrc.run("isotope-transfers-lc-rc", g, params, name);
        if (g_cs_c && alternative_central_square_loop(h))
          cs.run("central-square-c-isotope-transfer", g, params, name);
        else
          cs.vacuous();
        if (g.is_commutative() && h.is_commutative())
          comm.run("commutative-c-isotope-transfer", g, params, name);
        else
          comm.vacuous();
      }
    }
  }
  lcrc.detail("(A,B,B) transfers LC, (A,B,A) transfers RC; non-loop isotopes counted as vacuous");
  cs.detail("premise: source is a central-square C-loop, isotope an alternative central-square loop");
  comm.detail("premise: source and isotope are commutative loops");
  return {lcrc.finish(), cs.finish(), comm.finish()};
}

std::vector<TheoremCheck> verify_group_structure(const Options& opt) {
  std::vector<TheoremCheck> out;
  {
    CheckBuilder b("small-group-structure", "D4, Q8, Z4, Z6, klein, S3");
    const auto profile = [](bool indecomposable, int center_size, int rank, bool central_square) {
      return json{{"indecomposable", indecomposable},
                  {"center_size", center_size},
                  {"rank", rank},
                  {"central_square", central_square}};
    };
    b.run("group-structure-profile", catalog::dihedral4(), profile(true, 2, 1, true), "D4");
    b.run("group-structure-profile", catalog::quaternion8(), profile(true, 2, 1, true), "Q8");
    b.run("group-structure-profile", catalog::cyclic(4), profile(true, 4, 1, true), "Z4");
    b.run("group-structure-profile", catalog::cyclic(6), profile(false, 6, 1, true), "Z6");
    b.run("group-structure-profile", catalog::klein(), profile(false, 4, 2, true), "klein");
    b.run("group-structure-profile", catalog::symmetric3(), profile(true, 1, 0, false), "S3");
    const auto cd = commutators(catalog::dihedral4()), cq = commutators(catalog::quaternion8());
    b.detail("commutator sets: D4 " + std::to_string(cd.size()) + " elements, Q8 " + std::to_string(cq.size()) +
             " elements (identity plus one)");
    out.push_back(b.finish());
  }
  {
    TheoremCheck c;
    c.id = "dihedral-quaternion-isomorphism";
    c.universe = "D4 and Q8 tables";
    c.instances_checked = 1;
    const auto r = are_isomorphic(catalog::dihedral4(), catalog::quaternion8());
    if (r.related()) {
      c.detail = "isomorphism found";
    } else {
      c.status = CheckStatus::Deviation;
      c.detail = "D4 and Q8 are not isomorphic (D4 has five elements of order 2, Q8 has one)";
      c.witness = json{{"kind", "non-isomorphic"},
                       {"left", table_json(catalog::dihedral4())},
                       {"right", table_json(catalog::quaternion8())},
                       {"nodes_explored", r.nodes_explored}};
    }
    out.push_back(c);
  }
  {
    CheckBuilder b("isotopic-groups-isomorphic",
                   "Z1..Z6, klein, S3 and two seeded relabellings of each; all pairs of equal order");
    auto rng = rng_for(opt, 34);
    std::vector<Named> groups;
    for (const auto& [name, g] : catalog_groups()) {
      if (g.order() > 6)
        continue;
      groups.push_back({name, g});
      for (int k = 1; k <= 2; ++k)
        groups.push_back({name + "~" + std::to_string(k), relabel(g, random_permutation(g.order(), rng))});
    }
    for (const auto& [n1, g1] : groups)
      for (const auto& [n2, g2] : groups)
        if (g1.order() == g2.order())
          b.run("isomorphic-iff-isotopic", g1, json{{"other", table_json(g2)}}, n1 + " vs " + n2);
    out.push_back(b.finish());
  }
  {
    CheckBuilder b("central-square-group-isotopes-are-c-loops",
                   "loop isotopes of D4 and Q8 under derivative-based and seeded (A,B,A)/(A,B,B) triples");
    auto rng = rng_for(opt, 55);
    for (const auto& [name, g] : std::vector<Named>{{"D4", catalog::dihedral4()}, {"Q8", catalog::quaternion8()}}) {
      const int n = g.order();
      std::vector<std::pair<std::string, std::pair<Permutation, Permutation>>> shaped;
      for (Element c = 1; c <= n; ++c)
        for (int k = 0; k < 3; ++k) {
          const auto al = k == 0 ? Permutation::identity(n) : random_permutation(n, rng);
          shaped.push_back({"ABB", {al, right_translation(g, c).inverse() * al}});
          shaped.push_back({"ABA", {left_translation(g, c).inverse() * al, al}});
        }
      for (int k = 0; k < 40; ++k) {
        shaped.push_back({"ABB", {random_permutation(n, rng), random_permutation(n, rng)}});
        shaped.push_back({"ABA", {random_permutation(n, rng), random_permutation(n, rng)}});
      }
      for (const auto& [shape, ab] : shaped) {
        const json params{{"shape", shape}, {"a", perm_json(ab.first)}, {"b", perm_json(ab.second)}};
        const Magma h = shaped_isotope(g, params);
        if (!alternative_central_square_loop(h)) {
          b.vacuous();
          continue;
        }
        b.run("central-square-c-isotope-transfer", g, params, name);
      }
    }
    b.detail("premise: the isotope is an alternative central-square loop");
    out.push_back(b.finish());
  }
  {
    auto universe = enumerated(opt, LoopFilter::None);
    universe.push_back({"theta", catalog::theta()});
    universe.push_back({"theta_star", catalog::theta_star()});
    universe = concat(universe, catalog_groups());
    CheckBuilder b("isotope-centers-isomorphic",
                   "all loops of " + orders_text(opt) + ", theta, theta_star, catalog groups; every principal isotope");
    for (const auto& [name, f] : universe)
      for (Element x = 1; x <= f.order(); ++x)
        for (Element y = 1; y <= f.order(); ++y)
          b.run("isotope-centers-isomorphic", f, json{{"f", x}, {"g", y}}, name);
    out.push_back(b.finish());
  }
  return out;
}

bool Report::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Refuted; });
}

Report run_all(const Options& opt) {
  if (opt.max_order < 1 || opt.max_order > 6)
    throw BudgetError("max order must lie in 1..6");
  Report r{opt, {}};
  auto add = [&](std::vector<TheoremCheck> v) {
    for (auto& c : v)
      r.checks.push_back(std::move(c));
  };
  r.checks.push_back(verify_commutative_equivalences(opt));
  add(verify_loop_identity_equivalences(opt));
  add(verify_derivative_theorems(opt));
  add(verify_parastrophe_lemmas(opt));
  add(verify_constructions());
  add(verify_isotopy_bridge(opt));
  add(verify_isotopic_invariance(opt));
  add(verify_group_structure(opt));
  return r;
}

json to_json(const TheoremCheck& c, std::uint64_t seed) {
  return json{{"id", c.id},
              {"universe", c.universe},
              {"instances_checked", c.instances_checked},
              {"vacuous_instances", c.vacuous_instances},
              {"status", to_string(c.status)},
              {"witness", c.witness ? *c.witness : json(nullptr)},
              {"seed", seed},
              {"detail", c.detail}};
}

json to_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r.checks)
    out.push_back(to_json(c, r.options.seed));
  return out;
}

bool replay_witness(const json& w) {
  const std::string kind = w.at("kind");
  if (kind == "claim")
    return run_claim(w.at("claim").get<std::string>(), table_from_json(w.at("table")), w.at("params")).has_value();
  if (kind == "table-diff") {
    const Magma computed = apply_isotopism(table_from_json(w.at("source")), triple_from(w.at("triple")));
    const Magma printed = table_from_json(w.at("printed"));
    json cells = json::array();
    for (Element x = 1; x <= computed.order(); ++x)
      for (Element y = 1; y <= computed.order(); ++y)
        if (computed(x, y) != printed(x, y))
          cells.push_back(json{{"row", x}, {"column", y}, {"printed", printed(x, y)}, {"computed", computed(x, y)}});
    return !cells.empty() && cells == w.at("cells");
  }
  if (kind == "non-isomorphic")
    return are_isomorphic(table_from_json(w.at("left")), table_from_json(w.at("right"))).verdict == Verdict::Unrelated;
  throw Error("unknown witness kind " + kind);
}

} // namespace qloop::harness
