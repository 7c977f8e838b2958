#include "qloop/qloop.h"

#include "qloop/catalog.hpp"
#include "qloop/errors.hpp"
#include "qloop/harness.hpp"
#include "qloop/identities.hpp"
#include "qloop/morphisms.hpp"
#include "qloop/structure.hpp"
#include "qloop/transforms.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

struct ql_table {
  qloop::Magma m;
};

struct ql_perm {
  qloop::Permutation p;
};

namespace {

using nlohmann::json;
using qloop::Element;
using qloop::Magma;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ql_status fail(ql_status s, const char* what) {
  last_error = what;
  return s;
}

template <typename F>
ql_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return QL_OK;
  } catch (const qloop::ParseError& e) {
    return fail(QL_ERR_PARSE, e.what());
  } catch (const qloop::DomainError& e) {
    return fail(QL_ERR_DOMAIN, e.what());
  } catch (const qloop::StructureError& e) {
    return fail(QL_ERR_STRUCTURE, e.what());
  } catch (const qloop::ContractError& e) {
    return fail(QL_ERR_CONTRACT, e.what());
  } catch (const qloop::HypothesisError& e) {
    return fail(QL_ERR_HYPOTHESIS, e.what());
  } catch (const qloop::BudgetError& e) {
    return fail(QL_ERR_BUDGET, e.what());
  } catch (const json::exception& e) {
    return fail(QL_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(QL_ERR_INTERNAL, e.what());
  }
}

#define QL_REQUIRE(cond)                                                                                               \
  do {                                                                                                                 \
    if (!(cond))                                                                                                       \
      return fail(QL_ERR_ARGUMENT, "null or invalid argument: " #cond);                                                \
  } while (0)

ql_table* wrap(Magma m) { return new ql_table{std::move(m)}; }

std::string dump(const json& j) { return j.dump(2); }

json elements(const std::vector<Element>& v) { return v; }

json perm_json(const qloop::Permutation& p) { return p.to_cycle_string(); }

json triple_json(const qloop::IsotopismTriple& t) {
  return json{{"a", perm_json(t.a)}, {"b", perm_json(t.b)}, {"c", perm_json(t.c)}};
}

json witness_json(const std::optional<qloop::Witness>& w, int arity) {
  if (!w)
    return nullptr;
  json j{{"x", w->x}, {"y", w->y}, {"lhs", w->lhs}, {"rhs", w->rhs}};
  if (arity == 3)
    j["z"] = w->z;
  return j;
}

json optional_element(const std::optional<Element>& e) { return e ? json(*e) : json(nullptr); }

ql_verdict to_c(qloop::Verdict v) {
  switch (v) {
  case qloop::Verdict::Related:
    return QL_RELATED;
  case qloop::Verdict::Unrelated:
    return QL_UNRELATED;
  case qloop::Verdict::Unknown:
    break;
  }
  return QL_UNKNOWN;
}

json result_json(const qloop::MorphismResult& r) {
  json j{{"verdict", qloop::to_string(r.verdict)},
         {"nodes_explored", r.nodes_explored},
         {"budget_exhausted", r.budget_exhausted}};
  if (r.isomorphism)
    j["isomorphism"] = perm_json(*r.isomorphism);
  if (r.isotopism)
    j["isotopism"] = triple_json(*r.isotopism);
  return j;
}

} // namespace

extern "C" {

const char* ql_last_error(void) { return last_error.c_str(); }

void ql_string_free(char* s) { std::free(s); }

ql_status ql_table_parse(const char* text, ql_table** out) {
  QL_REQUIRE(text && out);
  return guard([&] { *out = wrap(qloop::parse_table(text)); });
}

ql_status ql_table_catalog(const char* name, ql_table** out) {
  QL_REQUIRE(name && out);
  auto m = qloop::catalog::lookup(name);
  if (!m)
    return fail(QL_ERR_DOMAIN, (std::string("unknown catalog table: ") + name).c_str());
  *out = wrap(std::move(*m));
  last_error.clear();
  return QL_OK;
}

ql_status ql_table_load(const char* source, ql_table** out) {
  QL_REQUIRE(source && out);
  const std::string_view s(source);
  if (s.starts_with("catalog:"))
    return ql_table_catalog(source + 8, out);
  std::ifstream in(source);
  if (!in)
    return fail(QL_ERR_IO, (std::string("cannot open ") + source).c_str());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return ql_table_parse(text.c_str(), out);
}

ql_status ql_catalog_names_json(char** out) {
  QL_REQUIRE(out);
  return guard([&] {
    json j = json::array();
    for (const auto& name : qloop::catalog::names()) {
      const Magma m = *qloop::catalog::lookup(name);
      j.push_back(json{{"name", name}, {"order", m.order()}, {"latin", m.is_latin()}, {"loop", m.is_loop()}});
    }
    *out = dup(dump(j));
  });
}

void ql_table_free(ql_table* t) { delete t; }

int ql_table_order(const ql_table* t) { return t ? t->m.order() : 0; }

ql_status ql_table_get(const ql_table* t, int x, int y, int* out) {
  QL_REQUIRE(t && out);
  return guard([&] { *out = t->m.multiply(x, y); });
}

ql_status ql_table_to_text(const ql_table* t, char** out) {
  QL_REQUIRE(t && out);
  return guard([&] { *out = dup(qloop::format_table(t->m)); });
}

ql_status ql_table_to_json(const ql_table* t, char** out) {
  QL_REQUIRE(t && out);
  return guard([&] { *out = dup(qloop::harness::table_json(t->m).dump()); });
}

ql_status ql_table_render(const ql_table* t, const char* symbol, char** out) {
  QL_REQUIRE(t && out);
  return guard([&] { *out = dup(qloop::render_table(t->m, symbol ? symbol : "*")); });
}

ql_status ql_table_describe_json(const ql_table* t, char** out) {
  QL_REQUIRE(t && out);
  return guard([&] {
    const Magma& m = t->m;
    json j{{"order", m.order()},
           {"latin", m.is_latin()},
           {"commutative", m.is_commutative()},
           {"loop", m.is_loop()},
           {"identity", optional_element(m.identity())},
           {"left_identities", elements(m.left_identities())},
           {"right_identities", elements(m.right_identities())},
           {"table", m.rows()}};
    if (m.is_loop()) {
      json inv = json::array();
      for (Element a = 1; a <= m.order(); ++a) {
        const auto i = qloop::inverses(m, a);
        inv.push_back(json{{"element", a}, {"left", i.left}, {"right", i.right}});
      }
      j["inverses"] = inv;
    }
    if (m.is_latin())
      j["both_translations"] = elements(qloop::translation_sets(m).both_elements);
    *out = dup(dump(j));
  });
}

ql_status ql_identities_json(const ql_table* t, const char* family, char** out) {
  QL_REQUIRE(t && out);
  const auto fam = qloop::family_from_string(family ? family : "all");
  if (!fam)
    return fail(QL_ERR_ARGUMENT, "family must be one of lc, rc, c, all");
  return guard([&] {
    json j = json::array();
    for (const auto& r : qloop::check_family(t->m, *fam))
      j.push_back(json{{"identity", qloop::to_string(r.identity)},
                       {"equation", qloop::equation(r.identity)},
                       {"holds", r.holds},
                       {"witness", witness_json(r.witness, qloop::arity(r.identity))}});
    *out = dup(dump(j));
  });
}

ql_status ql_identity_holds(const ql_table* t, const char* identity, int* holds) {
  QL_REQUIRE(t && identity && holds);
  const auto id = qloop::identity_from_string(identity);
  if (!id)
    return fail(QL_ERR_ARGUMENT, (std::string("unknown identity: ") + identity).c_str());
  return guard([&] { *holds = qloop::satisfies(t->m, *id) ? 1 : 0; });
}

ql_status ql_classify_json(const ql_table* t, char** out) {
  QL_REQUIRE(t && out);
  return guard([&] {
    const auto c = qloop::classify(t->m);
    json j{{"labels", c.labels},
           {"identity", optional_element(c.identity)},
           {"left_identities", elements(c.left_identities)},
           {"right_identities", elements(c.right_identities)}};
    if (c.lc_forms_agree)
      j["lc_forms_agree"] = *c.lc_forms_agree;
    if (c.rc_forms_agree)
      j["rc_forms_agree"] = *c.rc_forms_agree;
    if (c.lc_and_rc_iff_c)
      j["lc_and_rc_iff_c"] = *c.lc_and_rc_iff_c;
    *out = dup(dump(j));
  });
}

ql_status ql_perm_parse(const char* text, int degree, ql_perm** out) {
  QL_REQUIRE(text && out);
  return guard([&] { *out = new ql_perm{qloop::parse_permutation(text, degree)}; });
}

void ql_perm_free(ql_perm* p) { delete p; }

ql_status ql_perm_to_string(const ql_perm* p, char** out) {
  QL_REQUIRE(p && out);
  return guard([&] { *out = dup(p->p.to_cycle_string()); });
}

ql_status ql_isotope(const ql_table* t, const ql_perm* a, const ql_perm* b, const ql_perm* c, ql_table** out) {
  QL_REQUIRE(t && a && b && c && out);
  return guard([&] {
    if (a->p.degree() != t->m.order())
      throw qloop::DomainError("permutation degree differs from the table order");
    *out = wrap(qloop::apply_isotopism(t->m, {a->p, b->p, c->p}));
  });
}

ql_status ql_principal_isotope(const ql_table* t, int f, int g, ql_table** out) {
  QL_REQUIRE(t && out);
  return guard([&] { *out = wrap(qloop::principal_isotope(t->m, f, g)); });
}

ql_status ql_derivative(const ql_table* t, ql_side side, int a, ql_table** out) {
  QL_REQUIRE(t && out && (side == QL_LEFT || side == QL_RIGHT));
  return guard([&] {
    *out = wrap(side == QL_LEFT ? qloop::left_derivative(t->m, a) : qloop::right_derivative(t->m, a));
  });
}

ql_status ql_parastrophe(const ql_table* t, ql_table** out) {
  QL_REQUIRE(t && out);
  return guard([&] { *out = wrap(qloop::parastrophe(t->m)); });
}

ql_status ql_isomorphic(const ql_table* t1, const ql_table* t2, uint64_t budget, ql_verdict* verdict, char** out) {
  QL_REQUIRE(t1 && t2 && verdict);
  return guard([&] {
    const auto r = qloop::are_isomorphic(t1->m, t2->m, budget ? budget : qloop::default_node_budget);
    *verdict = to_c(r.verdict);
    if (out)
      *out = dup(dump(result_json(r)));
  });
}

ql_status ql_isotopic(const ql_table* t1, const ql_table* t2, uint64_t budget, ql_strategy strategy,
                      ql_verdict* verdict, char** out) {
  QL_REQUIRE(t1 && t2 && verdict && (strategy == QL_TRIPLE_SEARCH || strategy == QL_PRINCIPAL_ISOTOPES));
  return guard([&] {
    const auto s = strategy == QL_TRIPLE_SEARCH ? qloop::IsotopyStrategy::TripleSearch
                                                : qloop::IsotopyStrategy::PrincipalIsotopes;
    const auto r = qloop::are_isotopic(t1->m, t2->m, budget ? budget : qloop::default_node_budget, s);
    *verdict = to_c(r.verdict);
    if (out) {
      json j = result_json(r);
      j["strategy"] = strategy == QL_TRIPLE_SEARCH ? "triple-search" : "principal-isotopes";
      *out = dup(dump(j));
    }
  });
}

ql_status ql_center_json(const ql_table* t, char** out) {
  QL_REQUIRE(t && out);
  return guard([&] {
    json j = json::object();
    for (auto kind : {qloop::SubloopKind::Center, qloop::SubloopKind::LeftNucleus, qloop::SubloopKind::MiddleNucleus,
                      qloop::SubloopKind::RightNucleus, qloop::SubloopKind::Nucleus, qloop::SubloopKind::Commutant}) {
      const auto s = qloop::nucleus(t->m, kind);
      j[std::string(qloop::to_string(kind))] = json{{"elements", s.elements}, {"closed", s.closed}};
    }
    j["central_square"] = qloop::is_central_square(t->m);
    *out = dup(dump(j));
  });
}

ql_status ql_rank_json(const ql_table* t, char** out) {
  QL_REQUIRE(t && out);
  return guard([&] {
    const auto z = qloop::center(t->m);
    const auto r = qloop::center_rank(t->m);
    json j{{"center", z.elements}, {"rank", r.rank}, {"generators", r.generators}, {"group", qloop::is_group(t->m)}};
    if (qloop::is_group(t->m) && t->m.order() <= 16)
      j["indecomposable"] = qloop::is_indecomposable(t->m);
    *out = dup(dump(j));
  });
}

ql_status ql_verify_claims_json(uint64_t seed, int max_order, int* all_passed, char** out) {
  QL_REQUIRE(out);
  return guard([&] {
    qloop::harness::Options opt;
    opt.seed = seed;
    opt.max_order = max_order;
    const auto report = qloop::harness::run_all(opt);
    if (all_passed)
      *all_passed = report.all_passed() ? 1 : 0;
    *out = dup(dump(qloop::harness::to_json(report)));
  });
}

ql_status ql_replay_witness(const char* witness_json, int* reproduces) {
  QL_REQUIRE(witness_json && reproduces);
  return guard([&] { *reproduces = qloop::harness::replay_witness(json::parse(witness_json)) ? 1 : 0; });
}

} // extern "C"
