#include "qloop/qloop.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

enum Exit { Success = 0, PropertyFails = 1, Usage = 2, Unknown = 3 };

struct Failure {
  int code;
};

int exit_code(ql_status s) {
  switch (s) {
  case QL_OK:
    return Success;
  case QL_ERR_PARSE:
  case QL_ERR_DOMAIN:
  case QL_ERR_ARGUMENT:
  case QL_ERR_IO:
    return Usage;
  case QL_ERR_BUDGET:
    return Unknown;
  default:
    return PropertyFails;
  }
}

void check(ql_status s) {
  if (s != QL_OK) {
    std::cerr << "qloop: " << ql_last_error() << "\n";
    throw Failure{exit_code(s)};
  }
}

struct TableDeleter {
  void operator()(ql_table* t) const { ql_table_free(t); }
};
struct PermDeleter {
  void operator()(ql_perm* p) const { ql_perm_free(p); }
};
using Table = std::unique_ptr<ql_table, TableDeleter>;
using Perm = std::unique_ptr<ql_perm, PermDeleter>;

Table load(const std::string& source) {
  ql_table* t = nullptr;
  check(ql_table_load(source.c_str(), &t));
  return Table(t);
}

Perm perm(const std::string& text, int degree) {
  ql_perm* p = nullptr;
  check(ql_perm_parse(text.c_str(), degree, &p));
  return Perm(p);
}

/// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  ql_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

std::string render(const ql_table* t) {
  char* s = nullptr;
  check(ql_table_render(t, "*", &s));
  return take(s);
}

json table_doc(const ql_table* t) {
  char* s = nullptr;
  check(ql_table_to_json(t, &s));
  return take_json(s);
}

std::string elements(const json& list) {
  std::string out = "{";
  for (std::size_t i = 0; i < list.size(); ++i)
    out += (i ? ", " : "") + list[i].dump();
  return out + "}";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void show_table_result(const ql_table* t, bool as_json) {
  if (as_json)
    emit(table_doc(t));
  else
    std::cout << render(t);
}

struct Args {
  bool json = false;
  std::string table, other;
  std::string family = "all";
  std::vector<std::string> require;
  std::string a, b, c;
  int f = 0, g = 0, at = 0;
  std::string side = "left";
  std::uint64_t budget = 0;
  std::string strategy = "triple";
  std::string name;
  std::uint64_t seed = 0;
  int max_order = 5;
};

int cmd_validate(const Args& args) {
  Table t = load(args.table);
  char* s = nullptr;
  check(ql_table_describe_json(t.get(), &s));
  const json d = take_json(s);
  if (args.json) {
    emit(d);
  } else {
    std::cout << render(t.get());
    std::cout << "order: " << d["order"] << "\n"
              << "latin: " << d["latin"] << "\n"
              << "commutative: " << d["commutative"] << "\n"
              << "identity: " << (d["identity"].is_null() ? "none" : d["identity"].dump()) << "\n"
              << "left identities: " << elements(d["left_identities"]) << "\n"
              << "right identities: " << elements(d["right_identities"]) << "\n";
  }
  return d["latin"].get<bool>() ? Success : PropertyFails;
}

int cmd_identities(const Args& args) {
  Table t = load(args.table);
  char* s = nullptr;
  check(ql_identities_json(t.get(), args.family.c_str(), &s));
  json report = take_json(s);
  int code = Success;
  json required = json::array();
  for (const auto& name : args.require) {
    int holds = 0;
    check(ql_identity_holds(t.get(), name.c_str(), &holds));
    required.push_back(json{{"identity", name}, {"holds", holds == 1}});
    if (!holds)
      code = PropertyFails;
  }
  if (args.json) {
    emit(args.require.empty() ? report : json{{"identities", report}, {"required", required}});
    return code;
  }
  for (const auto& r : report) {
    std::printf("%-18s %-6s %s", r["identity"].get<std::string>().c_str(), r["holds"].get<bool>() ? "holds" : "fails",
                r["equation"].get<std::string>().c_str());
    if (!r["witness"].is_null()) {
      const auto& w = r["witness"];
      std::printf("  [x=%d y=%d", w["x"].get<int>(), w["y"].get<int>());
      if (w.contains("z"))
        std::printf(" z=%d", w["z"].get<int>());
      std::printf(": %d vs %d]", w["lhs"].get<int>(), w["rhs"].get<int>());
    }
    std::printf("\n");
  }
  for (const auto& r : required)
    std::printf("required %s: %s\n", r["identity"].get<std::string>().c_str(),
                r["holds"].get<bool>() ? "holds" : "FAILS");
  return code;
}

int cmd_classify(const Args& args) {
  Table t = load(args.table);
  char* s = nullptr;
  check(ql_classify_json(t.get(), &s));
  const json c = take_json(s);
  if (args.json) {
    emit(c);
    return Success;
  }
  std::string labels;
  for (const auto& l : c["labels"])
    labels += (labels.empty() ? "" : ", ") + l.get<std::string>();
  std::cout << "classes: " << labels << "\n"
            << "identity: " << (c["identity"].is_null() ? "none" : c["identity"].dump()) << "\n"
            << "left identities: " << elements(c["left_identities"]) << "\n"
            << "right identities: " << elements(c["right_identities"]) << "\n";
  return Success;
}

int cmd_isotope(const Args& args) {
  Table t = load(args.table);
  const int n = ql_table_order(t.get());
  Perm a = perm(args.a, n), b = perm(args.b, n), c = perm(args.c, n);
  ql_table* out = nullptr;
  check(ql_isotope(t.get(), a.get(), b.get(), c.get(), &out));
  show_table_result(Table(out).get(), args.json);
  return Success;
}

int cmd_principal(const Args& args) {
  Table t = load(args.table);
  ql_table* out = nullptr;
  check(ql_principal_isotope(t.get(), args.f, args.g, &out));
  show_table_result(Table(out).get(), args.json);
  return Success;
}

int cmd_derivative(const Args& args) {
  Table t = load(args.table);
  ql_table* out = nullptr;
  check(ql_derivative(t.get(), args.side == "left" ? QL_LEFT : QL_RIGHT, args.at, &out));
  show_table_result(Table(out).get(), args.json);
  return Success;
}

int cmd_parastrophe(const Args& args) {
  Table t = load(args.table);
  ql_table* out = nullptr;
  check(ql_parastrophe(t.get(), &out));
  show_table_result(Table(out).get(), args.json);
  return Success;
}

int verdict_code(ql_verdict v) {
  switch (v) {
  case QL_RELATED:
    return Success;
  case QL_UNRELATED:
    return PropertyFails;
  default:
    return Unknown;
  }
}

void show_morphism(const json& r, bool as_json) {
  if (as_json) {
    emit(r);
    return;
  }
  std::cout << "verdict: " << r["verdict"].get<std::string>() << "\n";
  if (r.contains("isomorphism"))
    std::cout << "isomorphism: " << r["isomorphism"].get<std::string>() << "\n";
  if (r.contains("isotopism"))
    std::cout << "isotopism: A = " << r["isotopism"]["a"].get<std::string>()
              << ", B = " << r["isotopism"]["b"].get<std::string>()
              << ", C = " << r["isotopism"]["c"].get<std::string>() << "\n";
  std::cout << "nodes explored: " << r["nodes_explored"] << "\n";
}

int cmd_isomorphic(const Args& args) {
  Table t1 = load(args.table), t2 = load(args.other);
  ql_verdict v;
  char* s = nullptr;
  check(ql_isomorphic(t1.get(), t2.get(), args.budget, &v, &s));
  show_morphism(take_json(s), args.json);
  return verdict_code(v);
}

int cmd_isotopic(const Args& args) {
  Table t1 = load(args.table), t2 = load(args.other);
  ql_verdict v;
  char* s = nullptr;
  const ql_strategy strategy = args.strategy == "principal" ? QL_PRINCIPAL_ISOTOPES : QL_TRIPLE_SEARCH;
  check(ql_isotopic(t1.get(), t2.get(), args.budget, strategy, &v, &s));
  show_morphism(take_json(s), args.json);
  return verdict_code(v);
}

int cmd_center(const Args& args) {
  Table t = load(args.table);
  char* s = nullptr;
  check(ql_center_json(t.get(), &s));
  const json c = take_json(s);
  if (args.json) {
    emit(c);
    return Success;
  }
  for (const auto& [kind, set] : c.items())
    if (set.is_object())
      std::cout << kind << ": " << elements(set["elements"]) << "\n";
  std::cout << "central-square: " << c["central_square"] << "\n";
  return Success;
}

int cmd_rank(const Args& args) {
  Table t = load(args.table);
  char* s = nullptr;
  check(ql_rank_json(t.get(), &s));
  const json r = take_json(s);
  if (args.json) {
    emit(r);
    return Success;
  }
  std::cout << "center: " << elements(r["center"]) << "\n"
            << "rank: " << r["rank"] << "\n"
            << "generators: " << elements(r["generators"]) << "\n";
  if (r.contains("indecomposable"))
    std::cout << "indecomposable: " << r["indecomposable"] << "\n";
  return Success;
}

int cmd_catalog(const Args& args) {
  if (!args.name.empty()) {
    Table t = load("catalog:" + args.name);
    show_table_result(t.get(), args.json);
    return Success;
  }
  char* s = nullptr;
  check(ql_catalog_names_json(&s));
  const json names = take_json(s);
  if (args.json) {
    emit(names);
    return Success;
  }
  for (const auto& e : names)
    std::printf("%-18s order %d%s\n", e["name"].get<std::string>().c_str(), e["order"].get<int>(),
                e["loop"].get<bool>() ? ", loop" : (e["latin"].get<bool>() ? ", quasigroup" : ", not latin"));
  return Success;
}

int cmd_verify(const Args& args) {
  int passed = 0;
  char* s = nullptr;
  check(ql_verify_claims_json(args.seed, args.max_order, &passed, &s));
  const std::string text = take(s);
  if (args.json) {
    std::cout << text << "\n";
  } else {
    for (const auto& c : json::parse(text))
      std::printf("%-44s %-28s checked %-8llu vacuous %-8llu\n", c["id"].get<std::string>().c_str(),
                  c["status"].get<std::string>().c_str(), c["instances_checked"].get<unsigned long long>(),
                  c["vacuous_instances"].get<unsigned long long>());
  }
  return passed ? Success : PropertyFails;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quasigroup and loop toolkit"};
  app.require_subcommand(1);
  Args args;
  int (*handler)(const Args&) = nullptr;

  auto add = [&](const char* name, const char* about, int (*fn)(const Args&)) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_flag("--json", args.json, "Emit a single JSON document");
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };
  auto table_arg = [&](CLI::App* sub) { sub->add_option("table", args.table, "catalog:<name> or file")->required(); };

  auto* validate = add("validate", "Parse a table and report its basic structure", cmd_validate);
  table_arg(validate);

  auto* identities = add("identities", "Check the LC, RC and C identity families", cmd_identities);
  table_arg(identities);
  identities->add_option("--family", args.family, "lc, rc, c or all")->check(CLI::IsMember({"lc", "rc", "c", "all"}));
  identities->add_option("--require", args.require, "Exit 1 unless this identity holds");

  table_arg(add("classify", "Name the classes a table belongs to", cmd_classify));

  auto* isotope = add("isotope", "Apply an isotopism (A, B, C)", cmd_isotope);
  table_arg(isotope);
  isotope->add_option("--a", args.a, "A")->required();
  isotope->add_option("--b", args.b, "B")->required();
  isotope->add_option("--c", args.c, "C")->required();

  auto* principal = add("principal", "Principal isotope with identity f.g", cmd_principal);
  table_arg(principal);
  principal->add_option("--f", args.f)->required();
  principal->add_option("--g", args.g)->required();

  auto* derivative = add("derivative", "Left or right derivative at an element", cmd_derivative);
  table_arg(derivative);
  derivative->add_option("--side", args.side)->check(CLI::IsMember({"left", "right"}));
  derivative->add_option("--at", args.at)->required();

  table_arg(add("parastrophe", "Transpose of the table", cmd_parastrophe));

  for (auto [name, fn] : {std::pair{"isomorphic", cmd_isomorphic}, std::pair{"isotopic", cmd_isotopic}}) {
    auto* sub = add(name, name == std::string("isomorphic") ? "Search for an isomorphism" : "Search for an isotopism", fn);
    table_arg(sub);
    sub->add_option("other", args.other, "second table")->required();
    sub->add_option("--budget", args.budget, "Search node budget");
    if (name == std::string("isotopic"))
      sub->add_option("--strategy", args.strategy, "triple or principal")
          ->check(CLI::IsMember({"triple", "principal"}));
  }

  table_arg(add("center", "Center, nuclei and commutant", cmd_center));
  table_arg(add("rank", "Center, its rank, and indecomposability for groups", cmd_rank));

  auto* catalog = add("catalog", "List embedded tables or print one", cmd_catalog);
  catalog->add_option("name", args.name);

  auto* verify = add("verify-paper", "Run every machine check and report", cmd_verify);
  verify->add_option("--seed", args.seed, "Seed for sampled universes");
  verify->add_option("--max-order", args.max_order, "Largest enumerated loop order")->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Success : Usage;
  }
  try {
    return handler(args);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "qloop: " << e.what() << "\n";
    return PropertyFails;
  }
}
