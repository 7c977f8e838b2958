// Acceptance suite: one PASS/FAIL line per criterion with its time limit.
// Usage: acceptance <path-to-qloop-cli>

#include "qloop/catalog.hpp"
#include "qloop/harness.hpp"
#include "qloop/identities.hpp"
#include "qloop/morphisms.hpp"
#include "qloop/structure.hpp"
#include "qloop/transforms.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

using namespace qloop;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = o.ok && in_time;
  failures += !pass;
  std::printf("%s  %2d  %-34s %8.3f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", number, name, secs, limit_seconds,
              o.note.empty() ? "" : "  ", o.note.c_str());
  if (!in_time)
    std::printf("      time limit exceeded\n");
}

const harness::TheoremCheck& find(const std::vector<harness::TheoremCheck>& v, const std::string& id) {
  for (const auto& c : v)
    if (c.id == id)
      return c;
  throw std::runtime_error("missing check " + id);
}

std::vector<Magma> loops_up_to(int n, LoopFilter filter = LoopFilter::None) {
  std::vector<Magma> out;
  for (int k = 1; k <= n; ++k)
    for (auto& m : enumerate_loops(k, filter))
      out.push_back(std::move(m));
  return out;
}

Permutation rp(int n, std::mt19937& rng) { return Permutation::from_images(oracle::random_perm(n, rng)); }

std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0)
    out.append(buf, k);
  pclose(p);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "table reproduction", 1.0, [] {
    Outcome o;
    const Magma otimes = apply_isotopism(catalog::theta(), catalog::construction1_triple());
    const Magma& printed = catalog::otimes_printed();
    int matches = 0;
    bool only_46 = true;
    for (int x = 1; x <= 6; ++x)
      for (int y = 1; y <= 6; ++y) {
        if (otimes(x, y) == printed(x, y))
          ++matches;
        else
          only_46 = only_46 && x == 4 && y == 6 && otimes(x, y) == 2 && printed(x, y) == 4;
      }
    o.require(matches == 35 && only_46, "otimes: " + std::to_string(matches) + "/36 cells match");
    const Magma oplus = apply_isotopism(catalog::theta_star(), catalog::construction2_triple());
    o.require(oplus == catalog::oplus_printed(), "oplus differs from the printed table");
    const auto& dev = find(harness::verify_constructions(), "otimes-table-reproduction");
    o.require(dev.status == harness::CheckStatus::Deviation, "otimes defect not reported as a deviation");
    if (o.ok)
      o.note = "otimes 35/36 (cell (4,6): computed 2, printed 4), oplus 36/36";
    return o;
  });

  criterion(2, "identity profile", 1.0, [] {
    Outcome o;
    const Magma& ot = catalog::otimes_recomputed();
    const Magma& op = catalog::oplus_recomputed();
    const Magma& th = catalog::theta();
    const Magma& ts = catalog::theta_star();
    o.require(satisfies(ot, IdentityId::LC2), "otimes fails LC2");
    for (auto id : {IdentityId::LC1, IdentityId::LC3, IdentityId::LC4})
      o.require(!satisfies(ot, id), "otimes satisfies " + std::string(to_string(id)));
    o.require(ot.left_identities() == std::vector<Element>{5}, "otimes left identity is not exactly 5");
    o.require(ot.right_identities().empty(), "otimes has a right identity");
    o.require(satisfies(op, IdentityId::RC2), "oplus fails RC2");
    for (auto id : {IdentityId::RC1, IdentityId::RC3, IdentityId::RC4})
      o.require(!satisfies(op, id), "oplus satisfies " + std::string(to_string(id)));
    o.require(op.right_identities() == std::vector<Element>{3}, "oplus right identity is not exactly 3");
    o.require(op.left_identities().empty(), "oplus has a left identity");
    for (auto id : members(Family::LC))
      o.require(satisfies(th, id), "theta fails " + std::string(to_string(id)));
    for (auto id : members(Family::RC))
      o.require(satisfies(ts, id), "theta_star fails " + std::string(to_string(id)));
    o.require(!satisfies(th, IdentityId::C) && !satisfies(ts, IdentityId::C), "a C-loop among theta, theta_star");
    return o;
  });

  criterion(3, "parastrophe biconditionals", 60.0, [] {
    Outcome o;
    const auto loops = loops_up_to(5);
    o.require(loops.size() == 63, "expected 63 loops of order <= 5, got " + std::to_string(loops.size()));
    int counterexamples = 0;
    for (const auto& m : loops) {
      const Magma t = parastrophe(m);
      counterexamples += is_lc_loop(m) != is_rc_loop(t);
      counterexamples += is_rc_loop(m) != is_lc_loop(t);
      counterexamples += is_c_loop(m) != is_c_loop(t);
    }
    o.require(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
    for (const auto& c : harness::verify_parastrophe_lemmas(harness::Options{}))
      o.require(c.status == harness::CheckStatus::Verified, c.id + " not verified");
    if (o.ok)
      o.note = std::to_string(loops.size()) + " loops, 0 counterexamples";
    return o;
  });

  criterion(4, "commutative equivalences", 60.0, [] {
    Outcome o;
    const auto loops = loops_up_to(5, LoopFilter::Commutative);
    int counterexamples = 0;
    for (const auto& m : loops) {
      const bool lc = is_lc_loop(m), rc = is_rc_loop(m), c = is_c_loop(m);
      counterexamples += !(lc == rc && rc == c);
    }
    o.require(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
    const auto check = harness::verify_commutative_equivalences(harness::Options{});
    o.require(check.status == harness::CheckStatus::Verified, "harness check not verified");
    if (o.ok)
      o.note = std::to_string(loops.size()) + " commutative loops, 0 counterexamples";
    return o;
  });

  criterion(5, "derivative theorems", 120.0, [] {
    Outcome o;
    std::vector<Magma> universe = loops_up_to(5, LoopFilter::Commutative);
    std::erase_if(universe, [](const Magma& m) { return !is_c_loop(m); });
    const std::size_t commutative_c = universe.size();
    universe.push_back(catalog::theta());
    universe.push_back(catalog::theta_star());
    int failures_seen = 0;
    for (const auto& f : universe) {
      const bool lc = is_lc_loop(f), rc = is_rc_loop(f);
      for (Element a = 1; a <= f.order(); ++a) {
        const auto inv = inverses(f, a);
        const Element e = *f.identity();
        const auto la = left_translation(f, a), ra = right_translation(f, a);
        const Magma dl = left_derivative(f, inv.left), dr = right_derivative(f, inv.right);
        const Magma pl = principal_isotope(f, inv.left, e), pr = principal_isotope(f, e, inv.right);
        if (lc) {
          failures_seen += apply_isotopism(f, {la, Permutation::identity(f.order()), la}) != dl;
          failures_seen += !is_isomorphism(pl, dl, la);
        }
        if (rc) {
          failures_seen += apply_isotopism(f, {Permutation::identity(f.order()), ra, ra}) != dr;
          failures_seen += !is_isomorphism(pr, dr, ra);
        }
        if (f.is_commutative()) {
          failures_seen += dl != dr;
          failures_seen += !(is_c_loop(dl) && is_c_loop(pl) && is_c_loop(pr));
        }
        for (Element x = 1; x <= f.order(); ++x)
          for (Element y = 1; y <= f.order(); ++y) {
            if (lc)
              failures_seen += f(a, pl(x, y)) != dl(f(a, x), f(a, y));
            if (rc)
              failures_seen += f(pr(x, y), a) != dr(f(x, a), f(y, a));
            if (f.is_commutative()) {
              failures_seen += f(a, pl(x, y)) != dl(f(a, x), f(y, a));
              failures_seen += f(pl(x, y), a) != dl(f(x, a), f(y, a));
            }
          }
      }
    }
    o.require(failures_seen == 0, std::to_string(failures_seen) + " cellwise failures");
    std::uint64_t vacuous = 0, checked = 0;
    for (const auto& c : harness::verify_derivative_theorems(harness::Options{})) {
      o.require(c.status == harness::CheckStatus::Verified, c.id + " is " + std::string(to_string(c.status)));
      vacuous += c.vacuous_instances;
      checked += c.instances_checked;
    }
    if (o.ok)
      o.note = std::to_string(commutative_c) + " commutative C-loops + theta, theta_star; harness " +
               std::to_string(checked) + " checked, " + std::to_string(vacuous) + " vacuous (flagged)";
    return o;
  });

  criterion(6, "isotopy bridge", 120.0, [] {
    Outcome o;
    std::mt19937 rng(0);
    std::string counts;
    for (int n = 2; n <= 5; ++n) {
      const auto loops = enumerate_loops(n, LoopFilter::Commutative);
      int found = 0;
      for (int attempt = 0; found < 25 && attempt < 2000; ++attempt) {
        const Magma& theta = loops[static_cast<std::size_t>(attempt) % loops.size()];
        auto a = rp(n, rng), b = rp(n, rng), c = rp(n, rng), d = rp(n, rng), e = rp(n, rng), f = rp(n, rng);
        if (attempt % 2 == 0)
          b = a;
        else
          e = d;
        const IsotopismTriple t1{a, b, c}, t2{d, e, f};
        const Magma otimes = apply_isotopism(theta, t1), oplus = apply_isotopism(parastrophe(theta), t2);
        if (!otimes.is_commutative() && !oplus.is_commutative())
          continue;
        ++found;
        const auto bridge = parastrophe_isotopy_bridge(theta, t1, t2);
        const IsotopismTriple expected =
            otimes.is_commutative() ? IsotopismTriple{b.inverse() * d, a.inverse() * e, c.inverse() * f}
                                    : IsotopismTriple{a.inverse() * e, b.inverse() * d, c.inverse() * f};
        o.require(bridge.triple == expected, "unexpected bridge triple at order " + std::to_string(n));
        // independent cellwise check
        const auto& [ga, gb, gc] = expected;
        const auto rows = oracle::isotope(otimes.rows(), {ga.images().begin(), ga.images().end()},
                                          {gb.images().begin(), gb.images().end()},
                                          {gc.images().begin(), gc.images().end()});
        o.require(rows == oplus.rows(), "bridge triple fails cellwise at order " + std::to_string(n));
      }
      o.require(found >= 25, "only " + std::to_string(found) + " instances at order " + std::to_string(n));
      counts += (counts.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(found);
    }
    const harness::Options opt;
    const auto r1 = harness::verify_isotopy_bridge(opt), r2 = harness::verify_isotopy_bridge(opt);
    for (const auto& c : r1) {
      o.require(c.status == harness::CheckStatus::Verified, c.id + " not verified");
      o.require(c.instances_checked >= 100, c.id + " checked fewer than 4 x 25 instances");
    }
    o.require(harness::to_json(r1[0], 0) == harness::to_json(r2[0], 0), "harness bridge check not reproducible");
    if (o.ok)
      o.note = "instances per order " + counts + "; harness " + std::to_string(r1[0].instances_checked) + " checked";
    return o;
  });

  criterion(7, "morphism engine", 120.0, [] {
    Outcome o;
    std::vector<Magma> groups;
    std::mt19937 rng(0);
    for (int n = 1; n <= 6; ++n)
      groups.push_back(catalog::cyclic(n));
    groups.push_back(catalog::klein());
    groups.push_back(catalog::symmetric3());
    const std::size_t base = groups.size();
    for (std::size_t i = 0; i < base; ++i)
      groups.push_back(relabel(groups[i], rp(groups[i].order(), rng)));
    int pairs = 0;
    for (const auto& g : groups)
      for (const auto& h : groups) {
        if (g.order() != h.order())
          continue;
        ++pairs;
        const bool iso = are_isomorphic(g, h).related();
        const bool t1 = are_isotopic(g, h, default_node_budget, IsotopyStrategy::TripleSearch).related();
        const bool t2 = are_isotopic(g, h, default_node_budget, IsotopyStrategy::PrincipalIsotopes).related();
        o.require(iso == t1 && iso == t2, "strategies disagree on a pair of order " + std::to_string(g.order()));
        o.require(iso == oracle::isomorphic(g.rows(), h.rows()), "isomorphism verdict differs from brute force");
      }
    o.require(!are_isomorphic(catalog::dihedral4(), catalog::quaternion8()).related(), "D4 and Q8 found isomorphic");
    const auto section = harness::verify_group_structure(harness::Options{});
    o.require(find(section, "dihedral-quaternion-isomorphism").status == harness::CheckStatus::Deviation,
              "D4/Q8 not reported as a deviation");
    o.require(find(section, "isotopic-groups-isomorphic").status == harness::CheckStatus::Verified,
              "harness group check not verified");
    if (o.ok)
      o.note = std::to_string(pairs) + " group pairs agree; D4 !~ Q8 reported as deviation";
    return o;
  });

  criterion(8, "structure", 10.0, [] {
    Outcome o;
    for (const auto& [name, g] : std::vector<std::pair<std::string, Magma>>{{"D4", catalog::dihedral4()},
                                                                            {"Q8", catalog::quaternion8()}}) {
      const auto z = center(g).elements;
      o.require(z == oracle::center(g.rows()), name + " center differs from brute force");
      o.require(z.size() == 2, name + " center size " + std::to_string(z.size()));
      o.require(center_rank(g).rank == 1, name + " center rank is not 1");
      o.require(is_indecomposable(g), name + " decomposable");
      o.require(is_central_square(g), name + " not central-square");
    }
    o.require(!is_indecomposable(catalog::cyclic(6)), "Z6 indecomposable");
    if (o.ok)
      o.note = "Z(D4) = {1,3}, Z(Q8) = {1,2}, rank 1 each; Z6 = Z2 x Z3";
    return o;
  });

  criterion(9, "property suites", 30.0, [] {
    Outcome o;
    std::mt19937 rng(0);
    std::vector<Magma> tables;
    for (const auto& name : catalog::names())
      tables.push_back(*catalog::lookup(name));
    int checks = 0;
    for (const auto& m : tables) {
      o.require(parastrophe(parastrophe(m)) == m, "transpose is not an involution");
      if (!m.is_latin())
        continue;
      const int n = m.order();
      for (int k = 0; k < 10; ++k) {
        const IsotopismTriple t1{rp(n, rng), rp(n, rng), rp(n, rng)}, t2{rp(n, rng), rp(n, rng), rp(n, rng)};
        o.require(apply_isotopism(apply_isotopism(m, t1), t2) == apply_isotopism(m, compose(t1, t2)),
                  "composition is not functorial");
        o.require(apply_isotopism(apply_isotopism(m, t1), invert(t1)) == m, "inverse triple does not undo");
        checks += 2;
      }
      for (Element a = 1; a <= n; ++a) {
        const Magma l = left_derivative(m, a), r = right_derivative(m, a);
        for (Element x = 1; x <= n; ++x)
          for (Element y = 1; y <= n; ++y) {
            o.require(m(m(a, x), y) == m(a, l(x, y)), "left derivative relation fails");
            o.require(m(x, m(y, a)) == m(r(x, y), a), "right derivative relation fails");
            checks += 2;
          }
      }
    }
    const std::pair<const Magma*, const Magma*> pairs[] = {{&catalog::theta(), &catalog::otimes_recomputed()},
                                                           {&catalog::theta_star(), &catalog::oplus_recomputed()}};
    const IsotopismTriple* triples[] = {&catalog::construction1_triple(), &catalog::construction2_triple()};
    for (int k = 0; k < 2; ++k)
      for (Element x = 1; x <= 6; ++x)
        for (auto side : {TranslationSide::Left, TranslationSide::Right}) {
          const auto [lhs, rhs] = translation_image(*pairs[k].first, *pairs[k].second, *triples[k], x, side);
          o.require(lhs == rhs, "translation identity fails");
          ++checks;
        }
    if (o.ok)
      o.note = std::to_string(checks) + " property checks";
    return o;
  });

  criterion(10, "determinism", 120.0, [&cli] {
    Outcome o;
    if (cli.empty()) {
      o.require(false, "CLI path not given");
      return o;
    }
    const std::string cmd = "'" + cli + "' verify-paper --seed 0 --json";
    const std::string a = run_capture(cmd), b = run_capture(cmd);
    o.require(!a.empty(), "no output from verify-paper");
    o.require(a == b, "two runs differ");
    if (o.ok)
      o.note = std::to_string(a.size()) + " bytes, identical";
    return o;
  });

  std::printf("%s: %d criterion failure(s)\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
