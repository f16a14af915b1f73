// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "oracle.hpp"
#include "tri/dissection.hpp"
#include "tri/identity.hpp"
#include "tri/sweep.hpp"

namespace {

using namespace tri;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

struct Criterion {
  const char* id;
  const char* name;
  double limit_ms;  // <= 0: no time limit
  std::function<Outcome()> run;
};

Outcome ring_layer() {
  Outcome o;
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<Int> d(-1000000, 1000000);
  for (int i = 0; i < 10000 && o.ok; ++i) {
    const RingElem2 a{d(gen), d(gen)}, b{d(gen), d(gen)};
    const OrthoPair pa = to_ortho(a), pb = to_ortho(b);
    o.require(to_ortho(mul2(a, b)) == OrthoPair{pa.s2 * pb.s2, pa.s1 * pb.s1}, "product not preserved");
    o.require(to_ortho(add2(a, b)) == OrthoPair{pa.s2 + pb.s2, pa.s1 + pb.s1}, "sum not preserved");
  }
  for (Int n = -50; n <= 50; ++n) {
    for (Int m = -50; m <= 50; ++m) {
      o.require(mul_label(n, m) == TriangleLabel{1, n * m}, "label product");
      o.require(mul2(embed2_basis({1, n}), embed2_basis({1, m})) == embed2_basis({1, n * m}),
                "<" + std::to_string(n) + "><" + std::to_string(m) + "> differs from <nm>");
    }
  }
  return o;
}

Outcome seven_term_arith() {
  Outcome o;
  std::mt19937_64 gen(2);
  std::uniform_int_distribution<Int> d(-20, 20);
  for (int i = 0; i < 100000 && o.ok; ++i) {
    const Int n = d(gen), k = d(gen), l = d(gen), t = d(gen);
    o.require(arith_check(make_eq8(n, k, l, t), Mode::N20).holds, "seven-term identity fails");
    const ArithVerdict v = arith_check(make_eq3(n, k, l), Mode::N20);
    o.require(!v.holds && v.residual == TriVec3{0, 0, 1}, "six-term instance count residual is not 1");
    o.require(arith_check(make_eq3(n, k, l), Mode::N2).holds, "six-term instance fails in N2");
  }
  return o;
}

Outcome sweep_outcome(Mode mode, SweepBox box, std::size_t expected) {
  Outcome o;
  const SweepResult r = sweep_eq8(mode, box);
  o.require(r.configurations == expected, "configuration count " + std::to_string(r.configurations));
  o.require(r.nonzero_residuals == 0, "nonzero residual at " + (r.first_failure ? to_string(*r.first_failure) : ""));
  o.require(r.all_cases_seen(), "not all ten cases represented");
  std::string counts;
  for (int c = 1; c <= 10; ++c) counts += (c > 1 ? " " : "") + std::to_string(r.case_counts[c]);
  if (o.ok) o.detail = std::to_string(r.configurations) + " configurations, cases " + counts;
  return o;
}

Outcome congruence_and_injectivity() {
  Outcome o;
  for (Int t = -12; t <= 12; ++t) {
    const PlacedTriangle base = placed(0, 0, t);
    std::set<std::tuple<Int, Int, Int>> bigs;
    for (Int n = -6; n <= 6; ++n) {
      for (Int k = -6; k <= 6; ++k) {
        for (Int l = -6; l <= 6; ++l) {
          const PlacedTriangle big = eq8_layout(base, n, k, l).big;
          o.require((n + k + l == 0) == (big.size == base.size), "congruence equivalence");
          o.require(bigs.emplace(big.anchor.i, big.anchor.j, big.size).second, "layout not injective");
        }
      }
    }
  }
  return o;
}

Outcome dissection(Builtin which, std::multiset<Int> expected) {
  Outcome o;
  const DissectionResult r = interpret(builtin_script(which), {0, 0});
  std::multiset<Int> got;
  Int squares = 0;
  for (const Piece& p : r.pieces) {
    got.insert(p.sign * p.tri.size);
    squares += p.tri.size * p.tri.size;
    o.require(p.sign == 1, "negative piece survives");
  }
  o.require(r.pieces.size() == 15, std::to_string(r.pieces.size()) + " pieces");
  o.require(got == expected, "signed sizes differ");
  o.require(std::set<Int>(got.begin(), got.end()).size() == got.size(), "sizes not pairwise distinct");
  o.require(squares == 1521, "sum of squares " + std::to_string(squares));

  // Unit-multiplicity tiling against the barycentre oracle.
  std::map<SimplexId, Int> mult;
  for (const Piece& p : r.pieces) {
    for (const auto& id : oracle::simplices(p.tri, Mode::N2)) mult[id] += 1;
  }
  const auto root_cells = oracle::simplices(placed(0, 0, 39), Mode::N2);
  o.require(mult.size() == root_cells.size(), "pieces leave or exceed the root");
  for (const auto& id : root_cells) o.require(mult.count(id) && mult[id] == 1, "cell multiplicity is not 1");

  std::set<std::string> tags;
  for (const Cancellation& c : r.cancellations) {
    tags.insert(c.tag);
    o.require(c.positive.tri == c.negative.tri, "tag " + c.tag + " pairs different placements");
    o.require(c.positive.sign == -c.negative.sign, "tag " + c.tag + " pairs equal signs");
  }
  o.require(tags.size() == 7, std::to_string(tags.size()) + " cancellation tags");
  o.require(verify_perfect(r, placed(0, 0, 39)).pass(), "verify_perfect reports a failure");
  if (o.ok) o.detail = "15 pieces, sum of squares 1521";
  return o;
}

TriVec3 term_sum(const IdentityInstance& inst) {
  TriVec3 sum;
  for (const Term& t : inst.terms) sum = sum + t.coeff * term_embedding(t.value);
  return sum;
}

Outcome vertex_identities() {
  Outcome o;
  o.require(term_sum(make_eq26(3)) == TriVec3{9, 3, 1}, "<3> counting form");
  o.require(term_sum(make_eq31(3)) == TriVec3{64, 8, 1}, "<8> form");
  o.require(term_sum(make_eq32(3)) == TriVec3{49, 7, 1}, "<7> form");
  o.require(term_sum(make_eq32(-2)) == TriVec3{9, -3, 1}, "<-3> form");
  for (Int n = -10; n <= 10; ++n) o.require(arith_check(make_eq26(n), Mode::N20).holds, "counting identity arith");
  for (Int n = 1; n <= 8; ++n) {
    o.require(geom_check(eq26_witness({0, 0}, n), {1, placed(0, 0, n)}, Mode::N20).empty(),
              "counting witness residual for n=" + std::to_string(n));
  }
  std::mt19937_64 gen(8);
  std::uniform_int_distribution<Int> d(-10, 10);
  for (int i = 0; i < 10000; ++i) {
    const Int a = d(gen), k = d(gen), n = d(gen), t = d(gen);
    o.require(arith_check(make_eq27(a, k, n, t), Mode::N20).holds, "three-term family arith");
  }
  return o;
}

Outcome projection_homomorphism() {
  Outcome o;
  std::mt19937_64 gen(9);
  std::uniform_int_distribution<Int> coord(-8, 8), size(-8, 8), count(1, 10), sign(0, 1);
  for (int i = 0; i < 1000; ++i) {
    std::vector<SignedPlacement> terms(static_cast<std::size_t>(count(gen)));
    for (auto& p : terms) p = {sign(gen) ? 1 : -1, placed(coord(gen), coord(gen), size(gen))};
    for (Mode mode : {Mode::N2, Mode::N20}) {
      Chain acc(mode);
      TriVec3 expected;
      for (const auto& p : terms) {
        acc += triangle_chain(p.tri, p.sign, mode);
        TriVec3 e = embed3({static_cast<int>(p.sign), p.tri.size});
        if (mode == Mode::N2) e.c = 0;
        expected = expected + e;
      }
      o.require(project(acc) == expected, "projection differs from embedding sum");
    }
  }
  return o;
}

Outcome reduced_four_not_buildable() {
  Outcome o;
  const std::vector<SearchTerm> terms{{1, 3}, {1, 3}, {-1, 1}, {-1, 1}};
  const auto found = placement_search(terms, placed(0, 0, 4), {6, Mode::N2, 1e12});
  o.require(!found.has_value(), "a zero-residual placement was found");
  if (o.ok) o.detail = "no placement within radius 6";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "ring isomorphism and label products", 1000, ring_layer},
      {"AC2", "seven-term identity in N20, six-term count residual 1", 5000, seven_term_arith},
      {"AC3", "N2 sweep of the construction", 60000, [] { return sweep_outcome(Mode::N2, {6, 12}, 54925); }},
      {"AC4", "N20 sweep of the construction", 120000, [] { return sweep_outcome(Mode::N20, {4, 8}, 12393); }},
      {"AC5", "congruence equivalence and layout injectivity", 0, congruence_and_injectivity},
      {"AC6", "builtin dissection A", 1000,
       [] { return dissection(Builtin::A, {19, 20, -12, 11, -11, 9, -7, 7, -2, 2, -5, 8, -8, 5, 3}); }},
      {"AC7", "builtin dissection B", 1000,
       [] { return dissection(Builtin::B, {19, 20, -7, -12, 7, 5, -2, -5, 2, 3, 9, -11, 11, 8, -8}); }},
      {"AC8", "vertex-aware identities and counting witness", 5000, vertex_identities},
      {"AC9", "projection of chain sums, both modes", 5000, projection_homomorphism},
      {"AC10", "two <3> minus two <1> cannot build <4>", 30000, reduced_four_not_buildable},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::string timing = std::to_string(static_cast<long long>(ms)) + " ms";
    if (c.limit_ms > 0) {
      timing += " / limit " + std::to_string(static_cast<long long>(c.limit_ms)) + " ms";
      if (ms > c.limit_ms && o.ok) {
        o.ok = false;
        o.detail = "time limit exceeded";
      }
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %-4s %s (%s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, timing.c_str(),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
