#include <gtest/gtest.h>

#include <map>
#include <set>

#include "structa/group/action.hpp"
#include "structa/group/catalog.hpp"
#include "structa/group/fingroup.hpp"
#include "structa/group/hom.hpp"

using namespace structa;
using namespace structa::group;

namespace {

const FinGroup& s3() {
  static const FinGroup g = symmetric_group(3);
  return g;
}

const std::vector<FinGroup>& catalog() {
  static const std::vector<FinGroup> c = group_catalog(6);
  return c;
}

Subgroup sub(const FinGroup& g, FinSet s) { return Subgroup(g, s); }

// Oracle: closure of a subset by direct products, no inverses used.
bool closed_oracle(const FinGroup& g, const FinSet& h) {
  for (const auto& a : h)
    for (const auto& b : h) {
      if (!h.contains(g.mul(a, b))) return false;
    }
  return !h.empty();
}

// Oracle: permutation sign by inversion count.
int sign(const std::string& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  return inv % 2;
}

}  // namespace

TEST(Groups, TrivialAndTables) {
  const FinGroup z1 = cyclic_group(1);
  EXPECT_EQ(z1.size(), 1u);
  EXPECT_TRUE(z1.abelian());
  // Oracle: S3 product by composing one-line words directly.
  const FinGroup& g = s3();
  ASSERT_EQ(g.size(), 6u);
  for (const auto& s : g.carrier())
    for (const auto& t : g.carrier()) {
      std::string w(3, ' ');
      for (int i = 0; i < 3; ++i) w[i] = s.str()[t.str()[i] - '0'];
      EXPECT_EQ(g.mul(s, t).str(), w);
    }
  EXPECT_FALSE(g.abelian());
  EXPECT_EQ(g.unit_name().str(), "012");
}

TEST(Groups, NonGroupTablesRejectedWithWitness) {
  // Z2 as a set with x*y = x: no unit.
  const OpTable t(FinSet{"a", "b"}, std::vector<std::size_t>{0, 0, 1, 1});
  try {
    check_group(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LawFailure);
  }
  const LawReport r = group_laws(t);
  EXPECT_FALSE(r.passed("group.unit"));
  EXPECT_TRUE(r.passed("group.associative"));
  // Non-associative loop of order 5 with unit.
  const OpTable loop(FinSet::range(5), std::vector<std::size_t>{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0});
  const LawReport lr = group_laws(loop);
  EXPECT_TRUE(lr.passed("group.unit"));
  EXPECT_TRUE(lr.passed("group.unique_solution"));
  EXPECT_FALSE(lr.passed("group.associative"));
}

TEST(Groups, Power) {
  const FinGroup z4 = cyclic_group(4);
  EXPECT_EQ(power(z4, Symbol("1"), 4), Symbol("0"));
  EXPECT_EQ(power(z4, Symbol("1"), -1), Symbol("3"));
  EXPECT_EQ(power(s3(), Symbol("102"), -1), Symbol("102"));
  // Oracle: repeated multiplication.
  for (std::size_t a = 0; a < s3().size(); ++a) {
    std::size_t x = s3().unit();
    for (long long n = 0; n < 13; ++n) {
      EXPECT_EQ(power(s3(), a, n), x);
      x = s3().mul(x, a);
    }
  }
  for (const auto& g : catalog()) EXPECT_TRUE(power_laws(g, 7).all_passed());
}

TEST(Catalog, OrdersAndIsomorphismClasses) {
  std::map<std::size_t, std::size_t> per_order;
  for (const auto& g : catalog()) ++per_order[g.size()];
  EXPECT_EQ(catalog().size(), 8u);
  EXPECT_EQ(per_order, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 2}}));
  std::size_t abelian = 0;
  for (const auto& g : catalog()) abelian += g.abelian();
  EXPECT_EQ(abelian, 7u);
  // Every named group is found in the catalog exactly once.
  for (const FinGroup& named : {cyclic_group(4), klein_group(), cyclic_group(6), s3(), cyclic_group(5)}) {
    std::size_t hits = 0;
    for (const auto& g : catalog()) hits += isomorphic(g, named);
    EXPECT_EQ(hits, 1u);
  }
  EXPECT_TRUE(isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
  EXPECT_FALSE(isomorphic(cyclic_group(4), klein_group()));
}

TEST(Subgroups, Examples) {
  const FinGroup& g = s3();
  EXPECT_EQ(subgroup_check(g, FinSet{"012"}).size(), 1u);
  const Subgroup r = cyclic_subgroup(g, Symbol("120"));
  EXPECT_EQ(r.members, (FinSet{"012", "120", "201"}));
  try {
    subgroup_check(g, FinSet{"012", "102", "021"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSubgroup);
  }
  EXPECT_THROW(subgroup_check(g, FinSet{}), Error);
}

TEST(Subgroups, CriteriaAgreeOnEverySubset) {
  for (const auto& g : catalog()) {
    for (const auto& h : g.carrier().subsets()) {
      if (h.empty()) continue;
      const SubgroupCriteria c = subgroup_criteria(g, h);
      EXPECT_TRUE(c.agree()) << to_string(h);
      // For finite nonempty subsets, closure alone decides.
      EXPECT_EQ(c.group, closed_oracle(g, h)) << to_string(h);
    }
  }
}

TEST(Subgroups, EnumerationMatchesSubsetScan) {
  for (const auto& g : catalog()) {
    std::set<FinSet> oracle;
    for (const auto& h : g.carrier().subsets()) {
      if (closed_oracle(g, h)) oracle.insert(h);
    }
    std::set<FinSet> found;
    for (const auto& s : all_subgroups(g)) found.insert(s.members);
    EXPECT_EQ(found, oracle);
  }
  EXPECT_EQ(all_subgroups(s3()).size(), 6u);
}

TEST(Cosets, ExamplesAndLagrange) {
  const FinGroup& g = s3();
  EXPECT_EQ(cosets(g, whole(g)).blocks.size(), 1u);
  EXPECT_EQ(cosets(g, trivial_subgroup(g)).blocks.size(), 6u);
  const Partition p = cosets(g, cyclic_subgroup(g, Symbol("120")));
  ASSERT_EQ(p.blocks.size(), 2u);
  for (const auto& b : p.blocks) EXPECT_EQ(b.size(), 3u);
  for (const auto& gr : catalog()) {
    for (const auto& h : all_subgroups(gr)) {
      for (Side side : {Side::right, Side::left}) {
        const Partition q = cosets(gr, h, side);
        EXPECT_EQ(q.blocks.size() * h.size(), gr.size());
      }
    }
  }
  // Left and right cosets of a transposition subgroup differ.
  const Subgroup t = sub(g, FinSet{"012", "102"});
  EXPECT_NE(cosets(g, t, Side::left).blocks, cosets(g, t, Side::right).blocks);
}

TEST(Normality, ExamplesAndAgreement) {
  const FinGroup& g = s3();
  EXPECT_TRUE(is_normal(g, cyclic_subgroup(g, Symbol("120"))));
  EXPECT_FALSE(is_normal(g, sub(g, FinSet{"012", "102"})));
  for (const auto& gr : catalog()) {
    for (const auto& h : all_subgroups(gr)) {
      const NormalityCriteria c = normality_criteria(gr, h);
      EXPECT_TRUE(c.agree());
      if (gr.abelian()) { EXPECT_TRUE(c.conj_contained); }
      // Oracle: conjugation scan over every pair.
      bool oracle = true;
      for (std::size_t x = 0; x < gr.size(); ++x)
        for (std::size_t n : h.elems) oracle = oracle && h.contains(gr.mul(gr.mul(x, n), gr.inv(x)));
      EXPECT_EQ(c.conj_contained, oracle);
    }
  }
}

TEST(Quotients, Examples) {
  const FinGroup& g = s3();
  const FinGroup q = quotient(g, cyclic_subgroup(g, Symbol("120")));
  EXPECT_EQ(q.size(), 2u);
  EXPECT_TRUE(isomorphic(q, cyclic_group(2)));
  try {
    quotient(g, sub(g, FinSet{"012", "102"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNormal);
  }
  // Right cosets of a non-normal subgroup: class product not well defined.
  try {
    quotient_by(g, cosets(g, sub(g, FinSet{"012", "102"})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IllDefinedQuotient);
  }
  for (const auto& gr : catalog()) {
    EXPECT_TRUE(isomorphic(quotient(gr, trivial_subgroup(gr)), gr));
    EXPECT_EQ(quotient(gr, whole(gr)).size(), 1u);
    for (const auto& n : all_subgroups(gr)) {
      if (!is_normal(gr, n)) continue;
      const FinGroup qn = quotient(gr, n);
      EXPECT_EQ(qn.size() * n.size(), gr.size());
      if (gr.abelian()) { EXPECT_TRUE(qn.abelian()); }
      EXPECT_NO_THROW(hom_check(gr, qn, quotient_map(gr, n, qn)));
    }
  }
}

TEST(Commutators, CenterAndCommutant) {
  const FinGroup& g = s3();
  EXPECT_EQ(center(g).members, FinSet{"012"});
  EXPECT_EQ(commutant(g).members, (FinSet{"012", "120", "201"}));
  const FinGroup ab = quotient(g, commutant(g));
  EXPECT_TRUE(ab.abelian());
  EXPECT_EQ(ab.size(), 2u);
  EXPECT_EQ(commutator(g, Symbol("102"), Symbol("021")), g.mul(g.mul(Symbol("102"), Symbol("021")),
                                                              g.mul(Symbol("102"), Symbol("021"))));
  for (const auto& gr : catalog()) {
    if (gr.abelian()) {
      EXPECT_EQ(center(gr).size(), gr.size());
      EXPECT_EQ(commutant(gr).size(), 1u);
    }
    for (const auto& n : all_subgroups(gr)) {
      if (!is_normal(gr, n)) continue;
      EXPECT_TRUE(abelianization_check(gr, n).all_passed());
    }
  }
}

TEST(Homs, SignAndTrivial) {
  const FinGroup& g = s3();
  const FinGroup z2 = cyclic_group(2);
  const FinMap sgn = FinMap::from_function(g.carrier(), z2.carrier(),
                                           [](const Symbol& s) { return Symbol(std::to_string(sign(s.str()))); });
  const GroupHom h = hom_check(g, z2, sgn);
  EXPECT_EQ(kernel(h).members, (FinSet{"012", "120", "201"}));
  const GroupHom triv = hom_check(g, z2, FinMap::constant(g.carrier(), z2.carrier(), Symbol("0")));
  EXPECT_EQ(kernel(triv).members, g.carrier());
  // A non-hom: every transposition to 1 and 3-cycles to 1 too.
  const FinMap bad = FinMap::from_function(g.carrier(), z2.carrier(),
                                           [](const Symbol& s) { return Symbol(s.str() == "012" ? "0" : "1"); });
  try {
    hom_check(g, z2, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotHomomorphism);
  }
  const GroupHom phi = first_iso(h);
  EXPECT_TRUE(classify(phi.map).bijective);
  EXPECT_EQ(phi.src.size(), 2u);
}

TEST(Homs, ExhaustiveSearchAgainstOracle) {
  // Oracle: number of homs Z_m -> Z_n is gcd(m, n).
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 1; n <= 6; ++n) {
      std::size_t a = m, b = n;
      while (b) {
        const std::size_t t = a % b;
        a = b;
        b = t;
      }
      EXPECT_EQ(all_homs(cyclic_group(m), cyclic_group(n)).size(), a);
    }
  EXPECT_EQ(automorphisms(s3()).size(), 6u);
  EXPECT_EQ(automorphisms(klein_group()).size(), 6u);
}

TEST(Homs, FirstIsoOnCatalog) {
  for (const auto& g : catalog()) {
    if (g.size() > 4) continue;
    for (const auto& h : catalog()) {
      if (h.size() > 4) continue;
      for (const auto& f : all_homs(g, h)) {
        const GroupHom phi = first_iso(f);
        EXPECT_TRUE(classify(phi.map).bijective);
        EXPECT_EQ(g.size(), kernel(f).size() * image(f).size());
        if (classify(f.map).onto && kernel(f).size() == 1) { EXPECT_TRUE(classify(f.map).bijective); }
      }
    }
  }
  const FinGroup z4 = cyclic_group(4), z2 = cyclic_group(2);
  const FinMap mod2 = FinMap::from_function(z4.carrier(), z2.carrier(), [](const Symbol& s) {
    return Symbol(std::to_string(std::stoi(s.str()) % 2));
  });
  const GroupHom red = hom_check(z4, z2, mod2);
  EXPECT_EQ(kernel(red).members, (FinSet{"0", "2"}));
  EXPECT_TRUE(classify(first_iso(red).map).bijective);
}

TEST(Homs, TransferFlagsNonEpimorphism) {
  const FinGroup& g = s3();
  const Subgroup r = cyclic_subgroup(g, Symbol("120"));
  const FinGroup rg = as_group(g, r);
  const GroupHom incl = hom_check(rg, g, FinMap::inclusion(rg.carrier(), g.carrier()));
  const LawReport rep = transfer_check(incl, whole(rg));
  EXPECT_TRUE(rep.all_passed());
  bool flagged = false;
  for (const auto& [id, msg] : rep.warnings()) flagged = flagged || id == "transfer.image_normal";
  EXPECT_TRUE(flagged);
  for (const auto& f : all_homs(g, cyclic_group(2))) {
    for (const auto& s : all_subgroups(g)) EXPECT_TRUE(transfer_check(f, s).all_passed());
  }
}

TEST(Inner, Examples) {
  const InnerAutomorphisms in = inner_automorphisms(s3());
  EXPECT_TRUE(in.laws.all_passed());
  EXPECT_EQ(in.inn.size(), 6u);
  EXPECT_EQ(kernel(in.conj).members, FinSet{"012"});
  for (const auto& g : catalog()) {
    const InnerAutomorphisms i = inner_automorphisms(g);
    EXPECT_TRUE(i.laws.all_passed());
    if (g.abelian()) { EXPECT_EQ(i.inn.size(), 1u); }
    // Inn(G) ≅ G/Z(G) through the first isomorphism theorem.
    const GroupHom phi = first_iso(i.conj);
    EXPECT_TRUE(isomorphic(phi.src, quotient(g, center(g))));
    EXPECT_EQ(phi.tgt.size(), i.inn.size());
  }
}

TEST(Cayley, Z3AndTable) {
  const FinGroup z3 = cyclic_group(3);
  const GroupHom c = cayley(z3);
  EXPECT_EQ(c.tgt.size(), 3u);
  EXPECT_TRUE(c.tgt.abelian());
  for (const auto& g : catalog()) {
    const GroupHom h = cayley(g);
    // Image table equals the original table under the map.
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b) EXPECT_EQ(h(g.mul(a, b)), h.tgt.mul(h(a), h(b)));
    EXPECT_TRUE(classify(h.map).bijective);
  }
}

TEST(Actions, TrivialAndCoset) {
  const FinGroup& g = s3();
  const GroupAction triv = trivial_action(g, FinSet{"pt"});
  EXPECT_TRUE(action_check(triv).all_passed());
  EXPECT_EQ(nucleus(triv).members, g.carrier());
  const Subgroup t = sub(g, FinSet{"012", "102"});
  const GroupAction a = coset_action(g, t);
  EXPECT_EQ(a.carrier.size(), 3u);
  EXPECT_TRUE(transitive(a));
  EXPECT_EQ(nucleus(a).members, FinSet{"012"});
  EXPECT_TRUE(coset_action_laws(g, t).all_passed());
  EXPECT_TRUE(coset_action_laws(g, cyclic_subgroup(g, Symbol("120"))).all_passed());
  EXPECT_EQ(coset_action(g, whole(g)).carrier.size(), 1u);
  for (const auto& gr : catalog()) {
    for (const auto& h : all_subgroups(gr)) EXPECT_TRUE(coset_action_laws(gr, h).all_passed());
  }
  std::vector<FinMap> bad(g.size(), FinMap::constant(FinSet{"p", "q"}, FinSet{"p", "q"}, Symbol("p")));
  try {
    make_action(g, FinSet{"p", "q"}, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAction);
  }
}

TEST(Actions, NonHomomorphicAssignmentReported) {
  const FinGroup z2 = cyclic_group(2);
  const FinSet x{"p", "q"};
  const FinMap swap(x, x, {{"p", "q"}, {"q", "p"}});
  // Unit acting by the swap breaks both the unit and homomorphism laws.
  const GroupAction a = make_action(z2, x, {swap, swap});
  const LawReport r = action_check(a);
  EXPECT_FALSE(r.passed("action.unit"));
  EXPECT_EQ(*r.find("action.homomorphism")->witness, "(0,0)");
}

TEST(Stabilizers, RegularAndPoints) {
  const FinGroup& g = s3();
  const GroupAction reg = regular_action(g);
  const LawReport rr = stabilizer_suite(reg, Symbol("012"));
  EXPECT_TRUE(rr.all_passed());
  EXPECT_EQ(stabilizer(reg, 0).members, FinSet{"012"});

  // S3 on {0,1,2}: σ sends i to σ(i).
  const FinSet pts{"0", "1", "2"};
  std::vector<FinMap> act;
  for (const auto& s : g.carrier()) {
    act.push_back(FinMap::from_function(pts, pts, [&](const Symbol& i) {
      return Symbol(std::string(1, s.str()[static_cast<std::size_t>(i.str()[0] - '0')]));
    }));
  }
  const GroupAction nat = make_action(g, pts, act);
  ASSERT_TRUE(action_check(nat).all_passed());
  for (const auto& p : pts) {
    EXPECT_EQ(stabilizer(nat, pts.index_of(p)).size(), 2u);
    EXPECT_TRUE(stabilizer_suite(nat, p).all_passed());
  }
  EXPECT_EQ(nucleus(nat).members, FinSet{"012"});

  // Not transitive: Z2 swapping p,q and fixing r.
  const FinGroup z2 = cyclic_group(2);
  const FinSet x{"p", "q", "r"};
  const GroupAction split = make_action(z2, x, {FinMap::identity(x), FinMap(x, x, {{"p", "q"}, {"q", "p"}, {"r", "r"}})});
  EXPECT_TRUE(stabilizer_suite(split, Symbol("r"), false).all_passed());
  try {
    stabilizer_suite(split, Symbol("r"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotTransitive);
  }
}

TEST(LinearSpace, PrimeFields) {
  const Field f2 = prime_field(2);
  const FinGroup v2 = cyclic_group(2);
  EXPECT_TRUE(linear_space_check(f2, v2, scalar_action(f2, v2)).all_passed());
  const Field f3 = prime_field(3);
  const FinGroup v33 = direct_product(cyclic_group(3), cyclic_group(3));
  const LawReport r = linear_space_check(f3, v33, scalar_action(f3, v33));
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(multiplicative_group(f3).size(), 2u);
  EXPECT_THROW(prime_field(4), Error);
}

TEST(LinearSpace, BrokenScalarSumFailsBothWays) {
  const Field f3 = prime_field(3);
  const FinGroup v3 = cyclic_group(3);
  // Every nonzero scalar acts as the identity, zero as the zero map.
  std::vector<FinMap> act{FinMap::constant(v3.carrier(), v3.carrier(), Symbol("0")), FinMap::identity(v3.carrier()),
                          FinMap::identity(v3.carrier())};
  const LawReport r = linear_space_check(f3, v3, act);
  EXPECT_FALSE(r.passed("hom_form.scalar_sum"));
  EXPECT_FALSE(r.passed("axioms.scalar_sum"));
  EXPECT_TRUE(r.passed("linear_space.agree"));
  EXPECT_TRUE(r.passed("hom_form.homomorphism"));
}

TEST(LinearSpace, FormulationsAgreeOnAllScalarAssignments) {
  // Every assignment of endomaps of Z2 to the two scalars of Z2.
  const Field f2 = prime_field(2);
  const FinGroup v = klein_group();
  const auto maps = FinMap::all(v.carrier(), v.carrier());
  std::size_t passing = 0;
  for (std::size_t i = 0; i < maps.size(); i += 7) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      const LawReport r = linear_space_check(f2, v, {maps[i], maps[j]});
      EXPECT_TRUE(r.passed("linear_space.agree"));
      passing += r.all_passed();
    }
  }
  EXPECT_EQ(passing, 1u);  // only 0 ↦ zero map, 1 ↦ identity
}
