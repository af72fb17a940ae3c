#include <gtest/gtest.h>

#include "structa/order/completeness.hpp"
#include "structa/order/lattice.hpp"
#include "structa/order/maps.hpp"

using namespace structa;
using namespace structa::order;

namespace {

Poset chain(std::size_t n) {
  std::vector<Symbol> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(std::to_string(i));
  return Poset::chain(v);
}

// bottom < l, r < top
Poset diamond() {
  return Poset::generated(FinSet{"bot", "l", "r", "top"}, {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
}

Poset antichain2() { return Poset::discrete(FinSet{"a", "b"}); }

FinSet letters(std::size_t n) { return FinSet::range(n, "p"); }

Poset window(int n) {
  std::vector<Symbol> v;
  for (int i = -n; i <= n; ++i) v.emplace_back(std::to_string(i));
  return Poset::chain(v);
}

}  // namespace

TEST(CheckOrder, ChainIsNatural) {
  const OrderCheck oc = check_order(chain(3).relation());
  EXPECT_TRUE(oc.natural);
}

TEST(CheckOrder, DiamondIsPartialNotNatural) {
  const OrderCheck oc = check_order(diamond().relation());
  EXPECT_TRUE(oc.partial);
  EXPECT_FALSE(oc.natural);
  EXPECT_EQ(*oc.report.find("order.total")->witness, "(l,r)");
}

TEST(CheckOrder, MissingTransitivityWitness) {
  const FinSet c{"a", "b", "c"};
  Relation rel(c, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}});
  const OrderCheck oc = check_order(rel);
  EXPECT_FALSE(oc.preorder);
  EXPECT_EQ(*oc.report.find("order.transitive")->witness, "(a,b,c)");
  EXPECT_THROW(Poset{rel}, Error);
}

TEST(MapClassify, IdentityIsOrderBijective) {
  const Poset c3 = chain(3);
  const OrderMapClass m = map_classify(FinMap::identity(c3.carrier()), c3, c3);
  EXPECT_TRUE(m.flags.order_bijective);
  EXPECT_TRUE(m.laws.all_passed());
}

TEST(MapClassify, NegationReversesWindow) {
  const Poset w = window(2);
  const FinMap neg = FinMap::from_function(w.carrier(), w.carrier(),
                                           [](const Symbol& s) { return Symbol(std::to_string(-std::stoi(s.str()))); });
  const OrderMapClass m = map_classify(neg, w, w);
  EXPECT_TRUE(m.flags.reversing);
  EXPECT_FALSE(m.flags.preserving);
  EXPECT_TRUE(classify(neg).bijective);
  // As a map into the opposite chain it is an order bijection.
  EXPECT_TRUE(map_classify(neg, w, w.opposite()).flags.order_bijective);
}

TEST(MapClassify, HalvingPreservesButDoesNotEmbed) {
  const Poset c4 = chain(4);
  const FinMap half = FinMap::from_function(c4.carrier(), c4.carrier(),
                                            [](const Symbol& s) { return Symbol(std::to_string(std::stoi(s.str()) / 2)); });
  const OrderMapClass m = map_classify(half, c4, c4);
  EXPECT_TRUE(m.flags.preserving);
  EXPECT_FALSE(m.flags.embedding);
}

TEST(MapClassify, DualInvarianceOverSmallPosets) {
  for (const auto& p : all_posets(letters(3))) {
    for (const auto& f : FinMap::all(p.carrier(), p.carrier())) {
      const OrderMapClass m = map_classify(f, p, p);
      EXPECT_EQ(m.flags.order_bijective, m.dual.order_bijective);
      EXPECT_TRUE(m.laws.all_passed());
    }
  }
}

TEST(Galois, IdentityAdjunction) {
  const Poset c3 = chain(3);
  const FinMap id = FinMap::identity(c3.carrier());
  const GaloisResult g = galois_check(id, id, c3, c3);
  EXPECT_TRUE(g.axioms);
  EXPECT_TRUE(g.comparable);
  EXPECT_TRUE(g.report.all_passed());
}

TEST(Galois, ImagePreimageOnPowersets) {
  const FinSet a{"a", "b"};
  const FinSet b{"x", "y"};
  const FinMap h(a, b, {{"a", "x"}, {"b", "x"}});
  const Poset pa = Poset::powerset(a);
  const Poset pb = Poset::powerset(b);
  auto image = FinMap::from_function(pa.carrier(), pb.carrier(), [&](const Symbol& s) {
    for (const auto& sub : a.subsets()) {
      if (to_string(sub) == s.str()) return Symbol(to_string(h.image(sub)));
    }
    throw std::logic_error("unknown subset");
  });
  auto preimage = FinMap::from_function(pb.carrier(), pa.carrier(), [&](const Symbol& s) {
    for (const auto& sub : b.subsets()) {
      if (to_string(sub) == s.str()) return Symbol(to_string(h.preimage(sub)));
    }
    throw std::logic_error("unknown subset");
  });
  EXPECT_TRUE(galois_check(image, preimage, pa, pb).report.all_passed());

  // Perturb g at one point: both formulations fail together.
  std::vector<std::size_t> vals = preimage.values();
  vals[pb.carrier().index_of("{x}")] = pa.carrier().index_of("{}");
  const FinMap bad(pb.carrier(), pa.carrier(), vals);
  const GaloisResult g = galois_check(image, bad, pa, pb);
  EXPECT_FALSE(g.axioms);
  EXPECT_FALSE(g.comparable);
  EXPECT_TRUE(g.report.passed("galois.equivalence"));
}

TEST(Galois, FormulationsNeverDisagreeExhaustive) {
  std::vector<Poset> posets;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& p : all_posets(letters(n))) posets.push_back(p);
  }
  std::size_t pairs = 0;
  for (const auto& p : posets) {
    for (const auto& q : posets) {
      for (const auto& f : FinMap::all(p.carrier(), q.carrier())) {
        for (const auto& g : FinMap::all(q.carrier(), p.carrier())) {
          const GaloisResult r = galois_check(f, g, p, q);
          ASSERT_EQ(r.axioms, r.comparable) << to_string(f) << " " << to_string(g);
          pairs += r.axioms;
        }
      }
    }
  }
  EXPECT_GT(pairs, 0u);
}

TEST(Bounds, SingletonDiamondAndAntichain) {
  const Poset d = diamond();
  const Bounds one = bounds(d, FinSet{"l"});
  EXPECT_EQ(one.sup, Symbol("l"));
  EXPECT_EQ(one.inf, Symbol("l"));
  const Bounds mid = bounds(d, FinSet{"l", "r"});
  EXPECT_EQ(mid.sup, Symbol("top"));
  EXPECT_EQ(mid.inf, Symbol("bot"));
  EXPECT_FALSE(mid.max.has_value());
  const Bounds anti = bounds(antichain2(), FinSet{"a", "b"});
  EXPECT_FALSE(anti.sup.has_value());
  EXPECT_TRUE(anti.upper.empty());
}

TEST(Bounds, EmptySetUsesMinimumOnlyWhenItExists) {
  EXPECT_EQ(bounds(diamond(), FinSet{}).sup, Symbol("bot"));
  EXPECT_EQ(bounds(diamond(), FinSet{}).inf, Symbol("top"));
  EXPECT_FALSE(bounds(antichain2(), FinSet{}).sup.has_value());
}

TEST(Bounds, SupremumInChainsCharacterisation) {
  // In a chain, x <= sup A iff some a in A has x <= a.
  for (std::size_t n = 1; n <= 6; ++n) {
    const Poset c = chain(n);
    for (const auto& a : c.carrier().subsets()) {
      if (a.empty()) continue;
      const Symbol s = *bounds(c, a).sup;
      EXPECT_EQ(s, *bounds(c, a).max);
      for (const auto& x : c.carrier()) {
        bool witness = false;
        for (const auto& y : a) witness = witness || (c.leq(x, y) && c.leq(y, s));
        EXPECT_EQ(c.leq(x, s), witness);
      }
    }
  }
}

TEST(Directed, Examples) {
  EXPECT_TRUE(is_directed(chain(4), chain(4).carrier()));
  const Poset pw = Poset::powerset(FinSet{"a", "b"});
  EXPECT_TRUE(is_directed(pw, pw.carrier()));
  EXPECT_FALSE(is_directed(antichain2(), FinSet{"a", "b"}));
  EXPECT_THROW(is_directed(antichain2(), FinSet{}), Error);
}

TEST(Directed, CriteriaAgreeExhaustive) {
  for (const auto& p : all_posets(letters(4))) {
    for (const auto& a : p.carrier().subsets()) {
      if (a.empty()) continue;
      const DirectedCheck d = directed_criteria(p, a);
      EXPECT_EQ(d.pairwise, d.finite_subsets);
    }
  }
}

TEST(Chains, AlreadyMaximalIsUnchanged) {
  const Poset c = chain(3);
  EXPECT_EQ(extend_chain(c, c.carrier()).elements, (std::vector<Symbol>{"0", "1", "2"}));
}

TEST(Chains, DiamondFromBottom) {
  const TotalChain t = extend_chain(diamond(), FinSet{"bot"});
  EXPECT_EQ(t.elements, (std::vector<Symbol>{"bot", "l", "top"}));
  EXPECT_THROW(extend_chain(antichain2(), FinSet{"a", "b"}), Error);
}

TEST(Zorn, MaximalOnEveryPosetUpToFive) {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : all_posets(letters(n))) {
      const Symbol m = zorn_maximal(p);
      ASSERT_TRUE(is_maximal_element(p, m));
      const TotalChain t = extend_chain(p, FinSet{});
      ASSERT_TRUE(is_maximal_chain(p, FinSet(t.elements)));
      ++count;
    }
  }
  // 1 + 3 + 19 + 219 + 4231 labeled posets.
  EXPECT_EQ(count, 4473u);
}

TEST(Zorn, EmptyPosetHasUnboundedEmptyChain) {
  try {
    zorn_maximal(Poset::discrete(FinSet{}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnboundedChain);
  }
}

TEST(Lattice, ChainTablesAreMaxMin) {
  const LatticeTables l = lattice_from_poset(chain(3));
  EXPECT_EQ(l.join("0", "2"), Symbol("2"));
  EXPECT_EQ(l.meet("1", "2"), Symbol("1"));
  EXPECT_TRUE(lattice_laws(l).all_passed());
}

TEST(Lattice, PowersetJoinIsUnion) {
  const LatticeTables l = lattice_from_poset(Poset::powerset(FinSet{"a", "b"}));
  EXPECT_EQ(l.join("{a}", "{b}"), Symbol("{a,b}"));
  EXPECT_EQ(l.meet("{a}", "{b}"), Symbol("{}"));
}

TEST(Lattice, AntichainIsNotALattice) {
  try {
    lattice_from_poset(antichain2());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotALattice);
    EXPECT_EQ(e.witness(), "(a,b)");
  }
}

TEST(Lattice, SucceedsIffPairwiseBoundsExistAndRoundTrips) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : all_posets(letters(n))) {
      bool oracle = true;
      for (const auto& x : p.carrier()) {
        for (const auto& y : p.carrier()) {
          const Bounds b = bounds(p, FinSet{x}.unite(FinSet{y}));
          oracle = oracle && b.sup && b.inf;
        }
      }
      bool built = true;
      try {
        const LatticeTables l = lattice_from_poset(p);
        ASSERT_TRUE(lattice_laws(l).all_passed());
        const LatticeTables back = lattice_from_dual_pair(l.join, l.meet);
        ASSERT_EQ(back.poset, p);
        ASSERT_EQ(order_from_semilattice(l.join, Orientation::join), p);
        ASSERT_EQ(order_from_semilattice(l.meet, Orientation::meet), p);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), Errc::NotALattice);
        built = false;
      }
      EXPECT_EQ(built, oracle);
    }
  }
}

TEST(Semilattice, MaxTableInducesChain) {
  const Poset c = chain(3);
  const OpTable max = lattice_from_poset(c).join;
  EXPECT_TRUE(semilattice_check(max).ok);
  EXPECT_EQ(order_from_semilattice(max, Orientation::join), c);
}

TEST(Semilattice, UnionIntersectionUnitsAreBounds) {
  const LatticeTables l = lattice_from_poset(Poset::powerset(FinSet{"a", "b"}));
  const LatticeTables d = lattice_from_dual_pair(l.join, l.meet);
  for (const auto& x : d.poset.carrier()) {
    EXPECT_EQ(d.join("{}", x), x);
    EXPECT_EQ(d.meet("{a,b}", x), x);
  }
}

TEST(Semilattice, GroupTableIsNotASemilattice) {
  const FinSet z2{"a", "e"};
  const OpTable t(z2, {{"e", "e", "e"}, {"e", "a", "a"}, {"a", "e", "a"}, {"a", "a", "e"}});
  const SemilatticeCheck sc = semilattice_check(t);
  EXPECT_FALSE(sc.ok);
  EXPECT_EQ(*sc.report.find("semilattice.idempotent")->witness, "a");
  try {
    order_from_semilattice(t, Orientation::join);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSemilattice);
  }
}

TEST(Semilattice, MismatchedPairIsRejected) {
  const Poset c = chain(2);
  const OpTable max = lattice_from_poset(c).join;
  // Using max as both join and meet breaks the dual-pair condition.
  try {
    lattice_from_dual_pair(max, max);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDualPair);
  }
}

TEST(Completeness, PowersetIsCompleteLattice) {
  const CompletenessReport r = completeness_report(Poset::powerset(FinSet{"a", "b"}));
  EXPECT_TRUE(r.complete_lattice);
  EXPECT_TRUE(r.laws.all_passed());
}

TEST(Completeness, AntichainIsDirectedCompleteOnly) {
  const CompletenessReport r = completeness_report(antichain2());
  EXPECT_TRUE(r.directed_complete);
  EXPECT_FALSE(r.complete_lattice);
  EXPECT_FALSE(r.complete_partial_order);
  EXPECT_FALSE(r.naturally_complete);
  EXPECT_TRUE(r.laws.all_passed());
}

TEST(Completeness, ChainHasEveryFlag) {
  const CompletenessReport r = completeness_report(chain(3));
  EXPECT_TRUE(r.directed_complete && r.complete_partial_order && r.naturally_complete && r.is_complete &&
              r.upper_bound_complete && r.lower_bound_complete && r.bounded_complete && r.complete_lattice);
}

TEST(Completeness, LawsHoldOnAllSmallPosets) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& p : all_posets(letters(n))) {
      const CompletenessReport r = completeness_report(p);
      EXPECT_TRUE(r.laws.all_passed());
    }
  }
}

TEST(PartialMaps, Counts) {
  const Poset one = partial_map_poset(FinSet{"a"});
  EXPECT_EQ(one.size(), 2u);
  EXPECT_TRUE(one.leq("{}", "{a->a}"));
  const Poset two = partial_map_poset(FinSet{"a", "b"});
  EXPECT_EQ(two.size(), 9u);
  EXPECT_EQ(bounds(two, two.carrier()).inf, Symbol("{}"));
  const CompletenessReport r = completeness_report(two);
  EXPECT_TRUE(r.complete_partial_order);
  EXPECT_TRUE(r.bounded_complete);
  EXPECT_THROW(partial_map_poset(FinSet::range(4)), Error);
}

TEST(PartialMaps, SupOfCompatibleFamilyIsMerge) {
  const Poset two = partial_map_poset(FinSet{"a", "b"});
  const Bounds b = bounds(two, FinSet{"{a->b}", "{b->b}"});
  EXPECT_EQ(b.sup, Symbol("{a->b,b->b}"));
  EXPECT_FALSE(bounds(two, FinSet{"{a->a}", "{a->b}"}).sup.has_value());
}

TEST(FunctorOrder, PointwiseOrder) {
  const Poset c3 = chain(3);
  const FinMap id = FinMap::identity(c3.carrier());
  EXPECT_EQ(functor_order({id}, c3, c3).size(), 1u);

  const FinMap bot = FinMap::constant(c3.carrier(), c3.carrier(), "0");
  const FinMap top = FinMap::constant(c3.carrier(), c3.carrier(), "2");
  const Poset fo = functor_order({bot, id, top}, c3, c3);
  EXPECT_TRUE(check_order(fo.relation()).partial);
  EXPECT_TRUE(fo.leq(Symbol(to_string(bot)), Symbol(to_string(id))));
  EXPECT_TRUE(fo.leq(Symbol(to_string(id)), Symbol(to_string(top))));

  // 0->1,1->1,2->1 and 0->0,1->2,2->2 cross.
  const FinMap flat = FinMap::constant(c3.carrier(), c3.carrier(), "1");
  const FinMap step(c3.carrier(), c3.carrier(), {{"0", "0"}, {"1", "2"}, {"2", "2"}});
  const Poset cross = functor_order({flat, step}, c3, c3);
  EXPECT_FALSE(cross.leq(Symbol(to_string(flat)), Symbol(to_string(step))));
  EXPECT_FALSE(cross.leq(Symbol(to_string(step)), Symbol(to_string(flat))));

  const FinMap rev(c3.carrier(), c3.carrier(), {{"0", "2"}, {"1", "1"}, {"2", "0"}});
  EXPECT_THROW(functor_order({rev}, c3, c3), Error);
}
