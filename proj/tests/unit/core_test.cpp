#include <gtest/gtest.h>

#include <map>
#include <random>

#include "structa/core/functions.hpp"

using namespace structa;

namespace {

FinMap map_of(const FinSet& dom, const FinSet& cod, std::vector<std::pair<Symbol, Symbol>> pairs) {
  return FinMap(dom, cod, pairs);
}

FinSet carrier(std::size_t n) {
  static const char* names[] = {"a", "b", "c", "d", "e"};
  std::vector<Symbol> v(names, names + n);
  return FinSet(v);
}

}  // namespace

TEST(FinSet, RejectsDuplicatesAndWhitespace) {
  EXPECT_THROW(FinSet({"a", "a"}), Error);
  EXPECT_THROW(Symbol("a b"), Error);
  EXPECT_THROW(Symbol(""), Error);
  const FinSet s{"c", "a", "b"};
  EXPECT_EQ(s[0], Symbol("a"));
  EXPECT_EQ(s[2], Symbol("c"));
}

TEST(FinMap, RejectsPartialAndOutOfRangeTables) {
  const FinSet ab{"a", "b"};
  try {
    FinMap(ab, ab, {{"a", "b"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotTotal);
    EXPECT_EQ(e.witness(), "b");
  }
  EXPECT_THROW(FinMap(ab, ab, {{"a", "b"}, {"b", "z"}}), Error);
}

TEST(Compose, IdentityAndConstant) {
  const FinSet ab{"a", "b"};
  const FinMap f = map_of(ab, ab, {{"a", "b"}, {"b", "b"}});
  EXPECT_EQ(compose(FinMap::identity(ab), f), f);
  EXPECT_EQ(compose(f, FinMap::identity(ab)), f);

  const FinMap to_one = FinMap::constant(ab, FinSet{"1"}, "1");
  const FinMap to_z = FinMap::constant(FinSet{"1"}, FinSet{"z"}, "z");
  EXPECT_EQ(compose(to_z, to_one), FinMap::constant(ab, FinSet{"z"}, "z"));
}

TEST(Compose, StrictRejectsMismatch) {
  const FinMap f = FinMap::identity(FinSet{"a"});
  const FinMap g = FinMap::identity(FinSet{"b"});
  try {
    compose(g, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CompositionMismatch);
  }
}

TEST(Compose, GeneralModeRestrictsDomain) {
  // f: {a,b,c} -> {x,y,z}; g defined on {x,y} only.
  const FinMap f = map_of(FinSet{"a", "b", "c"}, FinSet{"x", "y", "z"}, {{"a", "x"}, {"b", "z"}, {"c", "y"}});
  const FinMap g = map_of(FinSet{"x", "y"}, FinSet{"1"}, {{"x", "1"}, {"y", "1"}});
  const FinMap gf = compose(g, f, ComposeMode::general);
  EXPECT_EQ(gf.dom(), (FinSet{"a", "c"}));
  EXPECT_EQ(gf("a"), Symbol("1"));
}

TEST(Compose, MatchesPointwiseOracleOnRandomMaps) {
  std::mt19937 rng(7);
  const FinSet s = carrier(5);
  std::uniform_int_distribution<std::size_t> pick(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> fv(5), gv(5);
    for (auto& v : fv) v = pick(rng);
    for (auto& v : gv) v = pick(rng);
    const FinMap f(s, s, fv), g(s, s, gv);
    const FinMap gf = compose(g, f);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(gf.at(i), gv[fv[i]]);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(FinMap::identity(carrier(3))), (Classification{true, true, true}));
  EXPECT_EQ(classify(FinMap::constant(FinSet{"a", "b"}, FinSet{"z"}, "z")), (Classification{false, true, false}));
}

TEST(Classify, AllMapsThreeToThreeMatchFiberCountOracle) {
  const FinSet dom{"a", "b", "c"};
  const FinSet cod{"x", "y", "z"};
  const auto maps = FinMap::all(dom, cod);
  ASSERT_EQ(maps.size(), 27u);
  std::size_t bijections = 0;
  for (const auto& f : maps) {
    std::map<Symbol, int> fibre;
    for (const auto& x : dom) ++fibre[f(x)];
    bool monic = true;
    for (auto& [_, n] : fibre) monic = monic && n <= 1;
    const bool onto = fibre.size() == cod.size();
    const Classification c = classify(f);
    EXPECT_EQ(c.monic, monic);
    EXPECT_EQ(c.onto, onto);
    EXPECT_EQ(c.bijective, monic && onto);
    bijections += c.bijective;
  }
  EXPECT_EQ(bijections, 6u);
}

TEST(Inverses, SwapIsSelfInverse) {
  const FinSet ab{"a", "b"};
  const FinMap swap = map_of(ab, ab, {{"a", "b"}, {"b", "a"}});
  EXPECT_EQ(inverse(swap), swap);
}

TEST(Inverses, LeftInverseUsesLeastDomainElementOffImage) {
  const FinMap f = map_of(FinSet{"a"}, FinSet{"x", "y"}, {{"a", "x"}});
  const FinMap l = left_inverse(f);
  EXPECT_EQ(l("x"), Symbol("a"));
  EXPECT_EQ(l("y"), Symbol("a"));
  EXPECT_EQ(compose(l, f), FinMap::identity(f.dom()));
}

TEST(Inverses, RightInverseSelectsLexicographicallyLeast) {
  const FinMap f = FinMap::constant(FinSet{"a", "b"}, FinSet{"z"}, "z");
  const FinMap r = right_inverse(f);
  EXPECT_EQ(r("z"), Symbol("a"));
  EXPECT_EQ(compose(f, r), FinMap::identity(f.cod()));
}

TEST(Inverses, ErrorsNameTheMissingProperty) {
  const FinMap constant = FinMap::constant(FinSet{"a", "b"}, FinSet{"z"}, "z");
  const FinMap inclusion = FinMap::inclusion(FinSet{"a"}, FinSet{"a", "b"});
  EXPECT_THROW(left_inverse(constant), Error);
  EXPECT_THROW(right_inverse(inclusion), Error);
  try {
    inverse(constant);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotBijective);
  }
}

TEST(Inverses, BijectiveIffInverseSucceedsExhaustive) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      for (const auto& f : FinMap::all(carrier(n), FinSet::range(m, "y"))) {
        const bool bij = classify(f).bijective;
        bool ok = true;
        try {
          const FinMap g = inverse(f);
          ok = compose(g, f) == FinMap::identity(f.dom()) && compose(f, g) == FinMap::identity(f.cod());
        } catch (const Error&) {
          ok = false;
        }
        EXPECT_EQ(ok, bij) << to_string(f);
      }
    }
  }
}

TEST(Select, ForcedAndLexicographic) {
  const FinSet abc{"a", "b", "c"};
  const FinMap s1 = select(Family(abc, {FinSet{"b"}, FinSet{"c"}}));
  EXPECT_EQ(s1("{b}"), Symbol("b"));
  const FinMap s2 = select(Family(abc, {FinSet{"a", "b"}, FinSet{"b", "c"}}));
  EXPECT_EQ(s2("{a,b}"), Symbol("a"));
  EXPECT_EQ(s2("{b,c}"), Symbol("b"));
  EXPECT_THROW(select(Family(abc, {FinSet{}})), Error);
}

TEST(ImageCalculus, MonicPreimageOfImage) {
  const FinMap f = map_of(FinSet{"a", "b"}, FinSet{"x", "y", "z"}, {{"a", "x"}, {"b", "z"}});
  for (const auto& a : f.dom().subsets()) EXPECT_EQ(f.preimage(f.image(a)), a);
}

TEST(ImageCalculus, CollapseInflates) {
  const FinMap f = FinMap::constant(FinSet{"a", "b"}, FinSet{"z"}, "z");
  EXPECT_EQ(f.preimage(f.image(FinSet{"a"})), (FinSet{"a", "b"}));
  const LawReport r = image_calculus(f, FinSet{"a"}, FinSet{"z"}, Family(f.dom(), {FinSet{"a"}}));
  EXPECT_TRUE(r.all_passed());
}

TEST(ImageCalculus, RejectsWrongCarrier) {
  const FinMap f = FinMap::identity(FinSet{"a"});
  try {
    image_calculus(f, FinSet{"q"}, FinSet{}, Family(f.dom(), {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CarrierMismatch);
  }
}

TEST(Fiber, IdentityAndConstant) {
  const FinSet abc = carrier(3);
  for (const auto& x : abc) EXPECT_EQ(fiber(FinMap::identity(abc), x), FinSet{x});
  const Partition p = fiber_partition(FinMap::constant(abc, FinSet{"z"}, "z"));
  ASSERT_EQ(p.blocks.size(), 1u);
  EXPECT_EQ(p.blocks[0].size(), 3u);
  EXPECT_THROW(fiber(FinMap::identity(abc), "q"), Error);
}

TEST(Fiber, UnionOfFibersForMonicMapsExhaustive) {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (const auto& f : FinMap::all(carrier(n), FinSet::range(m, "y"))) {
        EXPECT_TRUE(fiber_union_law(f).all_passed()) << to_string(f);
      }
    }
  }
}

TEST(Decompose, BijectionAndConstant) {
  const FinSet abc = carrier(3);
  const Decomposition id = decompose(FinMap::identity(abc));
  EXPECT_EQ(id.projection.cod().size(), 3u);
  EXPECT_EQ(id.inclusion, FinMap::identity(abc));

  const Decomposition k = decompose(FinMap::constant(abc, FinSet{"y", "z"}, "z"));
  EXPECT_EQ(k.bijection.dom().size(), 1u);
  EXPECT_TRUE(classify(k.bijection).bijective);
}

TEST(Decompose, RecomposesExhaustivelyUpToFour) {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      for (const auto& f : FinMap::all(carrier(n), FinSet::range(m, "y"))) {
        const Decomposition d = decompose(f);
        EXPECT_TRUE(classify(d.projection).onto);
        EXPECT_TRUE(classify(d.bijection).bijective);
        EXPECT_TRUE(classify(d.inclusion).monic);
        EXPECT_EQ(d.recompose(), f);
        ++count;
      }
    }
  }
  EXPECT_EQ(count, 499u);  // sum over n,m <= 4 of m^n
}

TEST(Fold, SingletonMaxAndPower) {
  const FinSet chain{"1", "2", "3"};
  const OpTable max = OpTable::from_function(chain, [](const Symbol& a, const Symbol& b) { return std::max(a, b); });
  EXPECT_EQ(fold(max, {"2"}).result, Symbol("2"));
  const FoldResult r = fold(max, {"1", "3", "2"});
  EXPECT_EQ(r.result, Symbol("3"));
  EXPECT_EQ(r.partials, (std::vector<Symbol>{"1", "3", "3"}));
  EXPECT_THROW(fold(max, {}), Error);

  // Z3 multiplication written additively: a^3 by repeated multiply.
  const FinSet z3{"0", "1", "2"};
  const OpTable add = OpTable::from_function(z3, [](const Symbol& a, const Symbol& b) {
    return Symbol(std::to_string((std::stoi(a.str()) + std::stoi(b.str())) % 3));
  });
  for (const auto& a : z3) {
    const Symbol cube = add(add(a, a), a);
    EXPECT_EQ(fold(add, {a, a, a}).result, cube);
  }
}

TEST(Fold, AssociativeConcatenation) {
  const FinSet z4 = FinSet::range(4);
  const OpTable add = OpTable::from_function(z4, [](const Symbol& a, const Symbol& b) {
    return Symbol(std::to_string((std::stoi(a.str()) + std::stoi(b.str())) % 4));
  });
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, 3), len(1, 6);
  for (int t = 0; t < 200; ++t) {
    std::vector<Symbol> s(len(rng)), u(len(rng));
    for (auto& x : s) x = z4[pick(rng)];
    for (auto& x : u) x = z4[pick(rng)];
    std::vector<Symbol> su = s;
    su.insert(su.end(), u.begin(), u.end());
    EXPECT_EQ(fold(add, su).result, add(fold(add, s).result, fold(add, u).result));
  }
}

TEST(Endo, Identity) {
  const FinSet abc = carrier(3);
  const EndoReport r = endo_analyze(FinMap::identity(abc));
  EXPECT_EQ(r.invariant_points, abc);
  EXPECT_TRUE(r.once_effective);
  EXPECT_FALSE(r.stabilizes_at.has_value());
}

TEST(Endo, CollapseOntoFixedPoint) {
  const FinSet ab{"a", "b"};
  const EndoReport r = endo_analyze(map_of(ab, ab, {{"a", "b"}, {"b", "b"}}));
  EXPECT_TRUE(r.once_effective);
  ASSERT_TRUE(r.stabilizes_at.has_value());
  EXPECT_EQ(*r.stabilizes_at, Symbol("b"));
  ASSERT_TRUE(r.nilpotent_at.has_value());
  EXPECT_EQ(r.nilpotent_at->first, Symbol("b"));
  // f itself is already constant: the least exponent is 1.
  EXPECT_EQ(r.nilpotent_at->second, 1u);
}

TEST(Endo, ChainNeedsSeveralSteps) {
  const FinSet abc = carrier(3);
  const EndoReport r = endo_analyze(map_of(abc, abc, {{"a", "b"}, {"b", "c"}, {"c", "c"}}));
  EXPECT_FALSE(r.once_effective);
  EXPECT_EQ(r.stabilizes_at, Symbol("c"));
  EXPECT_EQ(r.nilpotent_at->second, 2u);
}

TEST(Endo, ThreeCycle) {
  const FinSet abc = carrier(3);
  const EndoReport r = endo_analyze(map_of(abc, abc, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  EXPECT_TRUE(r.invariant_points.empty());
  EXPECT_FALSE(r.once_effective);
  EXPECT_FALSE(r.nilpotent_at.has_value());
  EXPECT_EQ(r.iterates.size(), 3u);
  EXPECT_EQ(r.iterates[2], FinMap::identity(abc));
}

TEST(Endo, OnceEffectiveIteratesAreConstantOnImage) {
  const FinSet s = carrier(4);
  for (const auto& f : FinMap::all(s, s)) {
    const EndoReport r = endo_analyze(f);
    if (!r.once_effective) continue;
    const FinSet im = f.image();
    for (const auto& it : r.iterates) EXPECT_EQ(it.restrict_to(im), f.restrict_to(im));
  }
}

TEST(NaturalPair, IdentityNegationAndPerturbed) {
  const FinSet ab{"a", "b"};
  const FinMap id = FinMap::identity(ab);
  EXPECT_TRUE(natural_pair_check(id, id, id, id).all_passed());

  // Doubling on a window, negation on both sides.
  const FinSet w{"-1", "0", "1"};
  const FinSet w2{"-2", "0", "2"};
  auto neg = [](const Symbol& s) {
    const int v = std::stoi(s.str());
    return Symbol(std::to_string(-v));
  };
  auto dbl = [](const Symbol& s) { return Symbol(std::to_string(2 * std::stoi(s.str()))); };
  const FinMap doubling = FinMap::from_function(w, w2, dbl);
  const FinMap negate = FinMap::from_function(w, w, neg);
  const FinMap negate2 = FinMap::from_function(w2, w2, neg);
  EXPECT_TRUE(natural_pair_check(doubling, doubling, negate, negate2).all_passed());

  const FinMap perturbed = map_of(w, w2, {{"-1", "-2"}, {"0", "2"}, {"1", "2"}});
  const LawReport r = natural_pair_check(doubling, perturbed, negate, negate2);
  EXPECT_FALSE(r.all_passed());
  EXPECT_EQ(r.find("natural_pair.square")->witness, std::string("x=0"));

  const FinMap not_onto = FinMap::constant(w, w, "0");
  EXPECT_THROW(natural_pair_check(doubling, doubling, not_onto, negate2), Error);
}

TEST(LawReportTest, KeepsLeastWitnessRegardlessOfOrder) {
  LawReport a, b;
  a.record("x", "", false, "w2");
  a.record("x", "", false, "w1");
  b.record("x", "", false, "w1");
  b.record("x", "", false, "w2");
  EXPECT_EQ(a.checks(), b.checks());
  EXPECT_EQ(*a.find("x")->witness, "w1");
}
