#include <gtest/gtest.h>

#include <random>

#include "structa/settools/filter.hpp"
#include "structa/settools/images.hpp"
#include "structa/settools/set_laws.hpp"
#include "structa/settools/sigma.hpp"

using namespace structa;
using namespace structa::settools;

namespace {

void expect_clean(const LawReport& r) {
  for (const auto& c : r.checks()) {
    EXPECT_TRUE(c.passed) << c.id << " witness " << c.witness.value_or("");
  }
}

const FinSet kAbc{"a", "b", "c"};

// Oracle: image computed element by element.
FinSet image_by_elements(const FinMap& f, const FinSet& a) {
  std::vector<Symbol> out;
  for (const auto& x : a) out.push_back(f(x));
  return FinSet::from_any(out);
}

// Oracle: filter test straight from the definition on FinSet values.
bool filter_oracle(const Family& f) {
  if (f.empty()) return false;
  const FinSet& c = f.carrier();
  for (const auto& m : f) {
    if (m.empty()) return false;
    for (const auto& s : c.subsets())
      if (m.subset_of(s) && !f.contains(s)) return false;
    for (const auto& g : f)
      if (!f.contains(m.intersect(g))) return false;
  }
  return true;
}

Family fam(const FinSet& c, std::vector<FinSet> m) { return Family(c, std::move(m)); }

}  // namespace

TEST(Power, ImageAgainstElementwiseOracle) {
  const FinSet cod{"p", "q"};
  for (const auto& f : FinMap::all(kAbc, cod)) {
    const FinMap pf = power_map(f);
    EXPECT_EQ(pf.dom().size(), 8u);
    for (const auto& a : kAbc.subsets()) {
      EXPECT_EQ(pf(Symbol(to_string(a))), Symbol(to_string(image_by_elements(f, a))));
    }
  }
}

TEST(Power, FunctorLaws) {
  const FinSet two{"p", "q"};
  const auto gs = FinMap::all(two, kAbc);
  for (const auto& f : FinMap::all(kAbc, two)) expect_clean(power_functor_check(f, gs));
  EXPECT_EQ(power_union_gap(FinSet{"a"}, FinSet{"b"}), std::optional<FinSet>(FinSet{"a", "b"}));
}

TEST(FamilyImages, SmallExample) {
  // f: a,b -> p ; c -> q
  const FinMap f(kAbc, FinSet{"p", "q", "r"}, {{"a", "p"}, {"b", "p"}, {"c", "q"}});
  const Family x = fam(kAbc, {{"a", "b"}, {"c"}});
  EXPECT_EQ(image_family(f, x), fam(f.cod(), {{"p"}, {"q"}}));
  // B with f^-1 B in X: {p}, {p,r}, {q}, {q,r}
  EXPECT_EQ(direct_image(f, x), fam(f.cod(), {{"p"}, {"p", "r"}, {"q"}, {"q", "r"}}));
  EXPECT_EQ(backward_fiber(f, FinSet{"p"}), fam(kAbc, {{"a"}, {"b"}, {"a", "b"}}));
  EXPECT_EQ(forward_fiber(f, FinSet{"c"}), fam(f.cod(), {{"q"}, {"q", "r"}}));
}

TEST(FamilyImages, LemmasExhaustiveOnSmallMaps) {
  // every map between carriers of size <= 2 against every pair of families
  const std::vector<FinSet> carriers = {FinSet{"a"}, FinSet{"a", "b"}};
  for (const auto& d : carriers)
    for (const auto& c : carriers) {
      const auto xs = all_families(d), ys = all_families(c);
      for (const auto& f : FinMap::all(d, c))
        for (const auto& x : xs)
          for (const auto& y : ys) expect_clean(family_image_laws(f, x, y));
    }
}

TEST(FamilyImages, LemmasOnThreePointMaps) {
  std::mt19937_64 rng(5);
  const auto xs = all_families(kAbc);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  std::size_t theorem_hits = 0;
  for (const auto& f : FinMap::all(kAbc, kAbc)) {
    for (int k = 0; k < 12; ++k) {
      const LawReport r = family_image_laws(f, xs[pick(rng)], xs[pick(rng)]);
      expect_clean(r);
      if (const auto* c = r.find("family.theorem_inverse"); c && c->instances > 0) ++theorem_hits;
    }
  }
  EXPECT_GT(theorem_hits, 0u);
}

TEST(SetLaws, RandomTriplesOnFivePoints) {
  const FinSet u = FinSet::range(5, "x");
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Mask> m(0, 31);
  for (int k = 0; k < 1000; ++k) {
    const FinSet a = FinSet::from_mask(u, m(rng)), b = FinSet::from_mask(u, m(rng)), c = FinSet::from_mask(u, m(rng));
    const Family x = Family::from_masks(u, {m(rng), m(rng), m(rng)});
    expect_clean(set_law_suite(a, b, c, x));
  }
}

TEST(SetLaws, DecreasingNest) {
  const FinSet u = FinSet::range(5, "x");
  const std::vector<FinSet> nest = {u, FinSet{"x0", "x1", "x2"}, FinSet{"x1", "x2"}, FinSet{"x2"}};
  const LawReport r = nest_laws(u, nest, NestKind::decreasing);
  expect_clean(r);
  EXPECT_TRUE(r.passed("nest.decreasing_meet"));
  try {
    nest_laws(u, nest, NestKind::increasing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidStructure);
  }
}

TEST(Sigma, GeneratedExamples) {
  const Family one = fam(kAbc, {{"a"}});
  EXPECT_EQ(sigma_generate(kAbc, one), fam(kAbc, {{}, {"a"}, {"b", "c"}, kAbc}));
  EXPECT_EQ(sigma_generate(kAbc, fam(kAbc, {})), fam(kAbc, {{}, kAbc}));
  EXPECT_TRUE(is_sigma_algebra(fam(kAbc, {{}, kAbc})));
  EXPECT_FALSE(is_sigma_algebra(fam(kAbc, {{"a"}, kAbc})));
  // 5 partitions of a 3-point set -> 5 sigma-algebras
  EXPECT_EQ(all_sigma_algebras(kAbc).size(), 5u);
  EXPECT_EQ(all_sigma_algebras(FinSet::range(4)).size(), 15u);
  try {
    sigma_closure(fam(FinSet::range(5), {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(Sigma, LawsOnThreePoints) {
  const LawReport r = sigma_laws(kAbc);
  expect_clean(r);
  EXPECT_EQ(r.find("sigma.intersection")->instances, 256u);
}

TEST(Filter, TwoPointCarrier) {
  const FinSet ab{"a", "b"};
  const auto fs = all_filters(ab);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(generated_filter(fam(ab, {{"a"}, {"a", "b"}})), point_filter(ab, "a"));
  EXPECT_EQ(point_filter(ab, "a"), fam(ab, {{"a"}, {"a", "b"}}));
}

TEST(Filter, EnumerationAgainstOracle) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const FinSet c = FinSet::range(n);
    std::vector<Family> expect;
    for (const auto& f : all_families(c))
      if (filter_oracle(f)) expect.push_back(f);
    auto got = all_filters(c);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expect) << n;
    // finite filters are principal: one per nonempty subset
    EXPECT_EQ(got.size(), (std::size_t{1} << n) - 1);
  }
  EXPECT_EQ(all_filters(FinSet::range(5)).size(), 31u);
}

TEST(Filter, OpsOnEveryFamilyOfThreePoints) {
  std::size_t bases = 0;
  for (const auto& f : all_families(kAbc)) {
    if (f.contains(FinSet{})) {
      EXPECT_THROW(filter_ops(f), Error);
      continue;
    }
    const FilterOps ops = filter_ops(f);
    EXPECT_EQ(ops.filter, filter_oracle(f));
    expect_clean(ops.laws);
    if (ops.base) {
      ++bases;
      EXPECT_TRUE(filter_oracle(*ops.generated));
    }
  }
  EXPECT_GT(bases, 7u);
}

TEST(Filter, EmptyMemberRejected) {
  try {
    generated_filter(fam(kAbc, {{}, {"a"}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyMemberInBase);
  }
}

TEST(Filter, Refinement) {
  expect_clean(refinement_laws(FinSet{"a", "b"}));
  const LawReport r = refinement_laws(kAbc);
  expect_clean(r);
  EXPECT_GT(r.find("refinement.transitive")->instances, 0u);
  EXPECT_TRUE(refines(fam(kAbc, {{"a", "b"}}), fam(kAbc, {{"a"}})));
  EXPECT_FALSE(refines(fam(kAbc, {{"a"}}), fam(kAbc, {{"a", "b"}})));
}

TEST(Filter, Ultrafilters) {
  for (std::size_t n = 1; n <= 5; ++n) expect_clean(ultrafilter_suite(FinSet::range(n)));
  EXPECT_TRUE(is_ultrafilter(point_filter(kAbc, "b")));
  EXPECT_FALSE(is_ultrafilter(principal_filter(kAbc, FinSet{"a", "b"})));
}

TEST(Filter, Transport) {
  const FinSet cod{"p", "q", "r"};
  const FinMap f(kAbc, cod, {{"a", "p"}, {"b", "p"}, {"c", "q"}});
  EXPECT_EQ(generated_image(f, point_filter(kAbc, "c")), point_filter(cod, "q"));
  try {
    filter_transport(f, fam(cod, {{"r"}}), Direction::backward);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MeetingConditionFailed);
    EXPECT_EQ(e.witness(), "{r}");
  }
  EXPECT_EQ(filter_transport(f, fam(cod, {{"p", "r"}}), Direction::backward), fam(kAbc, {{"a", "b"}}));
  for (const auto& g : FinMap::all(FinSet{"a", "b"}, kAbc)) expect_clean(transport_laws(g));
  for (const auto& g : FinMap::all(kAbc, FinSet{"a", "b"})) expect_clean(transport_laws(g));
}

TEST(Filter, DegenerateConstructions) {
  try {
    cofinite_filter(kAbc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Degenerate);
  }
  const order::Poset idx = order::Poset::chain({"0", "1", "2"});
  const FinMap net(idx.carrier(), kAbc, {{"0", "a"}, {"1", "b"}, {"2", "c"}});
  try {
    elementary_filter(net, idx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Degenerate);
  }
}

TEST(FamilyImages, MonicLemmaNeedsMembersInsideImage) {
  // without B <= Im f the reverse direction fails: A = f^-1 B yet fA is not in Y
  const FinMap f(FinSet{"a"}, FinSet{"a", "b"}, {{"a", "a"}});
  const Family y = fam(f.cod(), {{"a", "b"}});
  EXPECT_EQ(f.preimage(FinSet{"a", "b"}), FinSet{"a"});
  EXPECT_FALSE(direct_inverse_image(f, y).contains(FinSet{"a"}));
  expect_clean(family_image_laws(f, fam(f.dom(), {}), y));
}

TEST(Filter, EquivalentBasesGenerateSameFilter) {
  const Family b1 = fam(kAbc, {{"a"}, {"a", "b"}});
  const Family b2 = fam(kAbc, {{"a"}, {"a", "c"}});
  EXPECT_TRUE(refines(b1, b2));
  EXPECT_TRUE(refines(b2, b1));
  EXPECT_EQ(generated_filter(b1), generated_filter(b2));
}

TEST(Filter, CarrierFilterIsNotUltra) {
  const FinSet ab{"a", "b"};
  const Family top = fam(ab, {ab});
  EXPECT_TRUE(is_filter(top));
  EXPECT_FALSE(is_ultrafilter(top));
  // neither {a} nor its complement {b} belongs to {X}
  EXPECT_FALSE(top.contains(FinSet{"a"}) || top.contains(FinSet{"b"}));
  EXPECT_EQ(all_filters(FinSet{"a"}).size(), 1u);
}

TEST(Filter, IdentityTransport) {
  const FinMap id = FinMap::identity(kAbc);
  for (const auto& f : all_filters(kAbc)) {
    EXPECT_EQ(filter_transport(id, f, Direction::forward), f);
    EXPECT_EQ(filter_transport(id, f, Direction::backward), f);
  }
}
