#include <gtest/gtest.h>

#include <random>

#include "structa/top/closure.hpp"
#include "structa/top/space.hpp"

using namespace structa;
using namespace structa::top;

namespace {

void expect_clean(const LawReport& r) {
  for (const auto& c : r.checks()) {
    EXPECT_TRUE(c.passed) << c.id << " witness " << c.witness.value_or("");
  }
}

const FinSet kAb{"a", "b"};
const FinSet kAbc{"a", "b", "c"};

Family fam(const FinSet& c, std::vector<FinSet> m) { return Family(c, std::move(m)); }

// Oracle: topology axioms on FinSet values, every subfamily union checked.
bool topology_oracle(const Family& o) {
  const FinSet& c = o.carrier();
  if (!o.contains(FinSet{}) || !o.contains(c)) return false;
  const auto& m = o.members();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m.size()); ++pick) {
    FinSet u;
    for (std::size_t i = 0; i < m.size(); ++i)
      if ((pick >> i) & 1U) u = u.unite(m[i]);
    if (!o.contains(u)) return false;
  }
  for (const auto& a : m)
    for (const auto& b : m)
      if (!o.contains(a.intersect(b))) return false;
  return true;
}

// Oracle: count strict closure tables by scanning every table of P(X) -> P(X).
std::size_t strict_by_scan(std::size_t n) {
  const std::size_t rows = std::size_t{1} << n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rows; ++i) total *= rows;
  const FinSet c = FinSet::range(n);
  std::size_t count = 0;
  std::vector<Mask> t(rows);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t k = code;
    for (std::size_t i = 0; i < rows; ++i) {
      t[i] = k % rows;
      k /= rows;
    }
    if (t[0] != 0) continue;
    if (strict_closure(ClosureOp(c, t))) ++count;
  }
  return count;
}

}  // namespace

TEST(Closure, IdentityIsStrict) {
  for (std::size_t n = 0; n <= 4; ++n) expect_clean(closure_check(ClosureOp::identity(FinSet::range(n))));
}

TEST(Closure, OnlyDiscreteModelOnSmallCarriers) {
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(strict_by_scan(n), 1u) << n;
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto models = strict_closure_models(FinSet::range(n));
    ASSERT_EQ(models.size(), 1u) << n;
    EXPECT_EQ(models.front(), ClosureOp::identity(FinSet::range(n)));
  }
}

TEST(Closure, OnlyDiscreteModelThreePointsByScan) {
  EXPECT_EQ(strict_by_scan(3), 1u);
}

TEST(Closure, IdempotenceFailureHasWitness) {
  // Cl{a} = {a,b}, Cl{a,b} = {a,b,c}: not idempotent at {a}
  std::vector<Mask> t = {0, 3, 2, 7, 4, 7, 7, 7};
  const LawReport r = closure_check(ClosureOp(kAbc, t));
  EXPECT_FALSE(r.passed("closure.idempotent"));
  EXPECT_EQ(r.find("closure.idempotent")->witness.value_or(""), "{a}");
}

TEST(Closure, FromPairsNeedsTotalTable) {
  try {
    ClosureOp::from_pairs(kAb, {{FinSet{}, FinSet{}}, {FinSet{"a"}, FinSet{"a"}}, {kAb, kAb}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidStructure);
    EXPECT_EQ(e.witness(), "{b}");
  }
}

TEST(ClosedFamily, Sierpinski) {
  const Family c = fam(kAb, {{}, {"b"}, kAb});
  const ClosureOp cl = closure_from_closed(kAb, c);
  EXPECT_EQ(cl(FinSet{"a"}), kAb);
  EXPECT_EQ(cl(FinSet{"b"}), FinSet{"b"});
  const LawReport r = closed_family_laws(kAb, c);
  expect_clean(r);
  EXPECT_FALSE(r.warnings().empty());
}

TEST(ClosedFamily, AllSubsetsGiveIdentity) {
  EXPECT_EQ(closure_from_closed(kAbc, Family(kAbc, kAbc.subsets())), ClosureOp::identity(kAbc));
}

TEST(ClosedFamily, RejectsNonClosedFamilies) {
  try {
    closure_from_closed(kAbc, fam(kAbc, {{}, {"a", "b"}, {"b", "c"}, kAbc}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotClosedFamily);
    EXPECT_EQ(e.witness(), "({a,b},{b,c})");
  }
  EXPECT_THROW(closure_from_closed(kAb, fam(kAb, {kAb})), Error);
}

TEST(ClosedFamily, FixedPointsAreInputExhaustively) {
  for (const auto& t : all_topologies(kAbc)) {
    const Family closed = open_duality(t);
    expect_clean(closed_family_laws(kAbc, closed));
    EXPECT_EQ(closure_from_closed(kAbc, closed).closed_sets(), closed);
  }
}

TEST(Topology, CountsAgainstOracle) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const FinSet c = FinSet::range(n);
    std::size_t expect = 0;
    for (const auto& f : all_families(c)) expect += topology_oracle(f) ? 1 : 0;
    EXPECT_EQ(all_topologies(c).size(), expect) << n;
  }
  EXPECT_EQ(all_topologies(kAbc).size(), 29u);
  EXPECT_EQ(all_topologies(FinSet::range(4)).size(), 355u);
}

TEST(Topology, LawsOnEveryThreePointTopology) {
  for (const auto& t : all_topologies(kAbc)) expect_clean(topology_laws(t));
  EXPECT_THROW(make_topology(kAb, fam(kAb, {{}, {"a"}})), Error);
}

TEST(Topology, Neighborhoods) {
  const Topology sierpinski = make_topology(kAb, fam(kAb, {{}, {"b"}, kAb}));
  EXPECT_EQ(neighborhoods(sierpinski, "a"), fam(kAb, {kAb}));
  EXPECT_EQ(neighborhoods(sierpinski, "b"), fam(kAb, {{"b"}, kAb}));
  const Topology d = discrete_topology(kAbc);
  EXPECT_EQ(neighborhoods(d, "a").size(), 4u);
  const Topology i = indiscrete_topology(kAbc);
  EXPECT_EQ(neighborhoods(i, "c"), fam(kAbc, {kAbc}));
  EXPECT_TRUE(point_base_check(sierpinski, "b", fam(kAb, {{"b"}})));
  EXPECT_FALSE(point_base_check(sierpinski, "b", fam(kAb, {kAb})));
}

TEST(Base, Singletons) {
  const BaseOps ops = base_ops(kAbc, fam(kAbc, {{"a"}, {"b"}, {"c"}}));
  EXPECT_EQ(ops.topology, discrete_topology(kAbc));
  EXPECT_EQ(ops.closure, ClosureOp::identity(kAbc));
  EXPECT_TRUE(ops.is_base);
  expect_clean(ops.criterion);
}

TEST(Base, TwoOverlappingSets) {
  const BaseOps ops = base_ops(kAbc, fam(kAbc, {{"a", "b"}, {"b", "c"}}));
  EXPECT_EQ(ops.topology.open_sets, fam(kAbc, {{}, {"b"}, {"a", "b"}, {"b", "c"}, kAbc}));
  EXPECT_EQ(ops.closure(FinSet{"a"}), FinSet{"a"});
  // {b} is open but no member sits inside it
  EXPECT_FALSE(ops.is_base);
  expect_clean(ops.criterion);
}

TEST(Base, NotCovering) {
  try {
    base_ops(kAbc, fam(kAbc, {{"a", "b"}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCovering);
    EXPECT_EQ(e.witness(), "c");
  }
}

TEST(Base, EquivalenceOnEveryThreePointTopology) {
  for (const auto& t : all_topologies(kAbc)) {
    const BaseOps ops = base_ops(kAbc, t.open_sets);
    ASSERT_TRUE(ops.is_base);
    expect_clean(ops.criterion);
    EXPECT_EQ(ops.topology, t);
    EXPECT_EQ(ops.closure, closure_from_closed(kAbc, open_duality(t)));
  }
}

TEST(Base, EquivalenceSampledOnFourPoints) {
  const FinSet c = FinSet::range(4);
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<Mask> m(1, 15);
  std::size_t bases = 0;
  for (int k = 0; k < 300; ++k) {
    std::vector<Mask> ms = {m(rng), m(rng), m(rng), m(rng), 15};
    const BaseOps ops = base_ops(c, Family::from_masks(c, ms));
    expect_clean(ops.criterion);
    if (ops.is_base) {
      ++bases;
      EXPECT_EQ(ops.closure, closure_from_closed(c, open_duality(ops.topology)));
    }
  }
  EXPECT_GT(bases, 10u);
}
