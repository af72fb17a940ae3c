#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "structa/category/hom.hpp"
#include "structa/category/natural.hpp"
#include "structa/cli/samples.hpp"
#include "structa/core/functions.hpp"
#include "structa/group/action.hpp"
#include "structa/group/catalog.hpp"
#include "structa/group/hom.hpp"
#include "structa/numbers/integers.hpp"
#include "structa/numbers/rationals.hpp"
#include "structa/order/lattice.hpp"
#include "structa/order/maps.hpp"
#include "structa/settools/filter.hpp"
#include "structa/settools/sigma.hpp"
#include "structa/top/space.hpp"

namespace structa::cli {

struct SuiteOptions {
  std::size_t max_size = 0;  // 0: the sizes the criteria call for; otherwise a cap
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
};

struct SuiteInfo {
  const char* name;
  int criterion;  // 0 for the aggregate
  const char* summary;
};

inline const std::vector<SuiteInfo>& suite_list() {
  static const std::vector<SuiteInfo> s = {
      {"functions", 1, "image/preimage laws, fibers and decomposition for every map between carriers of size <= 3"},
      {"categories", 2, "constructors on seed categories pass the category laws; planted associativity defects are found"},
      {"interchange", 3, "random 2x2 grids of natural transformations satisfy the interchange law"},
      {"yoneda", 4, "Nat(L_a, F) against F a, the inverse of phi, and the embedding"},
      {"integers", 5, "addition by composing shifts, product by recursion, ring laws"},
      {"rationals", 6, "order, both groups and the embedding of the integers on a grid"},
      {"lattices", 7, "lattice tables from every poset on <= 4 points"},
      {"zorn", 8, "maximal elements and maximal chains on every poset on <= 5 points"},
      {"groups", 9, "subgroup and normality criteria, first isomorphism theorem, S3 facts"},
      {"actions", 10, "coset actions and stabilizers of S3"},
      {"filters", 11, "ultrafilters, generated filters and refinement on carriers of size <= 4"},
      {"sigma", 12, "generated sigma-algebras on three points"},
      {"topology", 13, "topologies on three points, bases and closures, strict closure models"},
      {"all", 0, "every suite above"},
  };
  return s;
}

using SuiteTask = std::function<LawReport()>;

// Runs the tasks on `jobs` threads; results merge in task order, so the
// report does not depend on scheduling.
inline LawReport run_tasks(const std::string& name, const std::vector<SuiteTask>& tasks, std::size_t jobs) {
  std::vector<LawReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  LawReport out(name);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.merge(results[i]);
  }
  return out;
}

namespace detail {

inline std::size_t cap(const SuiteOptions& o, std::size_t dflt) { return o.max_size ? std::min(o.max_size, dflt) : dflt; }

// Per-task seeds derived from the suite seed.
inline std::uint64_t task_seed(std::uint64_t seed, std::uint64_t i) {
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(i)};
  std::uint64_t out[1];
  std::uint32_t w[2];
  s.generate(w, w + 2);
  out[0] = (std::uint64_t{w[0]} << 32) | w[1];
  return out[0];
}

// --- functions --------------------------------------------------------------

inline std::vector<SuiteTask> functions_tasks(const SuiteOptions& o) {
  std::vector<SuiteTask> t;
  const std::size_t m = cap(o, 3);
  for (std::size_t a = 0; a <= m; ++a) {
    for (std::size_t b = 0; b <= m; ++b) {
      t.push_back([a, b] {
        const FinSet dom = FinSet::range(a, "x"), cod = FinSet::range(b, "y");
        LawReport r("functions");
        const auto dsubs = dom.subsets(), csubs = cod.subsets();
        const auto dfams = all_families(dom), cfams = all_families(cod);
        for (const auto& f : FinMap::all(dom, cod)) {
          // every (A, B); then every family over either side, with (A, B) rotating
          for (const auto& s : dsubs)
            for (const auto& u : csubs) r.merge(image_calculus(f, s, u, Family(dom, {s})));
          for (std::size_t i = 0; i < dfams.size(); ++i)
            r.merge(image_calculus(f, dsubs[i % dsubs.size()], csubs[i % csubs.size()], dfams[i]));
          for (std::size_t i = 0; i < cfams.size(); ++i)
            r.merge(image_calculus(f, dsubs[i % dsubs.size()], csubs[i % csubs.size()], cfams[i]));
          r.merge(fiber_union_law(f));
          r.record("functions.decompose_recompose", "f = inclusion . bijection . projection", decompose(f).recompose() == f,
                   to_string(f));
        }
        return r;
      });
    }
  }
  return t;
}

// --- categories -------------------------------------------------------------

// Least failing (h,g,f) by direct scan of the composition table.
inline std::string least_assoc_failure(const category::FinCat& c) {
  std::string least;
  const std::size_t na = c.num_arrows();
  for (std::size_t h = 0; h < na; ++h)
    for (std::size_t g = 0; g < na; ++g)
      for (std::size_t f = 0; f < na; ++f) {
        if (!c.composable(h, g) || !c.composable(g, f)) continue;
        const std::size_t hg = c.comp(h, g), gf = c.comp(g, f);
        if (hg == category::kNone || gf == category::kNone || c.comp(hg, f) != c.comp(h, gf)) {
          const std::string w = "(" + c.arrow_name(h).str() + "," + c.arrow_name(g).str() + "," + c.arrow_name(f).str() + ")";
          if (least.empty() || w < least) least = w;
        }
      }
  return least;
}

inline LawReport negative_fixture_laws(const std::string& name, const category::FinCat& c) {
  LawReport r("negative");
  const LawReport chk = category::check_category(c);
  const std::string oracle = least_assoc_failure(c);
  const auto* a = chk.find("category.associative");
  r.record("negative.defect_found", "the planted associativity defect is reported", a && !a->passed && !oracle.empty(), name);
  r.record("negative.witness_least", "the reported witness is the least failing triple",
           a && a->witness && *a->witness == oracle, name + " " + oracle);
  bool only = true;
  for (const auto& x : chk.checks()) only = only && (x.passed || x.id == "category.associative");
  r.record("negative.only_associativity", "no other category law fails", only, name);
  return r;
}

inline std::vector<SuiteTask> categories_tasks(const SuiteOptions&) {
  std::vector<SuiteTask> t;
  for (auto& [name, c] : samples::seed_categories()) {
    t.push_back([c = c] {
      using namespace category;
      LawReport r("categories");
      r.merge(check_category(c), "seed");
      r.merge(check_category(opposite_cat(c)), "opposite");
      r.merge(check_category(product_cat(c, samples::chain(2))), "product");
      const Functor id = identity_functor(c);
      r.merge(check_category(bridge_category(identity_nat(id)).first), "bridge");
      r.merge(check_category(arrow_category(id, id).cat), "arrow");
      if (c.num_arrows() <= 10) r.merge(check_category(functor_category(c, samples::chain(2)).cat), "functor_category");
      if (c.num_arrows() <= 4) r.merge(check_category(functor_category(samples::chain(2), c).cat), "functor_category");
      return r;
    });
  }
  // functor categories between seeds with several objects
  t.push_back([] {
    using namespace category;
    LawReport r("categories");
    r.merge(check_category(functor_category(samples::chain(2), samples::diamond()).cat), "functor_category");
    r.merge(check_category(functor_category(samples::parallel3(), samples::chain(2)).cat), "functor_category");
    r.merge(check_category(functor_category(samples::cyclic(2), samples::cyclic(3)).cat), "functor_category");
    return r;
  });
  for (auto& [name, c] : samples::negative_categories()) {
    t.push_back([name = name, c = c] { return negative_fixture_laws(name, c); });
  }
  return t;
}

// --- interchange ------------------------------------------------------------

struct GridPool {
  category::FunctorCategory cd, de;
};

inline const std::vector<GridPool>& grid_pools() {
  static const std::vector<GridPool> pools = [] {
    using samples::chain;
    std::vector<std::array<category::FinCat, 3>> shapes = {
        {chain(2), chain(3), samples::diamond()},
        {chain(2), chain(2), chain(3)},
        {samples::cyclic(2), samples::cyclic(2), samples::cyclic(2)},
        {category::discrete(samples::letters(2)), chain(2), samples::parallel3()},
        {chain(3), samples::idempotent3(), chain(2)},
        {samples::cyclic(2), samples::idempotent3(), samples::cyclic(2)},
    };
    std::vector<GridPool> out;
    for (const auto& s : shapes) out.push_back({category::functor_category(s[0], s[1]), category::functor_category(s[1], s[2])});
    return out;
  }();
  return pools;
}

inline std::vector<SuiteTask> interchange_tasks(const SuiteOptions& o) {
  std::vector<SuiteTask> t;
  const std::size_t per_task = 100;
  for (std::size_t k = 0; k < 12; ++k) {
    t.push_back([k, seed = task_seed(o.seed, k)] {
      const auto& pool = grid_pools()[k % grid_pools().size()];
      std::mt19937_64 rng(seed);
      LawReport r("interchange");
      auto pick_pair = [&](const category::FunctorCategory& fc) {
        std::uniform_int_distribution<std::size_t> any(0, fc.nats.size() - 1);
        const std::size_t first = any(rng);
        std::vector<std::size_t> next;
        for (std::size_t s = 0; s < fc.nats.size(); ++s)
          if (fc.cat.src(s) == fc.cat.tgt(first)) next.push_back(s);
        std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
        return std::pair{first, next[pick(rng)]};  // never empty: identities exist
      };
      for (std::size_t i = 0; i < per_task; ++i) {
        const auto [tau, sigma] = pick_pair(pool.cd);
        const auto [alpha, beta] = pick_pair(pool.de);
        r.merge(category::interchange_check(pool.de.nats[alpha], pool.de.nats[beta], pool.cd.nats[sigma], pool.cd.nats[tau]));
      }
      return r;
    });
  }
  return t;
}

// --- yoneda -----------------------------------------------------------------

inline std::vector<std::pair<std::string, category::FinCat>> yoneda_corpus(const SuiteOptions& o) {
  std::vector<std::pair<std::string, category::FinCat>> out;
  for (std::size_t n = 1; n <= cap(o, 4); ++n) out.emplace_back("chain" + std::to_string(n), samples::chain(n));
  for (std::size_t n = 1; n <= cap(o, 4); ++n) out.emplace_back("Z" + std::to_string(n), samples::cyclic(n));
  out.emplace_back("parallel3", samples::parallel3());
  out.emplace_back("idempotent3", samples::idempotent3());
  return out;
}

// Hom functors, a constant two-point functor, and (on one-object categories)
// the action swapping p and q through the sign of the arrow index.
inline std::vector<category::SetRepr> set_functors(const category::FinCat& c) {
  using category::SetRepr;
  std::vector<SetRepr> out;
  for (std::size_t x = 0; x < c.num_objects(); ++x) out.push_back(category::hom_covariant(c, x));
  const FinSet two{"p", "q"};
  SetRepr k{c, std::vector<FinSet>(c.num_objects(), two), std::vector<FinMap>(c.num_arrows(), FinMap::identity(two))};
  out.push_back(k);
  if (c.num_objects() == 1 && c.num_arrows() % 2 == 0) {
    // Z_{2m} -> Z_2 by parity, acting on {p,q,r} by swapping p and q
    const FinSet s{"p", "q", "r"};
    const FinMap swap(s, s, {{"p", "q"}, {"q", "p"}, {"r", "r"}});
    SetRepr f{c, {s}, {}};
    bool cyclic_names = true;
    for (std::size_t a = 0; a < c.num_arrows(); ++a) cyclic_names = cyclic_names && c.arrow_name(a).str() == std::to_string(a);
    if (cyclic_names) {
      for (std::size_t a = 0; a < c.num_arrows(); ++a) f.maps.push_back(a % 2 ? swap : FinMap::identity(s));
      if (category::check_set_functor(f).all_passed()) out.push_back(f);
    }
  }
  return out;
}

inline std::vector<SuiteTask> yoneda_tasks(const SuiteOptions& o) {
  std::vector<SuiteTask> t;
  for (auto& [name, c] : yoneda_corpus(o)) {
    t.push_back([name = name, c = c] {
      LawReport r("yoneda");
      const auto fs = set_functors(c);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        r.record("yoneda.functor_valid", "every shipped Set-valued functor passes the functor laws",
                 category::check_set_functor(fs[i]).all_passed(), name + " F" + std::to_string(i));
        for (std::size_t a = 0; a < c.num_objects(); ++a) {
          const category::YonedaResult y = category::yoneda(c, a, fs[i]);
          r.merge(y.report);
          r.record("yoneda.count_exact", "|Nat(L_a, F)| equals |F a| exactly", y.nat_set.size() == fs[i].sets[a].size(),
                   name + " F" + std::to_string(i) + " " + c.object_name(a).str());
        }
      }
      r.merge(category::yoneda_embedding(c));
      return r;
    });
  }
  return t;
}

// --- numbers ----------------------------------------------------------------

inline std::vector<SuiteTask> integers_tasks(const SuiteOptions& o) {
  std::vector<SuiteTask> t;
  const std::int64_t w = static_cast<std::int64_t>(cap(o, 30));
  t.push_back([w] {
    const numbers::IntWindow win = numbers::build_discrete(2 * w);
    LawReport r("integers");
    for (std::int64_t a = -w; a <= w; ++a)
      for (std::int64_t b = -w; b <= w; ++b) {
        r.record_lazy("integers.window_add", "a + b by composing shifts equals the direct sum",
                      numbers::int_add(win, a, b) == a + b, [&] { return std::to_string(a) + "," + std::to_string(b); });
      }
    return r;
  });
  t.push_back([] { return numbers::int_group_check(12); });
  t.push_back([seed = task_seed(o.seed, 0)] { return numbers::int_arith_laws(10000, 100, seed); });
  return t;
}

inline std::vector<SuiteTask> rationals_tasks(const SuiteOptions& o) {
  const std::int64_t n = static_cast<std::int64_t>(cap(o, 6));
  return {[n] { return numbers::rat_laws(n); }, [n] { return numbers::embed_laws(n); },
          [n] { return numbers::dual_order_checks(n); }};
}

// --- orders -----------------------------------------------------------------

inline std::vector<SuiteTask> lattices_tasks(const SuiteOptions& o) {
  std::vector<SuiteTask> t;
  for (std::size_t n = 1; n <= cap(o, 4); ++n) {
    t.push_back([n] {
      using namespace order;
      LawReport r("lattices");
      for (const auto& p : all_posets(samples::letters(n))) {
        // oracle: least upper / greatest lower bound of each pair by scan
        bool oracle = true;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            bool sup = false, inf = false;
            for (std::size_t s = 0; s < n; ++s) {
              bool least = p.leq(i, s) && p.leq(j, s), greatest = p.leq(s, i) && p.leq(s, j);
              for (std::size_t u = 0; u < n; ++u) {
                if (p.leq(i, u) && p.leq(j, u)) least = least && p.leq(s, u);
                if (p.leq(u, i) && p.leq(u, j)) greatest = greatest && p.leq(u, s);
              }
              sup = sup || least;
              inf = inf || greatest;
            }
            oracle = oracle && sup && inf;
          }
        std::string hw;
        for (const auto& [a, b] : p.hasse()) hw += a.str() + "<" + b.str() + " ";
        const std::string w = "n=" + std::to_string(n) + " " + hw;
        bool built = true;
        try {
          const LatticeTables l = lattice_from_poset(p);
          r.merge(lattice_laws(l));
          r.record("lattices.dual_roundtrip", "poset -> (join, meet) -> poset is the identity",
                   lattice_from_dual_pair(l.join, l.meet).poset == p, w);
          r.record("lattices.semilattice_roundtrip", "each table alone recovers the order",
                   order_from_semilattice(l.join, Orientation::join) == p && order_from_semilattice(l.meet, Orientation::meet) == p, w);
        } catch (const Error& e) {
          if (e.code() != Errc::NotALattice) throw;
          built = false;
        }
        r.record("lattices.iff_pairwise_bounds", "lattice_from_poset succeeds iff every pair has sup and inf",
                 built == oracle, w);
      }
      return r;
    });
  }
  return t;
}

inline std::vector<SuiteTask> zorn_tasks(const SuiteOptions& o) {
  std::vector<SuiteTask> t;
  for (std::size_t n = 1; n <= cap(o, 5); ++n) {
    t.push_back([n] {
      using namespace order;
      LawReport r("zorn");
      for (const auto& p : all_posets(samples::letters(n))) {
        std::string hw;
        for (const auto& [a, b] : p.hasse()) hw += a.str() + "<" + b.str() + " ";
        const Symbol m = zorn_maximal(p);
        const std::size_t mi = p.carrier().index_of(m);
        bool maximal = true;
        for (std::size_t y = 0; y < n; ++y) maximal = maximal && !p.less(mi, y);
        r.record("zorn.maximal_by_scan", "zorn_maximal returns an element with nothing strictly above it", maximal, hw);
        auto chain_ok = [&](const FinSet& c) {
          bool ok = true;
          for (const auto& x : c)
            for (const auto& y : c) ok = ok && (p.leq(x, y) || p.leq(y, x));
          for (const auto& z : p.carrier()) {
            if (c.contains(z)) continue;
            bool comparable = true;
            for (const auto& x : c) comparable = comparable && (p.leq(x, z) || p.leq(z, x));
            ok = ok && !comparable;
          }
          return ok;
        };
        r.record("zorn.chain_from_empty", "extend_chain({}) is a maximal chain by scan",
                 chain_ok(FinSet(extend_chain(p, FinSet{}).elements)), hw);
        for (const auto& x : p.carrier()) {
          const FinSet c(extend_chain(p, FinSet{x}).elements);
          r.record("zorn.chain_from_point", "extend_chain({x}) is a maximal chain containing x by scan",
                   chain_ok(c) && c.contains(x), hw + x.str());
        }
      }
      return r;
    });
  }
  return t;
}

// --- groups and actions -----------------------------------------------------

inline int inversion_parity(const std::string& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  return inv % 2;
}

inline std::vector<SuiteTask> groups_tasks(const SuiteOptions&) {
  using namespace group;
  std::vector<SuiteTask> t;
  const std::vector<FinGroup> cat = group_catalog(6);
  for (std::size_t k = 0; k < cat.size(); ++k) {
    t.push_back([g = cat[k], k] {
      LawReport r("groups");
      const std::string gn = "G" + std::to_string(k) + "(order " + std::to_string(g.size()) + ")";
      for (const auto& s : g.carrier().subsets()) {
        if (s.empty()) continue;  // rejected up front by subgroup_criteria
        r.record("groups.subgroup_criteria_agree", "the three subgroup criteria agree", subgroup_criteria(g, s).agree(),
                 gn + " " + to_string(s));
      }
      for (const auto& h : all_subgroups(g)) {
        r.record("groups.normality_criteria_agree", "the three normality criteria agree", normality_criteria(g, h).agree(),
                 gn + " " + to_string(h.members));
      }
      return r;
    });
  }
  t.push_back([cat] {
    LawReport r("groups");
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (cat[i].size() > 4) continue;
      for (std::size_t j = 0; j < cat.size(); ++j) {
        if (cat[j].size() > 4) continue;
        for (const auto& f : all_homs(cat[i], cat[j])) {
          const std::string w = "G" + std::to_string(i) + "->G" + std::to_string(j) + " " + to_string(f.map);
          r.record("groups.first_iso_bijective", "G/ker f -> Im f is a bijection", classify(first_iso(f).map).bijective, w);
          r.record("groups.first_iso_orders", "|G| = |ker f| |Im f|", f.src.size() == kernel(f).size() * image(f).size(), w);
        }
      }
    }
    return r;
  });
  t.push_back([] {
    LawReport r("groups");
    const FinGroup s3 = symmetric_group(3), z2 = cyclic_group(2);
    const FinMap sgn = FinMap::from_function(s3.carrier(), z2.carrier(),
                                             [](const Symbol& s) { return Symbol(std::to_string(inversion_parity(s.str()))); });
    r.merge(hom_laws(s3, z2, sgn));
    const GroupHom h = hom_check(s3, z2, sgn);
    r.record("groups.sign_first_iso", "S3/ker(sign) -> Z2 is a bijection", classify(first_iso(h).map).bijective);
    r.record("groups.sign_kernel", "ker(sign) is the rotations", kernel(h).members == FinSet{"012", "120", "201"},
             to_string(kernel(h).members));
    const Subgroup comm = commutant(s3);
    r.record("groups.s3_commutant_order", "[S3,S3] has order 3", comm.size() == 3, to_string(comm.members));
    r.record("groups.s3_center_trivial", "center(S3) = {e}", center(s3).members == FinSet{s3.unit_name()},
             to_string(center(s3).members));
    r.record("groups.s3_inner_order", "|Inn(S3)| = 6", inner_automorphisms(s3).inn.size() == 6);
    const FinGroup ab = quotient(s3, comm);
    r.record("groups.s3_abelianization", "S3/[S3,S3] is abelian of order 2", ab.abelian() && ab.size() == 2);
    return r;
  });
  return t;
}

inline group::GroupAction s3_on_points() {
  const group::FinGroup g = group::symmetric_group(3);
  const FinSet pts{"0", "1", "2"};
  std::vector<FinMap> act;
  for (const auto& s : g.carrier()) {
    act.push_back(FinMap::from_function(
        pts, pts, [&](const Symbol& i) { return Symbol(std::string(1, s.str()[static_cast<std::size_t>(i.str()[0] - '0')])); }));
  }
  return group::make_action(g, pts, act);
}

inline std::vector<SuiteTask> actions_tasks(const SuiteOptions&) {
  using namespace group;
  return {
      [] {
        const FinGroup g = symmetric_group(3);
        LawReport r("actions");
        r.merge(coset_action_laws(g, cyclic_subgroup(g, Symbol("102"))), "order2");
        r.merge(coset_action_laws(g, cyclic_subgroup(g, Symbol("120"))), "order3");
        return r;
      },
      [] {
        const GroupAction a = s3_on_points();
        LawReport r("actions");
        r.merge(action_check(a));
        for (const auto& p : a.carrier) r.merge(stabilizer_suite(a, p));
        return r;
      },
  };
}

// --- filters, sigma, topology -----------------------------------------------

inline std::vector<SuiteTask> filters_tasks(const SuiteOptions& o) {
  std::vector<SuiteTask> t;
  for (std::size_t n = 0; n <= cap(o, 4); ++n) {
    t.push_back([n] {
      const FinSet c = samples::letters(n);
      LawReport r("filters");
      r.merge(settools::ultrafilter_suite(c));
      for (const auto& f : settools::all_filters(c)) r.merge(settools::filter_ops(f).laws);
      if (n <= 3) r.merge(settools::refinement_laws(c));
      return r;
    });
  }
  return t;
}

inline std::vector<SuiteTask> sigma_tasks(const SuiteOptions& o) {
  const std::size_t n = cap(o, 3);
  return {[n] { return settools::sigma_laws(samples::letters(n)); }};
}

inline bool topology_oracle(const Family& o) {
  if (!o.contains(FinSet{}) || !o.contains(o.carrier())) return false;
  for (const auto& a : o)
    for (const auto& b : o)
      if (!o.contains(a.unite(b)) || !o.contains(a.intersect(b))) return false;
  return true;
}

inline std::vector<SuiteTask> topology_tasks(const SuiteOptions& o) {
  std::vector<SuiteTask> t;
  const std::size_t n = cap(o, 3);
  t.push_back([n] {
    const FinSet c = samples::letters(n);
    LawReport r("topology");
    std::size_t oracle = 0;
    for (const auto& f : all_families(c)) oracle += topology_oracle(f) ? 1 : 0;
    const auto tops = top::all_topologies(c);
    r.record("topology.count_matches_scan", "enumerated topologies match a scan of all families", tops.size() == oracle,
             std::to_string(tops.size()) + " vs " + std::to_string(oracle));
    if (n == 3) r.record("topology.count_29", "there are 29 topologies on three points", tops.size() == 29, std::to_string(tops.size()));
    for (const auto& tp : tops) {
      r.merge(top::topology_laws(tp));
      const top::BaseOps ops = top::base_ops(c, tp.open_sets);
      r.merge(ops.criterion);
      r.record("topology.base_closure_identical", "closure from the base equals closure from the closed sets",
               ops.closure == top::closure_from_closed(c, top::open_duality(tp)), to_string(tp.open_sets));
    }
    return r;
  });
  // strict axioms: every table for |X| <= 2, constructive search for 3
  t.push_back([n] {
    LawReport r("topology");
    for (std::size_t k = 0; k <= std::min<std::size_t>(n, 2); ++k) {
      const FinSet c = FinSet::range(k);
      const std::size_t rows = std::size_t{1} << k;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < rows; ++i) total *= rows;
      std::vector<Mask> tab(rows);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        for (std::size_t i = 0; i < rows; ++i) {
          tab[i] = x % rows;
          x /= rows;
        }
        const top::ClosureOp cl(c, tab);
        if (top::strict_closure(cl)) {
          r.record("strict.only_discrete_exhaustive", "a table meeting the strict axioms is the identity",
                   cl == top::ClosureOp::identity(c), std::to_string(k));
        }
      }
    }
    for (std::size_t k = 0; k <= n; ++k) {
      const FinSet c = FinSet::range(k);
      const auto models = top::strict_closure_models(c);
      r.record("strict.only_discrete_constructive", "backtracking finds only the identity",
               models.size() == 1 && models[0] == top::ClosureOp::identity(c), std::to_string(k));
    }
    return r;
  });
  if (n == 3) {
    t.push_back([seed = task_seed(o.seed, 13)] {
      // sampled tables on three points, half of them forced through the point axiom
      LawReport r("topology");
      const FinSet c = FinSet::range(3);
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Mask> v(0, 7);
      for (int s = 0; s < 20000; ++s) {
        std::vector<Mask> tab(8);
        for (auto& x : tab) x = v(rng);
        tab[0] = 0;
        if (s % 2) tab[1] = 1, tab[2] = 2, tab[4] = 4;
        const top::ClosureOp cl(c, tab);
        r.record("strict.only_discrete_sampled", "sampled strict tables are the identity",
                 !top::strict_closure(cl) || cl == top::ClosureOp::identity(c));
      }
      return r;
    });
  }
  return t;
}

inline std::vector<SuiteTask> tasks_for(const std::string& name, const SuiteOptions& o) {
  if (name == "functions") return functions_tasks(o);
  if (name == "categories") return categories_tasks(o);
  if (name == "interchange") return interchange_tasks(o);
  if (name == "yoneda") return yoneda_tasks(o);
  if (name == "integers") return integers_tasks(o);
  if (name == "rationals") return rationals_tasks(o);
  if (name == "lattices") return lattices_tasks(o);
  if (name == "zorn") return zorn_tasks(o);
  if (name == "groups") return groups_tasks(o);
  if (name == "actions") return actions_tasks(o);
  if (name == "filters") return filters_tasks(o);
  if (name == "sigma") return sigma_tasks(o);
  if (name == "topology") return topology_tasks(o);
  throw Error(Errc::UsageError, "unknown suite", name);
}

}  // namespace detail

// The named acceptance bundle; "all" runs every suite with ids prefixed by
// the suite name.
inline LawReport run_suite(const std::string& name, const SuiteOptions& o = {}) {
  if (name != "all") return run_tasks(name, detail::tasks_for(name, o), o.jobs);
  std::vector<SuiteTask> tasks;
  std::vector<std::string> owner;
  for (const auto& s : suite_list()) {
    if (s.criterion == 0) continue;
    for (auto& t : detail::tasks_for(s.name, o)) {
      tasks.push_back(std::move(t));
      owner.emplace_back(s.name);
    }
  }
  // prefix per task, then merge in order
  std::vector<SuiteTask> wrapped;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    wrapped.push_back([t = tasks[i], p = owner[i]] {
      LawReport r("all");
      r.merge(t(), p);
      return r;
    });
  }
  return run_tasks("all", wrapped, o.jobs);
}

}  // namespace structa::cli
