// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "structa/cli/runner.hpp"
#include "structa/cli/samples.hpp"
#include "structa/cli/suites.hpp"

using namespace structa;
using namespace structa::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = STRUCTA_CORPUS_DIR;
const std::string kCli = STRUCTA_CLI;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t instances(const LawReport& r, const std::string& id) {
  const LawCheck* c = r.find(id);
  return c ? c->instances : 0;
}

// Every law passes and none is vacuous; the named laws are present with at
// least the given number of instances.
Verdict judge(const LawReport& r, const std::vector<std::pair<std::string, std::size_t>>& required) {
  Verdict v;
  for (const auto& c : r.checks()) {
    v.require(c.passed, c.id + " failed [witness: " + c.witness.value_or("") + "]");
    v.require(c.instances > 0, c.id + " has no instances");
  }
  for (const auto& [id, n] : required) {
    v.require(instances(r, id) >= n, id + ": " + std::to_string(instances(r, id)) + " < " + std::to_string(n));
  }
  if (v.ok) {
    v.detail = std::to_string(r.size()) + " laws, " + std::to_string(r.instance_count()) + " instances";
  }
  return v;
}

LawReport suite(const char* name) {
  SuiteOptions o;
  o.jobs = jobs();
  return run_suite(name, o);
}

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string cmd = "'" + kCli + "' " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int status = ::pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct ManifestRow {
  std::string file, command, expect;
  int exit;
};

std::vector<ManifestRow> manifest() {
  std::vector<ManifestRow> rows;
  std::istringstream in(slurp(kCorpus / "MANIFEST.tsv"));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    ManifestRow r;
    std::string code;
    std::getline(ls, r.file, '\t');
    std::getline(ls, r.command, '\t');
    std::getline(ls, code, '\t');
    std::getline(ls, r.expect, '\t');
    r.exit = std::stoi(code);
    rows.push_back(r);
  }
  return rows;
}

// --- criteria ----------------------------------------------------------------

Verdict c1() {
  const LawReport r = suite("functions");
  // maps between carriers of size <= 3: sum over a, b of b^a
  std::size_t maps = 0;
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      std::size_t n = 1;
      for (std::size_t i = 0; i < a; ++i) n *= b;
      maps += n;
    }
  Verdict v = judge(r, {{"image.adjunction", 1000},
                        {"image.union", 1000},
                        {"image.intersection", 1000},
                        {"preimage.union", 1000},
                        {"preimage.difference", 1000},
                        {"fiber.union_of_fibers", 100}});
  v.require(instances(r, "functions.decompose_recompose") == maps, "decompose did not see every map");
  v.require(r.instance_count() >= 100000, "fewer than 1e5 checks");
  return v;
}

Verdict c2() {
  const LawReport r = suite("categories");
  Verdict v = judge(r, {{"seed.category.associative", 20},
                        {"opposite.category.associative", 20},
                        {"product.category.associative", 20},
                        {"functor_category.category.associative", 20},
                        {"bridge.category.associative", 20},
                        {"arrow.category.associative", 20},
                        {"negative.witness_least", 5}});
  v.require(samples::seed_categories().size() >= 20, "fewer than 20 seeds");
  // the shipped files, not just the in-memory samples
  std::size_t found = 0;
  for (const auto& [name, c] : samples::negative_categories()) {
    const category::FinCat shipped = decode_category(parse_doc(slurp(kCorpus / (name + ".json"))));
    const LawReport chk = category::check_category(shipped);
    const LawCheck* a = chk.find("category.associative");
    const std::string oracle = detail::least_assoc_failure(shipped);
    const bool hit = a && !a->passed && a->witness == oracle && !oracle.empty();
    v.require(hit, name + " defect not found");
    found += hit;
  }
  if (v.ok) v.detail += "; defects found in " + std::to_string(found) + "/5 shipped negatives";
  return v;
}

Verdict c3() {
  return judge(suite("interchange"), {{"interchange.law", 1000}, {"interchange.hformulas", 1000}});
}

Verdict c4() {
  return judge(suite("yoneda"), {{"yoneda.count", 1},
                                 {"yoneda.count_exact", 10},
                                 {"yoneda.inverse_left", 10},
                                 {"yoneda.inverse_right", 10},
                                 {"yoneda.functor_valid", 10},
                                 {"yoneda_embedding.full", 10},
                                 {"yoneda_embedding.faithful", 10}});
}

Verdict c5() {
  return judge(suite("integers"), {{"integers.window_add", 61 * 61},
                                   {"int.add_direct", 10000},
                                   {"int.mul_direct", 10000},
                                   {"int.distributive", 10000}});
}

Verdict c6() { return judge(suite("rationals"), {}); }

Verdict c7() {
  return judge(suite("lattices"), {{"lattices.iff_pairwise_bounds", 1 + 3 + 19 + 219},
                                   {"lattices.dual_roundtrip", 1},
                                   {"lattices.semilattice_roundtrip", 1}});
}

Verdict c8() {
  return judge(suite("zorn"), {{"zorn.maximal_by_scan", 1 + 3 + 19 + 219 + 4231},
                               {"zorn.chain_from_empty", 1 + 3 + 19 + 219 + 4231}});
}

Verdict c9() {
  return judge(suite("groups"), {{"groups.subgroup_criteria_agree", 100},
                                 {"groups.normality_criteria_agree", 20},
                                 {"groups.first_iso_bijective", 10},
                                 {"groups.sign_first_iso", 1},
                                 {"groups.s3_commutant_order", 1},
                                 {"groups.s3_center_trivial", 1},
                                 {"groups.s3_inner_order", 1},
                                 {"groups.s3_abelianization", 1}});
}

Verdict c10() { return judge(suite("actions"), {}); }
Verdict c11() { return judge(suite("filters"), {}); }
Verdict c12() { return judge(suite("sigma"), {{"sigma.intersection", 256}}); }

Verdict c13() {
  return judge(suite("topology"), {{"topology.count_29", 1},
                                   {"topology.base_closure_identical", 29},
                                   {"strict.only_discrete_exhaustive", 1},
                                   {"strict.only_discrete_constructive", 4},
                                   {"strict.only_discrete_sampled", 1000}});
}

Verdict c14() {
  Verdict v;
  // round trip: every canonical fixture (all that parse) renders to itself
  std::size_t round = 0;
  for (const auto& e : fs::recursive_directory_iterator(kCorpus)) {
    if (e.path().extension() != ".json") continue;
    const std::string text = slurp(e.path());
    try {
      const std::string again = render_doc(parse_doc(text));
      v.require(again == text, e.path().filename().string() + " is not canonical");
      round += again == text;
    } catch (const Error&) {
      // error fixtures are not expected to round-trip
    }
  }
  v.require(round >= 30, "only " + std::to_string(round) + " fixtures round-trip");

  // --jobs does not change any byte of the report
  for (const char* fmt : {"", " --json"}) {
    const Shell one = shell(std::string("suite all --jobs 1") + fmt);
    const Shell many = shell(std::string("suite all --jobs 8") + fmt);
    v.require(one.code == 0 && many.code == 0, std::string("suite all exited nonzero") + fmt);
    v.require(!one.out.empty() && one.out == many.out, std::string("--jobs 1 and --jobs 8 differ") + fmt);
  }

  // exit-code contract over the manifest
  std::size_t rows = 0, seen[3] = {0, 0, 0};
  for (const auto& r : manifest()) {
    std::string args;
    std::istringstream cs(r.command);
    std::string w;
    cs >> w;
    if (w == "check") {
      args = "check '" + (kCorpus / r.file).string() + "'";
    } else {
      std::string op, rest;
      cs >> op;
      std::getline(cs, rest);
      args = "derive " + op + " '" + (kCorpus / r.file).string() + "'" + rest;
    }
    const Shell s = shell(args);
    v.require(s.code == r.exit, r.file + " (" + r.command + ") exited " + std::to_string(s.code));
    if (r.exit >= 0 && r.exit <= 2) ++seen[r.exit];
    ++rows;
  }
  v.require(seen[0] && seen[1] && seen[2], "manifest lacks pass, fail or error rows");
  v.require(shell("").code == 2 && shell("check").code == 2 && shell("suite nope").code == 2, "usage errors must exit 2");
  if (v.ok) {
    v.detail = std::to_string(round) + " fixtures round-trip; jobs 1/8 identical; " + std::to_string(rows) +
               " exit codes (" + std::to_string(seen[0]) + " pass, " + std::to_string(seen[1]) + " fail, " +
               std::to_string(seen[2]) + " error)";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria = {
      {"function calculus", c1}, {"category laws", c2},  {"interchange law", c3}, {"yoneda", c4},
      {"integers", c5},          {"rationals", c6},      {"lattices", c7},        {"zorn and chains", c8},
      {"groups", c9},            {"actions", c10},       {"filters", c11},        {"sigma-algebras", c12},
      {"topology", c13},         {"cli", c14},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (v.ok ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first << "  ("
              << v.detail << ", " << ms << " ms)" << std::endl;
    failed += !v.ok;
  }
  const auto total = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed ? "FAIL" : "PASS") << "  " << criteria.size() - failed << "/" << criteria.size() << " criteria in "
            << total << " s" << std::endl;
  return failed ? 1 : 0;
}
