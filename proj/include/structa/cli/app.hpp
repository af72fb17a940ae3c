#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "structa/cli/runner.hpp"
#include "structa/cli/suites.hpp"

namespace structa::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::UsageError, "cannot read file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::UsageError, "cannot write file", path);
  out << text;
}

inline std::uint64_t env_seed() {
  const char* s = std::getenv("STRUCTA_SEED");
  if (s == nullptr || *s == '\0') return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw Error(Errc::UsageError, "STRUCTA_SEED is not a non-negative integer", s);
  return v;
}

}  // namespace detail

// The whole command line; argv[0] excluded. Returns the exit code.
inline int run_app(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"structa: finite structures and the laws they satisfy", "structa"};
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  std::size_t max_size = 0;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--max-size", max_size, "largest carrier scanned exhaustively (check: default 4; suite: cap on sizes)");
  auto* seed_opt = app.add_option("--seed", seed, "seed for sampled laws (default: $STRUCTA_SEED or 1)");
  app.add_option("--jobs", jobs, "worker threads for suites")->check(CLI::Range(1, 256));

  std::string file, op, out_path, suite_name;
  std::vector<std::string> op_args;
  auto* check = app.add_subcommand("check", "check the laws of a structure file");
  check->add_option("file", file, "input document")->required();
  auto* derive = app.add_subcommand("derive", "build a derived structure");
  derive->add_option("op", op, "operation")->required();
  derive->add_option("file", file, "input document")->required();
  derive->add_option("args", op_args, "operation arguments");
  derive->add_option("-o,--output", out_path, "write the result here instead of stdout");
  auto* suite = app.add_subcommand("suite", "run a named acceptance suite");
  suite->add_option("name", suite_name, "suite name")->required();
  auto* formats = app.add_subcommand("formats", "print the document schema");

  std::string ops_help = "\nderive operations:\n";
  for (const auto& d : derive_ops()) ops_help += "  " + std::string(d.name) + " (" + d.input + (*d.args ? std::string(" ") + d.args : "") + ") -> " + d.output + "\n";
  ops_help += "\nsuites:\n";
  for (const auto& s : suite_list()) ops_help += "  " + std::string(s.name) + "  " + s.summary + "\n";
  app.footer(ops_help);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::Success& e) {
    std::ostringstream o, x;
    app.exit(e, o, x);
    out << o.str() << x.str();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    app.exit(e, o, x);
    err << x.str() << o.str();
    return kUsage;
  }

  try {
    if (!*seed_opt) seed = detail::env_seed();
    if (*formats) {
      out << formats_text();
      return kPass;
    }
    if (*check) {
      const Doc d = parse_doc(detail::read_file(file));
      CheckOptions opt;
      if (max_size) opt.max_size = max_size;
      const LawReport r = run_check(d, opt);
      out << (json ? render_json(r, d.kind) : render_text(r, "check " + d.kind));
      return exit_code(r);
    }
    if (*derive) {
      const Doc d = parse_doc(detail::read_file(file));
      const std::string text = render_doc(run_derive(op, d, op_args));
      if (out_path.empty()) {
        out << text;
      } else {
        detail::write_file(out_path, text);
      }
      return kPass;
    }
    SuiteOptions so;
    so.max_size = max_size;
    so.seed = seed;
    so.jobs = jobs;
    const LawReport r = run_suite(suite_name, so);
    out << (json ? render_json(r, suite_name) : render_text(r, "suite " + suite_name));
    return exit_code(r);
  } catch (const Error& e) {
    // a structure that fails a law while being built is a law failure, not misuse
    (json ? out : err) << render_error(e, json);
    return e.code() == Errc::LawFailure ? kLawFailure : kUsage;
  }
}

}  // namespace structa::cli
