#pragma once

// The gaussinv command line: compute, transform, fuzz and compare.
// Exit status is 0 on success, 1 on bad input and 2 when fuzzing finds a failure.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaussinv/diagram.hpp"
#include "gaussinv/error.hpp"
#include "gaussinv/fuzz.hpp"
#include "gaussinv/report.hpp"

namespace gaussinv {

namespace cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_failure = 2;

/// Codes from a file body: one per line, blank lines and '#' comments skipped.
inline std::vector<std::string> code_lines(std::istream& in) {
  std::vector<std::string> codes;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view t = detail::trim(line);
    if (!t.empty()) codes.emplace_back(t);
  }
  return codes;
}

inline std::vector<std::string> read_file_codes(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  return code_lines(f);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string_view t = detail::trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

inline int parse_id(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v < 1) {
    throw Error(ErrorKind::invalid_argument, "bad chord id '" + s + "'");
  }
  return v;
}

/// Keeps only the named top-level keys (in the given order); unknown names are errors.
inline Json select(const Json& report, const std::vector<std::string>& keys) {
  if (keys.empty()) return report;
  Json out = Json::object();
  for (const auto& k : keys) {
    if (!report.contains(k)) throw Error(ErrorKind::invalid_argument, "no invariant named '" + k + "'");
    out[k] = report[k];
  }
  return out;
}

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// The single code named by an inline argument, or read from stdin.
inline std::string single_code(const std::vector<std::string>& inline_codes, Io& io) {
  if (!inline_codes.empty()) return inline_codes.front();
  const auto codes = code_lines(io.in);
  if (codes.size() != 1) {
    throw Error(ErrorKind::invalid_argument, "expected exactly one code on stdin, got " + std::to_string(codes.size()));
  }
  return codes.front();
}

inline int compute(const std::vector<std::string>& codes_arg, const std::string& file, bool json,
                   const std::string& invariants, Io& io) {
  if (!file.empty() && !codes_arg.empty()) throw Error(ErrorKind::invalid_argument, "give a code or --file, not both");
  const auto keys = split_list(invariants);
  if (!file.empty()) {
    Json all = Json::array();
    std::string text;
    for (const auto& code : read_file_codes(file)) {
      Json r = select(report(parse(code)), keys);
      text += report_text(r) + "\n";
      all.push_back(std::move(r));
    }
    if (json) {
      io.out << all.dump() << "\n";
    } else {
      io.out << text;
    }
    return exit_ok;
  }
  if (codes_arg.size() > 1) throw Error(ErrorKind::invalid_argument, "compute takes one code");
  const Json r = select(report(parse(single_code(codes_arg, io))), keys);
  io.out << (json ? r.dump() + "\n" : report_text(r));
  return exit_ok;
}

[[noreturn]] inline void mismatch(std::string_view op, std::string_view kind) {
  throw Error(ErrorKind::kind_mismatch, std::string(op) + " does not apply to a " + std::string(kind) + " diagram");
}

inline std::string kind_name(const AnyDiagram& d) {
  return std::visit([](const auto& x) { return std::string(KindTraits<std::decay_t<decltype(x)>::kind>::name); }, d);
}

inline std::string transform_one(const std::string& op, const AnyDiagram& d, const std::vector<int>& flips) {
  if (op == "inverse") return std::visit([](const auto& x) { return serialize(inverse(x)); }, d);
  if (op == "mirror") {
    if (std::holds_alternative<FlatLongDiagram>(d)) mismatch(op, "flatlong");
    return std::visit(
        [](const auto& x) -> std::string {
          if constexpr (std::decay_t<decltype(x)>::kind == DiagramKind::flat_long) {
            return {};
          } else {
            return serialize(mirror(x));
          }
        },
        d);
  }
  if (op == "closure") {
    if (auto* l = std::get_if<LongDiagram>(&d)) return serialize(closure(*l));
    mismatch(op, kind_name(d));
  }
  if (op == "descending" || op == "resolve") {
    auto* f = std::get_if<FlatLongDiagram>(&d);
    if (!f) mismatch(op, kind_name(d));
    if (op == "descending") return serialize(descending(*f));
    ResolutionChoice choice = resolution_from_mask(f->chord_count(), 0);
    for (int id : flips) {
      if (!choice.count(ChordId{id})) throw Error(ErrorKind::invalid_choice, "unknown chord id " + std::to_string(id));
      choice[ChordId{id}] = Resolution::flipped;
    }
    return serialize(resolve(*f, choice));
  }
  throw Error(ErrorKind::invalid_argument, "unknown transform '" + op + "'");
}

inline std::string connect(const AnyDiagram& a, const AnyDiagram& b, std::size_t cut1, std::size_t cut2) {
  if (a.index() != b.index()) {
    throw Error(ErrorKind::kind_mismatch, "cannot connect " + kind_name(a) + " and " + kind_name(b));
  }
  if (auto* k = std::get_if<KnotDiagram>(&a)) return serialize(connected_sum(*k, cut1, std::get<KnotDiagram>(b), cut2));
  if (auto* l = std::get_if<LongDiagram>(&a)) return serialize(concat(*l, std::get<LongDiagram>(b)));
  if (auto* f = std::get_if<FlatLongDiagram>(&a)) return serialize(concat(*f, std::get<FlatLongDiagram>(b)));
  mismatch("connect", kind_name(a));
}

inline int transform(const std::string& op, const std::vector<std::string>& codes_arg, const std::string& file,
                     const std::string& flip, std::size_t cut1, std::size_t cut2, Io& io) {
  std::vector<int> flips;
  for (const auto& s : split_list(flip)) flips.push_back(parse_id(s));
  std::vector<std::string> codes = codes_arg;
  if (!file.empty()) {
    if (!codes.empty()) throw Error(ErrorKind::invalid_argument, "give codes or --file, not both");
    codes = read_file_codes(file);
  } else if (codes.empty()) {
    codes = code_lines(io.in);
  }
  if (op == "connect") {
    if (codes.size() != 2) throw Error(ErrorKind::invalid_argument, "connect takes two codes");
    io.out << connect(parse(codes[0]), parse(codes[1]), cut1, cut2) << "\n";
    return exit_ok;
  }
  if (codes.empty()) throw Error(ErrorKind::invalid_argument, "no input code");
  if (codes.size() > 1 && file.empty() && !codes_arg.empty()) {
    throw Error(ErrorKind::invalid_argument, op + " takes one code");
  }
  std::string out;
  for (const auto& c : codes) out += transform_one(op, parse(c), flips) + "\n";
  io.out << out;
  return exit_ok;
}

inline int fuzz(FuzzOptions opt, const std::string& kind, bool json, Io& io) {
  auto k = fuzz_kind_from_name(kind);
  if (!k) throw Error(ErrorKind::invalid_argument, "unknown fuzz kind '" + kind + "'");
  opt.kind = *k;
  if (const char* env = std::getenv("GAUSS_SEED"); env && *env) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
      throw Error(ErrorKind::invalid_argument, "GAUSS_SEED is not a number: " + std::string(s));
    }
    opt.seed = v;
  }
  const FuzzReport r = run_fuzz(opt);
  io.out << (json ? to_json(r).dump() + "\n" : to_text(r));
  return r.failures.empty() ? exit_ok : exit_failure;
}

inline int compare(const std::vector<std::string>& codes, bool json, Io& io) {
  if (codes.size() != 2) throw Error(ErrorKind::invalid_argument, "compare takes two codes");
  const AnyDiagram a = parse(codes[0]);
  const AnyDiagram b = parse(codes[1]);
  if (a.index() != b.index()) {
    throw Error(ErrorKind::kind_mismatch, "cannot compare " + kind_name(a) + " and " + kind_name(b));
  }
  Json ra = report(a);
  Json rb = report(b);
  ra.erase("code");
  rb.erase("code");
  Json fields = Json::object();
  bool all = true;
  for (const auto& [key, value] : ra.items()) {
    const bool eq = value == rb[key];
    all = all && eq;
    fields[key] = eq;
  }
  if (json) {
    io.out << Json{{"equal", all}, {"fields", fields}}.dump() << "\n";
  } else {
    for (const auto& [key, value] : fields.items()) io.out << key << ": " << (value.get<bool>() ? "equal" : "differs") << "\n";
    io.out << "all: " << (all ? "equal" : "differs") << "\n";
  }
  return exit_ok;
}

}  // namespace cli

/// Runs one command line (without the program name).
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  cli::Io io{in, out, err};
  CLI::App app{"Gauss diagram invariants of virtual knots, long flat knots and 2-component links", "gaussinv"};
  app.require_subcommand(1);

  bool json = false;
  std::string file;
  std::string invariants;
  std::vector<std::string> codes;

  auto* compute = app.add_subcommand("compute", "Print every invariant of a diagram");
  compute->add_option("code", codes, "Gauss code, e.g. \"knot: O1+ O2+ U1+ U2+\"");
  compute->add_option("--file", file, "One code per line; prints one report per code");
  compute->add_flag("--json", json, "JSON output");
  compute->add_option("--invariants", invariants, "Comma-separated report fields to keep");

  std::string op;
  std::string flip;
  std::size_t cut1 = 0;
  std::size_t cut2 = 0;
  auto* transform = app.add_subcommand("transform", "Apply a structural transform and print the new code");
  transform->add_option("op", op, "inverse, mirror, closure, descending, resolve or connect")
      ->required()
      ->check(CLI::IsMember({"inverse", "mirror", "closure", "descending", "resolve", "connect"}));
  transform->add_option("code", codes, "Gauss code(s)");
  transform->add_option("--file", file, "Read codes from a file");
  transform->add_option("--flip", flip, "resolve: comma-separated chord ids to flip");
  transform->add_option("--cut1", cut1, "connect: segment of the first knot");
  transform->add_option("--cut2", cut2, "connect: segment of the second knot");

  FuzzOptions fopt;
  std::string kind = "knot";
  auto* fuzz = app.add_subcommand("fuzz", "Random Reidemeister walks checking invariance");
  fuzz->add_option("--seed", fopt.seed, "Base seed (GAUSS_SEED overrides)");
  fuzz->add_option("--trials", fopt.trials, "Number of random diagrams");
  fuzz->add_option("--steps", fopt.steps, "Moves per trial");
  fuzz->add_option("--max-chords", fopt.max_chords, "Chords in a starting diagram");
  fuzz->add_option("--kind", kind, "knot, flatlong or link")->check(CLI::IsMember({"knot", "flatlong", "link"}));
  fuzz->add_flag("--json", json, "JSON output");

  auto* compare = app.add_subcommand("compare", "Compare the invariants of two diagrams of one kind");
  compare->add_option("codes", codes, "Two Gauss codes")->expected(2);
  compare->add_flag("--json", json, "JSON output");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? cli::exit_ok : cli::exit_input;
  }

  try {
    if (*compute) return cli::compute(codes, file, json, invariants, io);
    if (*transform) return cli::transform(op, codes, file, flip, cut1, cut2, io);
    if (*fuzz) return cli::fuzz(fopt, kind, json, io);
    if (*compare) return cli::compare(codes, json, io);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return cli::exit_input;
  }
  return cli::exit_input;
}

}  // namespace gaussinv
