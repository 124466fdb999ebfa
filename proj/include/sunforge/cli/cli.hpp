#pragma once

/**
 * Command-line front end.
 *
 *   sunforge verify FILE --kind ns|ff|bff0|bff1 --r R
 *   sunforge construct rs --q Q --n N --r R
 *   sunforge construct random --n N --r R --kind ns|ff --seed S [--p P]
 *   sunforge bounds --n 8,16 --r 3,4 --q 5 --k 4,6
 *   sunforge search --n N --r R --kind K [--k K]
 *   sunforge count --n N --r R --kind ns|ff
 *
 * Exit status: 0 success / no violation, 1 violation found, 2 parse or usage
 * error, 3 cap exceeded, 4 internal failure (a construction failed its
 * re-verification).
 */

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sunforge/bitfam.hpp"
#include "sunforge/bounds.hpp"
#include "sunforge/construct.hpp"
#include "sunforge/detect.hpp"
#include "sunforge/search.hpp"

namespace sunforge::cli {

enum ExitCode : int { ok = 0, violation = 1, usage_error = 2, cap_exceeded = 3, internal_error = 4 };

struct RunConfig {
  std::string subcommand;
  std::string construction;  // rs | random
  std::optional<std::size_t> n;
  std::optional<std::size_t> r;
  std::optional<std::size_t> q;
  std::optional<std::size_t> k;
  std::optional<unsigned> b;
  std::string kind;
  std::uint64_t seed = 0;
  std::optional<double> p;
  unsigned workers = 1;
  std::string format = "text";
  std::string input;
  std::string out;
  std::uint64_t cap = std::uint64_t{1} << 20;
  bool sample = false;
  std::size_t verify_cap = 4096;
  std::vector<std::size_t> grid_n, grid_r, grid_q, grid_k;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["subcommand"] = subcommand;
    if (!construction.empty()) j["construction"] = construction;
    auto opt = [&](const char* key, const auto& v) {
      if (v) j[key] = *v;
      else j[key] = nullptr;
    };
    opt("n", n);
    opt("r", r);
    opt("q", q);
    opt("k", k);
    opt("b", b);
    opt("p", p);
    j["kind"] = kind.empty() ? nlohmann::json(nullptr) : nlohmann::json(kind);
    j["seed"] = seed;
    j["workers"] = workers;
    j["format"] = format;
    j["input"] = input.empty() ? nlohmann::json(nullptr) : nlohmann::json(input);
    j["out"] = out.empty() ? nlohmann::json(nullptr) : nlohmann::json(out);
    j["cap"] = cap;
    j["sample"] = sample;
    if (subcommand == "bounds") j["grid"] = {{"n", grid_n}, {"r", grid_r}, {"q", grid_q}, {"k", grid_k}};
    return j;
  }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option --") + flag);
  return *v;
}

/// --kind combined with --b: "ff" with --b 0 means bff0.
inline Kind resolve_kind(const RunConfig& cfg, Kind fallback) {
  Kind kind = cfg.kind.empty() ? fallback : parse_kind(cfg.kind);
  if (cfg.b) {
    if (*cfg.b > 1) throw UsageError("--b must be 0 or 1");
    if (kind == Kind::ns) throw UsageError("--b applies to focal kinds only");
    const Kind sided = *cfg.b == 0 ? Kind::bff0 : Kind::bff1;
    if (kind != Kind::ff && kind != sided) throw UsageError("--b contradicts --kind");
    kind = sided;
  }
  return kind;
}

inline FocalSide side_of(Kind kind) {
  switch (kind) {
    case Kind::bff0: return FocalSide::zero;
    case Kind::bff1: return FocalSide::one;
    default: return FocalSide::both;
  }
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw std::runtime_error("cannot write " + path);
}

inline void print_text(std::ostream& os, const nlohmann::json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      print_text(os, *it, key);
    else if (it->is_string())
      os << key << ": " << it->get<std::string>() << '\n';
    else
      os << key << ": " << it->dump() << '\n';
  }
}

inline void emit(std::ostream& os, const RunConfig& cfg, const nlohmann::json& report) {
  if (cfg.format == "json")
    os << report.dump(2) << '\n';
  else
    print_text(os, report);
}

inline nlohmann::json member_strings(const auto& family, const std::vector<std::size_t>& indices) {
  nlohmann::json out = nlohmann::json::array();
  for (auto i : indices) out.push_back(family[i].to_string());
  return out;
}

inline AnyFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_family(in);
}

// verify

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.input.empty()) throw UsageError("verify needs an input family file");
  const std::size_t r = require(cfg.r, "r");
  const Kind kind = resolve_kind(cfg, Kind::ff);
  if (kind == Kind::ns && r == 3) err << "warning: every 3 vectors form a near-sunflower; r=3 with kind=ns is trivial\n";
  const AnyFamily any = load_family(cfg.input);
  const std::size_t size = std::visit([](const auto& f) { return f.size(); }, any);
  if (size > cfg.cap) throw CapExceeded("family has " + std::to_string(size) + " members, cap is " + std::to_string(cfg.cap));

  nlohmann::json report{{"command", "verify"}, {"config", cfg.to_json()}, {"members", size}};
  nlohmann::json witness = nullptr;
  nlohmann::json vectors = nullptr;
  if (const auto* f = std::get_if<Family>(&any)) {
    report["n"] = f->n();
    report["q"] = 2;
    if (kind == Kind::ns) {
      if (auto w = find_near_sunflower(*f, r)) {
        witness = to_json(*w);
        vectors = member_strings(*f, w->indices);
      }
    } else if (auto w = find_focal(*f, r, side_of(kind))) {
      witness = to_json(*w);
      vectors = member_strings(*f, w->indices());
    }
  } else {
    const auto& qf = std::get<QFamily>(any);
    report["n"] = qf.n();
    report["q"] = qf.q();
    if (kind != Kind::ff) throw UsageError("q-ary families support kind=ff only");
    if (auto w = find_focal(qf, r)) {
      witness = to_json(*w);
      vectors = member_strings(qf, w->indices());
    }
  }
  report["violation"] = witness;
  if (!witness.is_null()) report["violation_members"] = vectors;
  emit(out, cfg, report);
  return witness.is_null() ? ExitCode::ok : ExitCode::violation;
}

// construct

inline void deliver_family(const RunConfig& cfg, const std::string& text, nlohmann::json& report, std::ostream& out,
                           std::ostream& err) {
  if (cfg.out.empty()) {
    out << text;
    emit(err, cfg, report);
  } else {
    write_text_file(cfg.out, text);
    emit(out, cfg, report);
  }
}

inline int construct_rs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t q = require(cfg.q, "q");
  const std::size_t n = require(cfg.n, "n");
  const std::size_t r = require(cfg.r, "r");
  sunforge::detail::require_r(r);
  const GaloisField field = GaloisField::of_order(q);
  const ReedSolomonOptions opts{cfg.cap, cfg.sample, cfg.seed};
  const QFamily family = reed_solomon_family(field, n, r, opts);
  const std::size_t d = reed_solomon_degree_bound(n, r);

  nlohmann::json report{{"command", "construct"},
                        {"config", cfg.to_json()},
                        {"members", family.size()},
                        {"degree_bound", d},
                        {"expected_members", power(q, d).str()},
                        {"provenance", "q^ceil((r-2)n/(r-1)) polynomials of degree below the bound"}};
  if (family.size() <= cfg.verify_cap) {
    if (auto w = find_focal(family, r)) {
      report["verified"] = false;
      report["violation"] = to_json(*w);
      emit(err, cfg, report);
      return ExitCode::internal_error;
    }
    report["verified"] = true;
  } else {
    report["verified"] = nullptr;
    err << "warning: re-verification skipped above " << cfg.verify_cap << " members\n";
  }
  deliver_family(cfg, format_family(family), report, out, err);
  return ExitCode::ok;
}

inline nlohmann::json trace_json(const AlterationTrace& t) {
  return {{"seed", t.seed},
          {"p_used", t.p_used},
          {"n", t.n},
          {"r", t.r},
          {"kind", std::string(to_string(t.kind))},
          {"initial_size", t.initial_size},
          {"removals", t.removals},
          {"violations_found", t.violations_found}};
}

inline int construct_random(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t n = require(cfg.n, "n");
  const std::size_t r = require(cfg.r, "r");
  const Kind kind = resolve_kind(cfg, Kind::ns);
  if (kind != Kind::ns && kind != Kind::ff) throw UsageError("random construction supports kind ns or ff");
  if (kind == Kind::ns && r == 3) err << "warning: every 3 vectors form a near-sunflower; r=3 with kind=ns is trivial\n";
  AlterationOptions opts;
  opts.p = cfg.p;
  const auto result = random_with_alterations(n, r, kind, cfg.seed, opts);

  const bool clean = kind == Kind::ns ? !find_near_sunflower(result.family, r) : !find_focal(result.family, r);
  const double p = result.trace.p_used;
  nlohmann::json report{{"command", "construct"},
                        {"config", cfg.to_json()},
                        {"members", result.family.size()},
                        {"verified", clean},
                        {"expected_size_lower_bound", expected_size_lower_bound(n, r, kind, p)},
                        {"provenance", kind == Kind::ns ? "2^n p - (2r+2)^n p^r / r!" : "2^n p - (2r)^n p^r / (r-1)!"},
                        {"trace", trace_json(result.trace)}};
  if (!clean) {
    emit(err, cfg, report);
    return ExitCode::internal_error;
  }
  if (!cfg.out.empty()) {
    const std::string trace_path = cfg.out + ".trace.json";
    write_text_file(trace_path, trace_json(result.trace).dump(2) + "\n");
    report["trace_file"] = trace_path;
  }
  deliver_family(cfg, format_family(result.family), report, out, err);
  return ExitCode::ok;
}

inline int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.construction == "rs") return construct_rs(cfg, out, err);
  if (cfg.construction == "random") return construct_random(cfg, out, err);
  throw UsageError("construct needs 'rs' or 'random'");
}

// bounds

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const BoundGrid grid{cfg.grid_n, cfg.grid_r, cfg.grid_q, cfg.grid_k};
  const auto rows = tabulate_bounds(grid);
  if (cfg.format == "json") {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json params = nlohmann::json::object();
      for (const auto& [key, v] : row.params) params[key] = v;
      table.push_back({{"name", row.name},
                       {"params", params},
                       {"value", row.value_string()},
                       {"value_approx", row.value_as_double()},
                       {"rate", row.rate ? nlohmann::json(*row.rate) : nlohmann::json(nullptr)},
                       {"provenance", row.provenance}});
    }
    out << nlohmann::json{{"command", "bounds"}, {"config", cfg.to_json()}, {"rows", table}}.dump(2) << '\n';
    return ExitCode::ok;
  }
  std::ostringstream config;
  print_text(config, nlohmann::json{{"config", cfg.to_json()}});
  out << config.str();
  out << std::left << std::setw(26) << "name" << std::setw(24) << "params" << std::setw(24) << "value" << std::setw(16)
      << "rate" << "provenance\n";
  for (const auto& row : rows) {
    std::string params;
    for (const auto& [key, v] : row.params) {
      std::ostringstream s;
      s << key << '=' << v;
      params += (params.empty() ? "" : " ") + s.str();
    }
    std::string value = row.value_string();
    if (value.size() > 22) {
      std::ostringstream s;
      s << std::setprecision(12) << row.value_as_double();
      value = s.str();
    }
    std::ostringstream rate;
    if (row.rate) rate << std::setprecision(10) << *row.rate;
    out << std::setw(26) << row.name << std::setw(24) << params << std::setw(24) << value << std::setw(16)
        << (row.rate ? rate.str() : "-") << row.provenance << '\n';
  }
  return ExitCode::ok;
}

// search

inline std::filesystem::path cache_file() {
  const char* dir = std::getenv("SUNFORGE_CACHE");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / "search_cache.json";
}

inline std::string cache_key(std::size_t n, std::size_t r, Kind kind, std::optional<std::size_t> k) {
  std::string key = "n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",kind=" + std::string(to_string(kind));
  if (k) key += ",k=" + std::to_string(*k);
  return key;
}

inline nlohmann::json read_cache(const std::filesystem::path& file) {
  if (file.empty() || !std::filesystem::exists(file)) return nlohmann::json::object();
  std::ifstream in(file);
  auto j = nlohmann::json::parse(in, nullptr, false);
  return j.is_object() ? j : nlohmann::json::object();
}

inline int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t n = require(cfg.n, "n");
  const std::size_t r = require(cfg.r, "r");
  const Kind kind = resolve_kind(cfg, Kind::ff);
  if (kind == Kind::ns && r == 3) err << "warning: every 3 vectors form a near-sunflower; r=3 with kind=ns is trivial\n";
  sunforge::detail::require_r(r);
  if (cfg.k ? n > 7 : n > kExactSearchMaxN)
    throw CapExceeded("search supports n <= " + std::to_string(cfg.k ? 7 : kExactSearchMaxN) + ", got " + std::to_string(n));

  const auto file = cache_file();
  const std::string key = cache_key(n, r, kind, cfg.k);
  nlohmann::json cache = read_cache(file);
  nlohmann::json entry;
  bool cached = false;
  if (cache.contains(key)) {
    entry = cache[key];
    cached = true;
  } else {
    const SearchResult result = cfg.k ? exact_g_uniform(n, *cfg.k, r, kind) : exact_g(n, r, kind);
    nlohmann::json members = nlohmann::json::array();
    for (const auto& v : result.witness) members.push_back(v.to_string());
    entry = {{"value", result.value}, {"nodes_explored", result.nodes_explored}, {"witness", members}};
    if (!file.empty()) {
      cache[key] = entry;
      std::filesystem::create_directories(file.parent_path());
      write_text_file(file.string(), cache.dump(2) + "\n");
    }
  }

  nlohmann::json report{{"command", "search"},
                        {"config", cfg.to_json()},
                        {"value", entry["value"]},
                        {"nodes_explored", entry["nodes_explored"]},
                        {"witness", entry["witness"]},
                        {"cached", cached},
                        {"provenance", "exhaustive branch-and-bound"}};
  if (!cfg.out.empty()) {
    Family witness(n);
    for (const auto& s : entry["witness"]) witness.insert(BitVector::from_string(s.get<std::string>()));
    write_text_file(cfg.out, format_family(witness));
    report["witness_file"] = cfg.out;
  }
  emit(out, cfg, report);
  return ExitCode::ok;
}

// count

inline int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::size_t n = require(cfg.n, "n");
  const std::size_t r = require(cfg.r, "r");
  const Kind kind = resolve_kind(cfg, Kind::ns);
  sunforge::detail::require_r(r);
  sunforge::detail::require_binary_kind(kind);

  nlohmann::json report{{"command", "count"}, {"config", cfg.to_json()}};
  report["matrix_count_closed_form"] = count_matrices(n, r, kind, CountMode::closed_form).str();
  report["matrix_count_enumerated"] =
      r * n <= kMatrixEnumerationLimit ? nlohmann::json(count_matrices(n, r, kind, CountMode::enumerate).str()) : nlohmann::json(nullptr);
  report["count_bound"] = count_bound(n, r, kind).str();
  report["provenance"] = kind == Kind::ns ? "(2r+2)^n / r!" : "(2r)^n / (r-1)!";
  try {
    report["pattern_count"] = brute_force_count(n, r, kind).str();
  } catch (const CapExceeded&) {
    report["pattern_count"] = nullptr;
  }
  emit(out, cfg, report);
  return ExitCode::ok;
}

}  // namespace detail

/// Runs the tool on `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Near-sunflower and focal family toolkit", "sunforge"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--kind", cfg.kind, "Pattern: ns, ff, bff0, bff1");
    sub->add_option("--b", cfg.b, "Restrict focal checks to coordinates where the focus is b");
    sub->add_option("--workers", cfg.workers, "Worker count (runs are sequential)")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Output file");
    sub->add_option("--cap", cfg.cap, "Enumeration cap");
  };

  auto* verify = app.add_subcommand("verify", "Search a family file for a violating tuple");
  verify->add_option("input", cfg.input, "Family file")->required();
  verify->add_option("--r", cfg.r, "Tuple size")->required();
  add_common(verify);

  auto* construct = app.add_subcommand("construct", "Build a pattern-free family");
  construct->add_option("construction", cfg.construction, "rs or random")->required()->check(CLI::IsMember({"rs", "random"}));
  construct->add_option("--n", cfg.n, "Vector length")->required();
  construct->add_option("--r", cfg.r, "Tuple size")->required();
  construct->add_option("--q", cfg.q, "Field order (rs)");
  construct->add_option("--seed", cfg.seed, "64-bit seed");
  construct->add_option("--p", cfg.p, "Inclusion probability (random)");
  construct->add_flag("--sample", cfg.sample, "Sample cap members when the family exceeds the cap (rs)");
  add_common(construct);

  auto* bounds = app.add_subcommand("bounds", "Tabulate bounds over a parameter grid");
  bounds->add_option("--n", cfg.grid_n, "Lengths")->delimiter(',');
  bounds->add_option("--r", cfg.grid_r, "Tuple sizes")->delimiter(',');
  bounds->add_option("--q", cfg.grid_q, "Alphabet sizes")->delimiter(',');
  bounds->add_option("--k", cfg.grid_k, "Uniformities")->delimiter(',');
  add_common(bounds);

  auto* search = app.add_subcommand("search", "Exact maximum pattern-free family size");
  search->add_option("--n", cfg.n, "Vector length")->required();
  search->add_option("--r", cfg.r, "Tuple size")->required();
  search->add_option("--k", cfg.k, "Restrict to k-element sets");
  add_common(search);

  auto* count = app.add_subcommand("count", "Count patterns and pattern matrices");
  count->add_option("--n", cfg.n, "Vector length")->required();
  count->add_option("--r", cfg.r, "Tuple size")->required();
  add_common(count);

  std::vector<std::string> argv_store{"sunforge"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return ExitCode::usage_error;
  }

  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    if (cfg.subcommand == "verify") return detail::cmd_verify(cfg, out, err);
    if (cfg.subcommand == "construct") return detail::cmd_construct(cfg, out, err);
    if (cfg.subcommand == "bounds") return detail::cmd_bounds(cfg, out, err);
    if (cfg.subcommand == "search") return detail::cmd_search(cfg, out, err);
    if (cfg.subcommand == "count") return detail::cmd_count(cfg, out, err);
    throw UsageError("unknown subcommand");
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::cap_exceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range and domain_error are bad parameters.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
        dynamic_cast<const std::domain_error*>(&e)) {
      err << "error: " << e.what() << '\n';
      return ExitCode::usage_error;
    }
    err << "internal error: " << e.what() << '\n';
    return ExitCode::internal_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::internal_error;
  }
}

}  // namespace sunforge::cli
