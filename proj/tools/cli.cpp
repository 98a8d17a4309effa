#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "baryassoc/bassoc.hpp"
#include "baryassoc/error.hpp"
#include "baryassoc/family.hpp"
#include "baryassoc/oracle.hpp"
#include "baryassoc/text.hpp"
#include "report.hpp"

namespace baryassoc::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RingId ring_option(const std::string& name) {
  auto ring = parse_ring_name(name);
  if (!ring) throw UsageError("unknown ring '" + name + "' (expected int, rat, gaussint or gaussrat)");
  return *ring;
}

std::vector<RingValue> tail_option(const std::string& text, RingId ring) {
  std::vector<RingValue> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_ring_literal(text.substr(start, comma - start), ring));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

void emit(std::ostream& out, json report, const std::string& command,
          std::chrono::steady_clock::time_point started) {
  report["command"] = command;
  report["timing_ms"] = elapsed_ms(started);
  out << report.dump(2) << "\n";
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

struct Options {
  std::string family_file;
  bool json = false;
  bool symmetric = false;
  std::string ring = "rat";
  std::string z;
  std::string q;
  unsigned max_arity = 0;
  std::string tail;
  std::string output;
  unsigned n = 0;
  unsigned bound = kDefaultNOfZBound;
  std::string config;
  unsigned jobs = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barycentric associativity of polynomial families", "baryassoc"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Verify B-associativity of a family file");
  check->add_option("family", o.family_file, "Family file")->required();
  check->add_flag("--json", o.json, "Emit a JSON report");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a family file");
  classify_cmd->add_option("family", o.family_file, "Family file")->required();
  classify_cmd->add_flag("--symmetric", o.symmetric, "Use the symmetric-family classification");
  classify_cmd->add_flag("--json", o.json, "Emit a JSON report");

  auto* construct = app.add_subcommand("construct", "Write a family file");
  construct->require_subcommand(1);
  auto* mz = construct->add_subcommand("mz", "Weighted arithmetic means M^z");
  mz->add_option("--ring", o.ring, "int | rat | gaussint | gaussrat")->required();
  mz->add_option("--z", o.z, "Ring literal for z")->required();
  mz->add_option("--max-arity", o.max_arity, "Largest arity")->required()->check(CLI::PositiveNumber);
  mz->add_option("--tail", o.tail, "Comma-separated constants for arities n(z)..max-arity");
  mz->add_option("-o,--output", o.output, "Output file (default: stdout)");
  auto* ii = construct->add_subcommand("ii", "F1 = x1, F2 = Q*x1 + (1 - Q)*x2, constants above");
  ii->add_option("--ring", o.ring, "int | rat | gaussint | gaussrat")->required();
  ii->add_option("--q", o.q, "Polynomial Q in x1, x2")->required();
  ii->add_option("--max-arity", o.max_arity, "Largest arity")->required()->check(CLI::Range(2U, 1000U));
  ii->add_option("--tail", o.tail, "Comma-separated constants for arities 3..max-arity");
  ii->add_option("-o,--output", o.output, "Output file (default: stdout)");

  auto* delta_cmd = app.add_subcommand("delta", "Print Delta_n^z");
  delta_cmd->add_option("--ring", o.ring, "int | rat | gaussint | gaussrat")->required();
  delta_cmd->add_option("--z", o.z, "Ring literal for z")->required();
  delta_cmd->add_option("--n", o.n, "Arity n >= 1")->required()->check(CLI::PositiveNumber);

  auto* nz = app.add_subcommand("nz", "Print n(z), the first arity where Delta_n^z is not a unit");
  nz->add_option("--ring", o.ring, "int | rat | gaussint | gaussrat")->required();
  nz->add_option("--z", o.z, "Ring literal for z")->required();
  nz->add_option("--bound", o.bound, "Search bound")->check(CLI::Range(3U, 1000000U));

  auto* search = app.add_subcommand("search", "Exhaustive search over small-coefficient families");
  search->add_option("--config", o.config, "SearchConfig JSON file")->required();
  search->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--json", o.json, "Emit a JSON report");

  auto* lemma3 = app.add_subcommand("lemma3", "Binary-reduction identities for F_n and F_{n+1}");
  lemma3->add_option("family", o.family_file, "Family file")->required();
  lemma3->add_option("--n", o.n, "Arity n with 2 <= n < max arity")->required();
  lemma3->add_flag("--json", o.json, "Emit a JSON report");

  std::vector<std::string> argv_storage{"baryassoc"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    if (check->parsed()) {
      const PolyFamily family = parse_family(read_file(o.family_file));
      const auto witness = check_b_associative(family);
      if (o.json) {
        json report = witness ? json{{"status", "not_b_associative"}, {"witness", witness_json(*witness)}}
                              : json{{"status", "ok"}, {"max_arity", family.max_arity()}};
        emit(out, std::move(report), "check", started);
      } else if (witness) {
        out << "not B-associative\n" << witness_text(*witness);
      } else {
        out << "B-associative up to arity " << family.max_arity() << "\n";
      }
      return witness ? kNegative : kOk;
    }

    if (classify_cmd->parsed()) {
      const PolyFamily family = parse_family(read_file(o.family_file));
      if (o.symmetric) {
        const auto c = classify_symmetric(family);
        if (o.json) {
          emit(out, symmetric_json(c), "classify --symmetric", started);
        } else {
          out << symmetric_text(c);
        }
        return std::holds_alternative<NotBAssociative>(c) ? kNegative : kOk;
      }
      const auto c = classify(family);
      if (o.json) {
        emit(out, classification_json(c), "classify", started);
      } else {
        out << classification_text(c, family.max_arity());
      }
      return std::holds_alternative<NotBAssociative>(c) ? kNegative : kOk;
    }

    if (mz->parsed()) {
      const RingId ring = ring_option(o.ring);
      const RingValue z = parse_ring_literal(o.z, ring);
      const auto tail = tail_option(o.tail, ring);
      write_output(o.output, render_family(mz_family(z, o.max_arity, tail)), out);
      return kOk;
    }

    if (ii->parsed()) {
      const RingId ring = ring_option(o.ring);
      const Polynomial q = parse_polynomial(o.q, ring, 2);
      const auto tail = tail_option(o.tail, ring);
      write_output(o.output, render_family(case_ii_family(q, o.max_arity, tail)), out);
      return kOk;
    }

    if (delta_cmd->parsed()) {
      const RingId ring = ring_option(o.ring);
      out << delta(parse_ring_literal(o.z, ring), o.n).to_string() << "\n";
      return kOk;
    }

    if (nz->parsed()) {
      const RingId ring = ring_option(o.ring);
      const NOfZ result = n_of_z(parse_ring_literal(o.z, ring), o.bound);
      if (result.value) {
        out << *result.value << "\n";
      } else {
        out << ">" << result.bound << "\n";
      }
      return kOk;
    }

    if (search->parsed()) {
      const SearchConfig config = parse_search_config(read_file(o.config));
      const SearchReport report = exhaustive_search(config, o.jobs);
      if (o.json) {
        emit(out, search_json(report), "search", started);
      } else {
        out << search_text(report);
      }
      return report.mismatches.empty() ? kOk : kNegative;
    }

    if (lemma3->parsed()) {
      const PolyFamily family = parse_family(read_file(o.family_file));
      const Lemma3Report report = lemma3_diagnostic(family, o.n);
      if (o.json) {
        emit(out, lemma3_json(report), "lemma3", started);
      } else {
        out << lemma3_text(report);
      }
      return report.all_hold() ? kOk : kNegative;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace baryassoc::cli
