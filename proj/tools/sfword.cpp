// Command-line surface of the library. Results go to stdout, diagnostics
// to stderr. Exit codes: 0 pass/success, 1 semantic failure (a negative
// verdict or domain error), 2 usage error.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <sfword/sfword.hpp>

namespace {

using sfword::json;
using sfword::Word;

constexpr std::size_t default_depth = 10000;

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Words come from positional arguments, or one per line on stdin when no
/// positional words were given.
std::vector<Word> gather_words(const std::vector<std::string>& args) {
  std::vector<Word> words;
  if (!args.empty()) {
    for (const std::string& arg : args) words.push_back(sfword::parse_word(arg));
    return words;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    words.push_back(sfword::parse_word(line));
  }
  return words;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct CheckCmd {
  std::vector<std::string> args;
  bool json_out = false;

  int run() const {
    const std::vector<Word> words = gather_words(args);
    const bool single = words.size() == 1;
    bool all_square_free = true;
    json out = json::array();
    for (const Word& w : words) {
      const auto square = sfword::find_square(w);
      if (square) all_square_free = false;
      if (json_out) {
        json row{{"word", w}, {"square_free", !square.has_value()}};
        row["square"] = square ? json(*square) : json(nullptr);
        out.push_back(std::move(row));
        continue;
      }
      std::ostringstream line;
      if (!single) line << w << ": ";
      if (square)
        line << "square at start=" << square->start << " half_length=" << square->half_length
             << " (" << sfword::square_content(w, *square) << ")";
      else
        line << "square-free";
      std::cout << line.str() << "\n";
    }
    if (json_out) print_json(out);
    return all_square_free ? 0 : 1;
  }
};

struct DeleteCmd {
  std::string word;
  std::size_t start = 0;
  std::size_t length = 1;

  int run() const {
    const Word w = sfword::parse_word(word);
    std::cout << sfword::delete_factor(w, sfword::DeletionSite{start, length}) << "\n";
    return 0;
  }
};

struct IrreducibleCmd {
  std::vector<std::string> args;
  std::size_t k = 1;
  bool json_out = false;

  int run() const {
    const std::vector<Word> words = gather_words(args);
    const bool single = words.size() == 1;
    bool all_irreducible = true;
    json out = json::array();
    for (const Word& w : words) {
      const auto report = sfword::k_irreducibility_report(w, k);
      if (!report.verdict) all_irreducible = false;
      if (json_out) {
        out.push_back(report);
        continue;
      }
      std::ostringstream line;
      if (!single) line << w << ": ";
      if (report.verdict) {
        line << (k == 1 ? "irreducibly square-free"
                        : std::to_string(k) + "-irreducibly square-free");
      } else {
        line << "not " << (k == 1 ? "" : std::to_string(k) + "-") << "irreducibly square-free"
             << " (disposable site start=" << report.first_disposable->start
             << " length=" << report.first_disposable->length << ")";
      }
      std::cout << line.str() << "\n";
    }
    if (json_out) print_json(out);
    return all_irreducible ? 0 : 1;
  }
};

struct EnumerateCmd {
  std::size_t length = 0;
  bool count_only = false;
  bool json_out = false;

  int run() const {
    if (json_out) {
      json out{{"length", length}};
      json words = json::array();
      const auto count = sfword::enumerate_square_free(length, [&](const Word& w) {
        if (!count_only) words.push_back(w);
      });
      out["count"] = count;
      if (!count_only) out["words"] = std::move(words);
      print_json(out);
      return 0;
    }
    const auto count = sfword::enumerate_square_free(length, [&](const Word& w) {
      if (!count_only) std::cout << w << "\n";
    });
    if (count_only) std::cout << count << "\n";
    return 0;
  }
};

struct CensusCmd {
  std::size_t from = 0;
  std::size_t to = 0;
  std::optional<std::size_t> single;
  bool csv = false;
  bool json_out = false;
  bool table = false;
  bool representatives = false;
  unsigned threads = 0;

  int run() const {
    std::size_t lo = from, hi = to;
    if (single) lo = hi = *single;
    if (lo == 0 || hi == 0) {
      std::cerr << "census: give --length N or both --from and --to\n";
      return 2;
    }
    if (csv && representatives) {
      std::cerr << "census: --representatives cannot be combined with --csv\n";
      return 2;
    }
    sfword::CensusOptions options;
    options.with_representatives = representatives;
    options.threads = resolve_threads(threads);
    const auto rows = sfword::census_range(lo, hi, options);
    if (json_out) {
      json out = json::array();
      for (const auto& row : rows) {
        json j = row;
        if (!representatives) j.erase("representatives");
        out.push_back(std::move(j));
      }
      print_json(out);
      return 0;
    }
    if (csv) {
      std::cout << "length,square_free,irreducible_raw,irreducible_canonical\n";
      for (const auto& row : rows)
        std::cout << row.length << "," << row.square_free_count << ","
                  << row.irreducible_count_raw << "," << row.irreducible_count_canonical << "\n";
      return 0;
    }
    std::cout << std::setw(6) << "length" << std::setw(14) << "square_free" << std::setw(12)
              << "irr_raw" << std::setw(14) << "irr_canonical" << "\n";
    for (const auto& row : rows) {
      std::cout << std::setw(6) << row.length << std::setw(14) << row.square_free_count
                << std::setw(12) << row.irreducible_count_raw << std::setw(14)
                << row.irreducible_count_canonical << "\n";
      for (const Word& rep : row.representatives) std::cout << "  " << rep << "\n";
    }
    return 0;
  }
};

struct ConstructCmd {
  std::size_t length = 0;
  bool json_out = false;

  int run() const {
    const auto trace = sfword::construct(length);
    if (json_out)
      print_json(json(trace));
    else
      std::cout << trace.result << "\n";
    return 0;
  }
};

struct MorphismCmd {
  std::string action;
  std::string builtin;
  std::string spec_path;
  std::string word;
  std::size_t n = 2;
  std::string seed = "0";
  std::size_t length = 0;
  std::size_t k = 1;
  bool json_out = false;

  sfword::Morphism load() const {
    if (builtin.empty() && spec_path.empty())
      throw CLI::ValidationError("morphism", "give --builtin or --spec");
    if (!builtin.empty()) {
      if (builtin == "tau") return sfword::tau();
      if (builtin == "phi") return sfword::phi();
      if (builtin == "alpha3") return sfword::alpha3();
      throw CLI::ValidationError("morphism", "unknown builtin '" + builtin + "'");
    }
    std::ifstream in(spec_path);
    if (!in) sfword::raise(sfword::errc::bad_morphism, "cannot open spec file " + spec_path);
    std::ostringstream text;
    text << in.rdbuf();
    return sfword::parse_morphism_spec(text.str());
  }

  int run() const {
    const sfword::Morphism m = load();
    if (action == "apply") {
      std::cout << sfword::apply_morphism(m, sfword::parse_word(word)) << "\n";
      return 0;
    }
    if (action == "power") {
      std::cout << sfword::format_morphism_spec(sfword::power(m, n));
      return 0;
    }
    if (action == "fixpoint") {
      if (seed.size() != 1) sfword::raise(sfword::errc::invalid_character, "seed must be one letter");
      std::cout << sfword::fixed_point_prefix(m, seed[0], length) << "\n";
      return 0;
    }
    if (action == "crochemore") {
      const auto result = sfword::crochemore_test(m);
      if (json_out)
        print_json(json(result));
      else if (result.pass)
        std::cout << "pass\n";
      else
        std::cout << "fail: image of " << result.witness->input << " has a square at start="
                  << result.witness->square.start
                  << " half_length=" << result.witness->square.half_length << "\n";
      return result.pass ? 0 : 1;
    }
    if (action == "align") {
      const auto result = sfword::alignment_test(m);
      if (json_out)
        print_json(json(result));
      else if (result.pass)
        std::cout << "pass\n";
      else
        std::cout << "fail: image of " << result.witness->a << " sits inside the image of "
                  << result.witness->b << result.witness->c << " at offset "
                  << result.witness->offset << "\n";
      return result.pass ? 0 : 1;
    }
    if (action == "procedure1") {
      const auto cert = sfword::procedure_I_k(m, k);
      if (json_out) {
        print_json(json(cert));
      } else {
        std::cout << "crochemore: " << (cert.crochemore.pass ? "pass" : "fail") << "\n";
        std::cout << "alignment: " << (cert.alignment.pass ? "pass" : "fail") << "\n";
        for (const auto& pc : cert.pair_checks)
          std::cout << "pair " << pc.a << pc.b << ": " << (pc.pass ? "pass" : "fail") << "\n";
        std::cout << (cert.pass() ? "pass" : "fail") << "\n";
      }
      return cert.pass() ? 0 : 1;
    }
    throw CLI::ValidationError("morphism", "unknown action '" + action + "'");
  }
};

struct VerifyPaperCmd {
  std::size_t depth = default_depth;
  bool json_out = false;
  bool table = false;
  unsigned threads = 0;

  int run() const {
    const auto results = sfword::replicate_all(depth, resolve_threads(threads));
    const bool pass = sfword::all_pass(results);
    if (json_out) {
      print_json(json(results));
    } else {
      for (const auto& r : results) {
        std::cout << (r.verdict ? "PASS" : "FAIL") << "  " << std::left << std::setw(28)
                  << r.claim_id << std::right << (r.bounded ? " [bounded] " : "           ")
                  << r.description << "\n";
      }
      std::cout << (pass ? "all claims pass" : "some claims FAILED") << "\n";
    }
    return pass ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irreducibly square-free ternary word toolkit"};
  app.require_subcommand(1);

  CheckCmd check;
  auto* check_cmd = app.add_subcommand("check", "test words for square-freeness");
  check_cmd->add_option("words", check.args, "words over {0,1,2}; stdin if omitted");
  check_cmd->add_flag("--json", check.json_out, "emit JSON");

  DeleteCmd del;
  auto* delete_cmd = app.add_subcommand("delete", "delete an interior factor");
  delete_cmd->add_option("word", del.word)->required();
  delete_cmd->add_option("--start", del.start, "0-based start of the factor")->required();
  delete_cmd->add_option("--length", del.length, "factor length")->capture_default_str();

  IrreducibleCmd irreducible;
  auto* irr_cmd = app.add_subcommand("irreducible", "test for irreducible square-freeness");
  irr_cmd->add_option("words", irreducible.args, "words over {0,1,2}; stdin if omitted");
  irr_cmd->add_flag("--json", irreducible.json_out, "emit JSON reports");

  IrreducibleCmd k_irreducible;
  auto* kirr_cmd = app.add_subcommand("k-irreducible", "test for k-irreducible square-freeness");
  kirr_cmd->add_option("words", k_irreducible.args, "words over {0,1,2}; stdin if omitted");
  kirr_cmd->add_option("--k", k_irreducible.k, "factor length to delete")->required();
  kirr_cmd->add_flag("--json", k_irreducible.json_out, "emit JSON reports");

  EnumerateCmd enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "list all square-free words of a length");
  enum_cmd->add_option("--length", enumerate.length)->required();
  enum_cmd->add_flag("--count", enumerate.count_only, "print only the count");
  enum_cmd->add_flag("--json", enumerate.json_out, "emit JSON");

  CensusCmd census;
  auto* census_cmd = app.add_subcommand("census", "count irreducibly square-free words");
  census_cmd->add_option("--from", census.from, "first length");
  census_cmd->add_option("--to", census.to, "last length");
  census_cmd->add_option("--length", census.single, "single length (overrides --from/--to)");
  auto* census_csv = census_cmd->add_flag("--csv", census.csv, "emit CSV");
  auto* census_json = census_cmd->add_flag("--json", census.json_out, "emit JSON");
  auto* census_table = census_cmd->add_flag("--table", census.table, "emit aligned table (default)");
  census_csv->excludes(census_json);
  census_csv->excludes(census_table);
  census_json->excludes(census_table);
  census_cmd->add_flag("--representatives", census.representatives,
                       "list canonical representatives");
  census_cmd->add_option("--threads", census.threads, "worker threads (0 = all cores)")
      ->envname("SFWORD_THREADS");

  ConstructCmd construct;
  auto* construct_cmd =
      app.add_subcommand("construct", "build a verified irreducibly square-free word");
  construct_cmd->add_option("--length", construct.length)->required();
  construct_cmd->add_flag("--json", construct.json_out, "emit the construction trace as JSON");

  MorphismCmd morphism;
  auto* morphism_cmd = app.add_subcommand("morphism", "morphism operations");
  morphism_cmd
      ->add_option("action", morphism.action,
                   "one of: apply, power, fixpoint, crochemore, align, procedure1")
      ->required()
      ->check(CLI::IsMember({"apply", "power", "fixpoint", "crochemore", "align", "procedure1"}));
  auto* builtin_opt =
      morphism_cmd->add_option("--builtin", morphism.builtin, "tau, phi or alpha3")
          ->check(CLI::IsMember({"tau", "phi", "alpha3"}));
  auto* spec_opt = morphism_cmd->add_option("--spec", morphism.spec_path, "morphism spec file");
  builtin_opt->excludes(spec_opt);
  morphism_cmd->add_option("word", morphism.word, "input word (apply)");
  morphism_cmd->add_option("--n", morphism.n, "exponent (power)");
  morphism_cmd->add_option("--seed", morphism.seed, "seed letter (fixpoint)");
  morphism_cmd->add_option("--length", morphism.length, "prefix length (fixpoint)");
  morphism_cmd->add_option("--k", morphism.k, "factor length (procedure1)");
  morphism_cmd->add_flag("--json", morphism.json_out, "emit JSON");

  VerifyPaperCmd verify;
  auto* verify_cmd = app.add_subcommand("verify-paper", "re-check every claim");
  verify_cmd->add_option("--depth", verify.depth, "prefix depth for bounded checks")
      ->capture_default_str();
  auto* verify_json = verify_cmd->add_flag("--json", verify.json_out, "emit JSON");
  auto* verify_table = verify_cmd->add_flag("--table", verify.table, "emit table (default)");
  verify_json->excludes(verify_table);
  verify_cmd->add_option("--threads", verify.threads, "worker threads (0 = all cores)")
      ->envname("SFWORD_THREADS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n"
              << "run 'sfword --help' or 'sfword <command> --help' for usage\n";
    return 2;
  }

  try {
    if (check_cmd->parsed()) return check.run();
    if (delete_cmd->parsed()) return del.run();
    if (irr_cmd->parsed()) return irreducible.run();
    if (kirr_cmd->parsed()) return k_irreducible.run();
    if (enum_cmd->parsed()) return enumerate.run();
    if (census_cmd->parsed()) return census.run();
    if (construct_cmd->parsed()) return construct.run();
    if (morphism_cmd->parsed()) return morphism.run();
    if (verify_cmd->parsed()) return verify.run();
  } catch (const sfword::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
