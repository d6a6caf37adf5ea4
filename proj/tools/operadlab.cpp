// operadlab command line: compute the permutation-to-tree maps and term
// encodings, run the exhaustive verification suites, and export Hasse
// diagrams as DOT.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "operadlab/dot.hpp"
#include "operadlab/encodings.hpp"
#include "operadlab/maps.hpp"
#include "operadlab/verify.hpp"

namespace {

constexpr std::size_t kForceThreshold = 9;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    throw operadlab::error("cannot open output file " + output_path);
  }
  out << text;
}

void check_force(std::size_t n, bool force) {
  if (n > kForceThreshold && !force) {
    throw operadlab::resource_limit_error(
        "n=" + std::to_string(n) + " exceeds the guard at " +
        std::to_string(kForceThreshold) + "; pass --force to proceed");
  }
}

int run_map(const std::string& perm_text, const std::string& which) {
  const operadlab::Permutation pi = operadlab::Permutation::parse(perm_text);
  operadlab::BinaryTree tree;
  if (which == "psi") {
    tree = operadlab::loday_ronco(pi);
  } else if (which == "phihat") {
    tree = operadlab::phihat(pi);
  } else if (which == "varphi") {
    tree = operadlab::varphi(pi);
  } else if (which == "g") {
    tree = operadlab::eval(operadlab::head_insertion(
        operadlab::reverse(pi.word())));
  } else {  // phi
    tree = operadlab::tonks_map(pi);
  }
  std::cout << tree.str() << "\n";
  return 0;
}

int run_encode(const std::string& word_text, const std::string& which) {
  const operadlab::Word word = operadlab::Word::parse(word_text);
  const operadlab::Term term = which == "f"
                                   ? operadlab::decreasing_encoding(word)
                                   : operadlab::head_insertion(word);
  std::cout << term.str() << "\n";
  return 0;
}

int run_verify(std::size_t max_n, const std::vector<std::string>& checks,
               long long fuzz_count, int fuzz_gens, unsigned seed,
               const std::string& format, const std::string& output_path,
               bool force) {
  check_force(max_n, force);
  std::vector<operadlab::VerificationReport> reports;
  auto selected = [&](const std::string& name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  };
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (selected("identities")) {
      reports.push_back(operadlab::verify_identities(n, max_n));
    }
  }
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (selected("order")) {
      reports.push_back(operadlab::verify_order_preservation(n, max_n));
    }
  }
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (selected("classes")) {
      reports.push_back(operadlab::verify_classes(n, max_n));
    }
  }
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (selected("quotient")) {
      reports.push_back(operadlab::verify_quotient(n, max_n));
    }
  }
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (selected("local-indices")) {
      reports.push_back(operadlab::verify_local_indices(n, max_n));
    }
  }
  if (selected("soundness-fuzz")) {
    reports.push_back(operadlab::verify_soundness_fuzz(fuzz_count, fuzz_gens, seed));
  }

  std::ostringstream out;
  bool all_passed = true;
  for (const operadlab::VerificationReport& report : reports) {
    all_passed = all_passed && report.passed();
    out << (format == "tsv" ? report.tsv_line() : report.text()) << "\n";
  }
  emit(out.str(), output_path);
  return all_passed ? 0 : 1;
}

int run_classes(std::size_t n, const std::string& format,
                const std::string& output_path, bool force) {
  check_force(n, force);
  const operadlab::TonksClassPartition partition =
      operadlab::tonks_classes(n, n);
  std::ostringstream out;
  if (format == "tsv") {
    for (const operadlab::TonksClass& cls : partition.classes) {
      out << cls.representative.str() << "\t" << cls.members.size() << "\t";
      for (std::size_t i = 0; i < cls.members.size(); ++i) {
        if (i > 0) out << ",";
        out << cls.members[i].str();
      }
      out << "\t" << cls.tree.str() << "\n";
    }
  } else {
    out << "S_" << n << ": " << partition.classes.size()
        << " Tonks classes\n";
    for (const operadlab::TonksClass& cls : partition.classes) {
      out << "{";
      for (std::size_t i = 0; i < cls.members.size(); ++i) {
        if (i > 0) out << ",";
        out << cls.members[i].str();
      }
      out << "} -> " << cls.tree.str() << "\n";
    }
  }
  emit(out.str(), output_path);
  return 0;
}

int run_lattice(std::size_t n, const std::string& order, bool color_fibers,
                const std::string& output_path, bool force) {
  check_force(n, force);
  operadlab::LatticeOrder which = operadlab::LatticeOrder::weak;
  if (order == "tamari") which = operadlab::LatticeOrder::tamari;
  if (order == "quotient") which = operadlab::LatticeOrder::quotient;
  emit(operadlab::lattice_dot(n, which, color_fibers, n), output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation-to-binary-tree maps in the operadic calculus"};
  app.require_subcommand(1);

  std::string perm_text, word_text, which_map = "phi", which_encoding = "h";
  std::string format = "text", order = "weak", output_path;
  std::size_t n = 0, max_n = 7;
  long long fuzz_count = 10000;
  int fuzz_gens = 10;
  unsigned seed = 20240901;
  bool color_fibers = false, force = false;
  std::vector<std::string> checks = {"identities", "order",         "classes",
                                     "quotient",   "local-indices", "soundness-fuzz"};

  CLI::App* map_cmd = app.add_subcommand("map", "Apply a permutation-to-tree map");
  map_cmd->add_option("--perm", perm_text, "Permutation, one-line notation")
      ->required();
  map_cmd->add_option("--map", which_map, "Which map to apply")
      ->check(CLI::IsMember({"phi", "psi", "phihat", "varphi", "g"}));

  CLI::App* encode_cmd =
      app.add_subcommand("encode", "Encode a word as an operadic term");
  encode_cmd->add_option("--word", word_text, "Word of distinct letters")
      ->required();
  encode_cmd->add_option("--encoding", which_encoding, "h or f")
      ->check(CLI::IsMember({"h", "f"}));

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the exhaustive verification suites");
  verify_cmd->add_option("--max-n", max_n, "Largest size to sweep")
      ->envname("OPERADLAB_MAX_N");
  verify_cmd->add_option("--checks", checks, "Subset of checks to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"identities", "order", "classes", "quotient",
                             "local-indices", "soundness-fuzz"}));
  verify_cmd->add_option("--fuzz-count", fuzz_count, "Random rewrite pairs");
  verify_cmd->add_option("--fuzz-gens", fuzz_gens, "Max generators per fuzz term");
  verify_cmd->add_option("--seed", seed, "Fuzz seed");
  verify_cmd->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "tsv"}));
  verify_cmd->add_option("--output", output_path, "Write report to a file");
  verify_cmd->add_flag("--force", force, "Allow n above 9");

  CLI::App* classes_cmd =
      app.add_subcommand("classes", "List the Tonks classes of S_n");
  classes_cmd->add_option("--n", n, "Size")->required();
  classes_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "tsv"}));
  classes_cmd->add_option("--output", output_path, "Write to a file");
  classes_cmd->add_flag("--force", force, "Allow n above 9");

  CLI::App* lattice_cmd =
      app.add_subcommand("lattice", "Export a Hasse diagram as DOT");
  lattice_cmd->add_option("--n", n, "Size")->required();
  lattice_cmd->add_option("--order", order, "Which order to draw")
      ->check(CLI::IsMember({"weak", "tamari", "quotient"}));
  lattice_cmd->add_flag("--color-fibers", color_fibers,
                        "Color weak-order nodes by Tonks class");
  lattice_cmd->add_option("--output", output_path, "Write to a file");
  lattice_cmd->add_flag("--force", force, "Allow n above 9");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (map_cmd->parsed()) return run_map(perm_text, which_map);
    if (encode_cmd->parsed()) return run_encode(word_text, which_encoding);
    if (verify_cmd->parsed()) {
      return run_verify(max_n, checks, fuzz_count, fuzz_gens, seed, format,
                        output_path, force);
    }
    if (classes_cmd->parsed()) {
      return run_classes(n, format, output_path, force);
    }
    if (lattice_cmd->parsed()) {
      return run_lattice(n, order, color_fibers, output_path, force);
    }
  } catch (const operadlab::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
