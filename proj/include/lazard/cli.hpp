#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lazard/elimination.hpp"
#include "lazard/gkm.hpp"
#include "lazard/io.hpp"
#include "lazard/lyndon.hpp"
#include "lazard/oracle.hpp"
#include "lazard/presentation.hpp"
#include "lazard/selfcheck.hpp"
#include "lazard/series.hpp"

namespace lazard::cli {

enum ExitCode : int { success = 0, mismatch = 1, input_error = 2 };

namespace detail {

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError(path + ": cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

inline MultiDegree parse_multidegree(const std::string& text) {
  MultiDegree d;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(piece, &used);
      if (used != piece.size() || v < 0)
        throw std::invalid_argument(piece);
      d.counts.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("--multidegree: '" + piece + "' is not a nonnegative integer");
    }
  }
  if (d.counts.empty() || d.is_zero())
    throw InputError("--multidegree: need at least one nonzero entry");
  return d;
}

inline void check_cutoff(int cutoff, const char* flag) {
  if (cutoff < 1 || cutoff > static_cast<int>(Word::max_length))
    throw InputError(std::string(flag) + ": must be between 1 and " +
                     std::to_string(Word::max_length));
}

} // namespace detail

/// Runs one CLI invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded dimensions of presented Lie algebras by elimination and by brute force"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "tsv";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();

  auto* lyndon = app.add_subcommand("lyndon", "List Lyndon words and their bracketings");
  std::size_t letters = 2;
  int max_degree = 6;
  std::string multidegree;
  lyndon->add_option("--letters", letters, "Alphabet size")->required();
  lyndon->add_option("--max-degree", max_degree, "Maximum word length")->required();
  lyndon->add_option("--multidegree", multidegree, "Only this multidegree (comma separated)");

  auto* witt = app.add_subcommand("witt", "Dimension of a free Lie algebra component");
  witt->add_option("--multidegree", multidegree, "Comma-separated counts")->required();

  std::string presentation_file;
  std::string method = "oracle";
  auto* dims = app.add_subcommand("dims", "Quotient dimensions by brute-force ideal closure");
  dims->add_option("--presentation", presentation_file, "Presentation JSON")->required();
  dims->add_option("--max-degree", max_degree, "Total degree cutoff")->capture_default_str();
  dims->add_option("--method", method, "Computation method")
      ->check(CLI::IsMember({"oracle"}))
      ->capture_default_str();

  bool verify = false;
  auto* eliminate = app.add_subcommand("eliminate", "Predict dimensions as g semidirect L(N)");
  eliminate->add_option("--presentation", presentation_file, "Presentation JSON")->required();
  eliminate->add_option("--max-degree", max_degree, "Total degree cutoff")->capture_default_str();
  eliminate->add_flag("--verify", verify, "Compare against the brute-force oracle");

  std::string matrix_file;
  bool split_from_file = false;
  bool auto_split_flag = false;
  int max_height = 6;
  std::string gkm_method = "both";
  auto* gkm = app.add_subcommand("gkm", "Root multiplicities of a Borcherds-Cartan matrix");
  gkm->add_option("--matrix", matrix_file, "Matrix JSON")->required();
  auto* from_file_opt = gkm->add_flag("--split-from-file", split_from_file, "Use the file's split");
  gkm->add_flag("--auto-split", auto_split_flag, "Greedy split")->excludes(from_file_opt);
  gkm->add_option("--max-height", max_height, "Maximum root height")->capture_default_str();
  gkm->add_option("--method", gkm_method, "theorem, oracle or both")
      ->check(CLI::IsMember({"theorem", "oracle", "both"}))
      ->capture_default_str();

  std::string graph_file;
  auto* fpc = app.add_subcommand("fpc", "Free partially commutative Lie algebra dimensions");
  fpc->add_option("--graph", graph_file, "Commutation graph JSON")->required();
  fpc->add_option("--max-degree", max_degree, "Total degree cutoff")->capture_default_str();

  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the algebraic invariant suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  const bool json = format == "json";
  try {
    if (lyndon->parsed()) {
      detail::check_cutoff(max_degree, "--max-degree");
      if (letters < 1 || letters > Word::max_letters)
        throw InputError("--letters: must be between 1 and 16");
      const Alphabet alphabet = Alphabet::standard(letters);
      std::vector<Word> words;
      if (!multidegree.empty()) {
        const MultiDegree d = detail::parse_multidegree(multidegree);
        if (d.size() != letters)
          throw InputError("--multidegree: expected " + std::to_string(letters) + " entries");
        if (d.total() <= max_degree)
          words = lyndon_words(d);
      } else {
        words = lyndon_words_up_to(letters, static_cast<std::size_t>(max_degree));
      }
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& w : words)
          arr.push_back({{"word", w.str(alphabet)}, {"bracketing", bracketing(w).str(alphabet)}});
        out << nlohmann::json{{"alphabet", alphabet.names()}, {"words", arr}}.dump(2) << '\n';
      } else {
        for (const auto& w : words)
          out << w.str(alphabet) << '\t' << bracketing(w).str(alphabet) << '\n';
      }
      return success;
    }

    if (witt->parsed()) {
      const MultiDegree d = detail::parse_multidegree(multidegree);
      const auto dim = witt_dim(d);
      if (json)
        out << nlohmann::json{{"multidegree", d.counts}, {"dim", dim}}.dump() << '\n';
      else
        out << dim << '\n';
      return success;
    }

    if (dims->parsed()) {
      detail::check_cutoff(max_degree, "--max-degree");
      const Presentation p = presentation_from_json(detail::load_json(presentation_file));
      const GradedDims d = quotient_dims(p, max_degree);
      if (json)
        out << nlohmann::json{{"alphabet", p.alphabet().names()}, {"dims", dims_to_json(d)}}.dump(2)
            << '\n';
      else
        write_dims_tsv(out, d);
      return success;
    }

    if (eliminate->parsed()) {
      detail::check_cutoff(max_degree, "--max-degree");
      const EliminationInput input(presentation_from_json(detail::load_json(presentation_file)));
      const EliminationReport r = verify_elimination(input, max_degree, verify);
      if (json)
        out << report_to_json(r).dump(2) << '\n';
      else
        write_report_tsv(out, r);
      if (!r.ok()) {
        err << r.mismatches.size() << " mismatch(es), " << r.module_failures.size()
            << " module check failure(s)\n";
        return mismatch;
      }
      return success;
    }

    if (gkm->parsed()) {
      detail::check_cutoff(max_height, "--max-height");
      const MatrixFile file = matrix_file_from_json(detail::load_json(matrix_file));
      SplitChoice split;
      if (split_from_file) {
        if (!file.split)
          throw InputError("split: --split-from-file given but the matrix file has no split");
        split = *file.split;
      } else if (auto_split_flag || !file.split) {
        split = auto_split(file.matrix);
      } else {
        split = *file.split;
      }
      if (auto v = validate_split(file.matrix, split); !v.empty()) {
        for (const auto& violation : v)
          err << "error: invalid split: " << violation.message << '\n';
        err << "note: relations from T to S must have exponent 1 so they can be rewritten into B "
               "(README, \"Split conditions\")\n";
        return input_error;
      }
      const auto t = root_multiplicities(file.matrix, split, max_height, parse_method(gkm_method));
      if (json)
        out << table_to_json(t).dump(2) << '\n';
      else
        write_table_tsv(out, t);
      if (!t.mismatches.empty()) {
        err << t.mismatches.size() << " mismatch(es)\n";
        return mismatch;
      }
      return success;
    }

    if (fpc->parsed()) {
      detail::check_cutoff(max_degree, "--max-degree");
      const CommutationGraph g = graph_from_json(detail::load_json(graph_file));
      const auto t = fpc_dims(g, max_degree);
      if (json)
        out << table_to_json(t).dump(2) << '\n';
      else
        write_table_tsv(out, t);
      if (!t.mismatches.empty()) {
        err << t.mismatches.size() << " mismatch(es)\n";
        return mismatch;
      }
      return success;
    }

    if (selfcheck_cmd->parsed()) {
      const auto results = run_selfcheck();
      bool all = true;
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results)
          arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << arr.dump(2) << '\n';
      }
      for (const auto& r : results) {
        all = all && r.passed;
        if (!json)
          out << (r.passed ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.detail << '\n';
      }
      return all ? success : mismatch;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

} // namespace lazard::cli
