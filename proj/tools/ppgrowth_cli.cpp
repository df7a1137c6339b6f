// ppgrowth command-line front end.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"
#include "ppgrowth/error.hpp"
#include "ppgrowth/growthlab.hpp"
#include "ppgrowth/serialize.hpp"

using namespace ppgrowth;

namespace {

struct Globals {
  bool json_out = false;
};

std::string read_stdin() {
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::string word_input(const std::string& arg, bool given) { return given ? arg : read_stdin(); }

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string moves_text(const Automorphism& phi) {
  if (phi.moves().empty()) return "(identity)";
  std::string s;
  for (const auto& m : phi.moves()) {
    if (!s.empty()) s += ", ";
    s += format_move(m, phi.rank());
  }
  return s;
}

Automaton load_machine(const std::string& builder, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return read_automaton(ss.str());
  }
  return build_named(builder);
}

// Usage errors exit 2 with the relevant help text on stderr.
int usage_error(const CLI::App& cmd, const std::string& message) {
  std::cerr << "error: " << message << "\n\n" << cmd.help();
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth and potential positivity in free groups"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable output")->ignore_case();

  // machine
  auto* machine = app.add_subcommand("machine", "Build an automaton and inspect it");
  std::string builder, machine_file, emit_file;
  bool do_check = false, do_charpoly = false, do_eig = false;
  int digits = kDefaultDigits;
  auto* b_opt = machine->add_option("--builder", builder, "f2-lower | goldstein[:XY] | rank:<r> | rn:<n> | rnl:<n>");
  machine->add_option("--file", machine_file, "Read an automaton file instead")->excludes(b_opt);
  machine->add_flag("--check", do_check, "Run reduced, mixing and one-to-constant checks");
  machine->add_flag("--charpoly", do_charpoly, "Characteristic polynomial det(xI - A)");
  machine->add_flag("--eig", do_eig, "Dominant eigenvalue");
  machine->add_option("--digits", digits, "Significant digits for --eig")->check(CLI::Range(1, 200));
  machine->add_option("--emit", emit_file, "Write the automaton ('-' for stdout)");

  // decide
  auto* decide = app.add_subcommand("decide", "Decide potential positivity of a word");
  int decide_rank = 2;
  long long max_steps = -1;
  bool show_witness = false;
  std::string decide_word;
  decide->add_option("--rank", decide_rank, "Free group rank (only 2 is decidable here)");
  decide->add_option("--max-steps", max_steps, "Switch-step limit")->check(CLI::NonNegativeNumber);
  decide->add_flag("--witness", show_witness, "Print the automorphism and its image");
  auto* decide_arg = decide->add_option("word", decide_word, "Word; read from stdin when omitted");

  // count
  auto* count = app.add_subcommand("count", "Count closed paths or distinct words of an automaton");
  std::string count_builder, count_file;
  std::size_t count_length = 0;
  bool closed_paths = false, distinct_words = false;
  auto* cb = count->add_option("--builder", count_builder, "Automaton builder");
  count->add_option("--file", count_file, "Automaton file")->excludes(cb);
  count->add_option("--length", count_length, "Path length")->required();
  auto* cp = count->add_flag("--closed-paths", closed_paths, "trace(A^n)");
  auto* dw = count->add_flag("--distinct-words", distinct_words, "Distinct cyclic words");
  cp->excludes(dw);

  // table
  auto* table = app.add_subcommand("table", "Growth-rate table for ranks 2..7");
  int table_digits = 4;
  std::vector<int> table_ranks{2, 3, 4, 5, 6, 7};
  table->add_option("--digits", table_digits, "Decimal places of the truncated root column")->check(CLI::Range(1, 60));
  table->add_option("--ranks", table_ranks, "Ranks to include");

  // encode / decode
  auto* encode = app.add_subcommand("encode", "Encode a word of the R^n L language");
  auto* decode = app.add_subcommand("decode", "Invert an encoding");
  long enc_n = -1;
  bool enc_signal = false, dec_signal = false;
  std::string enc_word, dec_word;
  encode->add_option("--n", enc_n, "Level n")->required()->check(CLI::NonNegativeNumber);
  encode->add_flag("--signal", enc_signal, "Signal-carrying encoding");
  auto* enc_arg = encode->add_option("word", enc_word, "Word; read from stdin when omitted");
  long dec_n = -1;
  auto* dec_n_opt = decode->add_option("--n", dec_n, "Level n (not needed with --signal)")->check(CLI::NonNegativeNumber);
  decode->add_flag("--signal", dec_signal, "Decode a signal-carrying image");
  auto* dec_arg = decode->add_option("word", dec_word, "Word; read from stdin when omitted");

  // sample
  auto* sample = app.add_subcommand("sample", "Sample potentially positive words of F_2");
  std::size_t sample_length = 0, sample_count = 0, max_draws = 1'000'000;
  std::uint64_t seed = 0;
  sample->add_option("--length", sample_length, "Word length (<= 80)")->required();
  sample->add_option("--count", sample_count, "Accepted words wanted")->required();
  sample->add_option("--seed", seed, "RNG seed")->required();
  sample->add_option("--max-draws", max_draws, "Draw limit");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List cyclic words passing a filter");
  int enum_rank = 2;
  std::size_t enum_length = 0;
  std::string filter = "all";
  enumerate->add_option("--rank", enum_rank, "Free group rank")->required();
  enumerate->add_option("--length", enum_length, "Word length")->required();
  enumerate->add_option("--filter", filter, "all | goldstein | rn:<n> | pp2 | commutator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    const CLI::App* cmd = &app;
    for (const CLI::App* sub : app.get_subcommands()) cmd = sub;
    return usage_error(*cmd, e.what());
  }

  try {
    if (*machine) {
      if (builder.empty() && machine_file.empty()) {
        return usage_error(*machine, "one of --builder or --file is required");
      }
      Automaton a = load_machine(builder, machine_file);
      json j{{"rank", a.rank()}, {"nodes", a.size()}, {"edges", a.edges().size()}};
      std::ostringstream text;
      text << std::boolalpha << "rank " << a.rank() << ", " << a.size() << " nodes, " << a.edges().size() << " edges\n";
      if (do_check) {
        PropertyReport rep = check_properties(a);
        j["properties"] = to_json(rep);
        text << "reduced: " << rep.reduced << "\nstrongly connected: " << rep.strongly_connected
             << "\nmixing: " << rep.mixing << "\none-to-constant: " << rep.one_to_constant << "\n";
        for (const auto& w : rep.witnesses) text << "witness: " << describe(w) << "\n";
      }
      if (do_charpoly || do_eig) {
        IntPolynomial p = charpoly(adjacency_matrix(a));
        if (do_charpoly) {
          j["charpoly"] = {{"text", to_string(p)}, {"coefficients", to_json(p)}};
          text << "charpoly: " << to_string(p) << "\n";
        }
        if (do_eig) {
          RootApproximation r = dominant_root(p, digits);
          j["eigenvalue"] = to_json(r);
          text << "eigenvalue: " << r.to_string() << "\n";
        }
      }
      if (!emit_file.empty()) {
        std::string body = write_automaton(a);
        if (emit_file == "-") {
          std::cout << body;
          return 0;
        }
        std::ofstream out(emit_file);
        if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + emit_file + "'");
        out << body;
        j["emitted"] = emit_file;
      }
      emit(g, j, text.str());
    } else if (*decide) {
      if (decide_rank != 2) throw Error(ErrorKind::RankMismatch, "decide supports rank 2 only");
      CyclicWord w = parse_cyclic(word_input(decide_word, decide_arg->count() > 0), 2);
      std::optional<std::size_t> limit;
      if (max_steps >= 0) limit = static_cast<std::size_t>(max_steps);
      Decision d = decide_pp2(w, limit);
      json j = to_json(d);
      j["word"] = format_word(w);
      if (d.verdict == Verdict::PP) j["image"] = format_word(d.witness.apply(w));
      std::ostringstream text;
      text << to_string(d.verdict) << "\n";
      if (show_witness) {
        if (d.verdict == Verdict::PP) {
          text << "witness: " << moves_text(d.witness) << "\nimage: " << format_word(d.witness.apply(w)) << "\n";
        } else if (d.certificate) {
          text << "certificate: " << format_word(*d.certificate) << " after " << d.certificate_step
               << " steps satisfies no criterion pair\n";
        }
      }
      emit(g, j, text.str());
    } else if (*count) {
      if (count_builder.empty() && count_file.empty()) {
        return usage_error(*count, "one of --builder or --file is required");
      }
      if (!closed_paths && !distinct_words) {
        return usage_error(*count, "one of --closed-paths or --distinct-words is required");
      }
      Automaton a = load_machine(count_builder, count_file);
      mpz_class c = closed_paths ? count_closed_paths(a, count_length)
                                 : count_language(AutomatonSpec{a}, count_length);
      json j{{"length", count_length}, {"mode", closed_paths ? "closed-paths" : "distinct-words"},
             {"count", c.get_str()}};
      emit(g, j, c.get_str() + "\n");
    } else if (*table) {
      auto rows = growth_table(table_ranks, table_digits + 4);
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(to_json(r, table_digits));
      emit(g, arr, table_markdown(rows, table_digits));
    } else if (*encode) {
      CyclicWord w = parse_cyclic(word_input(enc_word, enc_arg->count() > 0), 2);
      CyclicWord img = enc_signal ? encode_signal(enc_n, w) : encode_f(enc_n, w);
      json j{{"n", enc_n}, {"signal", enc_signal}, {"word", format_word(w)}, {"image", format_word(img)}};
      emit(g, j, format_word(img) + "\n");
    } else if (*decode) {
      CyclicWord w = parse_cyclic(word_input(dec_word, dec_arg->count() > 0), 2);
      json j{{"signal", dec_signal}, {"image", format_word(w)}};
      std::string text;
      if (dec_signal) {
        SignalDecoding d = decode_signal(w);
        j["n"] = d.n;
        j["word"] = format_word(d.word);
        text = format_word(d.word) + " (n = " + std::to_string(d.n) + ")\n";
      } else {
        if (dec_n_opt->count() == 0) {
          return usage_error(*decode, "--n is required without --signal");
        }
        CyclicWord v = decode_f(dec_n, w);
        j["n"] = dec_n;
        j["word"] = format_word(v);
        text = format_word(v) + "\n";
      }
      emit(g, j, text);
    } else if (*sample) {
      SampleReport rep = sample_pp2(sample_length, sample_count, seed, max_draws);
      std::ostringstream text;
      for (const auto& w : rep.accepted) text << format_word(w) << "\n";
      text << "# " << rep.accepted.size() << " accepted of " << rep.draws << " draws; " << rep.in_lower_language
           << " in the lower-bound language (" << rep.fraction << ")\n# " << rep.caveat << "\n";
      emit(g, to_json(rep), text.str());
    } else if (*enumerate) {
      LanguageSpec spec = named_spec(filter, enum_rank);
      check_budget(enum_rank, enum_length);
      std::vector<CyclicWord> words;
      std::mutex mu;
      parallel_for_each_cyclic(enum_rank, enum_length, [&](const CyclicWord& w) {
        if (!member(spec, w)) return;
        std::lock_guard lock(mu);
        words.push_back(w);
      });
      std::sort(words.begin(), words.end());
      json arr = json::array();
      std::string text;
      for (const auto& w : words) {
        arr.push_back(format_word(w));
        text += format_word(w) + "\n";
      }
      emit(g, {{"rank", enum_rank}, {"length", enum_length}, {"filter", filter}, {"count", words.size()}, {"words", arr}},
           text);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
