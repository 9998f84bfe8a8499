#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "palrich/analysis.hpp"
#include "palrich/balance.hpp"
#include "palrich/classp.hpp"
#include "palrich/infinite_word.hpp"
#include "palrich/oracle.hpp"
#include "palrich/periodic.hpp"
#include "palrich/richness.hpp"
#include "palrich/sweep.hpp"

namespace {

using nlohmann::json;
using namespace palrich;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDivergence = 3;

struct GlobalOptions {
  bool json_output = false;
  bool oracle = false;
  int jobs = 1;
  std::optional<std::size_t> window;
};

// Positional word arguments may be literal words, spec strings, or @file
// with one entry per line.
std::vector<std::string> expand_inputs(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const std::string& a : args) {
    if (!a.empty() && a[0] == '@') {
      std::ifstream in(a.substr(1));
      if (!in) throw std::invalid_argument("cannot open input file: " + a.substr(1));
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(line);
      }
    } else {
      out.push_back(a);
    }
  }
  return out;
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_analyze(const GlobalOptions& g, const std::vector<std::string>& inputs, bool with_ups,
                std::optional<std::size_t> complexity_max) {
  AnalyzeOptions opt;
  opt.window = g.window;
  opt.with_ups = with_ups;
  opt.complexity_max = complexity_max;
  bool diverged = false;
  json arr = json::array();
  std::string text;
  for (const std::string& in : expand_inputs(inputs)) {
    AnalysisReport report;
    if (looks_like_spec(in)) {
      report = analyze_spec(parse_spec(in), opt);
    } else {
      if (!valid_word(in)) throw std::invalid_argument("invalid word: " + in);
      report = analyze_word(in, opt);
    }
    if (g.oracle) {
      const auto div = oracle_divergences(report);
      for (const std::string& d : div) std::cerr << "oracle divergence: " << d << "\n";
      diverged = diverged || !div.empty();
    }
    arr.push_back(report);
    text += render_text(report) + "\n";
  }
  emit(arr.size() == 1 ? arr[0] : arr, g.json_output, text);
  return diverged ? kExitDivergence : kExitOk;
}

int run_generate(const GlobalOptions& g, const std::string& kind,
                 const std::vector<std::string>& args) {
  Word out;
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw std::invalid_argument("generate " + kind + ": bad argument count");
  };
  auto num = [&](std::size_t i) { return static_cast<std::size_t>(std::stoull(args.at(i))); };
  if (kind == "fibonacci") {
    need(1);
    out = prefix(fibonacci_spec(), num(0), 200);
  } else if (kind == "thue-morse") {
    need(1);
    out = prefix(thue_morse_spec(), num(0), 200);
  } else if (kind == "fraenkel") {
    need(1);
    out = fraenkel_word(static_cast<int>(num(0)));
  } else if (kind == "episturmian") {
    need(2);
    const Word pal = iterated_palindromic_closure(args[0]);
    if (num(1) > pal.size()) {
      throw std::invalid_argument("generate episturmian: directive too short for length");
    }
    out = pal.substr(0, num(1));
  } else if (kind == "wr-family") {
    if (args.size() != 3) throw std::invalid_argument("generate wr-family: need FAMILY K PARAM");
    const int fam = std::stoi(args[0]);
    const int k = std::stoi(args[1]);
    const int p = std::stoi(args[2]);
    WRFamilySpec spec = fam == 1 ? WRFamilySpec(WRFamily1{k, p}) : WRFamilySpec(WRFamily2{k, p});
    out = wr_family_period(spec);
  } else if (kind == "fixed-point") {
    need(3);
    Morphism m = parse_morphism(args[0]);
    if (args[1].size() != 1) throw std::invalid_argument("generate fixed-point: bad seed");
    out = prefix(MorphicFixedPoint{std::move(m), args[1][0]}, num(2), 200);
  } else {
    throw std::invalid_argument("generate: unknown kind: " + kind);
  }
  emit(json{{"tool_version", kToolVersion}, {"kind", kind}, {"word", out}}, g.json_output,
       out + "\n");
  return kExitOk;
}

WordCheck hunt_check(const std::string& id) {
  if (id == "theorem-p1" || id == "return-equivalence") {
    return [](const Word& w) {
      return SweepVerdict{false, is_rich(w) != is_rich_via_returns(w)};
    };
  }
  if (id == "theorem-t-periodic" || id == "periodic-equivalence") {
    return [](const Word& w) {
      if (w.empty()) return SweepVerdict{};
      const bool power = is_power_rich(w);
      const bool window = is_rich(prefix(Periodic{w}, 4 * w.size()));
      const bool split = !two_palindrome_factorizations(w).empty() && conjugates_all_rich(w);
      return SweepVerdict{false, power != window || power != split};
    };
  }
  if (id == "prop-oddity" || id == "oddity-defect") {
    return [](const Word& w) {
      return SweepVerdict{false, oddities(w).size() > richness_report(w).defect};
    };
  }
  throw std::invalid_argument("enumerate: unknown hunt id: " + id);
}

int run_enumerate(const GlobalOptions& g, const std::string& predicate, int alphabet,
                  std::size_t max_len, const std::string& hunt_id) {
  WordCheck check;
  if (predicate == "rich") {
    check = [](const Word& w) { return SweepVerdict{is_rich(w), false}; };
  } else if (predicate == "weakly-rich-period") {
    check = [](const Word& w) {
      if (w.empty()) return SweepVerdict{};
      return SweepVerdict{is_weakly_rich(prefix(Periodic{w}, 3 * w.size())).weakly_rich, false};
    };
  } else if (predicate == "balanced-wr") {
    check = [](const Word& w) {
      if (w.empty() || !is_primitive(w)) return SweepVerdict{};
      if (!is_periodic_balanced(w)) return SweepVerdict{};
      if (!is_weakly_rich(prefix(Periodic{w}, 3 * w.size())).weakly_rich) return SweepVerdict{};
      // every hit over >= 3 letters must match a family word
      const bool matches = alphabet_of(w).size() < 3 || matches_wr_family(w).has_value();
      return SweepVerdict{true, !matches};
    };
  } else if (predicate == "counterexample-hunt") {
    check = hunt_check(hunt_id);
  } else {
    throw std::invalid_argument("enumerate: unknown predicate: " + predicate);
  }
  const SweepResult res = run_sweep(alphabet, max_len, check, g.jobs);
  json j{{"tool_version", kToolVersion}, {"predicate", predicate},
         {"alphabet_size", alphabet},  {"max_len", max_len},
         {"counts", res.counts},       {"words_checked", res.words_checked}};
  std::string text;
  for (std::size_t len = 0; len < res.counts.size(); ++len) {
    text += "len " + std::to_string(len) + ": " + std::to_string(res.counts[len]) + "\n";
  }
  if (predicate == "counterexample-hunt" || predicate == "balanced-wr") {
    if (res.first_violation) {
      j["first_violation"] = *res.first_violation;
      text += "first violation: " + *res.first_violation + "\n";
    } else {
      j["first_violation"] = nullptr;
      text += "none found\n";
    }
  }
  emit(j, g.json_output, text);
  return kExitOk;
}

json certificate_json(const Morphism& m, const std::optional<StandardPMorphism>& cert) {
  json j{{"tool_version", kToolVersion}, {"morphism", format_morphism(m)}};
  if (!cert) {
    j["class_p"] = false;
    return j;
  }
  j["class_p"] = true;
  j["p"] = cert->p;
  j["shift"] = cert->shift;
  j["standard"] = cert->shift == 0;
  json q = json::object();
  for (const auto& [x, part] : cert->parts) {
    const std::string key(1, x);
    if (const auto* app = std::get_if<AppendedPart>(&part)) {
      q[key] = {{"appended", app->palindrome}};
    } else {
      q[key] = {{"trimmed", std::get<TrimmedPart>(part).k}};
    }
  }
  j["q"] = std::move(q);
  if (cert->shift == 0) {
    j["special"] = is_special(m, *cert);
    j["special_bound"] = special_check_bound(m, *cert);
  } else {
    j["special"] = nullptr;
  }
  return j;
}

int run_morphism(const GlobalOptions& g, const std::string& sub,
                 const std::vector<std::string>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw std::invalid_argument("morphism " + sub + ": bad argument count");
  };
  if (sub == "apply") {
    need(2);
    const Word out = parse_morphism(args[0]).apply(args[1]);
    emit(json{{"tool_version", kToolVersion}, {"word", out}}, g.json_output, out + "\n");
    return kExitOk;
  }
  if (sub == "iterate") {
    need(3);
    Morphism m = parse_morphism(args[0]);
    if (args[1].size() != 1) throw std::invalid_argument("morphism iterate: bad seed");
    const Word out = m.iterate(args[1][0], std::stoul(args[2]));
    emit(json{{"tool_version", kToolVersion}, {"word", out}}, g.json_output, out + "\n");
    return kExitOk;
  }
  if (sub == "classify-p") {
    need(1);
    const Morphism m = parse_morphism(args[0]);
    const auto cert = is_class_P(m);
    const json j = certificate_json(m, cert);
    std::string text = cert ? ("class P: p=" + cert->p + " shift=" + std::to_string(cert->shift) +
                               (cert->shift == 0 ? " (standard)" : "") + "\n")
                            : "not class P\n";
    emit(j, g.json_output, text);
    return kExitOk;
  }
  if (sub == "special-test") {
    need(2);
    const Morphism m = parse_morphism(args[0]);
    const auto cert = is_class_P(m);
    if (!cert || cert->shift != 0) {
      throw std::invalid_argument("morphism special-test: not a standard class-P morphism");
    }
    const bool rich = special_rich_test(m, *cert, parse_spec(args[1]));
    emit(json{{"tool_version", kToolVersion}, {"rich", rich}}, g.json_output,
         rich ? "rich\n" : "not rich\n");
    return kExitOk;
  }
  if (sub == "fixed-point-class") {
    need(2);
    const Morphism m = parse_morphism(args[0]);
    if (args[1].size() != 1) throw std::invalid_argument("morphism fixed-point-class: bad seed");
    const auto cert = is_class_P(m);
    if (!cert || cert->shift != 0) {
      throw std::invalid_argument("morphism fixed-point-class: not a standard class-P morphism");
    }
    const FixedPointClass c = special_fixed_point_class(m, *cert, args[1][0]);
    const bool rich = c == FixedPointClass::Rich;
    emit(json{{"tool_version", kToolVersion}, {"class", rich ? "Rich" : "InfiniteDefect"}},
         g.json_output, rich ? "Rich\n" : "InfiniteDefect\n");
    return kExitOk;
  }
  throw std::invalid_argument("morphism: unknown subcommand: " + sub);
}

int run_periodic(const GlobalOptions& g, const std::string& word) {
  if (!valid_word(word) || word.empty()) throw std::invalid_argument("periodic: bad word");
  const PeriodicVerdict v = periodic_verdict(word);
  json j = v;
  j["tool_version"] = kToolVersion;
  std::string text = "root: " + v.root + "\npower_rich: " + (v.power_rich ? "yes" : "no") +
                     "\npower_almost_rich: " + (v.power_almost_rich ? "yes" : "no") +
                     "\ndefect: " +
                     (v.defect ? std::to_string(*v.defect) : std::string("infinite")) + "\n";
  emit(j, g.json_output, text);
  return kExitOk;
}

int run_balance(const GlobalOptions& g, const std::string& input) {
  Word w;
  std::optional<Word> period;
  if (looks_like_spec(input)) {
    const InfiniteWordSpec spec = parse_spec(input);
    w = prefix(spec, g.window.value_or(default_window(spec)), 200);
    if (const auto* per = std::get_if<Periodic>(&spec)) period = per->period;
  } else {
    if (!valid_word(input)) throw std::invalid_argument("balance: invalid word");
    w = input;
  }
  const auto witness = balance_witness(w);
  json j{{"tool_version", kToolVersion}, {"input", input}, {"balanced", !witness.has_value()}};
  std::string text = std::string("balanced: ") + (witness ? "no" : "yes") + "\n";
  if (period) j["periodic_balanced"] = is_periodic_balanced(*period);
  if (witness) {
    j["witness"] = {{"length", witness->length},
                    {"letter", std::string(1, witness->letter)},
                    {"u", witness->u},
                    {"v", witness->v}};
    text += "witness: letter " + std::string(1, witness->letter) + ": " + witness->u + " vs " +
            witness->v + "\n";
  }
  json gaps = json::object();
  for (Letter a : alphabet_of(w)) {
    const GapProfile gp = gap_profile(w, a);
    gaps[std::string(1, a)] = gp.gaps;
    text += "gaps " + std::string(1, a) + ":";
    for (std::size_t gap : gp.gaps) text += " " + std::to_string(gap);
    text += "\n";
  }
  j["gaps"] = std::move(gaps);
  const Word freq_base = period ? *period : w;
  if (!freq_base.empty()) {
    json freqs = json::object();
    for (const auto& [a, f] : letter_frequencies(freq_base)) {
      freqs[std::string(1, a)] = std::to_string(f.num) + "/" + std::to_string(f.den);
      text += "freq " + std::string(1, a) + ": " + std::to_string(f.num) + "/" +
              std::to_string(f.den) + "\n";
    }
    j["frequencies"] = std::move(freqs);
  }
  emit(j, g.json_output, text);
  return kExitOk;
}

int run_returns(const GlobalOptions& g, const std::string& input, const std::string& factor) {
  Word w;
  if (looks_like_spec(input)) {
    const InfiniteWordSpec spec = parse_spec(input);
    w = prefix(spec, g.window.value_or(default_window(spec)), 200);
  } else {
    if (!valid_word(input)) throw std::invalid_argument("returns: invalid word");
    w = input;
  }
  const auto rets = complete_returns(w, factor);
  json arr = json::array();
  std::string text;
  for (const CompleteReturn& cr : rets) {
    arr.push_back({{"return", cr.return_word}, {"palindrome", is_palindrome(cr.return_word)}});
    text += cr.return_word + (is_palindrome(cr.return_word) ? "" : "  (not a palindrome)") + "\n";
  }
  emit(json{{"tool_version", kToolVersion}, {"factor", factor}, {"returns", arr}}, g.json_output,
       text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"palindromic richness toolkit"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json_output, "emit machine-readable JSON");
  app.add_flag("--oracle", g.oracle, "cross-check reports against the brute-force oracle");
  std::size_t window_arg = 0;
  auto* window_opt = app.add_option("--window", window_arg, "analysis window length");
  app.add_option("--jobs", g.jobs, "worker parallelism for enumerate")->check(CLI::Range(1, 256));

  auto* analyze = app.add_subcommand("analyze", "full report on words or specs");
  std::vector<std::string> analyze_inputs;
  bool with_ups = false;
  std::size_t complexity_arg = 0;
  analyze->add_option("input", analyze_inputs, "words, specs, or @file")->required();
  analyze->add_flag("--ups", with_ups, "include the ups of every non-defective prefix");
  auto* complexity_opt =
      analyze->add_option("--complexity", complexity_arg, "largest complexity row");

  auto* generate = app.add_subcommand("generate", "well-known words and families");
  std::string gen_kind;
  std::vector<std::string> extra_args;
  generate->add_option("kind", gen_kind,
                       "fibonacci|thue-morse|fraenkel|episturmian|wr-family|fixed-point")
      ->required();
  generate->add_option("args", extra_args, "kind-specific arguments");

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive word-space sweeps");
  std::string predicate, hunt_id;
  enumerate->add_option("predicate", predicate,
                        "rich|weakly-rich-period|balanced-wr|counterexample-hunt")
      ->required();
  enumerate->add_option("args", extra_args, "optional hunt id, then alphabet size and max length");

  auto* morphism = app.add_subcommand("morphism", "morphism operations");
  std::string mor_sub;
  morphism->add_option("sub", mor_sub, "apply|iterate|classify-p|special-test|fixed-point-class")
      ->required();
  morphism->add_option("args", extra_args, "subcommand arguments");

  auto* periodic_cmd = app.add_subcommand("periodic", "verdict on the periodic word w^infinity");
  std::string periodic_word;
  periodic_cmd->add_option("word", periodic_word, "the period")->required();

  auto* balance_cmd = app.add_subcommand("balance", "balance report");
  std::string balance_input;
  balance_cmd->add_option("input", balance_input, "word or spec")->required();

  auto* returns_cmd = app.add_subcommand("returns", "complete returns to a factor");
  std::string returns_input, returns_factor;
  returns_cmd->add_option("input", returns_input, "word or spec")->required();
  returns_cmd->add_option("factor", returns_factor, "the factor")->required();

  try {
    app.parse(argc, argv);
    if (*window_opt) g.window = window_arg;

    if (*analyze) {
      std::optional<std::size_t> cmax;
      if (*complexity_opt) cmax = complexity_arg;
      return run_analyze(g, analyze_inputs, with_ups, cmax);
    }
    if (*generate) return run_generate(g, gen_kind, extra_args);
    if (*enumerate) {
      std::vector<std::string> rest = extra_args;
      if (predicate == "counterexample-hunt") {
        if (rest.size() != 3) {
          throw std::invalid_argument("enumerate counterexample-hunt: need ID ALPHABET MAXLEN");
        }
        hunt_id = rest[0];
        rest.erase(rest.begin());
      }
      if (rest.size() != 2) throw std::invalid_argument("enumerate: need ALPHABET MAXLEN");
      return run_enumerate(g, predicate, std::stoi(rest[0]), std::stoul(rest[1]), hunt_id);
    }
    if (*morphism) return run_morphism(g, mor_sub, extra_args);
    if (*periodic_cmd) return run_periodic(g, periodic_word);
    if (*balance_cmd) return run_balance(g, balance_input);
    if (*returns_cmd) return run_returns(g, returns_input, returns_factor);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
