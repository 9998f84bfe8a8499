#include "palrich/analysis.hpp"

#include <sstream>

#include "palrich/oracle.hpp"
#include "palrich/periodic.hpp"

namespace palrich {

std::size_t default_window(const InfiniteWordSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Periodic>) {
          return 3 * s.period.size();
        } else if constexpr (std::is_same_v<T, EventuallyPeriodic>) {
          return s.preperiod.size() + 3 * s.period.size();
        } else {
          return 200;
        }
      },
      spec);
}

namespace {

AnalysisReport analyze_window(const Word& w, const AnalyzeOptions& opt) {
  AnalysisReport r;
  r.window = w.size();
  r.richness = richness_report(w, opt.with_ups);
  r.weak = is_weakly_rich(w);
  r.oddity_list = oddities(w);
  auto bw = balance_witness(w);
  r.balanced = !bw.has_value();
  r.balance_witness_ = std::move(bw);
  const std::size_t cmax = std::min(opt.complexity_max.value_or(20), w.size());
  PalindromeIndex idx(w);
  for (std::size_t n = 0; n <= cmax; ++n) {
    const ComplexityProfile cp = idx.complexity(n);
    r.complexity.push_back({cp.n, cp.palindromic, cp.factors});
  }
  return r;
}

}  // namespace

AnalysisReport analyze_word(const Word& w, const AnalyzeOptions& opt) {
  AnalysisReport r = analyze_window(w, opt);
  r.input = w;
  return r;
}

AnalysisReport analyze_spec(const InfiniteWordSpec& spec, const AnalyzeOptions& opt) {
  const std::size_t window = opt.window.value_or(default_window(spec));
  AnalysisReport r = analyze_window(prefix(spec, window, 200), opt);
  r.input = format_spec(spec);
  if (const auto* per = std::get_if<Periodic>(&spec)) {
    r.periodic = periodic_verdict(per->period);
  }
  return r;
}

PeriodicVerdict periodic_verdict(const Word& w) {
  PeriodicVerdict v;
  v.word = w;
  v.root = primitive_root(w).root;
  v.power_rich = is_power_rich(w);
  v.power_almost_rich = is_power_almost_rich(w);
  v.defect = periodic_defect(w);
  return v;
}

std::vector<std::string> oracle_divergences(const AnalysisReport& report) {
  std::vector<std::string> out;
  const Word& w = report.richness.word;
  const auto pals = oracle::naive_palindrome_set(w);
  if (pals.size() != report.richness.palindrome_count) {
    out.push_back("palindrome_count diverges from naive enumeration");
  }
  if (oracle::naive_defect(w) != report.richness.defect) {
    out.push_back("defect diverges from naive enumeration");
  }
  if (oracle::naive_rich(w) != report.richness.rich) {
    out.push_back("is_rich diverges from naive enumeration");
  }
  bool weak = true;
  for (Letter a : alphabet_of(w)) {
    for (const Word& ret : oracle::naive_complete_returns(w, Word(1, a))) {
      if (!is_palindrome(ret)) weak = false;
    }
  }
  if (weak != report.weak.weakly_rich) out.push_back("weakly_rich diverges from naive returns");
  if (w.size() <= 400 && oracle::naive_balanced(w) != report.balanced) {
    out.push_back("balanced diverges from naive window check");
  }
  for (const ComplexityRow& row : report.complexity) {
    const auto fs = factor_set(w, row.n);
    std::size_t p = 0;
    for (const Word& u : fs) p += is_palindrome(u);
    if (fs.size() != row.c || p != row.p) {
      out.push_back("complexity row diverges at n=" + std::to_string(row.n));
    }
  }
  if (report.periodic && report.periodic->defect) {
    const Word& root = report.periodic->root;
    if (6 * root.size() <= 2000) {
      const Word win = prefix(Periodic{root}, 6 * root.size());
      if (*report.periodic->defect != oracle::naive_defect(win)) {
        out.push_back("periodic defect diverges from brute-force window");
      }
    }
  }
  return out;
}

namespace {

nlohmann::json oddity_to_json(const Oddity& o) {
  return {{"representative", o.representative},
          {"palindrome", o.palindrome},
          {"end_position", o.end_position}};
}

}  // namespace

void to_json(nlohmann::json& j, const Oddity& o) { j = oddity_to_json(o); }

void from_json(const nlohmann::json& j, Oddity& o) {
  j.at("representative").get_to(o.representative);
  j.at("palindrome").get_to(o.palindrome);
  j.at("end_position").get_to(o.end_position);
}

void to_json(nlohmann::json& j, const PeriodicVerdict& v) {
  j = {{"word", v.word},
       {"primitive_root", v.root},
       {"power_rich", v.power_rich},
       {"power_almost_rich", v.power_almost_rich}};
  if (v.defect) {
    j["defect"] = *v.defect;
  } else {
    j["defect"] = nullptr;
  }
}

void from_json(const nlohmann::json& j, PeriodicVerdict& v) {
  j.at("word").get_to(v.word);
  j.at("primitive_root").get_to(v.root);
  j.at("power_rich").get_to(v.power_rich);
  j.at("power_almost_rich").get_to(v.power_almost_rich);
  if (j.at("defect").is_null()) {
    v.defect.reset();
  } else {
    v.defect = j.at("defect").get<std::size_t>();
  }
}

void to_json(nlohmann::json& j, const AnalysisReport& r) {
  j = {{"tool_version", r.tool_version},
       {"input", r.input},
       {"window", r.window},
       {"word", r.richness.word},
       {"length", r.richness.length},
       {"palindrome_count", r.richness.palindrome_count},
       {"is_rich", r.richness.rich},
       {"defect", r.richness.defect},
       {"defective_positions", r.richness.defective_positions},
       {"weakly_rich", r.weak.weakly_rich},
       {"balanced", r.balanced},
       {"oddities", nlohmann::json::array()}};
  for (const Oddity& o : r.oddity_list) j["oddities"].push_back(oddity_to_json(o));
  if (r.richness.ups_per_prefix) {
    auto arr = nlohmann::json::array();
    for (const auto& [pos, ups] : *r.richness.ups_per_prefix) {
      arr.push_back({{"position", pos}, {"ups", ups}});
    }
    j["ups_per_prefix"] = std::move(arr);
  }
  if (r.weak.witness) j["weakly_rich_witness"] = *r.weak.witness;
  if (r.balance_witness_) {
    j["balance_witness"] = {{"length", r.balance_witness_->length},
                            {"letter", std::string(1, r.balance_witness_->letter)},
                            {"u", r.balance_witness_->u},
                            {"v", r.balance_witness_->v}};
  }
  auto rows = nlohmann::json::array();
  for (const ComplexityRow& row : r.complexity) {
    rows.push_back({{"n", row.n}, {"p", row.p}, {"c", row.c}});
  }
  j["complexity"] = std::move(rows);
  if (r.periodic) j["periodic"] = *r.periodic;
}

void from_json(const nlohmann::json& j, AnalysisReport& r) {
  j.at("tool_version").get_to(r.tool_version);
  j.at("input").get_to(r.input);
  j.at("window").get_to(r.window);
  j.at("word").get_to(r.richness.word);
  j.at("length").get_to(r.richness.length);
  j.at("palindrome_count").get_to(r.richness.palindrome_count);
  j.at("is_rich").get_to(r.richness.rich);
  j.at("defect").get_to(r.richness.defect);
  j.at("defective_positions").get_to(r.richness.defective_positions);
  if (j.contains("ups_per_prefix")) {
    r.richness.ups_per_prefix.emplace();
    for (const auto& e : j.at("ups_per_prefix")) {
      r.richness.ups_per_prefix->emplace_back(e.at("position").get<std::size_t>(),
                                              e.at("ups").get<Word>());
    }
  }
  j.at("weakly_rich").get_to(r.weak.weakly_rich);
  if (j.contains("weakly_rich_witness")) r.weak.witness = j.at("weakly_rich_witness").get<Word>();
  j.at("balanced").get_to(r.balanced);
  if (j.contains("balance_witness")) {
    BalanceWitness bw;
    const auto& b = j.at("balance_witness");
    b.at("length").get_to(bw.length);
    bw.letter = b.at("letter").get<std::string>().at(0);
    b.at("u").get_to(bw.u);
    b.at("v").get_to(bw.v);
    r.balance_witness_ = bw;
  }
  r.oddity_list.clear();
  for (const auto& e : j.at("oddities")) r.oddity_list.push_back(e.get<Oddity>());
  r.complexity.clear();
  for (const auto& e : j.at("complexity")) {
    r.complexity.push_back(
        {e.at("n").get<std::size_t>(), e.at("p").get<std::size_t>(), e.at("c").get<std::size_t>()});
  }
  if (j.contains("periodic")) r.periodic = j.at("periodic").get<PeriodicVerdict>();
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "input: " << r.input << "\n";
  os << "window: " << r.window << "\n";
  os << "word: " << r.richness.word << "\n";
  os << "palindrome_count: " << r.richness.palindrome_count << "\n";
  os << "rich: " << (r.richness.rich ? "yes" : "no") << "\n";
  os << "defect: " << r.richness.defect << "\n";
  if (!r.richness.defective_positions.empty()) {
    os << "defective_positions:";
    for (std::size_t p : r.richness.defective_positions) os << ' ' << p;
    os << "\n";
  }
  os << "weakly_rich: " << (r.weak.weakly_rich ? "yes" : "no");
  if (r.weak.witness) os << " (witness " << *r.weak.witness << ")";
  os << "\n";
  if (!r.oddity_list.empty()) {
    os << "oddities:\n";
    for (const Oddity& o : r.oddity_list) {
      os << "  " << o.representative << " (palindrome " << o.palindrome << ", ends at "
         << o.end_position << ")\n";
    }
  }
  os << "balanced: " << (r.balanced ? "yes" : "no");
  if (r.balance_witness_) {
    os << " (letter " << r.balance_witness_->letter << ": " << r.balance_witness_->u << " vs "
       << r.balance_witness_->v << ")";
  }
  os << "\n";
  if (r.periodic) {
    os << "periodic: root=" << r.periodic->root
       << " power_rich=" << (r.periodic->power_rich ? "yes" : "no")
       << " power_almost_rich=" << (r.periodic->power_almost_rich ? "yes" : "no") << " defect=";
    if (r.periodic->defect) {
      os << *r.periodic->defect;
    } else {
      os << "infinite";
    }
    os << "\n";
  }
  os << "complexity:\nn,P,C\n";
  for (const ComplexityRow& row : r.complexity) {
    os << row.n << ',' << row.p << ',' << row.c << '\n';
  }
  return os.str();
}

}  // namespace palrich
