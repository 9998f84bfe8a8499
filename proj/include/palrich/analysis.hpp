#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "palrich/balance.hpp"
#include "palrich/infinite_word.hpp"
#include "palrich/richness.hpp"

namespace palrich {

inline constexpr const char* kToolVersion = "0.1.0";

struct PeriodicVerdict {
  Word word;
  Word root;
  bool power_rich = false;
  bool power_almost_rich = false;
  std::optional<std::size_t> defect;  // nullopt = infinite

  bool operator==(const PeriodicVerdict&) const = default;
};

struct ComplexityRow {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t c = 0;

  bool operator==(const ComplexityRow&) const = default;
};

// The full per-word report the CLI emits: richness, weak richness, oddities,
// balance and complexity on the analysis window, plus the infinite-word
// verdict when the input was a periodic description.
struct AnalysisReport {
  std::string tool_version = kToolVersion;
  std::string input;       // word or spec echo
  std::size_t window = 0;  // exact window length analyzed
  RichnessReport richness;
  WeakRichnessVerdict weak;
  std::vector<Oddity> oddity_list;
  bool balanced = true;
  std::optional<BalanceWitness> balance_witness_;
  std::vector<ComplexityRow> complexity;
  std::optional<PeriodicVerdict> periodic;

  bool operator==(const AnalysisReport&) const = default;
};

struct AnalyzeOptions {
  std::optional<std::size_t> window;      // overrides the default window
  std::optional<std::size_t> complexity_max;
  bool with_ups = false;
};

// Default window: the word itself for finite input, three periods for
// periodic specs, preperiod plus three periods for eventually periodic ones,
// 200 letters for morphic fixed points.
std::size_t default_window(const InfiniteWordSpec& spec);

AnalysisReport analyze_word(const Word& w, const AnalyzeOptions& opt = {});
AnalysisReport analyze_spec(const InfiniteWordSpec& spec, const AnalyzeOptions& opt = {});

PeriodicVerdict periodic_verdict(const Word& w);

// Recomputes every reported quantity with the brute-force oracle; returns
// one message per divergence (empty = clean).
std::vector<std::string> oracle_divergences(const AnalysisReport& report);

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);
void to_json(nlohmann::json& j, const PeriodicVerdict& v);
void from_json(const nlohmann::json& j, PeriodicVerdict& v);
void to_json(nlohmann::json& j, const Oddity& o);
void from_json(const nlohmann::json& j, Oddity& o);

std::string render_text(const AnalysisReport& r);

}  // namespace palrich
