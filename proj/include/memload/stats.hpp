#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "memload/profile.hpp"

namespace memload::stats {

// Frequency table over non-negative load values. Only bins with a non-zero
// count are stored.
class Histogram {
 public:
  using Bins = std::map<int, std::uint64_t>;

  Histogram() = default;
  // Zero-count entries are dropped; negative values throw.
  static Histogram from_bins(const Bins& bins);

  void add(int value, std::uint64_t count = 1);
  void merge(const Histogram& other);

  const Bins& bins() const { return bins_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t count(int value) const;
  bool empty() const { return bins_.empty(); }
  // 0 for an empty histogram.
  int max_value() const;

  bool operator==(const Histogram&) const = default;

 private:
  Bins bins_;
  std::uint64_t total_ = 0;
};

// One entry per individual value across all profiles.
Histogram unit_histogram(std::span<const DepthProfile> profiles);

// One entry per profile, at its sentence_max (0 for an empty profile).
Histogram sentence_histogram(std::span<const DepthProfile> profiles);

struct ThresholdReport {
  std::vector<int> thresholds;
  std::vector<std::uint64_t> exceed_counts;  // frequency of values > threshold
  std::vector<double> exceed_fractions;      // exceed_counts / total, 0 if empty
};

ThresholdReport threshold_report(const Histogram& hist,
                                 std::span<const int> thresholds);

inline const std::vector<int> kDefaultThresholds = {5, 7, 9};

enum class OutputFormat { text, csv, json };

// Throws std::invalid_argument("unsupported format ...").
OutputFormat parse_output_format(std::string_view name);
std::string_view to_string(OutputFormat format);

struct Report {
  std::string method;
  Histogram units;
  Histogram sentences;
  std::vector<int> thresholds = kDefaultThresholds;
};

// text: aligned table over values 0..max followed by threshold lines.
// csv:  "value,units,sentences" then one row per value in 0..max.
// json: {method, unit_histogram, sentence_histogram, total_units,
//        total_sentences, max_value, thresholds}; bins keyed by value string.
std::string render(const Report& report, OutputFormat format);
std::string render(const Report& report, std::string_view format);

}  // namespace memload::stats
