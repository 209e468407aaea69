#include "memload/stats.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace memload::stats {

Histogram Histogram::from_bins(const Bins& bins) {
  Histogram h;
  for (const auto& [value, count] : bins) h.add(value, count);
  return h;
}

void Histogram::add(int value, std::uint64_t count) {
  if (value < 0) {
    throw std::invalid_argument("negative histogram value " + std::to_string(value));
  }
  if (count == 0) return;
  bins_[value] += count;
  total_ += count;
}

void Histogram::merge(const Histogram& other) {
  for (const auto& [value, count] : other.bins_) add(value, count);
}

std::uint64_t Histogram::count(int value) const {
  auto it = bins_.find(value);
  return it == bins_.end() ? 0 : it->second;
}

int Histogram::max_value() const {
  return bins_.empty() ? 0 : bins_.rbegin()->first;
}

Histogram unit_histogram(std::span<const DepthProfile> profiles) {
  Histogram h;
  for (const auto& p : profiles) {
    for (int v : p.values) h.add(v);
  }
  return h;
}

Histogram sentence_histogram(std::span<const DepthProfile> profiles) {
  Histogram h;
  for (const auto& p : profiles) h.add(p.sentence_max);
  return h;
}

ThresholdReport threshold_report(const Histogram& hist,
                                 std::span<const int> thresholds) {
  ThresholdReport r;
  r.thresholds.assign(thresholds.begin(), thresholds.end());
  for (int t : thresholds) {
    std::uint64_t above = 0;
    for (auto it = hist.bins().upper_bound(t); it != hist.bins().end(); ++it) {
      above += it->second;
    }
    r.exceed_counts.push_back(above);
    r.exceed_fractions.push_back(
        hist.total() == 0 ? 0.0
                          : static_cast<double>(above) /
                                static_cast<double>(hist.total()));
  }
  return r;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unsupported format '" + std::string(name) +
                              "' (expected text, csv or json)");
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return "text";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
  }
  return "text";
}

namespace {

int table_max(const Report& r) {
  return std::max(r.units.max_value(), r.sentences.max_value());
}

bool table_empty(const Report& r) { return r.units.empty() && r.sentences.empty(); }

std::string render_csv(const Report& r) {
  std::ostringstream out;
  out << "value,units,sentences\n";
  if (table_empty(r)) return out.str();
  for (int v = 0; v <= table_max(r); ++v) {
    out << v << ',' << r.units.count(v) << ',' << r.sentences.count(v) << '\n';
  }
  return out.str();
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "method: " << r.method << '\n';
  out << std::setw(6) << "value" << std::setw(12) << "units" << std::setw(12)
      << "sentences" << '\n';
  if (!table_empty(r)) {
    for (int v = 0; v <= table_max(r); ++v) {
      out << std::setw(6) << v << std::setw(12) << r.units.count(v)
          << std::setw(12) << r.sentences.count(v) << '\n';
    }
  }
  out << std::setw(6) << "total" << std::setw(12) << r.units.total()
      << std::setw(12) << r.sentences.total() << '\n';

  const auto unit_rep = threshold_report(r.units, r.thresholds);
  const auto sent_rep = threshold_report(r.sentences, r.thresholds);
  if (!r.thresholds.empty()) {
    out << '\n'
        << std::setw(6) << "> t" << std::setw(12) << "units" << std::setw(10)
        << "share" << std::setw(12) << "sentences" << std::setw(10) << "share"
        << '\n';
    out << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < r.thresholds.size(); ++i) {
      out << std::setw(6) << r.thresholds[i] << std::setw(12)
          << unit_rep.exceed_counts[i] << std::setw(10)
          << unit_rep.exceed_fractions[i] << std::setw(12)
          << sent_rep.exceed_counts[i] << std::setw(10)
          << sent_rep.exceed_fractions[i] << '\n';
    }
  }
  return out.str();
}

nlohmann::ordered_json bins_json(const Histogram& h) {
  auto obj = nlohmann::ordered_json::object();
  for (const auto& [value, count] : h.bins()) obj[std::to_string(value)] = count;
  return obj;
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["method"] = r.method;
  j["unit_histogram"] = bins_json(r.units);
  j["sentence_histogram"] = bins_json(r.sentences);
  j["total_units"] = r.units.total();
  j["total_sentences"] = r.sentences.total();
  j["max_value"] = table_max(r);

  const auto unit_rep = threshold_report(r.units, r.thresholds);
  const auto sent_rep = threshold_report(r.sentences, r.thresholds);
  auto thresholds = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.thresholds.size(); ++i) {
    nlohmann::ordered_json t;
    t["threshold"] = r.thresholds[i];
    t["units_exceeding"] = unit_rep.exceed_counts[i];
    t["units_fraction"] = unit_rep.exceed_fractions[i];
    t["sentences_exceeding"] = sent_rep.exceed_counts[i];
    t["sentences_fraction"] = sent_rep.exceed_fractions[i];
    thresholds.push_back(std::move(t));
  }
  j["thresholds"] = std::move(thresholds);
  return j.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return render_text(report);
    case OutputFormat::csv: return render_csv(report);
    case OutputFormat::json: return render_json(report);
  }
  throw std::invalid_argument("unsupported format");
}

std::string render(const Report& report, std::string_view format) {
  return render(report, parse_output_format(format));
}

}  // namespace memload::stats
