#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "memload/stats.hpp"
#include "memload/treemetrics.hpp"

namespace memload::cli {

enum class InputFormat { ptb, dep };
enum class Method { dep_load, yngve_word, sampson_word, yngve_np, sampson_np };

InputFormat parse_input_format(std::string_view name);
Method parse_method(std::string_view name);
std::string_view to_string(InputFormat format);
std::string_view to_string(Method method);

struct RunConfig {
  std::string input_path;
  InputFormat format = InputFormat::ptb;
  Method method = Method::yngve_word;
  bool coordination_adjust = true;   // ptb only
  bool strip_punctuation = true;     // ptb only
  treemetrics::NpSelector np_selector = treemetrics::NpSelector::all;  // *-np only
  stats::OutputFormat output_format = stats::OutputFormat::text;
  std::vector<int> thresholds = stats::kDefaultThresholds;
  bool strict = false;
  bool strict_rightward = false;     // dep only
};

class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws InvalidConfig when the method does not match the input format or a
// format-specific option is set for the other format.
void validate(const RunConfig& config);

treemetrics::MetricConfig metric_config(const RunConfig& config);

struct Analysis {
  stats::Report report;
  std::size_t sentences_read = 0;     // trees or blocks encountered
  std::size_t parse_errors = 0;
  std::size_t empty_after_normalization = 0;
  std::size_t leftward_heads = 0;
  std::vector<std::string> problems;  // one message per skipped sentence

  std::size_t skipped() const {
    return parse_errors + empty_after_normalization + leftward_heads;
  }
  std::size_t analyzed() const { return sentences_read - skipped(); }
};

// Runs the whole pipeline over an in-memory corpus. Per-sentence work may be
// spread over threads; the result does not depend on scheduling.
Analysis analyze(std::string_view corpus_text, const RunConfig& config);

// Exit status: 0 success, 1 input or parse failure (parse failures only
// under --strict), 2 invalid configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Command-line entry point used by the memload binary.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace memload::cli
