#include "memload/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "memload/depmetrics.hpp"
#include "memload/treebank_io.hpp"

namespace memload::cli {

InputFormat parse_input_format(std::string_view name) {
  if (name == "ptb") return InputFormat::ptb;
  if (name == "dep") return InputFormat::dep;
  throw InvalidConfig("unknown input format '" + std::string(name) + "'");
}

Method parse_method(std::string_view name) {
  if (name == "dep-load") return Method::dep_load;
  if (name == "yngve-word") return Method::yngve_word;
  if (name == "sampson-word") return Method::sampson_word;
  if (name == "yngve-np") return Method::yngve_np;
  if (name == "sampson-np") return Method::sampson_np;
  throw InvalidConfig("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(InputFormat format) {
  return format == InputFormat::ptb ? "ptb" : "dep";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::dep_load: return "dep-load";
    case Method::yngve_word: return "yngve-word";
    case Method::sampson_word: return "sampson-word";
    case Method::yngve_np: return "yngve-np";
    case Method::sampson_np: return "sampson-np";
  }
  return "?";
}

namespace {

bool is_np_method(Method m) {
  return m == Method::yngve_np || m == Method::sampson_np;
}

}  // namespace

void validate(const RunConfig& config) {
  const bool dep_method = config.method == Method::dep_load;
  if (dep_method != (config.format == InputFormat::dep)) {
    throw InvalidConfig("method " + std::string(to_string(config.method)) +
                        " cannot be used with --format " +
                        std::string(to_string(config.format)));
  }
  if (config.format == InputFormat::dep) {
    if (!config.coordination_adjust) {
      throw InvalidConfig("--no-coord-adjust applies to ptb input only");
    }
    if (!config.strip_punctuation) {
      throw InvalidConfig("--keep-punct applies to ptb input only");
    }
  } else if (config.strict_rightward) {
    throw InvalidConfig("--strict-rightward applies to dep input only");
  }
  if (config.np_selector != treemetrics::NpSelector::all &&
      !is_np_method(config.method)) {
    throw InvalidConfig("--np-selector applies to the *-np methods only");
  }
  if (std::any_of(config.thresholds.begin(), config.thresholds.end(),
                  [](int t) { return t < 0; })) {
    throw InvalidConfig("thresholds must be non-negative");
  }
}

treemetrics::MetricConfig metric_config(const RunConfig& config) {
  treemetrics::MetricConfig mc;
  mc.scheme = (config.method == Method::sampson_word ||
               config.method == Method::sampson_np)
                  ? treemetrics::NumberingScheme::sampson
                  : treemetrics::NumberingScheme::yngve;
  mc.unit = is_np_method(config.method) ? treemetrics::MetricUnit::np
                                        : treemetrics::MetricUnit::word;
  mc.coordination_adjust = config.coordination_adjust;
  mc.np_selector = config.np_selector;
  return mc;
}

namespace {

// Outcome for one sentence: a profile, or the reason it was skipped.
struct Outcome {
  std::optional<DepthProfile> profile;
  std::optional<TreebankError> error;
};

template <typename Item, typename Fn>
std::vector<Outcome> map_sentences(const std::vector<Item>& items, Fn fn) {
  std::vector<Outcome> out(items.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        out[i].profile = fn(items[i]);
      } catch (const TreebankError& e) {
        out[i].error = e;
      }
    }
  };
  constexpr std::size_t kMinPerThread = 4096;
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_threads =
      std::min(hw, std::max<std::size_t>(1, items.size() / kMinPerThread));
  if (n_threads <= 1) {
    work(0, items.size());
    return out;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (items.size() + n_threads - 1) / n_threads;
    for (std::size_t begin = 0; begin < items.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(items.size(), begin + chunk));
    }
  }
  return out;
}

}  // namespace

Analysis analyze(std::string_view corpus_text, const RunConfig& config) {
  validate(config);
  Analysis a;
  a.report.method = std::string(to_string(config.method));
  a.report.thresholds = config.thresholds;

  std::vector<Outcome> outcomes;
  if (config.format == InputFormat::ptb) {
    auto corpus = treebank::parse_ptb_corpus(corpus_text);
    a.parse_errors = corpus.errors.size();
    for (const auto& e : corpus.errors) a.problems.push_back(e.what());
    treebank::NormalizationOptions norm;
    norm.strip_punctuation = config.strip_punctuation;
    const auto mc = metric_config(config);
    outcomes = map_sentences(corpus.trees, [&](const ConstituencyTree& t) {
      return treemetrics::unit_depths(treebank::normalize_tree(t, norm), mc);
    });
  } else {
    auto corpus = treebank::parse_dep_corpus(corpus_text);
    a.parse_errors = corpus.errors.size();
    for (const auto& e : corpus.errors) a.problems.push_back(e.what());
    outcomes = map_sentences(corpus.sentences, [&](const DependencySentence& s) {
      if (config.strict_rightward) depmetrics::require_strictly_rightward(s);
      return depmetrics::load_profile(s);
    });
  }
  a.sentences_read = a.parse_errors + outcomes.size();

  std::vector<DepthProfile> profiles;
  profiles.reserve(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (o.profile) {
      profiles.push_back(std::move(*o.profile));
      continue;
    }
    if (o.error->kind() == ErrorKind::LeftwardHead) {
      ++a.leftward_heads;
    } else {
      ++a.empty_after_normalization;
    }
    a.problems.push_back("sentence " + std::to_string(i + 1) + ": " +
                         o.error->what());
  }
  a.report.units = stats::unit_histogram(profiles);
  a.report.sentences = stats::sentence_histogram(profiles);
  return a;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const InvalidConfig& e) {
    err << "memload: invalid configuration: " << e.what() << '\n';
    return 2;
  }

  std::ifstream in(config.input_path, std::ios::binary);
  if (!in) {
    err << "memload: cannot read '" << config.input_path << "'\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    err << "memload: error while reading '" << config.input_path << "'\n";
    return 1;
  }

  const Analysis a = analyze(buffer.str(), config);

  constexpr std::size_t kMaxListed = 20;
  const char* severity = config.strict ? "error" : "warning";
  for (std::size_t i = 0; i < a.problems.size() && i < kMaxListed; ++i) {
    err << "memload: " << severity << ": " << config.input_path << ": "
        << a.problems[i] << '\n';
  }
  if (a.problems.size() > kMaxListed) {
    err << "memload: ... " << a.problems.size() - kMaxListed
        << " more problems not shown\n";
  }
  err << "memload: " << a.sentences_read << " sentences read, " << a.analyzed()
      << " analyzed, " << a.skipped() << " skipped (" << a.parse_errors
      << " parse errors, " << a.empty_after_normalization
      << " empty after normalization, " << a.leftward_heads
      << " leftward heads)\n";

  if (config.strict && a.skipped() > 0) return 1;
  out << stats::render(a.report, config.output_format);
  return 0;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short-term memory load statistics over treebanks", "memload"};
  RunConfig config;
  std::string format;
  std::string method;
  std::string np_selector = "all";
  std::string output = "text";
  bool no_coord_adjust = false;
  bool keep_punct = false;

  app.add_option("--input", config.input_path, "Treebank file")->required();
  app.add_option("--format", format, "Input format")
      ->required()
      ->check(CLI::IsMember({"ptb", "dep"}));
  app.add_option("--method", method, "Metric")
      ->required()
      ->check(CLI::IsMember(
          {"dep-load", "yngve-word", "sampson-word", "yngve-np", "sampson-np"}));
  app.add_flag("--no-coord-adjust", no_coord_adjust,
               "Plain branch numbers inside coordinations (ptb)");
  app.add_flag("--keep-punct", keep_punct, "Keep punctuation preterminals (ptb)");
  app.add_option("--np-selector", np_selector, "NP nodes counted by *-np methods")
      ->check(CLI::IsMember({"all", "maximal"}));
  app.add_option("--thresholds", config.thresholds,
                 "Comma-separated thresholds for the exceedance report")
      ->delimiter(',');
  app.add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--strict", config.strict,
               "Abort with status 1 on any skipped sentence");
  app.add_flag("--strict-rightward", config.strict_rightward,
               "Reject leftward heads (dep)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  config.format = parse_input_format(format);
  config.method = parse_method(method);
  config.coordination_adjust = !no_coord_adjust;
  config.strip_punctuation = !keep_punct;
  config.np_selector = np_selector == "maximal" ? treemetrics::NpSelector::maximal
                                                : treemetrics::NpSelector::all;
  config.output_format = stats::parse_output_format(output);
  std::sort(config.thresholds.begin(), config.thresholds.end());
  config.thresholds.erase(
      std::unique(config.thresholds.begin(), config.thresholds.end()),
      config.thresholds.end());
  return run(config, out, err);
}

}  // namespace memload::cli
