// Acceptance suite: one PASS/FAIL/SKIP line per criterion, non-zero exit if
// any criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "memload/cli.hpp"
#include "memload/depmetrics.hpp"
#include "memload/treebank_io.hpp"
#include "memload/treemetrics.hpp"
#include "published_tables.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace memload;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path kData = MEMLOAD_TEST_DATA_DIR;

// Pinned limits.
constexpr double kFixtureSeconds = 1.0;
constexpr int kRandomTrees = 1000;
constexpr int kMaxTreeDepth = 8;
constexpr int kMaxBranching = 5;
constexpr int kExhaustiveMaxUnits = 6;
constexpr int kRandomSentences = 1000;
constexpr int kMaxRandomUnits = 40;
constexpr std::uint64_t kWsjWords = 1122857;
constexpr double kWsjWordTolerance = 0.02;
constexpr int kSyntheticSentences = 50000;
constexpr double kSyntheticSeconds = 30.0;

struct Outcome {
  enum Status { pass, fail, skip } status;
  std::string detail;
};

int failures = 0;

void report(const std::string& id, const std::string& title,
            const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {Outcome::fail, std::string("exception: ") + e.what()};
  }
  const char* tag = o.status == Outcome::pass ? "PASS" : o.status == Outcome::fail ? "FAIL" : "SKIP";
  if (o.status == Outcome::fail) ++failures;
  std::cout << "[" << tag << "] " << id << " " << title << ": " << o.detail << std::endl;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string show(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

treemetrics::MetricConfig word_config(treemetrics::NumberingScheme s, bool adjust) {
  treemetrics::MetricConfig c;
  c.scheme = s;
  c.coordination_adjust = adjust;
  return c;
}

cli::RunConfig run_config(cli::Method m) {
  cli::RunConfig c;
  c.method = m;
  c.format = m == cli::Method::dep_load ? cli::InputFormat::dep : cli::InputFormat::ptb;
  return c;
}

// PTB-style corpus text with punctuation, traces and function tags.
std::string synthetic_ptb(int sentences, unsigned seed) {
  std::mt19937 rng(seed);
  testing::TreeShape shape;
  shape.max_depth = kMaxTreeDepth;
  shape.max_branching = kMaxBranching;
  shape.ptb_noise = true;
  std::string text;
  for (int i = 0; i < sentences; ++i) {
    text += "( " + testing::random_tree(rng, shape).to_bracketed() + " )\n";
  }
  return text;
}

std::string synthetic_dep(int sentences, unsigned seed) {
  std::mt19937 rng(seed);
  std::string text;
  for (int i = 0; i < sentences; ++i) {
    const int n = 1 + static_cast<int>(rng() % 30);
    auto s = testing::random_rightward_sentence(rng, n);
    for (const auto& u : s.units()) {
      text += std::to_string(u.index) + "\t" + u.surface + "\t" + std::to_string(u.head) + "\n";
    }
    text += "\n";
  }
  return text;
}

Outcome criterion1() {
  const auto start = Clock::now();
  auto corpus = treebank::parse_dep_corpus(slurp(kData / "boy_doll_ja.dep"));
  if (corpus.sentences.size() != 1 || !corpus.errors.empty()) return {Outcome::fail, "fixture did not parse"};
  const auto profile = depmetrics::load_profile(corpus.sentences.front());
  const auto analysis = cli::analyze(slurp(kData / "boy_doll_ja.dep"), run_config(cli::Method::dep_load));
  const double elapsed = seconds_since(start);
  const std::vector<int> expected = {1, 1, 2, 2, 0};
  const bool hist_ok = analysis.report.units == stats::unit_histogram(std::vector{profile});
  const bool ok = profile.values == expected && hist_ok && elapsed < kFixtureSeconds;
  return {ok ? Outcome::pass : Outcome::fail,
          show(profile.values) + " expected " + show(expected) + ", " + std::to_string(elapsed) + " s"};
}

Outcome criterion2() {
  auto raw = treebank::parse_ptb_tree(slurp(kData / "boy_doll_en.mrg"));
  auto tree = treebank::normalize_tree(raw);
  const auto yngve = treemetrics::word_depths(
      tree, cli::metric_config(run_config(cli::Method::yngve_word))).values;
  const auto sampson = treemetrics::word_depths(
      tree, cli::metric_config(run_config(cli::Method::sampson_word))).values;
  const auto sampson_oracle = testing::grouped_stack_depths(tree).values;
  const std::vector<int> ey = {2, 1, 1, 2, 1, 0};
  const std::vector<int> es = {2, 1, 1, 1, 1, 0};
  const bool ok = yngve == ey && sampson == es && sampson_oracle == es;
  return {ok ? Outcome::pass : Outcome::fail,
          "yngve " + show(yngve) + ", sampson " + show(sampson) + ", grouped-stack oracle " +
              show(sampson_oracle)};
}

Outcome criterion3() {
  std::mt19937 rng(20240601);
  testing::TreeShape shape;
  shape.max_depth = kMaxTreeDepth;
  shape.max_branching = kMaxBranching;
  std::size_t tree_mismatch = 0, leaves = 0;
  for (int i = 0; i < kRandomTrees; ++i) {
    auto t = testing::random_tree(rng, shape);
    leaves += t.leaf_count();
    auto y = treemetrics::word_depths(t, word_config(treemetrics::NumberingScheme::yngve, false));
    auto s = treemetrics::word_depths(t, word_config(treemetrics::NumberingScheme::sampson, false));
    if (y != treemetrics::stack_oracle_depths(t)) ++tree_mismatch;
    if (s != testing::grouped_stack_depths(t)) ++tree_mismatch;
  }

  std::size_t dep_mismatch = 0, sentences = 0;
  for (int n = 1; n <= kExhaustiveMaxUnits; ++n) {
    testing::for_each_sentence(n, [&](const DependencySentence& s) {
      ++sentences;
      if (depmetrics::load_profile(s) != depmetrics::load_profile_oracle(s)) ++dep_mismatch;
    });
  }
  for (int i = 0; i < kRandomSentences; ++i) {
    auto s = testing::random_sentence(rng, 1 + static_cast<int>(rng() % kMaxRandomUnits));
    ++sentences;
    if (depmetrics::load_profile(s) != depmetrics::load_profile_oracle(s)) ++dep_mismatch;
  }
  const bool ok = tree_mismatch == 0 && dep_mismatch == 0;
  return {ok ? Outcome::pass : Outcome::fail,
          std::to_string(kRandomTrees) + " trees (" + std::to_string(leaves) + " leaves), " +
              std::to_string(tree_mismatch) + " mismatches; " + std::to_string(sentences) +
              " dependency sentences, " + std::to_string(dep_mismatch) + " mismatches"};
}

Outcome criterion4() {
  std::vector<std::string> problems;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) problems.push_back(what);
  };

  // published anchors
  expect(testing::kyoto_bunsetsu_histogram().total() == 192352, "Kyoto bunsetsu total");
  expect(testing::kyoto_sentence_histogram().total() == 19954, "Kyoto sentence total");
  expect(testing::wsj_yngve_word_histogram().total() == kWsjWords, "WSJ Yngve total");
  expect(testing::wsj_sampson_word_histogram().total() == kWsjWords, "WSJ Sampson total");
  expect(testing::wsj_yngve_word_histogram().count(0) == 49208, "WSJ Yngve bin 0");
  expect(testing::wsj_sampson_word_histogram().count(0) == 49208, "WSJ Sampson bin 0");
  expect(testing::wsj_yngve_sentence_histogram().total() == 49208, "WSJ sentence total");

  // synthetic constituency corpus, counted independently of the metric code
  const std::string ptb = synthetic_ptb(5000, 17);
  std::uint64_t words = 0, sentences = 0;
  for (const auto& t : treebank::parse_ptb_corpus(ptb).trees) {
    try {
      words += treebank::normalize_tree(t).leaf_count();
      ++sentences;
    } catch (const TreebankError&) {
    }
  }
  for (bool adjust : {true, false}) {
    auto yc = run_config(cli::Method::yngve_word);
    auto sc = run_config(cli::Method::sampson_word);
    yc.coordination_adjust = sc.coordination_adjust = adjust;
    const auto y = cli::analyze(ptb, yc).report;
    const auto s = cli::analyze(ptb, sc).report;
    const std::string tag = adjust ? " (coord-adjust)" : " (no-adjust)";
    expect(y.units.total() == words, "Yngve unit total" + tag);
    expect(s.units.total() == words, "Sampson unit total" + tag);
    expect(y.sentences.total() == sentences, "Yngve sentence total" + tag);
    expect(s.sentences.total() == sentences, "Sampson sentence total" + tag);
    expect(y.units.count(0) == sentences, "Yngve bin 0" + tag);
    expect(s.units.count(0) == sentences, "Sampson bin 0" + tag);
  }
  for (auto m : {cli::Method::yngve_np, cli::Method::sampson_np}) {
    const auto r = cli::analyze(ptb, run_config(m)).report;
    expect(r.sentences.total() == sentences, "NP sentence total");
  }

  // synthetic head-final dependency corpus
  const std::string dep = synthetic_dep(5000, 23);
  std::uint64_t units = 0;
  for (const auto& s : treebank::parse_dep_corpus(dep).sentences) units += s.size();
  const auto d = cli::analyze(dep, run_config(cli::Method::dep_load)).report;
  expect(d.units.total() == units, "dep unit total");
  expect(d.sentences.total() == 5000, "dep sentence total");
  expect(d.units.count(0) == 5000, "dep bin 0");

  std::string detail = std::to_string(sentences) + " synthetic trees / " + std::to_string(words) +
                       " words, 5000 dependency sentences / " + std::to_string(units) + " units";
  for (const auto& p : problems) detail += "; violated: " + p;
  return {problems.empty() ? Outcome::pass : Outcome::fail, detail};
}

Outcome criterion5() {
  const std::vector<int> nine = {9};
  const std::vector<int> five = {5};
  const auto kyoto = stats::threshold_report(testing::kyoto_bunsetsu_histogram(), nine);
  const auto wsj = stats::threshold_report(testing::wsj_sampson_word_histogram(), five);
  const bool ok = kyoto.exceed_counts[0] == 3 && wsj.exceed_counts[0] == 311;
  return {ok ? Outcome::pass : Outcome::fail,
          "Kyoto bunsetsus > 9: " + std::to_string(kyoto.exceed_counts[0]) +
              ", WSJ Sampson words > 5: " + std::to_string(wsj.exceed_counts[0])};
}

Outcome criterion6() {
  std::mt19937 rng(777);
  testing::TreeShape shape;
  shape.max_depth = kMaxTreeDepth;
  shape.max_branching = kMaxBranching;
  std::size_t violations = 0, words = 0, coordinated_trees = 0;
  using treemetrics::NumberingScheme;
  for (int i = 0; i < kRandomTrees; ++i) {
    auto t = testing::random_tree(rng, shape);
    auto yp = treemetrics::word_depths(t, word_config(NumberingScheme::yngve, false)).values;
    auto sp = treemetrics::word_depths(t, word_config(NumberingScheme::sampson, false)).values;
    auto ya = treemetrics::word_depths(t, word_config(NumberingScheme::yngve, true)).values;
    auto sa = treemetrics::word_depths(t, word_config(NumberingScheme::sampson, true)).values;
    if (ya != yp) ++coordinated_trees;
    for (std::size_t k = 0; k < yp.size(); ++k) {
      ++words;
      if (yp[k] < sp[k] || ya[k] < sa[k]) ++violations;
      if (ya[k] > yp[k] || sa[k] > sp[k]) ++violations;
    }
  }
  return {violations == 0 ? Outcome::pass : Outcome::fail,
          std::to_string(words) + " words in " + std::to_string(kRandomTrees) + " trees (" +
              std::to_string(coordinated_trees) + " changed by coordination adjustment), " +
              std::to_string(violations) + " violations"};
}

Outcome criterion7_wsj() {
  const char* env = std::getenv("MEMLOAD_PTB_WSJ");
  if (env == nullptr || *env == '\0') {
    return {Outcome::skip, "set MEMLOAD_PTB_WSJ to a bracketed WSJ file or directory to run"};
  }
  std::string text;
  const fs::path root(env);
  if (fs::is_directory(root)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
      if (e.is_regular_file() && e.path().extension() == ".mrg") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) text += slurp(f) + "\n";
  } else {
    text = slurp(root);
  }
  const auto a = cli::analyze(text, run_config(cli::Method::yngve_word));
  const auto words = a.report.units.total();
  const double rel = std::abs(static_cast<double>(words) - kWsjWords) / kWsjWords;
  const bool ok = rel <= kWsjWordTolerance && a.report.units.count(0) == a.report.sentences.total();
  return {ok ? Outcome::pass : Outcome::fail,
          std::to_string(words) + " words (" + std::to_string(100 * rel) + "% off " +
              std::to_string(kWsjWords) + "), bin 0 = " + std::to_string(a.report.units.count(0)) +
              ", sentences = " + std::to_string(a.report.sentences.total())};
}

Outcome criterion7_timing() {
  const std::string ptb = synthetic_ptb(kSyntheticSentences, 31);
  const std::string dep = synthetic_dep(kSyntheticSentences, 37);
  std::string detail;
  bool ok = true;
  for (auto m : {cli::Method::dep_load, cli::Method::yngve_word, cli::Method::sampson_word,
                 cli::Method::yngve_np, cli::Method::sampson_np}) {
    const auto start = Clock::now();
    const auto a = cli::analyze(m == cli::Method::dep_load ? dep : ptb, run_config(m));
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < kSyntheticSeconds && a.sentences_read == kSyntheticSentences;
    detail += std::string(detail.empty() ? "" : ", ") + std::string(cli::to_string(m)) + " " +
              std::to_string(elapsed).substr(0, 5) + " s";
  }
  return {ok ? Outcome::pass : Outcome::fail,
          std::to_string(kSyntheticSentences) + " sentences: " + detail};
}

}  // namespace

int main() {
  report("AC1", "undetermined-modifiee counts for the bundled Japanese sentence", criterion1);
  report("AC2", "Yngve and Sampson word depths for the bundled English tree", criterion2);
  report("AC3", "oracle equivalence (stack, grouped stack, explicit store)", criterion3);
  report("AC4", "conservation anchors", criterion4);
  report("AC5", "threshold reports on published tables", criterion5);
  report("AC6", "dominance: Yngve >= Sampson, adjusted <= unadjusted", criterion6);
  report("AC7a", "user-supplied WSJ reproduction within 2%", criterion7_wsj);
  report("AC7b", "50,000-sentence synthetic corpus under 30 s per method", criterion7_timing);
  std::cout << (failures == 0 ? "acceptance: all criteria met" : "acceptance: FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
