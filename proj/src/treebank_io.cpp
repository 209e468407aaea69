#include "memload/treebank_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <utility>

namespace memload::treebank {

namespace {

enum class TokenType { Open, Close, Word, End };

struct Token {
  TokenType type = TokenType::End;
  std::string_view text;
  SourceLocation where;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token tok;
    tok.where = {line_, column_};
    if (pos_ >= text_.size()) return tok;
    const char c = text_[pos_];
    if (c == '(' || c == ')') {
      tok.type = c == '(' ? TokenType::Open : TokenType::Close;
      tok.text = text_.substr(pos_, 1);
      advance();
      return tok;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      advance();
    }
    tok.type = TokenType::Word;
    tok.text = text_.substr(start, pos_ - start);
    return tok;
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct Frame {
  std::string label;  // empty for an unlabeled bracket
  SourceLocation opened;
  std::vector<ConstituencyTree> children;
  bool has_leaf = false;
  SourceLocation first_leaf;
};

// Parses one top-level tree whose opening bracket has already been consumed.
// On error, the remaining brackets of the tree are skipped before throwing so
// the caller can continue with the next tree.
class TreeReader {
 public:
  explicit TreeReader(Lexer& lexer) : lexer_(lexer) {}

  ConstituencyTree read(SourceLocation opened) {
    open_frame(opened);
    while (!stack_.empty()) {
      Token tok = lexer_.next();
      switch (tok.type) {
        case TokenType::End:
          throw TreebankError(ErrorKind::UnbalancedBrackets,
                              "missing ')' for bracket opened at " +
                                  std::to_string(stack_.back().opened.line) +
                                  ":" +
                                  std::to_string(stack_.back().opened.column),
                              tok.where);
        case TokenType::Open:
          open_frame(tok.where);
          break;
        case TokenType::Word:
          add_leaf(tok);
          break;
        case TokenType::Close:
          if (auto done = close_frame()) return std::move(*done);
          break;
      }
    }
    throw TreebankError(ErrorKind::UnbalancedBrackets, "", opened);
  }

  // Skips to the end of the current top-level tree. Returns false if the
  // input ends first.
  bool resync() {
    std::size_t depth = stack_.size();
    stack_.clear();
    while (depth > 0) {
      Token tok = lexer_.next();
      if (tok.type == TokenType::End) return false;
      if (tok.type == TokenType::Open) ++depth;
      if (tok.type == TokenType::Close) --depth;
    }
    return true;
  }

 private:
  void open_frame(SourceLocation opened) {
    Frame frame;
    frame.opened = opened;
    Token tok = lexer_.next();
    switch (tok.type) {
      case TokenType::Word:
        frame.label = std::string(tok.text);
        stack_.push_back(std::move(frame));
        return;
      case TokenType::Open:
        stack_.push_back(std::move(frame));
        open_frame(tok.where);
        return;
      case TokenType::Close:
        // Both brackets of "()" are consumed; only the enclosing ones remain.
        throw TreebankError(ErrorKind::EmptyTree, "'()'", opened);
      case TokenType::End:
        stack_.push_back(std::move(frame));
        throw TreebankError(ErrorKind::UnbalancedBrackets,
                            "input ends after '('", opened);
    }
  }

  void add_leaf(const Token& tok) {
    Frame& top = stack_.back();
    if (top.label.empty()) {
      throw TreebankError(ErrorKind::LeafWithoutLabel,
                          "token '" + std::string(tok.text) +
                              "' inside an unlabeled bracket",
                          tok.where);
    }
    if (top.has_leaf || !top.children.empty()) {
      throw TreebankError(ErrorKind::LeafWithoutLabel,
                          "token '" + std::string(tok.text) +
                              "' has siblings under '" + top.label + "'",
                          tok.where);
    }
    top.children.push_back(ConstituencyTree::leaf(std::string(tok.text)));
    top.has_leaf = true;
    top.first_leaf = tok.where;
  }

  std::optional<ConstituencyTree> close_frame() {
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    const bool outermost = stack_.empty();

    if (frame.children.empty()) {
      throw TreebankError(ErrorKind::EmptyTree,
                          frame.label.empty()
                              ? std::string("empty bracket")
                              : "'" + frame.label + "' has no children",
                          frame.opened);
    }

    ConstituencyTree built = [&] {
      if (!frame.label.empty()) {
        return ConstituencyTree::node(std::move(frame.label),
                                      std::move(frame.children));
      }
      if (!outermost || frame.children.size() != 1) {
        throw TreebankError(ErrorKind::UnlabeledNode,
                            outermost ? "outer wrapper holds more than one tree"
                                      : "nested bracket has no label",
                            frame.opened);
      }
      return std::move(frame.children.front());
    }();

    if (outermost) return built;
    Frame& parent = stack_.back();
    if (parent.has_leaf) {
      throw TreebankError(ErrorKind::LeafWithoutLabel,
                          "token has siblings under '" + parent.label + "'",
                          parent.first_leaf);
    }
    parent.children.push_back(std::move(built));
    return std::nullopt;
  }

  Lexer& lexer_;
  std::vector<Frame> stack_;
};

}  // namespace

PtbCorpus parse_ptb_corpus(std::string_view text) {
  PtbCorpus corpus;
  Lexer lexer(text);
  for (;;) {
    Token tok = lexer.next();
    if (tok.type == TokenType::End) break;
    if (tok.type == TokenType::Close) {
      corpus.errors.emplace_back(ErrorKind::UnbalancedBrackets,
                                 "unexpected ')'", tok.where);
      continue;
    }
    if (tok.type == TokenType::Word) {
      corpus.errors.emplace_back(
          ErrorKind::LeafWithoutLabel,
          "token '" + std::string(tok.text) + "' outside any bracket",
          tok.where);
      continue;
    }
    TreeReader reader(lexer);
    try {
      corpus.trees.push_back(reader.read(tok.where));
    } catch (const TreebankError& e) {
      corpus.errors.push_back(e);
      if (e.kind() == ErrorKind::UnbalancedBrackets) break;  // input exhausted
      if (!reader.resync()) break;
    }
  }
  return corpus;
}

ConstituencyTree parse_ptb_tree(std::string_view text) {
  PtbCorpus corpus = parse_ptb_corpus(text);
  if (!corpus.errors.empty()) throw corpus.errors.front();
  if (corpus.trees.empty()) throw TreebankError(ErrorKind::EmptyTree, "no tree in input");
  if (corpus.trees.size() > 1) {
    throw TreebankError(ErrorKind::UnlabeledNode,
                        "expected one tree, found " +
                            std::to_string(corpus.trees.size()));
  }
  return std::move(corpus.trees.front());
}

// ---------------------------------------------------------------------------
// Dependency TSV

namespace {

struct RawLine {
  std::string_view text;
  std::size_t line_no;
};

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

DependencySentence read_block(const std::vector<RawLine>& lines) {
  std::vector<DependencyUnit> units;
  units.reserve(lines.size());
  for (const auto& [text, line_no] : lines) {
    std::array<std::string_view, 3> fields;
    std::size_t count = 0;
    std::size_t start = 0;
    for (;;) {
      const std::size_t tab = text.find('\t', start);
      const auto field = text.substr(start, tab == std::string_view::npos
                                                ? std::string_view::npos
                                                : tab - start);
      if (count < fields.size()) fields[count] = field;
      ++count;
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    auto index = count == 3 ? to_int(fields[0]) : std::nullopt;
    auto head = count == 3 ? to_int(fields[2]) : std::nullopt;
    if (!index || !head || fields[1].empty()) {
      throw TreebankError(ErrorKind::MalformedLine,
                          "expected INDEX<TAB>SURFACE<TAB>HEAD, got '" +
                              std::string(text) + "'",
                          {line_no, 1});
    }
    units.push_back({*index, std::string(fields[1]), *head});
  }
  if (auto bad = find_violation(units)) {
    throw TreebankError(bad->kind, bad->detail, {lines[bad->position].line_no, 1});
  }
  return DependencySentence(std::move(units));
}

}  // namespace

DepCorpus parse_dep_corpus(std::string_view text) {
  DepCorpus corpus;
  std::vector<RawLine> block;
  auto flush = [&] {
    if (block.empty()) return;
    try {
      corpus.sentences.push_back(read_block(block));
    } catch (const TreebankError& e) {
      corpus.errors.push_back(e);
    }
    block.clear();
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
    if (blank) {
      flush();
    } else if (line.front() != '#') {
      block.push_back({line, line_no});
    }
    if (nl == text.size()) break;
  }
  flush();
  return corpus;
}

// ---------------------------------------------------------------------------
// Normalization

bool is_punctuation_tag(std::string_view tag) {
  static constexpr std::array<std::string_view, 8> kTags = {
      ".", ",", ":", "``", "''", "-LRB-", "-RRB-", "#"};
  return std::find(kTags.begin(), kTags.end(), tag) != kTags.end();
}

std::string normalize_label(std::string_view label) {
  if (label.empty() || label.front() == '-') return std::string(label);
  const std::size_t cut = label.find_first_of("-=|");
  return std::string(label.substr(0, cut));
}

namespace {

std::optional<ConstituencyTree> normalize_node(const ConstituencyTree& t,
                                               const NormalizationOptions& opts) {
  if (t.is_leaf()) return t;
  const std::string label =
      opts.normalize_labels ? normalize_label(t.label()) : t.label();

  if (t.is_preterminal()) {
    const std::string base = normalize_label(t.label());
    if (opts.strip_traces && base == "-NONE-") return std::nullopt;
    if (opts.strip_punctuation && is_punctuation_tag(base)) return std::nullopt;
  }

  std::vector<ConstituencyTree> kept;
  kept.reserve(t.children().size());
  for (const auto& child : t.children()) {
    if (child.is_leaf()) {
      // A bare leaf under a non-preterminal carries its parent's tag.
      const std::string base = normalize_label(t.label());
      if (!t.is_preterminal() &&
          ((opts.strip_traces && base == "-NONE-") ||
           (opts.strip_punctuation && is_punctuation_tag(base)))) {
        continue;
      }
      kept.push_back(child);
    } else if (auto n = normalize_node(child, opts)) {
      kept.push_back(std::move(*n));
    }
  }
  if (kept.empty()) return std::nullopt;
  return ConstituencyTree::node(label, std::move(kept));
}

}  // namespace

ConstituencyTree normalize_tree(const ConstituencyTree& tree,
                                const NormalizationOptions& opts) {
  auto out = normalize_node(tree, opts);
  if (!out) {
    throw TreebankError(ErrorKind::EmptyAfterNormalization,
                        "no words left in '" + tree.to_bracketed() + "'");
  }
  return std::move(*out);
}

}  // namespace memload::treebank
