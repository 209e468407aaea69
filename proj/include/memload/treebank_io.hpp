#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "memload/dependency.hpp"
#include "memload/errors.hpp"
#include "memload/tree.hpp"

namespace memload::treebank {

struct NormalizationOptions {
  bool strip_punctuation = true;
  bool strip_traces = true;
  bool normalize_labels = true;
};

struct PtbCorpus {
  std::vector<ConstituencyTree> trees;
  // One entry per rejected top-level tree; the reader resynchronizes at the
  // next top-level bracket.
  std::vector<TreebankError> errors;
};

struct DepCorpus {
  std::vector<DependencySentence> sentences;
  std::vector<TreebankError> errors;  // one per rejected block
};

// Reads a sequence of bracketed trees. An unlabeled outer wrapper
// "( (S ...) )" is unwrapped. Whitespace, including newlines, is insignificant.
PtbCorpus parse_ptb_corpus(std::string_view text);

// Parses exactly one tree, throwing the first error encountered.
ConstituencyTree parse_ptb_tree(std::string_view text);

// Blank-line separated blocks of "INDEX\tSURFACE\tHEAD" lines; lines starting
// with '#' are comments.
DepCorpus parse_dep_corpus(std::string_view text);

// Preterminal tags dropped by strip_punctuation. "$" is not among them.
bool is_punctuation_tag(std::string_view tag);

// "NP-SBJ-1" -> "NP", "NP=2" -> "NP"; labels that begin with '-' such as
// "-NONE-" and "-LRB-" are returned unchanged.
std::string normalize_label(std::string_view label);

// Throws TreebankError(EmptyAfterNormalization) when nothing is left.
ConstituencyTree normalize_tree(const ConstituencyTree& tree,
                                const NormalizationOptions& opts = {});

}  // namespace memload::treebank
