#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace memload {

enum class ErrorKind {
  // bracketed trees
  UnbalancedBrackets,
  EmptyTree,
  LeafWithoutLabel,
  UnlabeledNode,
  // dependency blocks
  MalformedLine,
  NonContiguousIndices,
  MultipleRoots,
  MissingRoot,
  SelfHead,
  HeadOutOfRange,
  LeftwardHead,
  // normalization
  EmptyAfterNormalization,
};

std::string_view to_string(ErrorKind kind);

// 1-based; line 0 means "no location".
struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

class TreebankError : public std::runtime_error {
 public:
  TreebankError(ErrorKind kind, const std::string& detail,
                SourceLocation where = {});

  ErrorKind kind() const { return kind_; }
  SourceLocation where() const { return where_; }

 private:
  ErrorKind kind_;
  SourceLocation where_;
};

}  // namespace memload
