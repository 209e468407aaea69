#include "memload/errors.hpp"

namespace memload {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::LeafWithoutLabel: return "LeafWithoutLabel";
    case ErrorKind::UnlabeledNode: return "UnlabeledNode";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::NonContiguousIndices: return "NonContiguousIndices";
    case ErrorKind::MultipleRoots: return "MultipleRoots";
    case ErrorKind::MissingRoot: return "MissingRoot";
    case ErrorKind::SelfHead: return "SelfHead";
    case ErrorKind::HeadOutOfRange: return "HeadOutOfRange";
    case ErrorKind::LeftwardHead: return "LeftwardHead";
    case ErrorKind::EmptyAfterNormalization: return "EmptyAfterNormalization";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& detail,
                           SourceLocation where) {
  std::string msg(to_string(kind));
  if (where.line != 0) {
    msg += " at " + std::to_string(where.line) + ":" +
           std::to_string(where.column);
  }
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

TreebankError::TreebankError(ErrorKind kind, const std::string& detail,
                             SourceLocation where)
    : std::runtime_error(format_message(kind, detail, where)),
      kind_(kind),
      where_(where) {}

}  // namespace memload
