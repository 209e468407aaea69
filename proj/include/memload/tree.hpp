#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace memload {

// Ordered labeled tree. Internal nodes carry a category label and at least
// one child; leaves carry a surface form and no label.
class ConstituencyTree {
 public:
  static ConstituencyTree leaf(std::string surface);
  static ConstituencyTree node(std::string label,
                               std::vector<ConstituencyTree> children);
  // Shorthand for node(tag, {leaf(word)}).
  static ConstituencyTree preterminal(std::string tag, std::string word);

  bool is_leaf() const { return children_.empty(); }
  // An internal node whose only child is a leaf.
  bool is_preterminal() const;

  const std::string& label() const { return label_; }
  const std::string& surface() const { return surface_; }
  const std::vector<ConstituencyTree>& children() const { return children_; }

  std::size_t leaf_count() const;
  std::vector<std::string> words() const;

  // Canonical bracketed form: "(S (NP (DT The) (N boy)) ...)".
  std::string to_bracketed() const;

  bool operator==(const ConstituencyTree& other) const;

 private:
  ConstituencyTree() = default;

  std::string label_;
  std::string surface_;
  std::vector<ConstituencyTree> children_;
};

}  // namespace memload
