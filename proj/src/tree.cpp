#include "memload/tree.hpp"

#include <stdexcept>
#include <utility>

namespace memload {

ConstituencyTree ConstituencyTree::leaf(std::string surface) {
  if (surface.empty()) throw std::invalid_argument("leaf with empty surface");
  ConstituencyTree t;
  t.surface_ = std::move(surface);
  return t;
}

ConstituencyTree ConstituencyTree::node(std::string label,
                                        std::vector<ConstituencyTree> children) {
  if (label.empty()) throw std::invalid_argument("internal node without label");
  if (children.empty()) {
    throw std::invalid_argument("internal node '" + label + "' has no children");
  }
  ConstituencyTree t;
  t.label_ = std::move(label);
  t.children_ = std::move(children);
  return t;
}

ConstituencyTree ConstituencyTree::preterminal(std::string tag,
                                               std::string word) {
  std::vector<ConstituencyTree> kids;
  kids.push_back(leaf(std::move(word)));
  return node(std::move(tag), std::move(kids));
}

bool ConstituencyTree::is_preterminal() const {
  return children_.size() == 1 && children_.front().is_leaf();
}

std::size_t ConstituencyTree::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

namespace {

void collect_words(const ConstituencyTree& t, std::vector<std::string>& out) {
  if (t.is_leaf()) {
    out.push_back(t.surface());
    return;
  }
  for (const auto& c : t.children()) collect_words(c, out);
}

void write_bracketed(const ConstituencyTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += t.surface();
    return;
  }
  out += '(';
  out += t.label();
  for (const auto& c : t.children()) {
    out += ' ';
    write_bracketed(c, out);
  }
  out += ')';
}

}  // namespace

std::vector<std::string> ConstituencyTree::words() const {
  std::vector<std::string> out;
  collect_words(*this, out);
  return out;
}

std::string ConstituencyTree::to_bracketed() const {
  std::string out;
  write_bracketed(*this, out);
  return out;
}

bool ConstituencyTree::operator==(const ConstituencyTree& other) const {
  return label_ == other.label_ && surface_ == other.surface_ &&
         children_ == other.children_;
}

}  // namespace memload
