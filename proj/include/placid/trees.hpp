#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "placid/word.hpp"

namespace placid {

/// Labelled binary tree grown leaf by leaf; whether it is right-strict
/// (label >= left subtree, < right subtree, duplicates left) or left-strict
/// (label > left subtree, <= right subtree, duplicates right) depends on
/// which insertion built it.
class BinaryTree {
 public:
  struct Node {
    Symbol label;
    std::unique_ptr<Node> left, right;
  };

  BinaryTree() = default;
  BinaryTree(const BinaryTree& other) : root_(clone(other.root_.get())) {}
  BinaryTree(BinaryTree&&) noexcept = default;
  BinaryTree& operator=(BinaryTree other) noexcept {
    root_.swap(other.root_);
    return *this;
  }
  ~BinaryTree() = default;

  bool empty() const { return !root_; }
  const Node* root() const { return root_.get(); }
  std::size_t size() const;

  /// Adds `a` as a leaf: left on a <= label, right otherwise.
  void insert_right_strict(Symbol a);
  /// Adds `a` as a leaf: left on a < label, right otherwise.
  void insert_left_strict(Symbol a);

  friend bool operator==(const BinaryTree& a, const BinaryTree& b);

 private:
  static std::unique_ptr<Node> clone(const Node* n);
  std::unique_ptr<Node> root_;
};

/// Strict binary search tree on labels; each label appears once and carries
/// a multiplicity >= 1.
class MultiplicityTree {
 public:
  struct Node {
    Symbol label;
    std::uint64_t multiplicity;
    std::unique_ptr<Node> left, right;
  };

  MultiplicityTree() = default;
  MultiplicityTree(const MultiplicityTree& other) : root_(clone(other.root_.get())) {}
  MultiplicityTree(MultiplicityTree&&) noexcept = default;
  MultiplicityTree& operator=(MultiplicityTree other) noexcept {
    root_.swap(other.root_);
    return *this;
  }
  ~MultiplicityTree() = default;

  bool empty() const { return !root_; }
  const Node* root() const { return root_.get(); }

  /// New leaf (a, 1) at the BST position, or increments a's multiplicity.
  void insert(Symbol a);

  friend bool operator==(const MultiplicityTree& a, const MultiplicityTree& b);

 private:
  static std::unique_ptr<Node> clone(const Node* n);
  std::unique_ptr<Node> root_;
};

/// Left-strict and right-strict tree on the same symbol multiset with
/// complementary canopies.
struct TwinPair {
  BinaryTree left_tree;   // left-strict
  BinaryTree right_tree;  // right-strict

  bool empty() const { return left_tree.empty() && right_tree.empty(); }
  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

BinaryTree sylv_insert(BinaryTree t, Symbol a);
BinaryTree sylvsharp_insert(BinaryTree t, Symbol a);
MultiplicityTree taig_insert(MultiplicityTree t, Symbol a);

/// Right-to-left fold of sylv_insert from the empty tree.
BinaryTree psylv(const Word& w);
/// Left-to-right fold of sylvsharp_insert from the empty tree.
BinaryTree psylvsharp(const Word& w);
/// (psylvsharp(w), psylv(w)); throws std::logic_error if the canopies fail
/// to come out complementary.
TwinPair pbaxt(const Word& w);
/// Right-to-left fold of taig_insert from the empty tree.
MultiplicityTree ptaig(const Word& w);

/// 0/1 word reading the interior empty subtrees left to right: empty left
/// subtree -> '1', empty right subtree -> '0', first and last dropped.
/// Empty tree -> empty canopy.
std::string canopy(const BinaryTree& t);
bool complementary(std::string_view a, std::string_view b);

bool is_right_strict(const BinaryTree& t);
bool is_left_strict(const BinaryTree& t);
bool is_valid(const MultiplicityTree& t);
bool is_valid(const TwinPair& p);

Evaluation evaluation_of(const BinaryTree& t);
Evaluation evaluation_of(const MultiplicityTree& t);

std::string to_line(const BinaryTree& t);
std::string to_line(const MultiplicityTree& t);
std::string to_line(const TwinPair& p);
std::string to_ascii(const BinaryTree& t);
std::string to_ascii(const MultiplicityTree& t);
std::string to_ascii(const TwinPair& p);

}  // namespace placid
