#include "placid/trees.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace placid {

std::unique_ptr<BinaryTree::Node> BinaryTree::clone(const Node* n) {
  if (!n) return nullptr;
  auto m = std::make_unique<Node>();
  m->label = n->label;
  m->left = clone(n->left.get());
  m->right = clone(n->right.get());
  return m;
}

std::size_t BinaryTree::size() const {
  std::size_t n = 0;
  std::function<void(const Node*)> walk = [&](const Node* p) {
    if (!p) return;
    ++n;
    walk(p->left.get());
    walk(p->right.get());
  };
  walk(root_.get());
  return n;
}

void BinaryTree::insert_right_strict(Symbol a) {
  std::unique_ptr<Node>* cur = &root_;
  while (*cur) cur = a <= (*cur)->label ? &(*cur)->left : &(*cur)->right;
  *cur = std::make_unique<Node>(Node{a, nullptr, nullptr});
}

void BinaryTree::insert_left_strict(Symbol a) {
  std::unique_ptr<Node>* cur = &root_;
  while (*cur) cur = a < (*cur)->label ? &(*cur)->left : &(*cur)->right;
  *cur = std::make_unique<Node>(Node{a, nullptr, nullptr});
}

bool operator==(const BinaryTree& a, const BinaryTree& b) {
  std::function<bool(const BinaryTree::Node*, const BinaryTree::Node*)> eq =
      [&](const BinaryTree::Node* p, const BinaryTree::Node* q) {
        if (!p || !q) return p == q;
        return p->label == q->label && eq(p->left.get(), q->left.get()) &&
               eq(p->right.get(), q->right.get());
      };
  return eq(a.root_.get(), b.root_.get());
}

std::unique_ptr<MultiplicityTree::Node> MultiplicityTree::clone(const Node* n) {
  if (!n) return nullptr;
  auto m = std::make_unique<Node>();
  m->label = n->label;
  m->multiplicity = n->multiplicity;
  m->left = clone(n->left.get());
  m->right = clone(n->right.get());
  return m;
}

void MultiplicityTree::insert(Symbol a) {
  std::unique_ptr<Node>* cur = &root_;
  while (*cur) {
    if (a == (*cur)->label) {
      ++(*cur)->multiplicity;
      return;
    }
    cur = a < (*cur)->label ? &(*cur)->left : &(*cur)->right;
  }
  *cur = std::make_unique<Node>(Node{a, 1, nullptr, nullptr});
}

bool operator==(const MultiplicityTree& a, const MultiplicityTree& b) {
  std::function<bool(const MultiplicityTree::Node*, const MultiplicityTree::Node*)> eq =
      [&](const MultiplicityTree::Node* p, const MultiplicityTree::Node* q) {
        if (!p || !q) return p == q;
        return p->label == q->label && p->multiplicity == q->multiplicity &&
               eq(p->left.get(), q->left.get()) && eq(p->right.get(), q->right.get());
      };
  return eq(a.root_.get(), b.root_.get());
}

BinaryTree sylv_insert(BinaryTree t, Symbol a) {
  t.insert_right_strict(a);
  return t;
}

BinaryTree sylvsharp_insert(BinaryTree t, Symbol a) {
  t.insert_left_strict(a);
  return t;
}

MultiplicityTree taig_insert(MultiplicityTree t, Symbol a) {
  t.insert(a);
  return t;
}

BinaryTree psylv(const Word& w) {
  BinaryTree t;
  for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it) t.insert_right_strict(*it);
  return t;
}

BinaryTree psylvsharp(const Word& w) {
  BinaryTree t;
  for (Symbol a : w) t.insert_left_strict(a);
  return t;
}

TwinPair pbaxt(const Word& w) {
  TwinPair p{psylvsharp(w), psylv(w)};
  if (!complementary(canopy(p.left_tree), canopy(p.right_tree)))
    throw std::logic_error("twin pair canopies are not complementary");
  return p;
}

MultiplicityTree ptaig(const Word& w) {
  MultiplicityTree t;
  for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it) t.insert(*it);
  return t;
}

std::string canopy(const BinaryTree& t) {
  if (t.empty()) return "";
  std::string bits;
  std::function<void(const BinaryTree::Node*)> walk = [&](const BinaryTree::Node* n) {
    if (n->left)
      walk(n->left.get());
    else
      bits += '1';
    if (n->right)
      walk(n->right.get());
    else
      bits += '0';
  };
  walk(t.root());
  return bits.substr(1, bits.size() - 2);
}

bool complementary(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == b[i]) return false;
  return true;
}

bool is_right_strict(const BinaryTree& t) {
  // node >= left subtree, node < right subtree
  std::function<bool(const BinaryTree::Node*, Symbol, Symbol)> ok =
      [&](const BinaryTree::Node* n, Symbol min_excl, Symbol max_incl) {
        if (!n) return true;
        if (n->label <= min_excl || n->label > max_incl) return false;
        return ok(n->left.get(), min_excl, n->label) && ok(n->right.get(), n->label, max_incl);
      };
  return ok(t.root(), 0, std::numeric_limits<Symbol>::max());
}

bool is_left_strict(const BinaryTree& t) {
  // node > left subtree, node <= right subtree
  std::function<bool(const BinaryTree::Node*, Symbol, Symbol)> ok =
      [&](const BinaryTree::Node* n, Symbol min_incl, Symbol max_excl) {
        if (!n) return true;
        if (n->label < min_incl || n->label >= max_excl) return false;
        return ok(n->left.get(), min_incl, n->label) && ok(n->right.get(), n->label, max_excl);
      };
  return ok(t.root(), 1, std::numeric_limits<Symbol>::max());
}

bool is_valid(const MultiplicityTree& t) {
  std::function<bool(const MultiplicityTree::Node*, Symbol, Symbol)> ok =
      [&](const MultiplicityTree::Node* n, Symbol lo, Symbol hi) {
        if (!n) return true;
        if (n->label <= lo || n->label >= hi || n->multiplicity < 1) return false;
        return ok(n->left.get(), lo, n->label) && ok(n->right.get(), n->label, hi);
      };
  return ok(t.root(), 0, std::numeric_limits<Symbol>::max());
}

bool is_valid(const TwinPair& p) {
  return is_left_strict(p.left_tree) && is_right_strict(p.right_tree) &&
         evaluation_of(p.left_tree) == evaluation_of(p.right_tree) &&
         complementary(canopy(p.left_tree), canopy(p.right_tree));
}

Evaluation evaluation_of(const BinaryTree& t) {
  Evaluation e;
  std::function<void(const BinaryTree::Node*)> walk = [&](const BinaryTree::Node* n) {
    if (!n) return;
    ++e.counts[n->label];
    walk(n->left.get());
    walk(n->right.get());
  };
  walk(t.root());
  return e;
}

Evaluation evaluation_of(const MultiplicityTree& t) {
  Evaluation e;
  std::function<void(const MultiplicityTree::Node*)> walk = [&](const MultiplicityTree::Node* n) {
    if (!n) return;
    e.counts[n->label] += n->multiplicity;
    walk(n->left.get());
    walk(n->right.get());
  };
  walk(t.root());
  return e;
}

namespace {

void line_node(const BinaryTree::Node* n, std::string& out) {
  if (!n) {
    out += '-';
    return;
  }
  out += '(';
  out += std::to_string(n->label);
  out += ' ';
  line_node(n->left.get(), out);
  out += ' ';
  line_node(n->right.get(), out);
  out += ')';
}

void line_node(const MultiplicityTree::Node* n, std::string& out) {
  if (!n) {
    out += '-';
    return;
  }
  out += '(';
  out += std::to_string(n->label) + "^" + std::to_string(n->multiplicity);
  out += ' ';
  line_node(n->left.get(), out);
  out += ' ';
  line_node(n->right.get(), out);
  out += ')';
}

template <class Node>
void ascii_children(const Node* n, const std::string& prefix, std::string& out,
                    std::string (*label)(const Node*)) {
  const Node* kids[2] = {n->left.get(), n->right.get()};
  const char* tags[2] = {"L", "R"};
  int last = n->right ? 1 : (n->left ? 0 : -1);
  for (int i = 0; i < 2; ++i) {
    if (!kids[i]) continue;
    bool is_last = i == last;
    out += '\n';
    out += prefix + (is_last ? "`-" : "|-") + tags[i] + " " + label(kids[i]);
    ascii_children(kids[i], prefix + (is_last ? "     " : "|    "), out, label);
  }
}

std::string bt_label(const BinaryTree::Node* n) { return std::to_string(n->label); }

std::string mt_label(const MultiplicityTree::Node* n) {
  return std::to_string(n->label) + "^" + std::to_string(n->multiplicity);
}

}  // namespace

std::string to_line(const BinaryTree& t) {
  std::string out;
  line_node(t.root(), out);
  return out;
}

std::string to_line(const MultiplicityTree& t) {
  std::string out;
  line_node(t.root(), out);
  return out;
}

std::string to_line(const TwinPair& p) {
  return "(" + to_line(p.left_tree) + " , " + to_line(p.right_tree) + ")";
}

std::string to_ascii(const BinaryTree& t) {
  if (t.empty()) return "(empty)";
  std::string out = bt_label(t.root());
  ascii_children<BinaryTree::Node>(t.root(), "", out, bt_label);
  return out;
}

std::string to_ascii(const MultiplicityTree& t) {
  if (t.empty()) return "(empty)";
  std::string out = mt_label(t.root());
  ascii_children<MultiplicityTree::Node>(t.root(), "", out, mt_label);
  return out;
}

std::string to_ascii(const TwinPair& p) {
  std::string out = "left (left-strict):\n" + to_ascii(p.left_tree);
  out += "\nright (right-strict):\n" + to_ascii(p.right_tree);
  out += "\ncanopies: " + canopy(p.left_tree) + " / " + canopy(p.right_tree);
  return out;
}

}  // namespace placid
