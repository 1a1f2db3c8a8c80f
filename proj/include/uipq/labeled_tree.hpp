#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "uipq/errors.hpp"
#include "uipq/rational.hpp"

namespace uipq {

// Plane tree with integer vertex labels. Node 0 is the root; the children of a
// node occupy a contiguous id range [first_child, first_child + n_children),
// ordered left to right. Label increments across edges lie in {-1, 0, +1}.
struct LabeledTree {
  std::vector<std::int32_t> parent;       // -1 at the root
  std::vector<std::int32_t> label;
  std::vector<std::int32_t> first_child;  // -1 when childless
  std::vector<std::int32_t> n_children;

  int n_vertices() const { return static_cast<int>(parent.size()); }
  int n_edges() const { return n_vertices() - 1; }

  std::int32_t child(std::int32_t v, int k) const { return first_child[v] + k; }

  static LabeledTree single(std::int32_t root_label) {
    LabeledTree t;
    t.parent = {-1};
    t.label = {root_label};
    t.first_child = {-1};
    t.n_children = {0};
    return t;
  }

  // Structural + label validity.
  bool valid() const {
    int n = n_vertices();
    if (n == 0 || parent[0] != -1) return false;
    for (int v = 0; v < n; ++v) {
      if (n_children[v] < 0) return false;
      if (n_children[v] > 0) {
        std::int32_t fc = first_child[v];
        if (fc <= 0 || fc + n_children[v] > n) return false;
        for (int k = 0; k < n_children[v]; ++k) {
          std::int32_t c = fc + k;
          if (parent[c] != v) return false;
          std::int32_t d = label[c] - label[v];
          if (d < -1 || d > 1) return false;
        }
      }
      if (v > 0 && (parent[v] < 0 || parent[v] >= n)) return false;
    }
    return true;
  }

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.parent == b.parent && a.label == b.label && a.first_child == b.first_child &&
           a.n_children == b.n_children;
  }

  std::vector<std::int32_t> depths() const {
    std::vector<std::int32_t> d(n_vertices(), 0);
    for (int v = 1; v < n_vertices(); ++v) d[v] = d[parent[v]] + 1;
    // parents may appear after children only for malformed trees; builder
    // layouts always allocate parents first.
    return d;
  }

  std::int32_t min_label() const {
    std::int32_t m = label[0];
    for (auto l : label) m = std::min(m, l);
    return m;
  }
};

// Incremental builder: children of a node are appended in one contiguous block.
class TreeBuilder {
 public:
  explicit TreeBuilder(std::int32_t root_label) {
    t_.parent = {-1};
    t_.label = {root_label};
    t_.first_child = {-1};
    t_.n_children = {0};
  }

  // Appends k children of v with the given label deltas (each in {-1,0,1}).
  // Returns the id of the first child. Must be called at most once per node.
  std::int32_t add_children(std::int32_t v, const std::vector<std::int32_t>& deltas) {
    std::int32_t fc = static_cast<std::int32_t>(t_.parent.size());
    t_.first_child[v] = deltas.empty() ? -1 : fc;
    t_.n_children[v] = static_cast<std::int32_t>(deltas.size());
    for (std::int32_t d : deltas) {
      t_.parent.push_back(v);
      t_.label.push_back(t_.label[v] + d);
      t_.first_child.push_back(-1);
      t_.n_children.push_back(0);
    }
    return fc;
  }

  std::int32_t add_children_count(std::int32_t v, int k) {
    std::int32_t fc = static_cast<std::int32_t>(t_.parent.size());
    t_.first_child[v] = k == 0 ? -1 : fc;
    t_.n_children[v] = k;
    for (int i = 0; i < k; ++i) {
      t_.parent.push_back(v);
      t_.label.push_back(t_.label[v]);
      t_.first_child.push_back(-1);
      t_.n_children.push_back(0);
    }
    return fc;
  }

  void set_label(std::int32_t v, std::int32_t l) { t_.label[v] = l; }
  std::int32_t label(std::int32_t v) const { return t_.label[v]; }
  int size() const { return static_cast<int>(t_.parent.size()); }
  LabeledTree take() { return std::move(t_); }

 private:
  LabeledTree t_;
};

// ---------------------------------------------------------------------------
// Text format: "(L (d ...) (d ...))" where L is the absolute root label and
// every nested integer is the label delta from its parent.
// ---------------------------------------------------------------------------

inline void format_tree_rec(const LabeledTree& t, std::int32_t v, std::string& out) {
  out += '(';
  out += std::to_string(v == 0 ? t.label[0] : t.label[v] - t.label[t.parent[v]]);
  for (int k = 0; k < t.n_children[v]; ++k) {
    out += ' ';
    format_tree_rec(t, t.child(v, k), out);
  }
  out += ')';
}

inline std::string format_tree(const LabeledTree& t) {
  std::string out;
  format_tree_rec(t, 0, out);
  return out;
}

inline LabeledTree parse_tree(const std::string& s) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
  };
  auto parse_int = [&]() -> std::int64_t {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    require(pos > start && !(pos == start + 1 && (s[start] == '-' || s[start] == '+')),
            Errc::MalformedInput, "expected integer in tree literal");
    return std::stoll(s.substr(start, pos - start));
  };

  // Two passes in one: recursive descent building via TreeBuilder requires the
  // children block to be added at once, so collect deltas per node first.
  struct Frame {
    std::int32_t node;
  };

  skip_ws();
  require(pos < s.size() && s[pos] == '(', Errc::MalformedInput, "tree literal must start with '('");
  ++pos;
  std::int64_t root_label = parse_int();

  // Parse into a temporary child-list representation.
  std::vector<std::vector<std::int32_t>> kids(1);
  std::vector<std::int32_t> deltas{0};
  std::vector<std::int32_t> stack{0};
  while (true) {
    skip_ws();
    require(pos < s.size(), Errc::MalformedInput, "unterminated tree literal");
    if (s[pos] == ')') {
      ++pos;
      stack.pop_back();
      if (stack.empty()) break;
      continue;
    }
    require(s[pos] == '(', Errc::MalformedInput, "expected '(' or ')' in tree literal");
    ++pos;
    std::int64_t d = parse_int();
    require(d >= -1 && d <= 1, Errc::MalformedInput, "label delta out of {-1,0,1}");
    std::int32_t id = static_cast<std::int32_t>(kids.size());
    kids.emplace_back();
    deltas.push_back(static_cast<std::int32_t>(d));
    kids[stack.back()].push_back(id);
    stack.push_back(id);
  }
  skip_ws();
  require(pos == s.size(), Errc::MalformedInput, "trailing characters after tree literal");

  // Re-lay out with contiguous children blocks, preserving order.
  TreeBuilder b(static_cast<std::int32_t>(root_label));
  std::vector<std::int32_t> remap(kids.size(), -1);
  remap[0] = 0;
  std::vector<std::int32_t> todo{0};
  while (!todo.empty()) {
    std::int32_t v = todo.back();
    todo.pop_back();
    std::vector<std::int32_t> ds;
    ds.reserve(kids[v].size());
    for (std::int32_t c : kids[v]) ds.push_back(deltas[c]);
    std::int32_t fc = b.add_children(remap[v], ds);
    for (std::size_t i = 0; i < kids[v].size(); ++i) {
      remap[kids[v][i]] = fc + static_cast<std::int32_t>(i);
      todo.push_back(kids[v][i]);
    }
  }
  return b.take();
}

// ---------------------------------------------------------------------------
// Contour machinery (finite trees)
// ---------------------------------------------------------------------------

// Clockwise contour corner sequence: 2n corners for an n-edge tree, starting
// at the root corner left of the edge to the first child. A vertex of degree k
// owns exactly k corners. The single-vertex tree has an empty sequence.
inline std::vector<std::int32_t> corner_sequence(const LabeledTree& t) {
  std::vector<std::int32_t> seq;
  seq.reserve(2 * static_cast<std::size_t>(std::max(0, t.n_edges())));
  // Iterative walk; frame carries (vertex, next child slot).
  std::vector<std::pair<std::int32_t, std::int32_t>> stack;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    auto& [v, k] = stack.back();
    if (k < t.n_children[v]) {
      seq.push_back(v);
      std::int32_t c = t.child(v, k);
      ++k;
      stack.push_back({c, 0});
    } else {
      if (v != 0) seq.push_back(v);
      stack.pop_back();
    }
  }
  return seq;
}

struct ContourPair {
  std::vector<std::int32_t> C;  // heights, length 2n+1, C(0)=C(2n)=0
  std::vector<std::int32_t> V;  // labels, length 2n+1, V(2n)=V(0)
};

inline ContourPair contour_encode(const LabeledTree& t) {
  ContourPair cp;
  auto seq = corner_sequence(t);
  auto dep = t.depths();
  cp.C.reserve(seq.size() + 1);
  cp.V.reserve(seq.size() + 1);
  if (seq.empty()) {
    cp.C = {0};
    cp.V = {t.label[0]};
    return cp;
  }
  for (auto v : seq) {
    cp.C.push_back(dep[v]);
    cp.V.push_back(t.label[v]);
  }
  cp.C.push_back(0);
  cp.V.push_back(t.label[0]);
  return cp;
}

inline LabeledTree contour_decode(const ContourPair& cp) {
  require(!cp.C.empty() && cp.C.size() == cp.V.size(), Errc::MalformedContour,
          "contour sequences empty or of mismatched length");
  require(cp.C.front() == 0 && cp.C.back() == 0, Errc::MalformedContour,
          "contour must start and end at height 0");
  require(cp.C.size() % 2 == 1, Errc::MalformedContour, "contour length must be odd");
  if (cp.C.size() == 1) return LabeledTree::single(cp.V[0]);

  // Collect children per node on a first pass over the height steps.
  std::vector<std::vector<std::int32_t>> kids(1);
  std::vector<std::int32_t> labels{cp.V[0]};
  std::vector<std::int32_t> stack{0};
  for (std::size_t i = 1; i < cp.C.size(); ++i) {
    int dc = cp.C[i] - cp.C[i - 1];
    require(dc == 1 || dc == -1, Errc::MalformedContour, "contour steps must be +-1");
    require(cp.C[i] >= 0, Errc::MalformedContour, "contour dips below the root");
    if (dc == 1) {
      std::int32_t id = static_cast<std::int32_t>(kids.size());
      kids.emplace_back();
      labels.push_back(cp.V[i]);
      require(std::abs(cp.V[i] - labels[stack.back()]) <= 1, Errc::MalformedContour,
              "label step exceeds 1 across an edge");
      kids[stack.back()].push_back(id);
      stack.push_back(id);
    } else {
      stack.pop_back();
      require(!stack.empty(), Errc::MalformedContour, "contour ascends past the root");
      require(cp.V[i] == labels[stack.back()], Errc::MalformedContour,
              "label mismatch when revisiting a vertex");
    }
  }
  require(stack.size() == 1, Errc::MalformedContour, "contour does not close at the root");

  TreeBuilder b(labels[0]);
  std::vector<std::int32_t> remap(kids.size(), -1);
  remap[0] = 0;
  std::vector<std::int32_t> todo{0};
  while (!todo.empty()) {
    std::int32_t v = todo.back();
    todo.pop_back();
    std::vector<std::int32_t> ds;
    for (std::int32_t c : kids[v]) ds.push_back(labels[c] - labels[v]);
    std::int32_t fc = b.add_children(remap[v], ds);
    for (std::size_t i = 0; i < kids[v].size(); ++i) {
      remap[kids[v][i]] = fc + static_cast<std::int32_t>(i);
      todo.push_back(kids[v][i]);
    }
  }
  return b.take();
}

// Forest encoding: concatenated extended contours taking a -1 step at every
// newly visited tree. Tree i occupies indices [kappa_i, kappa_{i+1}) with
// kappa_i = inf{m : C(m) = -i}; C has one extra trailing entry equal to -k.
// V are the root-relative labels, Vp the absolute ones:
// Vp(m) = roots_labels[-minC(m)] + V(m).
struct ForestContour {
  std::vector<std::int64_t> C;       // length total+1
  std::vector<std::int32_t> V;       // length total
  std::vector<std::int32_t> Vp;      // length total
  std::vector<std::int64_t> kappa;   // length k+1, kappa[0] = 0
};

inline ForestContour forest_contour(const std::vector<std::int32_t>& roots_labels,
                                    const std::vector<LabeledTree>& trees) {
  require(roots_labels.size() == trees.size(), Errc::BadConfig,
          "forest_contour: need one root label per tree");
  ForestContour fc;
  std::int64_t pos = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    require(trees[i].label[0] == roots_labels[i], Errc::BadConfig,
            "forest_contour: tree root label mismatch");
    fc.kappa.push_back(pos);
    ContourPair cp = contour_encode(trees[i]);
    for (std::size_t j = 0; j < cp.C.size(); ++j) {
      fc.C.push_back(cp.C[j] - static_cast<std::int64_t>(i));
      fc.V.push_back(cp.V[j] - trees[i].label[0]);
      fc.Vp.push_back(cp.V[j]);
    }
    pos += static_cast<std::int64_t>(cp.C.size());
  }
  fc.kappa.push_back(pos);
  fc.C.push_back(-static_cast<std::int64_t>(trees.size()));
  return fc;
}

// ---------------------------------------------------------------------------
// Paths and local balls
// ---------------------------------------------------------------------------

// Vertices of the unique path from a to b, endpoints included.
inline std::vector<std::int32_t> tree_path(const LabeledTree& t, std::int32_t a, std::int32_t b) {
  auto dep = t.depths();
  std::vector<std::int32_t> up_a, up_b;
  std::int32_t x = a, y = b;
  while (dep[x] > dep[y]) {
    up_a.push_back(x);
    x = t.parent[x];
  }
  while (dep[y] > dep[x]) {
    up_b.push_back(y);
    y = t.parent[y];
  }
  while (x != y) {
    up_a.push_back(x);
    up_b.push_back(y);
    x = t.parent[x];
    y = t.parent[y];
  }
  up_a.push_back(x);
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return up_a;
}

// Labeled subtree of all vertices at depth <= h.
inline LabeledTree tree_ball(const LabeledTree& t, int h) {
  auto dep = t.depths();
  TreeBuilder b(t.label[0]);
  std::vector<std::pair<std::int32_t, std::int32_t>> todo{{0, 0}};  // (orig, new)
  while (!todo.empty()) {
    auto [v, nv] = todo.back();
    todo.pop_back();
    std::vector<std::int32_t> ds;
    if (dep[v] < h) {
      for (int k = 0; k < t.n_children[v]; ++k) ds.push_back(t.label[t.child(v, k)] - t.label[v]);
    }
    std::int32_t fc = b.add_children(nv, ds);
    for (std::size_t k = 0; k < ds.size(); ++k)
      todo.push_back({t.child(v, static_cast<int>(k)), fc + static_cast<std::int32_t>(k)});
  }
  return b.take();
}

// Local distance (1 + sup{h : balls at height h agree})^{-1}, as an exact
// rational; 0 when the trees are equal.
inline Rat tree_local_distance(const LabeledTree& a, const LabeledTree& b) {
  if (a == b) return Rat(0);
  int h = 0;
  while (true) {
    if (!(tree_ball(a, h) == tree_ball(b, h))) {
      // first disagreement at height h: sup of agreeing heights is h-1
      return Rat(1, h == 0 ? 1 : h);
    }
    ++h;
  }
}

}  // namespace uipq
