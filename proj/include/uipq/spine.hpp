#pragma once

#include <cstdint>
#include <vector>

#include "uipq/errors.hpp"
#include "uipq/samplers.hpp"

namespace uipq {

// Finite window of the two-sided corner sequence of a truncated spine tree.
//
// Corners are stored in one linear array in contour order: the right side
// reversed (c_{-nR} ... c_{-1}), then the shared root corner c_0, then the
// left side (c_1 ... c_{+nL}). The left side is walked clockwise, the right
// side counterclockwise, and at every spine vertex S(i), i < K_use, the walk
// emits the corner before each grafted subtree plus the corner before the
// spine edge. S(K_use) has no corners in the window.
struct SpineWindow {
  // global vertices: 0..K_use = spine, then left-subtree vertices, then right
  std::vector<std::int32_t> vlabel;
  std::vector<std::int32_t> vparent;        // parent in the tree; -1 at S(0)
  std::vector<std::int32_t> spine_index;    // -1 off the spine
  std::vector<std::int32_t> left_child_head;   // first left-side child (linked list)
  std::vector<std::int32_t> left_child_next;   // sibling link, -1 ends
  int K = 0;                                 // spine vertices S(0..K) present

  // corners, linear contour order
  std::vector<std::int32_t> cvertex;
  std::vector<std::int32_t> clabel;
  std::int64_t c0 = 0;                       // linear index of the root corner
  std::vector<std::int64_t> succ;            // -1 when unresolved in the window

  std::vector<std::int64_t> last_left_corner;  // per vertex; -1 if none at index >= c0
  std::vector<std::int64_t> first_corner;      // per vertex; min linear index, -1 if none

  std::int64_t n_corners() const { return static_cast<std::int64_t>(cvertex.size()); }
  int n_vertices() const { return static_cast<int>(vlabel.size()); }
  bool is_left(std::int64_t c) const { return c >= c0; }
};

namespace detail_spine {

// Contour of a hanging subtree rooted at global vertex `gv` whose structure
// comes from `tree` rooted at local vertex `lv`. Every vertex, including the
// subtree root, takes a corner before each child and one after the last.
template <class Emit>
inline void subtree_contour(const LabeledTree& tree, std::int32_t lv,
                            const std::vector<std::int32_t>& to_global, bool mirrored,
                            Emit&& emit) {
  std::vector<std::pair<std::int32_t, std::int32_t>> stack;
  stack.push_back({lv, 0});
  while (!stack.empty()) {
    auto& [v, k] = stack.back();
    if (k < tree.n_children[v]) {
      emit(to_global[v]);
      std::int32_t c = mirrored ? tree.child(v, tree.n_children[v] - 1 - k) : tree.child(v, k);
      ++k;
      stack.push_back({c, 0});
    } else {
      emit(to_global[v]);
      stack.pop_back();
    }
  }
}

}  // namespace detail_spine

// Builds the corner window using spine vertices S(0..K_use) and the subtrees
// grafted strictly below S(K_use). K_use <= st.spine_len().
inline SpineWindow build_spine_window(const SpineTree& st, int K_use) {
  require(K_use >= 1 && K_use <= st.spine_len(), Errc::BadConfig,
          "window spine length out of range");
  SpineWindow w;
  w.K = K_use;

  // vertex table: spine first
  for (int i = 0; i <= K_use; ++i) {
    w.vlabel.push_back(st.X[i]);
    w.vparent.push_back(i == 0 ? -1 : i - 1);
    w.spine_index.push_back(i);
  }
  w.left_child_head.assign(K_use + 1, -1);
  w.left_child_next.assign(K_use + 1, -1);

  // graft subtree vertices; returns local->global map (local root -> spine id)
  auto graft = [&](const LabeledTree& t, std::int32_t spine_v,
                   bool left_side) -> std::vector<std::int32_t> {
    std::vector<std::int32_t> to_global(t.n_vertices(), -1);
    to_global[0] = spine_v;
    for (int lv = 1; lv < t.n_vertices(); ++lv) {
      std::int32_t g = static_cast<std::int32_t>(w.vlabel.size());
      to_global[lv] = g;
      w.vlabel.push_back(t.label[lv]);
      w.vparent.push_back(to_global[t.parent[lv]]);
      w.spine_index.push_back(-1);
      w.left_child_head.push_back(-1);
      w.left_child_next.push_back(-1);
    }
    // left-side child lists, in child order (build backwards per vertex)
    if (left_side) {
      for (int lv = t.n_vertices() - 1; lv >= 1; --lv) {
        std::int32_t g = to_global[lv], p = to_global[t.parent[lv]];
        w.left_child_next[g] = w.left_child_head[p];
        w.left_child_head[p] = g;
      }
    }
    return to_global;
  };

  std::vector<std::vector<std::int32_t>> lmap(K_use), rmap(K_use);
  for (int i = 0; i < K_use; ++i) {
    require(st.L[i].label[0] == st.X[i] && st.R[i].label[0] == st.X[i], Errc::BadConfig,
            "subtree root label disagrees with the spine");
    lmap[i] = graft(st.L[i], i, true);
    rmap[i] = graft(st.R[i], i, false);
  }

  // left corner list (c_0, c_1, ...)
  std::vector<std::int32_t> left;
  for (int i = 0; i < K_use; ++i) {
    const LabeledTree& t = st.L[i];
    for (int k = 0; k < t.n_children[0]; ++k) {
      left.push_back(i);
      detail_spine::subtree_contour(t, t.child(0, k), lmap[i], false,
                                    [&](std::int32_t g) { left.push_back(g); });
    }
    left.push_back(i);  // corner before the spine edge
  }
  // right corner list (c_0^(R), c_1^(R), ...) in counterclockwise order
  std::vector<std::int32_t> right;
  for (int i = 0; i < K_use; ++i) {
    const LabeledTree& t = st.R[i];
    for (int k = t.n_children[0] - 1; k >= 0; --k) {
      right.push_back(i);
      detail_spine::subtree_contour(t, t.child(0, k), rmap[i], true,
                                    [&](std::int32_t g) { right.push_back(g); });
    }
    right.push_back(i);
  }

  // linear order: reversed right (dropping the duplicate root corner), then left
  w.cvertex.reserve(right.size() - 1 + left.size());
  for (std::size_t j = right.size(); j-- > 1;) w.cvertex.push_back(right[j]);
  w.c0 = static_cast<std::int64_t>(w.cvertex.size());
  for (auto v : left) w.cvertex.push_back(v);
  w.clabel.resize(w.cvertex.size());
  for (std::size_t p = 0; p < w.cvertex.size(); ++p) w.clabel[p] = w.vlabel[w.cvertex[p]];

  // successor: first later corner with label one less
  {
    std::int32_t lo = w.clabel[0], hi = w.clabel[0];
    for (auto l : w.clabel) {
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    std::vector<std::int64_t> last(static_cast<std::size_t>(hi - lo + 1), -1);
    w.succ.assign(w.cvertex.size(), -1);
    for (std::int64_t p = w.n_corners() - 1; p >= 0; --p) {
      std::int32_t l = w.clabel[p];
      if (l - 1 >= lo) w.succ[p] = last[l - 1 - lo];
      last[l - lo] = p;
    }
  }

  w.last_left_corner.assign(w.n_vertices(), -1);
  w.first_corner.assign(w.n_vertices(), -1);
  for (std::int64_t p = 0; p < w.n_corners(); ++p) {
    std::int32_t v = w.cvertex[p];
    if (w.first_corner[v] < 0) w.first_corner[v] = p;
    if (p >= w.c0) w.last_left_corner[v] = p;
  }
  return w;
}

// Spine prefix index sigma_M: first k with X_k = -M.
inline int sigma_index(const SpineTree& st, std::int32_t M) {
  for (int k = 0; k < static_cast<int>(st.X.size()); ++k)
    if (st.X[k] == -M) return k;
  fail(Errc::WindowExhausted, "spine does not reach level -" + std::to_string(M));
}

}  // namespace uipq
