#pragma once

#include <cstdint>
#include <vector>

#include "uipq/errors.hpp"
#include "uipq/labeled_tree.hpp"
#include "uipq/rng.hpp"

namespace uipq {

// Stream layout shared by all Kesten-tree samplers: the spine walk and each
// grafted subtree draw from independently derived child streams, so a sampler
// re-run with a deeper stop rule reproduces the shallower sample exactly.
namespace stream_tag {
constexpr std::uint64_t spine = 0x51;
constexpr std::uint64_t left = 0x4C;
constexpr std::uint64_t right = 0x52;
constexpr std::uint64_t eta = 0xE7;
}  // namespace stream_tag

struct SampleLimits {
  std::int64_t per_tree = 10'000'000;
};

// Critical geometric(1/2) Galton-Watson tree with root label l and uniform
// {-1,0,+1} label increments: rho_l. Throws ResourceCap past the node limit.
inline LabeledTree sample_gw(std::int32_t l, RngStream& rng,
                             const SampleLimits& lim = SampleLimits{}) {
  TreeBuilder b(l);
  std::vector<std::int32_t> todo{0};
  while (!todo.empty()) {
    std::int32_t v = todo.back();
    todo.pop_back();
    int k = rng.geometric_half();
    if (k > 0) {
      std::vector<std::int32_t> ds(k);
      for (int i = 0; i < k; ++i) ds[i] = rng.uniform3();
      std::int32_t fc = b.add_children(v, ds);
      require(b.size() <= lim.per_tree, Errc::ResourceCap, "tree node cap exceeded");
      for (int i = k - 1; i >= 0; --i) todo.push_back(fc + i);
    }
  }
  return b.take();
}

// Uniform labeled tree on n edges, root label 0: shape uniform over the
// Catalan(n) plane trees via the cycle lemma, labels i.i.d. uniform {-1,0,+1}.
inline LabeledTree sample_uniform_tree(int n, RngStream& rng) {
  require(n >= 1, Errc::BadConfig, "uniform tree needs n >= 1");
  // n up-steps and n+1 down-steps, shuffled, then rotated to start right
  // after the first minimum of the prefix walk.
  std::vector<std::int8_t> steps(2 * n + 1, -1);
  for (int i = 0; i < n; ++i) steps[i] = 1;
  for (int i = 2 * n; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(steps[i], steps[j]);
  }
  int sum = 0, best = 1, arg = -1;
  for (int i = 0; i < 2 * n + 1; ++i) {
    sum += steps[i];
    if (sum < best) {
      best = sum;
      arg = i;
    }
  }
  // Dyck decode of the 2n rotated steps (the final down-step is dropped).
  std::vector<std::vector<std::int32_t>> kids(1);
  std::vector<std::int32_t> stack{0};
  for (int i = 0; i < 2 * n; ++i) {
    std::int8_t s = steps[(arg + 1 + i) % (2 * n + 1)];
    if (s == 1) {
      std::int32_t id = static_cast<std::int32_t>(kids.size());
      kids.emplace_back();
      kids[stack.back()].push_back(id);
      stack.push_back(id);
    } else {
      stack.pop_back();
    }
  }
  TreeBuilder b(0);
  std::vector<std::int32_t> remap(kids.size(), -1);
  remap[0] = 0;
  std::vector<std::int32_t> todo{0};
  while (!todo.empty()) {
    std::int32_t v = todo.back();
    todo.pop_back();
    std::vector<std::int32_t> ds(kids[v].size());
    for (auto& d : ds) d = rng.uniform3();
    std::int32_t fc = b.add_children(remap[v], ds);
    for (std::size_t i = 0; i < kids[v].size(); ++i) {
      remap[kids[v][i]] = fc + static_cast<std::int32_t>(i);
      todo.push_back(kids[v][i]);
    }
  }
  return b.take();
}

// ---------------------------------------------------------------------------
// Kesten's conditioned tree, truncated
// ---------------------------------------------------------------------------

enum class StopKind { SpineSteps, SpineHitsLevel };

struct StopRule {
  StopKind kind;
  std::int32_t value;  // K >= 1 steps, or M >= 1 for truncation at sigma_M

  static StopRule steps(std::int32_t k) {
    require(k >= 1, Errc::BadConfig, "SpineSteps needs K >= 1");
    return {StopKind::SpineSteps, k};
  }
  static StopRule hits_level(std::int32_t m) {
    require(m >= 1, Errc::BadConfig, "SpineHitsLevel needs M >= 1");
    return {StopKind::SpineHitsLevel, m};
  }
};

// Truncated element of S: spine label walk X_0..X_K (X_0 = 0) with the left
// and right subtrees grafted at S(0)..S(K-1). When truncated at sigma_M,
// X_K = -M and X_j > -M for j < K.
struct SpineTree {
  std::vector<std::int32_t> X;
  std::vector<LabeledTree> L, R;
  StopRule stop{StopKind::SpineSteps, 1};

  int spine_len() const { return static_cast<int>(X.size()) - 1; }  // K
  std::int64_t total_nodes() const {
    std::int64_t s = spine_len() + 1;
    for (auto& t : L) s += t.n_vertices() - 1;
    for (auto& t : R) s += t.n_vertices() - 1;
    return s;
  }
};

inline std::vector<std::int32_t> sample_spine_walk(const StopRule& stop, RngStream spine_rng,
                                                   std::int64_t step_cap = 100'000'000) {
  std::vector<std::int32_t> X{0};
  if (stop.kind == StopKind::SpineSteps) {
    for (int i = 0; i < stop.value; ++i) X.push_back(X.back() + spine_rng.uniform3());
  } else {
    while (X.back() != -stop.value) {
      X.push_back(X.back() + spine_rng.uniform3());
      require(static_cast<std::int64_t>(X.size()) <= step_cap, Errc::ResourceCap,
              "spine step cap exceeded");
    }
  }
  return X;
}

inline SpineTree sample_kesten_truncated(const StopRule& stop, const RngStream& rng,
                                         const SampleLimits& lim = SampleLimits{}) {
  SpineTree st;
  st.stop = stop;
  st.X = sample_spine_walk(stop, rng.derive(stream_tag::spine));
  int K = st.spine_len();
  RngStream lbase = rng.derive(stream_tag::left);
  RngStream rbase = rng.derive(stream_tag::right);
  st.L.reserve(K);
  st.R.reserve(K);
  for (int i = 0; i < K; ++i) {
    RngStream li = lbase.derive(static_cast<std::uint64_t>(i));
    RngStream ri = rbase.derive(static_cast<std::uint64_t>(i));
    st.L.push_back(sample_gw(st.X[i], li, lim));
    st.R.push_back(sample_gw(st.X[i], ri, lim));
  }
  return st;
}

inline int sample_eta(RngStream& rng) { return rng.fair_bit(); }

// ---------------------------------------------------------------------------
// Streaming exploration (no materialization) for heavy-tailed Monte Carlo.
// Consumption order matches sample_gw draw for draw, so a streamed run and a
// materialized run of the same stream see the same tree.
// ---------------------------------------------------------------------------

struct ExploreResult {
  std::int64_t nodes = 0;      // vertices created (root included)
  std::int32_t min_label = 0;  // minimum over created vertices
  bool hit = false;            // some vertex reached exit_level
  bool capped = false;         // node budget exhausted before resolution
};

// DFS-samples rho_l, aborting as soon as a label <= exit_level appears.
// With exit_level far below reachable labels this computes the exact minimum.
inline ExploreResult explore_gw_min(std::int32_t l, RngStream& rng, std::int32_t exit_level,
                                    std::int64_t node_cap) {
  ExploreResult res;
  res.min_label = l;
  res.nodes = 1;
  if (l <= exit_level) {
    res.hit = true;
    return res;
  }
  std::vector<std::int32_t> stack{l};
  std::int32_t buf[64];
  while (!stack.empty()) {
    std::int32_t lv = stack.back();
    stack.pop_back();
    int k = rng.geometric_half();
    bool big = k > 64;
    std::vector<std::int32_t> bigbuf;
    std::int32_t* ch = big ? (bigbuf.resize(k), bigbuf.data()) : buf;
    for (int i = 0; i < k; ++i) {
      std::int32_t cl = lv + rng.uniform3();
      ++res.nodes;
      if (cl < res.min_label) res.min_label = cl;
      if (cl <= exit_level) {
        res.hit = true;
        return res;
      }
      ch[i] = cl;
    }
    for (int i = k - 1; i >= 0; --i) stack.push_back(ch[i]);
    if (res.nodes >= node_cap) {
      res.capped = true;
      return res;
    }
  }
  return res;
}

// DFS-samples rho_l and counts the vertices that hit level exactly -r with
// every strict ancestor above -r; subtrees below a first hit are irrelevant
// to the count and are never sampled.
struct YCountResult {
  std::int64_t count = 0;
  std::int64_t nodes = 0;
  bool capped = false;
};

inline YCountResult explore_gw_y_count(std::int32_t l, RngStream& rng, std::int32_t r,
                                       std::int64_t node_cap) {
  require(l > -r, Errc::RootTooDeep, "y_count needs root label > -r");
  YCountResult res;
  res.nodes = 1;
  std::vector<std::int32_t> stack{l};
  std::int32_t buf[64];
  while (!stack.empty()) {
    std::int32_t lv = stack.back();
    stack.pop_back();
    int k = rng.geometric_half();
    bool big = k > 64;
    std::vector<std::int32_t> bigbuf;
    std::int32_t* ch = big ? (bigbuf.resize(k), bigbuf.data()) : buf;
    int kept = 0;
    for (int i = 0; i < k; ++i) {
      std::int32_t cl = lv + rng.uniform3();
      ++res.nodes;
      if (cl == -r)
        ++res.count;  // first hit: prune the subtree
      else
        ch[kept++] = cl;
    }
    for (int i = kept - 1; i >= 0; --i) stack.push_back(ch[i]);
    if (res.nodes >= node_cap) {
      res.capped = true;
      return res;
    }
  }
  return res;
}

// Exact |Y_theta(-r)| on a materialized tree.
inline std::int64_t y_count(const LabeledTree& t, std::int32_t r) {
  require(t.label[0] > -r, Errc::RootTooDeep, "y_count needs root label > -r");
  std::int64_t cnt = 0;
  std::vector<std::int32_t> stack{0};
  while (!stack.empty()) {
    std::int32_t v = stack.back();
    stack.pop_back();
    for (int k = 0; k < t.n_children[v]; ++k) {
      std::int32_t c = t.child(v, k);
      if (t.label[c] == -r)
        ++cnt;
      else
        stack.push_back(c);
    }
  }
  return cnt;
}

}  // namespace uipq
