#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "uipq/core_map.hpp"
#include "uipq/errors.hpp"
#include "uipq/labeled_tree.hpp"
#include "uipq/spine.hpp"

namespace uipq {

// ---------------------------------------------------------------------------
// Successors on finite trees
// ---------------------------------------------------------------------------

struct FiniteCorners {
  std::vector<std::int32_t> cvertex;
  std::vector<std::int32_t> clabel;
  std::vector<std::int64_t> succ;  // -1 encodes the sink
};

inline FiniteCorners finite_corners(const LabeledTree& t) {
  FiniteCorners fc;
  fc.cvertex = corner_sequence(t);
  const std::int64_t n = static_cast<std::int64_t>(fc.cvertex.size());
  fc.clabel.resize(n);
  for (std::int64_t p = 0; p < n; ++p) fc.clabel[p] = t.label[fc.cvertex[p]];
  fc.succ.assign(n, -1);
  if (n == 0) return fc;
  std::int32_t lo = fc.clabel[0], hi = fc.clabel[0];
  for (auto l : fc.clabel) {
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  std::vector<std::int64_t> last(static_cast<std::size_t>(hi - lo + 1), -1);
  // two sweeps realize the cyclic "first corner after"
  for (int round = 0; round < 2; ++round)
    for (std::int64_t p = n - 1; p >= 0; --p) {
      if (fc.clabel[p] - 1 >= lo) fc.succ[p] = last[fc.clabel[p] - 1 - lo];
      last[fc.clabel[p] - lo] = p;
    }
  return fc;
}

// ---------------------------------------------------------------------------
// Arc-map assembly
//
// Arcs join each corner to its successor; the rotation system is read off the
// nesting order of the arcs along the contour. Within one corner the walk
// meets the incoming arc ends ordered from nearest origin to farthest, then
// the outgoing end; corners of a vertex follow the contour. In the finite
// (pointed) mode sink arcs attach to the extra vertex rho, whose spokes run
// in reverse contour order.
// ---------------------------------------------------------------------------

struct ArcMap {
  RootedMap map;
  std::vector<std::int32_t> map_vertex_of;    // input vertex -> map vertex (-1 dropped)
  std::vector<std::int32_t> input_vertex_of;  // map vertex -> input vertex (rho -> -1)
  std::int32_t rho = -1;                      // finite mode only
  std::vector<std::int64_t> arc_of_corner;    // corner -> arc id (-1 none)
};

namespace detail_schaeffer {

inline ArcMap assemble_arc_map(const std::vector<std::int32_t>& cvertex,
                               const std::vector<std::int32_t>& clabel,
                               const std::vector<std::int64_t>& succ, std::int32_t n_input_vertices,
                               bool cyclic, bool with_rho, std::int64_t root_corner, int eta) {
  const std::int64_t N = static_cast<std::int64_t>(cvertex.size());
  require(N > 0, Errc::BadConfig, "no corners");
  (void)clabel;

  // arcs indexed by corner position
  std::vector<std::int64_t> arc_of(N, -1);
  std::int64_t narcs = 0;
  for (std::int64_t p = 0; p < N; ++p) {
    if (succ[p] >= 0 || with_rho) arc_of[p] = narcs++;
  }
  require(arc_of[root_corner] >= 0, Errc::WindowExhausted, "root corner has no resolved arc");

  // incoming arcs per corner, nearest origin first
  std::vector<std::int32_t> inc_count(N, 0);
  for (std::int64_t p = 0; p < N; ++p)
    if (succ[p] >= 0) ++inc_count[succ[p]];
  std::vector<std::int64_t> inc_off(N + 1, 0);
  for (std::int64_t q = 0; q < N; ++q) inc_off[q + 1] = inc_off[q] + inc_count[q];
  std::vector<std::int64_t> inc(inc_off[N]);
  {
    std::vector<std::int64_t> cur(inc_off.begin(), inc_off.end() - 1);
    for (std::int64_t p = 0; p < N; ++p)
      if (succ[p] >= 0) inc[cur[succ[p]]++] = p;
    // nearest origin first, by backward contour distance
    for (std::int64_t q = 0; q < N; ++q) {
      auto b = inc.begin() + inc_off[q], e = inc.begin() + inc_off[q + 1];
      std::sort(b, e, [&](std::int64_t a, std::int64_t c) {
        std::int64_t da = cyclic ? (q - a + N) % N : q - a;
        std::int64_t dc = cyclic ? (q - c + N) % N : q - c;
        return da < dc;
      });
    }
  }

  // darts: 2a at the origin corner of arc a, 2a+1 at its target
  const std::int64_t ndarts = 2 * narcs;
  std::vector<std::int32_t> twin(ndarts), nxt(ndarts, -1), dvert(ndarts, -1);
  for (std::int64_t a = 0; a < narcs; ++a) {
    twin[2 * a] = static_cast<std::int32_t>(2 * a + 1);
    twin[2 * a + 1] = static_cast<std::int32_t>(2 * a);
  }

  // rotation lists per input vertex: corners in contour order; within a corner
  // incoming ends (nearest first) then the outgoing end
  std::vector<std::vector<std::int64_t>> corners_of(n_input_vertices);
  for (std::int64_t p = 0; p < N; ++p) corners_of[cvertex[p]].push_back(p);

  std::vector<std::int64_t> rot;  // reused buffer of dart ids
  auto link_cycle = [&](const std::vector<std::int64_t>& ring) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      nxt[ring[i]] = static_cast<std::int32_t>(ring[(i + 1) % ring.size()]);
      dvert[ring[i]] = -2;  // assigned below via orbit scan
    }
  };

  for (std::int32_t v = 0; v < n_input_vertices; ++v) {
    rot.clear();
    for (std::int64_t p : corners_of[v]) {
      for (std::int64_t k = inc_off[p]; k < inc_off[p + 1]; ++k)
        rot.push_back(2 * arc_of[inc[k]] + 1);
      if (arc_of[p] >= 0) rot.push_back(2 * arc_of[p]);
    }
    if (!rot.empty()) link_cycle(rot);
  }
  std::int64_t rho_in_vertex = -1;
  if (with_rho) {
    rot.clear();
    for (std::int64_t p = N - 1; p >= 0; --p)
      if (succ[p] < 0) rot.push_back(2 * arc_of[p] + 1);  // reverse contour order
    require(!rot.empty(), Errc::BadConfig, "pointed mode without sink arcs");
    link_cycle(rot);
    rho_in_vertex = rot[0];
  }

  // root dart and connected component
  std::int64_t root_dart = 2 * arc_of[root_corner] + (eta == 0 ? 0 : 1);
  std::vector<std::int8_t> keep(ndarts, 0);
  {
    std::vector<std::int64_t> stack{root_dart};
    keep[root_dart] = 1;
    while (!stack.empty()) {
      std::int64_t d = stack.back();
      stack.pop_back();
      for (std::int64_t e : {static_cast<std::int64_t>(twin[d]), static_cast<std::int64_t>(nxt[d])})
        if (!keep[e]) {
          keep[e] = 1;
          stack.push_back(e);
        }
    }
  }

  std::vector<std::int32_t> remap(ndarts, -1);
  std::int64_t nd2 = 0;
  for (std::int64_t d = 0; d < ndarts; ++d)
    if (keep[d]) remap[d] = static_cast<std::int32_t>(nd2++);
  std::vector<std::int32_t> twin2(nd2), next2(nd2);
  for (std::int64_t d = 0; d < ndarts; ++d) {
    if (!keep[d]) continue;
    require(keep[twin[d]] && nxt[d] >= 0 && keep[nxt[d]], Errc::BadConfig,
            "arc component not closed under twin/next");
    twin2[remap[d]] = remap[twin[d]];
    next2[remap[d]] = remap[nxt[d]];
  }

  ArcMap out;
  out.map = build_map(twin2, next2, remap[root_dart]);
  out.rho = -1;
  out.map_vertex_of.assign(n_input_vertices, -1);
  out.input_vertex_of.assign(out.map.n_vertices(), -1);
  for (std::int64_t p = 0; p < N; ++p) {
    if (arc_of[p] < 0) continue;
    std::int64_t d = 2 * arc_of[p];
    if (keep[d]) {
      std::int32_t mv = out.map.vertex[remap[d]];
      out.map_vertex_of[cvertex[p]] = mv;
      out.input_vertex_of[mv] = cvertex[p];
    }
    if (succ[p] >= 0) {
      std::int64_t e = 2 * arc_of[p] + 1;
      if (keep[e]) {
        std::int32_t mv = out.map.vertex[remap[e]];
        out.map_vertex_of[cvertex[succ[p]]] = mv;
        out.input_vertex_of[mv] = cvertex[succ[p]];
      }
    }
  }
  if (with_rho) {
    out.rho = out.map.vertex[remap[rho_in_vertex]];
    out.input_vertex_of[out.rho] = -1;
  }
  out.arc_of_corner = std::move(arc_of);
  return out;
}

}  // namespace detail_schaeffer

// ---------------------------------------------------------------------------
// Finite Schaeffer correspondence
// ---------------------------------------------------------------------------

struct PointedQuadrangulation {
  QuadrangulationWithHoles q;  // complete quadrangulation
  std::int32_t rho = -1;
  std::vector<std::int32_t> map_vertex_of_tree;
  std::vector<std::int32_t> tree_vertex_of_map;  // rho -> -1

  std::string code() const {
    return canonical_code(q.map) + ":p" + std::to_string(rho_canonical_id());
  }
  // canonical id of the pointed vertex: position of its first dart in the
  // canonical dart order
  std::int32_t rho_canonical_id() const {
    auto id = canonical_dart_order(q.map);
    std::int32_t best = q.map.n_darts();
    for (int d = 0; d < q.map.n_darts(); ++d)
      if (q.map.vertex[d] == rho) best = std::min(best, id[d]);
    return best;
  }
};

// Labels on the output vertices: tree labels, and min-1 on rho.
inline std::vector<std::int32_t> phi_labels(const PointedQuadrangulation& pq,
                                            const LabeledTree& t) {
  std::vector<std::int32_t> l(pq.q.map.n_vertices());
  for (int v = 0; v < pq.q.map.n_vertices(); ++v)
    l[v] = pq.tree_vertex_of_map[v] >= 0 ? t.label[pq.tree_vertex_of_map[v]] : t.min_label() - 1;
  return l;
}

inline PointedQuadrangulation phi_finite(const LabeledTree& t, int eta) {
  require(t.n_edges() >= 1, Errc::BadConfig, "phi needs at least one edge");
  require(t.label[0] == 0, Errc::BadConfig, "phi expects root label 0");
  require(eta == 0 || eta == 1, Errc::BadConfig, "eta must be 0 or 1");
  FiniteCorners fc = finite_corners(t);
  ArcMap am = detail_schaeffer::assemble_arc_map(fc.cvertex, fc.clabel, fc.succ, t.n_vertices(),
                                                 /*cyclic=*/true, /*with_rho=*/true,
                                                 /*root_corner=*/0, eta);
  PointedQuadrangulation out;
  out.q.map = std::move(am.map);
  out.q.validate_faces();
  require(out.q.map.n_vertices() == t.n_vertices() + 1 &&
              out.q.map.n_edges() == 2 * t.n_edges(),
          Errc::NotQuadrangulation, "unexpected output size");
  out.rho = am.rho;
  out.map_vertex_of_tree = std::move(am.map_vertex_of);
  out.tree_vertex_of_map = std::move(am.input_vertex_of);
  return out;
}

// ---------------------------------------------------------------------------
// Augmentation: one extra edge per face, read off the vertex labels
// ---------------------------------------------------------------------------

struct AugmentedMap {
  RootedMap qhat;
  std::vector<std::int8_t> added;  // per dart of qhat
};

// In a face whose labels read (i, i+1, i, i+1) clockwise the diagonal joins
// the two i+1 corners; in a face reading (i, i+1, i+2, i+1) the new edge
// doubles the one between the i+2 corner and the i+1 corner after it.
inline AugmentedMap augmented_map(const RootedMap& m, const std::vector<std::int32_t>& vlabel,
                                  const std::vector<std::int8_t>* face_filter = nullptr) {
  for (std::int32_t d = 0; d < m.n_darts(); ++d) {
    std::int32_t dl = vlabel[m.vertex[d]] - vlabel[m.vertex[m.twin[d]]];
    if (!(dl == 1 || dl == -1)) {
      if (face_filter == nullptr) fail(Errc::LabelParityViolation, "edge with |label step| != 1");
    }
  }
  AugmentedMap out;
  out.qhat.twin = m.twin;
  out.qhat.next = m.next;
  out.qhat.vertex = m.vertex;
  out.qhat.root = m.root;
  out.qhat.nv = m.nv;
  out.added.assign(m.n_darts(), 0);

  auto faces = m.faces();
  auto fid = m.face_id_of_dart();
  (void)fid;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (face_filter && !(*face_filter)[f]) continue;
    const auto& cyc = faces[f];
    require(cyc.size() == 4, Errc::NotQuadrangulation, "augmentation needs degree-4 faces");
    std::int32_t l[4];
    for (int k = 0; k < 4; ++k) l[k] = vlabel[m.vertex[cyc[k]]];
    std::int32_t mn = std::min({l[0], l[1], l[2], l[3]});
    int m0 = -1;
    bool typeA = false;
    for (int k = 0; k < 4; ++k) {
      if (l[k] != mn) continue;
      if (l[(k + 1) % 4] == mn + 1 && l[(k + 2) % 4] == mn && l[(k + 3) % 4] == mn + 1) {
        m0 = k;
        typeA = true;
        break;
      }
      if (l[(k + 1) % 4] == mn + 1 && l[(k + 2) % 4] == mn + 2 && l[(k + 3) % 4] == mn + 1) {
        m0 = k;
        typeA = false;
        break;
      }
    }
    require(m0 >= 0, Errc::LabelParityViolation, "face labels fit no quadrangulation pattern");
    int pa = typeA ? (m0 + 1) % 4 : (m0 + 2) % 4;
    int pb = (m0 + 3) % 4;
    // the face corner at position k sits after dart twin(d_{k-1})
    std::int32_t ga = m.twin[cyc[(pa + 3) % 4]];
    std::int32_t gb = m.twin[cyc[(pb + 3) % 4]];
    std::int32_t x = static_cast<std::int32_t>(out.qhat.twin.size());
    std::int32_t y = x + 1;
    out.qhat.twin.push_back(y);
    out.qhat.twin.push_back(x);
    out.qhat.vertex.push_back(m.vertex[cyc[pa]]);
    out.qhat.vertex.push_back(m.vertex[cyc[pb]]);
    out.qhat.next.push_back(out.qhat.next[ga]);
    out.qhat.next[ga] = x;
    out.qhat.next.push_back(out.qhat.next[gb]);
    out.qhat.next[gb] = y;
    out.added.push_back(1);
    out.added.push_back(1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inverse finite correspondence
// ---------------------------------------------------------------------------

struct PhiInverse {
  LabeledTree tree;
  int eta = 0;
  std::vector<std::int32_t> map_vertex_of_tree;
};

inline PhiInverse phi_inverse_finite(const RootedMap& m, std::int32_t rho) {
  require(rho >= 0 && rho < m.n_vertices(), Errc::BadConfig, "pointed vertex out of range");
  {
    auto fs = m.faces();
    for (auto& f : fs)
      require(f.size() == 4, Errc::NotQuadrangulation, "input has a non-quadrangular face");
  }
  auto lambda = m.graph_distance(rho);
  AugmentedMap aug = augmented_map(m, lambda);

  // The root of the recovered tree is the endpoint of the root edge farther
  // from rho; eta records the orientation.
  std::int32_t tail = m.root_vertex(), head = m.root_head();
  int eta = lambda[head] > lambda[tail] ? 1 : 0;
  std::int32_t w = eta == 1 ? head : tail;
  std::int32_t w_dart = eta == 1 ? m.twin[m.root] : m.root;  // dart of e* at w

  const auto& qh = aug.qhat;
  // children of a tree vertex entered at dart `at`: added darts met walking
  // the rotation from `at`, in order
  auto tree_darts_after = [&](std::int32_t at) {
    std::vector<std::int32_t> out;
    for (std::int32_t e = qh.next[at]; e != at; e = qh.next[e])
      if (aug.added[e]) out.push_back(e);
    return out;
  };

  TreeBuilder b(0);
  std::vector<std::int32_t> mvert{w};  // tree vertex -> map vertex
  struct Frame {
    std::int32_t tv;
    std::int32_t mv;
    std::int32_t entry;  // dart at mv: e* dart at the root, twin(parent dart) below
  };
  std::vector<Frame> todo{{0, w, w_dart}};
  std::int64_t used_added = 0;
  while (!todo.empty()) {
    Frame fr = todo.back();
    todo.pop_back();
    auto kids = tree_darts_after(fr.entry);
    std::vector<std::int32_t> ds(kids.size());
    for (std::size_t k = 0; k < kids.size(); ++k) {
      std::int32_t cm = qh.vertex[qh.twin[kids[k]]];
      ds[k] = lambda[cm] - lambda[fr.mv];
      require(ds[k] == 1 || ds[k] == -1 || ds[k] == 0, Errc::NotQuadrangulation,
              "added edge with label step outside {-1,0,1}");
    }
    std::int32_t fc = b.add_children(fr.tv, ds);
    used_added += static_cast<std::int64_t>(kids.size());
    for (std::size_t k = 0; k < kids.size(); ++k) {
      std::int32_t tv = fc + static_cast<std::int32_t>(k);
      mvert.push_back(qh.vertex[qh.twin[kids[k]]]);
      todo.push_back({tv, qh.vertex[qh.twin[kids[k]]], qh.twin[kids[k]]});
    }
  }
  require(used_added == m.n_edges() / 2, Errc::NotQuadrangulation,
          "added edges do not span the map");
  LabeledTree t = b.take();
  require(t.n_vertices() == m.n_vertices() - 1, Errc::NotQuadrangulation,
          "recovered tree misses vertices");
  // shift labels so the root reads 0
  std::vector<std::int32_t> labels(t.n_vertices());
  for (int v = 0; v < t.n_vertices(); ++v) labels[v] = lambda[mvert[v]] - lambda[w];
  t.label = labels;
  require(t.valid(), Errc::NotQuadrangulation, "recovered tree is not well formed");

  PhiInverse out;
  out.tree = std::move(t);
  out.eta = eta;
  out.map_vertex_of_tree = std::move(mvert);
  return out;
}

inline PhiInverse phi_inverse_finite(const PointedQuadrangulation& pq) {
  return phi_inverse_finite(pq.q.map, pq.rho);
}

// ---------------------------------------------------------------------------
// Truncated infinite correspondence
// ---------------------------------------------------------------------------

struct WindowMap {
  QuadrangulationWithHoles q;  // raw window; holes are the frontier faces
  std::vector<std::int32_t> vlabel;      // per map vertex
  std::vector<std::int32_t> win_of_map;  // map vertex -> window vertex
  std::vector<std::int32_t> map_of_win;  // window vertex -> map vertex (-1 dropped)
  std::vector<std::int8_t> vsafe;        // full rotation and arc set certain
  std::int32_t root_map_vertex = -1;     // map vertex of the tree root
  int M_used = 0;
  SpineWindow win;
};

inline WindowMap phi_window(const SpineTree& st, int K_use, int eta, int M_level) {
  WindowMap wm;
  wm.win = build_spine_window(st, K_use);
  wm.M_used = M_level;
  const SpineWindow& w = wm.win;
  ArcMap am = detail_schaeffer::assemble_arc_map(w.cvertex, w.clabel, w.succ, w.n_vertices(),
                                                 /*cyclic=*/false, /*with_rho=*/false, w.c0, eta);
  wm.q.map = std::move(am.map);
  wm.map_of_win = std::move(am.map_vertex_of);
  wm.win_of_map = std::move(am.input_vertex_of);
  wm.vlabel.resize(wm.q.map.n_vertices());
  for (int v = 0; v < wm.q.map.n_vertices(); ++v) wm.vlabel[v] = w.vlabel[wm.win_of_map[v]];
  wm.root_map_vertex = wm.map_of_win[0];

  // frontier: every non-quad face is a hole; vertices incident to one, or too
  // close to the truncation level, are unsafe
  auto faces = wm.q.map.faces();
  std::vector<std::int8_t> incident_hole(wm.q.map.n_vertices(), 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].size() == 4) continue;
    wm.q.hole_faces.push_back(static_cast<std::int32_t>(f));
    for (auto d : faces[f]) incident_hole[wm.q.map.vertex[d]] = 1;
  }
  wm.vsafe.assign(wm.q.map.n_vertices(), 0);
  for (int v = 0; v < wm.q.map.n_vertices(); ++v)
    wm.vsafe[v] = !incident_hole[v] && wm.vlabel[v] >= -M_level + 2;
  return wm;
}

inline WindowMap phi_window_at_level(const SpineTree& st, std::int32_t M, int eta) {
  return phi_window(st, sigma_index(st, M), eta, M);
}

struct StabilizationCertificate {
  std::int32_t target_radius = 0;
  std::int32_t M1 = 0;
  std::int32_t M2 = 0;
  bool stable = false;
};

struct TruncatedBall {
  QuadrangulationWithHoles q;  // certified_radius = r
  std::vector<std::int32_t> vlabel;  // construction labels per ball vertex
  StabilizationCertificate cert;
};

namespace detail_schaeffer {

struct BallWithLabels {
  QuadrangulationWithHoles q;
  std::vector<std::int32_t> vlabel;
};

inline BallWithLabels ball_of_window(const WindowMap& wm, std::int32_t r) {
  auto dist = wm.q.map.graph_distance(wm.q.map.root_vertex());
  auto faces = wm.q.map.faces();
  std::vector<std::int8_t> is_hole(faces.size(), 0);
  for (auto h : wm.q.hole_faces) is_hole[h] = 1;
  std::vector<std::int8_t> keep(faces.size(), 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (is_hole[f]) continue;
    for (auto d : faces[f]) {
      std::int32_t dv = dist[wm.q.map.vertex[d]];
      if (dv >= 0 && dv < r) {
        keep[f] = 1;
        break;
      }
    }
  }
  auto res = detail_map::restrict_to_faces(wm.q.map, keep, r);
  BallWithLabels out;
  out.q = std::move(res.q);
  out.vlabel.assign(out.q.map.n_vertices(), 0);
  for (int v = 0; v < wm.q.map.n_vertices(); ++v)
    if (res.new_vertex_of_old[v] >= 0) out.vlabel[res.new_vertex_of_old[v]] = wm.vlabel[v];
  return out;
}

}  // namespace detail_schaeffer

// Ball of radius r of the infinite quadrangulation, from a spine tree
// truncated at sigma_M with M >= r+3; the result is recomputed at the full
// truncation depth and certified by canonical-code equality.
inline TruncatedBall phi_truncated(const SpineTree& st, int eta, std::int32_t r) {
  require(st.stop.kind == StopKind::SpineHitsLevel, Errc::WrongTruncation,
          "phi_truncated expects a SpineHitsLevel truncation");
  std::int32_t M = st.stop.value;
  std::int32_t M1 = r + 3;
  require(M >= M1, Errc::WindowExhausted, "truncation shallower than r+3");
  require(M > M1, Errc::WindowExhausted,
          "certificate needs a truncation strictly deeper than r+3; sample at 2(r+3)");

  WindowMap w1 = phi_window_at_level(st, M1, eta);
  auto b1 = detail_schaeffer::ball_of_window(w1, r);
  WindowMap w2 = phi_window_at_level(st, M, eta);
  auto b2 = detail_schaeffer::ball_of_window(w2, r);

  TruncatedBall out;
  out.cert = {r, M1, M, b1.q.code() == b2.q.code()};
  if (!out.cert.stable) fail(Errc::Unstable, "ball changed between truncation depths");
  out.q = std::move(b2.q);
  out.vlabel = std::move(b2.vlabel);
  return out;
}

// ---------------------------------------------------------------------------
// Successor as a standalone operation
// ---------------------------------------------------------------------------

// Finite trees: cyclic successor or the sink (reported as -1).
inline std::int64_t successor(const FiniteCorners& fc, std::int64_t corner) {
  require(corner >= 0 && corner < static_cast<std::int64_t>(fc.cvertex.size()), Errc::BadConfig,
          "corner out of range");
  return fc.succ[corner];
}

// Spine windows: throws when the window cannot resolve the search.
inline std::int64_t successor(const SpineWindow& w, std::int64_t corner) {
  require(corner >= 0 && corner < w.n_corners(), Errc::BadConfig, "corner out of range");
  std::int64_t s = w.succ[corner];
  require(s >= 0, Errc::WindowExhausted, "successor not resolved in this window");
  return s;
}

}  // namespace uipq
