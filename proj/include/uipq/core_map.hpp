#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "uipq/errors.hpp"
#include "uipq/rational.hpp"

namespace uipq {

// Rooted planar map as a rotation system on darts. `next` is the cyclic
// successor of a dart around its origin vertex; faces are the orbits of
// d -> next[twin[d]]. Immutable once built.
struct RootedMap {
  std::vector<std::int32_t> twin;
  std::vector<std::int32_t> next;
  std::vector<std::int32_t> vertex;  // origin vertex per dart
  std::int32_t root = 0;
  std::int32_t nv = 0;

  int n_darts() const { return static_cast<int>(twin.size()); }
  int n_edges() const { return n_darts() / 2; }
  int n_vertices() const { return nv; }

  std::int32_t face_next(std::int32_t d) const { return next[twin[d]]; }
  std::int32_t root_vertex() const { return vertex[root]; }
  std::int32_t root_head() const { return vertex[twin[root]]; }

  int degree(std::int32_t v, const std::vector<std::int32_t>& any_dart_at) const {
    std::int32_t d0 = any_dart_at[v];
    int deg = 0;
    std::int32_t d = d0;
    do {
      ++deg;
      d = next[d];
    } while (d != d0);
    return deg;
  }

  std::vector<std::int32_t> darts_at(std::int32_t v0) const {
    std::vector<std::int32_t> out;
    for (std::int32_t d = 0; d < n_darts(); ++d)
      if (vertex[d] == v0) out.push_back(d);
    return out;
  }

  // Face cycles in canonical discovery order (scanning darts by id).
  std::vector<std::vector<std::int32_t>> faces() const {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int8_t> seen(n_darts(), 0);
    for (std::int32_t d0 = 0; d0 < n_darts(); ++d0) {
      if (seen[d0]) continue;
      out.emplace_back();
      std::int32_t d = d0;
      do {
        seen[d] = 1;
        out.back().push_back(d);
        d = face_next(d);
      } while (d != d0);
    }
    return out;
  }

  std::vector<std::int32_t> face_id_of_dart() const {
    std::vector<std::int32_t> fid(n_darts(), -1);
    std::int32_t nf = 0;
    for (std::int32_t d0 = 0; d0 < n_darts(); ++d0) {
      if (fid[d0] >= 0) continue;
      std::int32_t d = d0;
      do {
        fid[d] = nf;
        d = face_next(d);
      } while (d != d0);
      ++nf;
    }
    return fid;
  }

  int n_faces() const {
    auto fid = face_id_of_dart();
    return fid.empty() ? 0 : 1 + *std::max_element(fid.begin(), fid.end());
  }

  // BFS distances from a source vertex; unreachable = -1.
  std::vector<std::int32_t> graph_distance(std::int32_t source) const {
    std::vector<std::vector<std::int32_t>> adj(nv);
    for (std::int32_t d = 0; d < n_darts(); ++d) adj[vertex[d]].push_back(vertex[twin[d]]);
    std::vector<std::int32_t> dist(nv, -1);
    std::vector<std::int32_t> q;
    dist[source] = 0;
    q.push_back(source);
    for (std::size_t h = 0; h < q.size(); ++h) {
      std::int32_t v = q[h];
      for (std::int32_t w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push_back(w);
        }
    }
    return dist;
  }
};

// Validating constructor. Vertices are the orbits of `next`, numbered by
// first appearance in dart order.
inline RootedMap build_map(const std::vector<std::int32_t>& twin_table,
                           const std::vector<std::int32_t>& next_table, std::int32_t root_dart) {
  const int n = static_cast<int>(twin_table.size());
  require(n > 0 && static_cast<int>(next_table.size()) == n, Errc::MalformedInput,
          "dart tables empty or of mismatched size");
  require(root_dart >= 0 && root_dart < n, Errc::MalformedInput, "root dart out of range");
  for (int d = 0; d < n; ++d) {
    require(twin_table[d] >= 0 && twin_table[d] < n && next_table[d] >= 0 && next_table[d] < n,
            Errc::MalformedInput, "dart table entry out of range");
    require(twin_table[d] != d, Errc::NotInvolution, "twin has a fixed point");
    require(twin_table[twin_table[d]] == d, Errc::NotInvolution, "twin is not an involution");
  }
  // next must be a permutation.
  {
    std::vector<std::int8_t> hit(n, 0);
    for (int d = 0; d < n; ++d) {
      require(!hit[next_table[d]], Errc::MalformedInput, "next is not a permutation");
      hit[next_table[d]] = 1;
    }
  }

  RootedMap m;
  m.twin = twin_table;
  m.next = next_table;
  m.root = root_dart;
  m.vertex.assign(n, -1);
  std::int32_t nv = 0;
  for (int d0 = 0; d0 < n; ++d0) {
    if (m.vertex[d0] >= 0) continue;
    std::int32_t d = d0;
    do {
      m.vertex[d] = nv;
      d = m.next[d];
    } while (d != d0);
    ++nv;
  }
  m.nv = nv;

  // Connectivity over twin/next orbits.
  {
    std::vector<std::int8_t> seen(n, 0);
    std::vector<std::int32_t> stack{root_dart};
    seen[root_dart] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      std::int32_t d = stack.back();
      stack.pop_back();
      ++cnt;
      for (std::int32_t e : {m.twin[d], m.next[d]})
        if (!seen[e]) {
          seen[e] = 1;
          stack.push_back(e);
        }
    }
    require(cnt == n, Errc::NotConnected, "map is not connected");
  }

  int euler = m.n_vertices() - m.n_edges() + m.n_faces();
  require(euler == 2, Errc::EulerViolation,
          "V - E + F = " + std::to_string(euler) + ", map is not planar");
  return m;
}

// ---------------------------------------------------------------------------
// Canonical code
// ---------------------------------------------------------------------------

// Relabels darts by a breadth-first traversal of vertices anchored at the
// root dart; the resulting table string is invariant under dart renaming and
// injective on root-preserving isomorphism classes.
inline std::vector<std::int32_t> canonical_dart_order(const RootedMap& m) {
  const int n = m.n_darts();
  std::vector<std::int32_t> id(n, -1);
  std::vector<std::int8_t> vis(m.nv, 0);
  std::int32_t counter = 0;
  std::vector<std::int32_t> queue;
  auto visit_vertex = [&](std::int32_t entry) {
    vis[m.vertex[entry]] = 1;
    std::int32_t d = entry;
    do {
      id[d] = counter++;
      queue.push_back(d);
      d = m.next[d];
    } while (d != entry);
  };
  visit_vertex(m.root);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    std::int32_t t = m.twin[queue[h]];
    if (!vis[m.vertex[t]]) visit_vertex(t);
  }
  return id;  // id[d] = canonical index of dart d
}

struct QuadrangulationWithHoles;

inline std::string canonical_code(const RootedMap& m, const std::vector<std::int32_t>* holes = nullptr) {
  auto id = canonical_dart_order(m);
  const int n = m.n_darts();
  std::vector<std::int32_t> inv(n);
  for (int d = 0; d < n; ++d) inv[id[d]] = d;
  std::string out;
  out.reserve(static_cast<std::size_t>(n) * 6 + 16);
  out += "M";
  out += std::to_string(n);
  for (int i = 0; i < n; ++i) {
    std::int32_t d = inv[i];
    out += " ";
    out += std::to_string(id[m.twin[d]]);
    out += ",";
    out += std::to_string(id[m.next[d]]);
  }
  if (holes && !holes->empty()) {
    // Canonical face numbering: discovery order scanning canonical dart ids.
    auto fid = m.face_id_of_dart();
    std::int32_t nf = 1 + *std::max_element(fid.begin(), fid.end());
    std::vector<std::int32_t> canon_fid(nf, -1);
    std::int32_t fc = 0;
    for (int i = 0; i < n; ++i) {
      std::int32_t f = fid[inv[i]];
      if (canon_fid[f] < 0) canon_fid[f] = fc++;
    }
    std::vector<std::int32_t> hs;
    for (std::int32_t h : *holes) hs.push_back(canon_fid[h]);
    std::sort(hs.begin(), hs.end());
    out += " H";
    for (std::int32_t h : hs) {
      out += " ";
      out += std::to_string(h);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadrangulations with holes and local balls
// ---------------------------------------------------------------------------

// certified_radius: nullopt means the map is exact/complete; r means the
// structure equals the r-ball of some (possibly infinite) quadrangulation.
struct QuadrangulationWithHoles {
  RootedMap map;
  std::vector<std::int32_t> hole_faces;
  std::optional<std::int32_t> certified_radius;

  bool complete() const { return !certified_radius.has_value(); }
  std::string code() const { return canonical_code(map, &hole_faces); }

  // Degree-4 check on non-holes, even degree on holes.
  void validate_faces() const {
    auto fs = map.faces();
    std::vector<std::int8_t> is_hole(fs.size(), 0);
    for (auto h : hole_faces) {
      require(h >= 0 && h < static_cast<std::int32_t>(fs.size()), Errc::MalformedInput,
              "hole id out of range");
      is_hole[h] = 1;
    }
    for (std::size_t f = 0; f < fs.size(); ++f) {
      if (is_hole[f])
        require(fs[f].size() % 2 == 0, Errc::NotQuadrangulation, "hole of odd degree");
      else
        require(fs[f].size() == 4, Errc::NotQuadrangulation, "non-hole face of degree != 4");
    }
  }
};

inline QuadrangulationWithHoles as_complete_quadrangulation(RootedMap m) {
  QuadrangulationWithHoles q;
  q.map = std::move(m);
  q.validate_faces();
  return q;
}

namespace detail_map {

struct Restriction {
  QuadrangulationWithHoles q;
  std::vector<std::int32_t> new_vertex_of_old;  // -1 when dropped
};

// Restriction of a map to a set of kept faces: keeps every dart whose face or
// twin's face is kept, compresses rotations, and classifies the faces of the
// restriction (surviving kept faces vs. new holes).
inline Restriction restrict_to_faces(const RootedMap& m,
                                     const std::vector<std::int8_t>& keep_face,
                                     std::int32_t certified) {
  auto fid = m.face_id_of_dart();
  const int n = m.n_darts();
  std::vector<std::int32_t> face_size;
  for (int d = 0; d < n; ++d) {
    if (fid[d] >= static_cast<std::int32_t>(face_size.size())) face_size.resize(fid[d] + 1, 0);
    ++face_size[fid[d]];
  }
  std::vector<std::int8_t> keep_dart(n, 0);
  for (int d = 0; d < n; ++d)
    if (keep_face[fid[d]] || keep_face[fid[m.twin[d]]]) keep_dart[d] = 1;
  require(keep_dart[m.root], Errc::InsufficientCertification, "root dart not inside the ball");

  std::vector<std::int32_t> remap(n, -1);
  std::int32_t nd = 0;
  for (int d = 0; d < n; ++d)
    if (keep_dart[d]) remap[d] = nd++;
  std::vector<std::int32_t> twin2(nd), next2(nd);
  for (int d = 0; d < n; ++d) {
    if (!keep_dart[d]) continue;
    twin2[remap[d]] = remap[m.twin[d]];  // twin kept with d by construction
    std::int32_t e = m.next[d];
    while (!keep_dart[e]) e = m.next[e];
    next2[remap[d]] = remap[e];
  }
  RootedMap sub = build_map(twin2, next2, remap[m.root]);

  // Classify faces of the restriction: a face is a surviving original kept
  // face iff its darts all share one original kept face of equal size.
  std::vector<std::int32_t> back(nd);
  for (int d = 0; d < n; ++d)
    if (remap[d] >= 0) back[remap[d]] = d;
  auto faces2 = sub.faces();
  Restriction out;
  out.q.map = std::move(sub);
  for (std::size_t f = 0; f < faces2.size(); ++f) {
    std::int32_t of = fid[back[faces2[f][0]]];
    bool survived = keep_face[of];
    if (survived)
      for (std::int32_t d : faces2[f])
        if (fid[back[d]] != of) {
          survived = false;
          break;
        }
    if (survived && face_size[of] != static_cast<std::int32_t>(faces2[f].size())) survived = false;
    if (!survived) out.q.hole_faces.push_back(static_cast<std::int32_t>(f));
  }
  out.q.certified_radius = certified;
  out.new_vertex_of_old.assign(m.nv, -1);
  for (int nd2 = 0; nd2 < static_cast<int>(back.size()); ++nd2)
    out.new_vertex_of_old[m.vertex[back[nd2]]] = out.q.map.vertex[nd2];
  return out;
}

}  // namespace detail_map

// Ball of radius r: all faces having a vertex at distance < r from the root
// vertex, together with their edges and vertices. r = 0 is an artifact
// convention and returns the root edge alone.
inline QuadrangulationWithHoles ball(const QuadrangulationWithHoles& q, std::int32_t r) {
  require(r >= 0, Errc::BadConfig, "ball radius must be >= 0");
  if (!q.complete())
    require(r <= *q.certified_radius, Errc::InsufficientCertification,
            "requested radius exceeds certification");
  if (r == 0) {
    // root edge alone: one edge, two darts
    RootedMap m;
    std::vector<std::int32_t> twin{1, 0}, next{0, 1};
    if (q.map.vertex[q.map.root] == q.map.vertex[q.map.twin[q.map.root]]) next = {1, 0};
    QuadrangulationWithHoles out;
    out.map = build_map(twin, next, 0);
    auto fs = out.map.faces();
    for (std::size_t f = 0; f < fs.size(); ++f) out.hole_faces.push_back((std::int32_t)f);
    out.certified_radius = 0;
    return out;
  }

  auto dist = q.map.graph_distance(q.map.root_vertex());
  auto fs = q.map.faces();
  std::vector<std::int8_t> is_hole(fs.size(), 0);
  for (auto h : q.hole_faces) is_hole[h] = 1;
  std::vector<std::int8_t> keep(fs.size(), 0);
  bool all_kept = true;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (is_hole[f]) {
      all_kept = false;
      continue;
    }
    bool k = false;
    for (auto d : fs[f])
      if (dist[q.map.vertex[d]] >= 0 && dist[q.map.vertex[d]] < r) {
        k = true;
        break;
      }
    keep[f] = k;
    all_kept = all_kept && k;
  }
  if (all_kept && q.complete()) return q;  // whole map: stays complete
  return detail_map::restrict_to_faces(q.map, keep, r).q;
}

// Local distance between two quadrangulations-with-holes:
// (1 + sup{r >= 1 : balls of radius r agree})^{-1}, sup empty set = 0.
// Returns 0 when the maps agree through their common certification.
inline Rat local_distance(const QuadrangulationWithHoles& a, const QuadrangulationWithHoles& b) {
  std::int32_t rmax;
  if (a.complete() && b.complete())
    rmax = 2 * std::max(a.map.n_vertices(), b.map.n_vertices()) + 2;
  else if (!a.complete() && !b.complete())
    rmax = std::min(*a.certified_radius, *b.certified_radius);
  else
    rmax = a.complete() ? *b.certified_radius : *a.certified_radius;
  std::int32_t agreed = 0;
  for (std::int32_t r = 1; r <= rmax; ++r) {
    auto ba = ball(a, r);
    auto bb = ball(b, r);
    if (ba.code() != bb.code()) return Rat(1, 1 + agreed);
    agreed = r;
    if (ba.hole_faces.empty() && bb.hole_faces.empty()) return Rat(0);  // both complete and equal
  }
  return Rat(0);  // equal through common certification
}

// ---------------------------------------------------------------------------
// Map file format. One record per line:
//   MAP <ndarts> <root>
//   DART <id> <twin> <next_at_vertex>
//   HOLE <face-id>
//   CERT <radius>          (optional; absent means exact/complete)
// ---------------------------------------------------------------------------

inline std::string format_map(const QuadrangulationWithHoles& q) {
  std::string out = "MAP " + std::to_string(q.map.n_darts()) + " " + std::to_string(q.map.root) + "\n";
  for (int d = 0; d < q.map.n_darts(); ++d)
    out += "DART " + std::to_string(d) + " " + std::to_string(q.map.twin[d]) + " " +
           std::to_string(q.map.next[d]) + "\n";
  auto holes = q.hole_faces;
  std::sort(holes.begin(), holes.end());
  for (auto h : holes) out += "HOLE " + std::to_string(h) + "\n";
  if (!q.complete()) out += "CERT " + std::to_string(*q.certified_radius) + "\n";
  return out;
}

inline QuadrangulationWithHoles parse_map(const std::string& text) {
  std::istringstream in(text);
  std::string line, tok;
  std::int64_t ndarts = -1, root = -1;
  std::vector<std::int32_t> twin, next;
  std::vector<std::int8_t> seen;
  std::vector<std::int32_t> holes;
  std::optional<std::int32_t> cert;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    ls >> tok;
    if (tok == "MAP") {
      require(ndarts < 0, Errc::MalformedInput, "duplicate MAP header");
      require(static_cast<bool>(ls >> ndarts >> root), Errc::MalformedInput, "bad MAP header");
      require(ndarts > 0 && ndarts % 2 == 0 && root >= 0 && root < ndarts, Errc::MalformedInput,
              "bad MAP header values");
      twin.assign(ndarts, -1);
      next.assign(ndarts, -1);
      seen.assign(ndarts, 0);
    } else if (tok == "DART") {
      std::int64_t id, t, nx;
      require(ndarts > 0, Errc::MalformedInput, "DART before MAP header");
      require(static_cast<bool>(ls >> id >> t >> nx), Errc::MalformedInput, "bad DART record");
      require(id >= 0 && id < ndarts && !seen[id], Errc::MalformedInput, "bad or duplicate dart id");
      require(t >= 0 && t < ndarts && nx >= 0 && nx < ndarts, Errc::MalformedInput,
              "dart record out of range");
      seen[id] = 1;
      twin[id] = static_cast<std::int32_t>(t);
      next[id] = static_cast<std::int32_t>(nx);
    } else if (tok == "HOLE") {
      std::int64_t h;
      require(static_cast<bool>(ls >> h), Errc::MalformedInput, "bad HOLE record");
      holes.push_back(static_cast<std::int32_t>(h));
    } else if (tok == "CERT") {
      std::int64_t c;
      require(static_cast<bool>(ls >> c), Errc::MalformedInput, "bad CERT record");
      cert = static_cast<std::int32_t>(c);
    } else {
      fail(Errc::MalformedInput, "unknown record '" + tok + "'");
    }
  }
  require(ndarts > 0, Errc::MalformedInput, "missing MAP header");
  for (std::int64_t d = 0; d < ndarts; ++d)
    require(seen[d], Errc::MalformedInput, "missing DART record " + std::to_string(d));
  QuadrangulationWithHoles q;
  q.map = build_map(twin, next, static_cast<std::int32_t>(root));
  q.hole_faces = holes;
  q.certified_radius = cert;
  q.validate_faces();
  return q;
}

}  // namespace uipq
