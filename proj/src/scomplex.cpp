#include "zkwedge/scomplex.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_set>

#include "zkwedge/error.hpp"

namespace zkw {

struct SimplicialComplex::Closure {
  std::once_flag once;
  std::vector<VertexSet> faces;
};

namespace {

std::vector<VertexSet> reduce_to_maximal(std::vector<VertexSet> gens) {
  std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
    int ca = vcount(a), cb = vcount(b);
    return ca != cb ? ca > cb : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<VertexSet> kept;
  for (VertexSet g : gens) {
    bool covered = std::any_of(kept.begin(), kept.end(), [g](VertexSet m) { return vsubset(g, m); });
    if (!covered) kept.push_back(g);
  }
  if (kept.empty()) kept.push_back(0);
  std::sort(kept.begin(), kept.end(), vlex_less);
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : SimplicialComplex(0, {0}) {}

SimplicialComplex::SimplicialComplex(VertexSet ground, std::vector<VertexSet> maximal)
    : ground_(ground), maximal_(std::move(maximal)), closure_(std::make_shared<Closure>()) {}

SimplicialComplex SimplicialComplex::construct(int n, const std::vector<std::vector<int>>& faces) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorKind::SizeLimit, "vertex count " + std::to_string(n) + " outside 0.." +
                                          std::to_string(kMaxVertices));
  std::vector<VertexSet> gens;
  gens.reserve(faces.size());
  for (const auto& f : faces) {
    VertexSet s = 0;
    for (int v : f) {
      if (v < 1 || v > n)
        throw Error(ErrorKind::InvalidArgument,
                    "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (s & vbit(v)) throw Error(ErrorKind::InvalidArgument, "duplicate vertex " + std::to_string(v));
      s |= vbit(v);
    }
    gens.push_back(s);
  }
  return from_generators(vrange(n), std::move(gens));
}

SimplicialComplex SimplicialComplex::from_generators(VertexSet ground, std::vector<VertexSet> generators) {
  for (VertexSet g : generators)
    if (!vsubset(g, ground)) throw Error(ErrorKind::InvalidArgument, "face " + vformat(g) + " outside ground set");
  return SimplicialComplex(ground, reduce_to_maximal(std::move(generators)));
}

SimplicialComplex SimplicialComplex::skeleton(int n, int q) {
  if (n < 0 || n > kMaxVertices) throw Error(ErrorKind::SizeLimit, "vertex count out of range");
  if (q < 0 || q > n) throw Error(ErrorKind::InvalidArgument, "skeleton needs 0 <= q <= n");
  std::vector<VertexSet> gens;
  if (q == 0) {
    gens.push_back(0);
  } else {
    // Gosper's hack over q-subsets of [n].
    VertexSet s = vrange(q), limit = vrange(n);
    while (vsubset(s, limit)) {
      gens.push_back(s);
      VertexSet c = s & -s, r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return SimplicialComplex(vrange(n), reduce_to_maximal(std::move(gens)));
}

VertexSet SimplicialComplex::ghosts() const {
  VertexSet seen = 0;
  for (VertexSet m : maximal_) seen |= m;
  return ground_ & ~seen;
}

bool SimplicialComplex::contains(VertexSet face) const {
  if (!vsubset(face, ground_)) return false;
  return std::any_of(maximal_.begin(), maximal_.end(), [face](VertexSet m) { return vsubset(face, m); });
}

const std::vector<VertexSet>& SimplicialComplex::faces() const {
  std::call_once(closure_->once, [this] {
    std::unordered_set<VertexSet> seen;
    for (VertexSet m : maximal_) for_each_subset(m, [&](VertexSet u) { seen.insert(u); });
    closure_->faces.assign(seen.begin(), seen.end());
    std::sort(closure_->faces.begin(), closure_->faces.end(), vlex_less);
  });
  return closure_->faces;
}

std::vector<VertexSet> SimplicialComplex::faces(int dim) const {
  std::vector<VertexSet> out;
  for (VertexSet f : faces())
    if (vcount(f) == dim + 1) out.push_back(f);
  return out;
}

SimplicialComplex SimplicialComplex::link(VertexSet face) const {
  if (!contains(face)) throw Error(ErrorKind::InvalidArgument, "link: " + vformat(face) + " is not a face");
  std::vector<VertexSet> gens;
  for (VertexSet m : maximal_)
    if (vsubset(face, m)) gens.push_back(m & ~face);
  return SimplicialComplex(ground_ & ~face, reduce_to_maximal(std::move(gens)));
}

SimplicialComplex SimplicialComplex::star(VertexSet face) const {
  if (!contains(face)) throw Error(ErrorKind::InvalidArgument, "star: " + vformat(face) + " is not a face");
  std::vector<VertexSet> gens;
  for (VertexSet m : maximal_)
    if (vsubset(face, m)) gens.push_back(m);
  return SimplicialComplex(ground_, reduce_to_maximal(std::move(gens)));
}

SimplicialComplex SimplicialComplex::full(VertexSet sigma) const {
  if (!vsubset(sigma, ground_))
    throw Error(ErrorKind::InvalidArgument, "vertex subset " + vformat(sigma) + " outside ground set");
  std::vector<VertexSet> gens;
  gens.reserve(maximal_.size());
  for (VertexSet m : maximal_) gens.push_back(m & sigma);
  return SimplicialComplex(sigma, reduce_to_maximal(std::move(gens)));
}

SimplicialComplex SimplicialComplex::rest(VertexSet keep) const { return full(keep); }

SimplicialComplex SimplicialComplex::subcomplex(SubcomplexKind kind, VertexSet arg) const {
  switch (kind) {
    case SubcomplexKind::Link: return link(arg);
    case SubcomplexKind::Star: return star(arg);
    case SubcomplexKind::Rest: return rest(arg);
    case SubcomplexKind::Full: return full(arg);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown subcomplex kind");
}

namespace {

// Finds a face sigma with b in sigma, a not in sigma, (sigma - b) + a not a face.
// Checking maximal faces is enough: any smaller witness extends to one.
std::optional<VertexSet> domination_failure(const SimplicialComplex& k, int a, int b) {
  for (VertexSet m : k.maximal_faces()) {
    if (!(m & vbit(b)) || (m & vbit(a))) continue;
    if (!k.contains((m & ~vbit(b)) | vbit(a))) return m;
  }
  return std::nullopt;
}

}  // namespace

ShiftVerdict SimplicialComplex::is_shifted(ShiftMode mode) const {
  ShiftVerdict verdict;
  std::vector<int> verts = vlist(ground_);
  if (mode == ShiftMode::GivenOrder) {
    for (std::size_t j = 0; j < verts.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (auto bad = domination_failure(*this, verts[i], verts[j])) {
          verdict.face = *bad;
          verdict.vertex = verts[j];
          verdict.replacement = verts[i];
          return verdict;
        }
    verdict.shifted = true;
    verdict.order = verts;
    return verdict;
  }

  if (verts.size() > 10)
    throw Error(ErrorKind::SizeLimit, "shifted search is limited to 10 vertices, got " + std::to_string(verts.size()));
  const std::size_t n = verts.size();
  std::vector<std::vector<char>> dom(n, std::vector<char>(n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) dom[i][j] = !domination_failure(*this, verts[i], verts[j]).has_value();

  // Depth-first over orders; a vertex may be placed only if it dominates every unplaced one.
  std::vector<char> used(n, 0);
  std::vector<int> order;
  auto place = [&](auto&& self) -> bool {
    if (order.size() == n) return true;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        if (!used[j] && j != i && !dom[i][j]) ok = false;
      if (!ok) continue;
      used[i] = 1;
      order.push_back(verts[i]);
      if (self(self)) return true;
      order.pop_back();
      used[i] = 0;
    }
    return false;
  };
  if (place(place)) {
    verdict.shifted = true;
    verdict.order = order;
    return verdict;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!dom[i][j] && !dom[j][i]) {
        verdict.face = *domination_failure(*this, verts[i], verts[j]);
        verdict.vertex = verts[j];
        verdict.replacement = verts[i];
        return verdict;
      }
  throw Error(ErrorKind::Invariant, "shifted search failed without an incomparable vertex pair");
}

VertexSet map_vertices(VertexSet s, const std::vector<int>& map) {
  VertexSet out = 0;
  for (int v : vlist(s)) {
    if (v >= static_cast<int>(map.size()) || map[v] == 0)
      throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " has no image");
    out |= vbit(map[v]);
  }
  return out;
}

SimplicialComplex SimplicialComplex::relabel(const std::vector<int>& order) const {
  std::vector<int> map(n() + 1, 0);
  VertexSet seen = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (v < 1 || !(ground_ & vbit(v)) || (seen & vbit(v)))
      throw Error(ErrorKind::InvalidArgument, "relabel order is not a permutation of the ground set");
    seen |= vbit(v);
    map[v] = static_cast<int>(i) + 1;
  }
  if (seen != ground_) throw Error(ErrorKind::InvalidArgument, "relabel order misses ground vertices");
  std::vector<VertexSet> gens;
  for (VertexSet m : maximal_) gens.push_back(map_vertices(m, map));
  return SimplicialComplex(vrange(static_cast<int>(order.size())), reduce_to_maximal(std::move(gens)));
}

GlueLayout glue_layout(const SimplicialComplex& k1, const SimplicialComplex& k2,
                       const std::vector<int>& face1, const std::vector<int>& face2) {
  if (face1.size() != face2.size())
    throw Error(ErrorKind::InvalidArgument, "glue faces have different sizes");
  VertexSet f1 = 0, f2 = 0;
  for (int v : face1) {
    if (v < 1 || v > kMaxVertices || (f1 & vbit(v))) throw Error(ErrorKind::InvalidArgument, "inconsistent identification");
    f1 |= vbit(v);
  }
  for (int v : face2) {
    if (v < 1 || v > kMaxVertices || (f2 & vbit(v))) throw Error(ErrorKind::InvalidArgument, "inconsistent identification");
    f2 |= vbit(v);
  }
  if (!k1.contains(f1)) throw Error(ErrorKind::InvalidArgument, vformat(f1) + " is not a face of the first complex");
  if (!k2.contains(f2)) throw Error(ErrorKind::InvalidArgument, vformat(f2) + " is not a face of the second complex");

  const int l = k1.vertex_count() - static_cast<int>(face1.size());
  const int m = k1.vertex_count();
  const int total = m + k2.vertex_count() - static_cast<int>(face2.size());
  if (total > kMaxVertices) throw Error(ErrorKind::SizeLimit, "glued complex exceeds 64 vertices");

  GlueLayout out;
  out.map1.assign(k1.n() + 1, 0);
  out.map2.assign(k2.n() + 1, 0);
  int next = 1;
  for (int v : vlist(k1.ground() & ~f1)) out.map1[v] = next++;
  for (std::size_t i = 0; i < face1.size(); ++i) {
    out.map1[face1[i]] = l + 1 + static_cast<int>(i);
    out.map2[face2[i]] = l + 1 + static_cast<int>(i);
  }
  next = m + 1;
  for (int v : vlist(k2.ground() & ~f2)) out.map2[v] = next++;
  out.left_only = vrange(l);
  out.shared = vrange(m) & ~vrange(l);
  out.right_only = vrange(total) & ~vrange(m);
  return out;
}

GlueLayout join_layout(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  const int m = k1.vertex_count(), total = m + k2.vertex_count();
  if (total > kMaxVertices) throw Error(ErrorKind::SizeLimit, "join exceeds 64 vertices");
  GlueLayout out;
  out.map1.assign(k1.n() + 1, 0);
  out.map2.assign(k2.n() + 1, 0);
  int next = 1;
  for (int v : vlist(k1.ground())) out.map1[v] = next++;
  for (int v : vlist(k2.ground())) out.map2[v] = next++;
  out.left_only = vrange(m);
  out.right_only = vrange(total) & ~vrange(m);
  return out;
}

SimplicialComplex combine(CombineKind kind, const SimplicialComplex& k1, const SimplicialComplex& k2,
                          const std::vector<int>& face1, const std::vector<int>& face2) {
  if (kind == CombineKind::Join) {
    GlueLayout lay = join_layout(k1, k2);
    std::vector<VertexSet> gens;
    for (VertexSet a : k1.maximal_faces())
      for (VertexSet b : k2.maximal_faces()) gens.push_back(map_vertices(a, lay.map1) | map_vertices(b, lay.map2));
    return SimplicialComplex::from_generators(lay.left_only | lay.right_only, std::move(gens));
  }
  GlueLayout lay = kind == CombineKind::Glue ? glue_layout(k1, k2, face1, face2) : glue_layout(k1, k2, {}, {});
  std::vector<VertexSet> gens;
  for (VertexSet a : k1.maximal_faces()) gens.push_back(map_vertices(a, lay.map1));
  for (VertexSet b : k2.maximal_faces()) gens.push_back(map_vertices(b, lay.map2));
  return SimplicialComplex::from_generators(lay.left_only | lay.shared | lay.right_only, std::move(gens));
}

}  // namespace zkw
