#include "zkwedge/wedge.hpp"

#include "zkwedge/error.hpp"

namespace zkw {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void SphereWedge::add(int dim, std::uint64_t count) {
  if (dim < 1) throw Error(ErrorKind::InvalidArgument, "sphere dimension must be >= 1");
  if (count) dims_[dim] += count;
}

std::uint64_t SphereWedge::total() const {
  std::uint64_t t = 0;
  for (const auto& [d, c] : dims_) t += c;
  return t;
}

std::vector<std::uint64_t> SphereWedge::poincare() const {
  std::vector<std::uint64_t> p;
  if (!dims_.empty()) p.assign(dims_.rbegin()->first + 1, 0);
  for (const auto& [d, c] : dims_) p[d] += c;
  return p;
}

std::string SphereWedge::format() const {
  if (dims_.empty()) return "point";
  std::string out;
  for (const auto& [d, c] : dims_) {
    if (!out.empty()) out += ", ";
    out += "S^" + std::to_string(d) + " x" + std::to_string(c);
  }
  return out;
}

void SymbolicWedge::add(int suspension, VertexSet index, std::uint64_t mult) {
  if (suspension < 1) throw Error(ErrorKind::InvalidArgument, "summand suspension must be >= 1");
  if (index == 0) throw Error(ErrorKind::InvalidArgument, "summand index set must be nonempty");
  if (mult) summands_[Summand{suspension, index}] += mult;
}

void SymbolicWedge::add(const SymbolicWedge& other) {
  for (const auto& [k, m] : other.summands_) summands_[k] += m;
}

std::uint64_t SymbolicWedge::multiplicity(int suspension, VertexSet index) const {
  auto it = summands_.find(Summand{suspension, index});
  return it == summands_.end() ? 0 : it->second;
}

std::uint64_t SymbolicWedge::total() const {
  std::uint64_t t = 0;
  for (const auto& [k, m] : summands_) t += m;
  return t;
}

VertexSet SymbolicWedge::support() const {
  VertexSet s = 0;
  for (const auto& [k, m] : summands_) s |= k.index;
  return s;
}

bool SymbolicWedge::contains(const SymbolicWedge& sub) const {
  for (const auto& [k, m] : sub.summands_) {
    auto it = summands_.find(k);
    if (it == summands_.end() || it->second < m) return false;
  }
  return true;
}

SymbolicWedge SymbolicWedge::minus(const SymbolicWedge& sub) const {
  if (!contains(sub)) throw Error(ErrorKind::NonRegularStep, "wedge " + sub.format() + " is not contained in " + format());
  SymbolicWedge out = *this;
  for (const auto& [k, m] : sub.summands_) {
    auto it = out.summands_.find(k);
    if ((it->second -= m) == 0) out.summands_.erase(it);
  }
  return out;
}

SymbolicWedge SymbolicWedge::relabel(const std::vector<int>& map) const {
  SymbolicWedge out;
  for (const auto& [k, m] : summands_) {
    VertexSet idx = 0;
    for (int v : vlist(k.index)) {
      if (v >= static_cast<int>(map.size()) || map[v] == 0)
        throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " has no image");
      idx |= vbit(map[v]);
    }
    out.add(k.suspension, idx, m);
  }
  return out;
}

std::string SymbolicWedge::format() const {
  if (summands_.empty()) return "{}";
  std::string out;
  for (const auto& [k, m] : summands_) {
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(k.suspension) + "," + vformat(k.index);
    if (m != 1) out += ",x" + std::to_string(m);
    out += ")";
  }
  return out;
}

SphereWedge realize(const SymbolicWedge& w, int loop_dim) {
  if (loop_dim != 1 && loop_dim != 3) throw Error(ErrorKind::InvalidArgument, "loop dimension must be 1 or 3");
  SphereWedge out;
  for (const auto& [k, m] : w.summands()) out.add(k.suspension + loop_dim * vcount(k.index), m);
  return out;
}

SymbolicWedge wedge(const SymbolicWedge& a, const SymbolicWedge& b) {
  SymbolicWedge out = a;
  out.add(b);
  return out;
}

SymbolicWedge suspend(const SymbolicWedge& w, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "suspension count must be >= 0");
  SymbolicWedge out;
  for (const auto& [s, m] : w.summands()) out.add(s.suspension + k, s.index, m);
  return out;
}

namespace {

void require_disjoint(VertexSet a, VertexSet b, const char* what) {
  if (a & b)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": overlapping supports at " + vformat(a & b));
}

}  // namespace

SymbolicWedge smash(const SymbolicWedge& a, const SymbolicWedge& b) {
  require_disjoint(a.support(), b.support(), "smash");
  SymbolicWedge out;
  for (const auto& [x, mx] : a.summands())
    for (const auto& [y, my] : b.summands()) out.add(x.suspension + y.suspension, x.index | y.index, mx * my);
  return out;
}

SymbolicWedge join(const SymbolicWedge& a, const SymbolicWedge& b) { return suspend(smash(a, b), 1); }

SymbolicWedge join_loop(const SymbolicWedge& w, int v) {
  require_disjoint(w.support(), vbit(v), "join");
  SymbolicWedge out;
  for (const auto& [s, m] : w.summands()) out.add(s.suspension + 1, s.index | vbit(v), m);
  return out;
}

SymbolicWedge smash_with_torus(const SymbolicWedge& w, VertexSet j) {
  require_disjoint(w.support(), j, "smash with torus");
  SymbolicWedge out;
  for (const auto& [s, m] : w.summands())
    for_each_subset(j, [&](VertexSet u) {
      if (u) out.add(s.suspension, s.index | u, m);
    });
  return out;
}

SymbolicWedge half_smash_right(const SymbolicWedge& w, VertexSet j) { return wedge(w, smash_with_torus(w, j)); }

SymbolicWedge half_smash_left(VertexSet j, const SymbolicWedge& w) { return half_smash_right(w, j); }

SymbolicWedge torus_join_torus(VertexSet j1, VertexSet j2) {
  require_disjoint(j1, j2, "torus join");
  SymbolicWedge out;
  for_each_subset(j1, [&](VertexSet u) {
    if (!u) return;
    for_each_subset(j2, [&](VertexSet v) {
      if (v) out.add(1, u | v);
    });
  });
  return out;
}

SymbolicWedge skeleton_fibre(int n, int k) {
  if (n > kMaxVertices || k < 1 || k > n - 1)
    throw Error(ErrorKind::InvalidArgument, "skeleton fibre needs 1 <= k <= n-1");
  const int s = n - k;
  SymbolicWedge out;
  for_each_subset(vrange(n), [&](VertexSet idx) {
    int size = vcount(idx);
    if (size >= s + 1) out.add(s, idx, binomial(size - 1, s));
  });
  return out;
}

SphereWedge wedge(const SphereWedge& a, const SphereWedge& b) {
  SphereWedge out = a;
  for (const auto& [d, c] : b.dims()) out.add(d, c);
  return out;
}

SphereWedge smash(const SphereWedge& a, const SphereWedge& b) {
  SphereWedge out;
  for (const auto& [d1, c1] : a.dims())
    for (const auto& [d2, c2] : b.dims()) out.add(d1 + d2, c1 * c2);
  return out;
}

SphereWedge half_smash_torus(const SphereWedge& w, int torus_rank) {
  SphereWedge out = w;
  for (const auto& [d, c] : w.dims())
    for (int u = 1; u <= torus_rank; ++u) out.add(d + u, c * binomial(torus_rank, u));
  return out;
}

}  // namespace zkw
