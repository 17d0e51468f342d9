#include "zkwedge/hochster.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "zkwedge/error.hpp"
#include "zkwedge/zhomology.hpp"

namespace zkw {

std::uint64_t BigradedBetti::rank(VertexSet sigma, int degree) const {
  for (const auto& e : entries)
    if (e.sigma == sigma && e.degree == degree) return e.rank;
  return 0;
}

bool BigradedBetti::torsion_free() const {
  return std::none_of(entries.begin(), entries.end(), [](const BettiEntry& e) { return e.torsion; });
}

std::vector<std::uint64_t> BigradedBetti::poincare() const {
  std::vector<std::uint64_t> p;
  for (const auto& e : entries) {
    if (e.rank == 0) continue;
    if (p.size() <= static_cast<std::size_t>(e.degree)) p.resize(e.degree + 1, 0);
    p[e.degree] += e.rank;
  }
  return p;
}

namespace {

// Entries contributed by one full subcomplex, in degree order.
std::vector<BettiEntry> entries_for(const std::vector<VertexSet>& all_faces, VertexSet sigma) {
  std::vector<VertexSet> faces;
  for (VertexSet f : all_faces)
    if (vsubset(f, sigma)) faces.push_back(f);
  HomologySummary h = reduced_homology_of_faces(faces);
  const int size = vcount(sigma);
  std::vector<BettiEntry> out;
  // H^j has rank b_j; its torsion is that of H_{j-1}.
  for (int j = -1; j <= h.top_degree() + 1; ++j) {
    std::uint64_t r = h.betti(j);
    bool tors = j >= 0 && !h.torsion(j - 1).empty();
    if (r == 0 && !tors) continue;
    out.push_back(BettiEntry{sigma, j + size + 1, r, tors});
  }
  return out;
}

}  // namespace

BigradedBetti bigraded_betti(const SimplicialComplex& k, unsigned threads) {
  if (k.vertex_count() > kOracleMaxVertices)
    throw Error(ErrorKind::SizeLimit, "oracle is limited to " + std::to_string(kOracleMaxVertices) +
                                          " vertices, got " + std::to_string(k.vertex_count()));
  std::vector<VertexSet> sigmas;
  for_each_subset(k.ground(), [&](VertexSet s) {
    if (s) sigmas.push_back(s);
  });
  std::sort(sigmas.begin(), sigmas.end(), vsize_lex_less);

  const auto& faces = k.faces();
  std::vector<std::vector<BettiEntry>> slots(sigmas.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, sigmas.size())));
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < sigmas.size(); i += threads) slots[i] = entries_for(faces, sigmas[i]);
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  BigradedBetti out;
  for (auto& slot : slots)
    for (auto& e : slot) out.entries.push_back(e);
  return out;
}

ZkProfile zk_profile(const BigradedBetti& betti) {
  ZkProfile out;
  out.poincare = betti.poincare();
  out.torsion_free = betti.torsion_free();
  if (out.torsion_free) {
    out.has_candidate = true;
    for (std::size_t d = 0; d < out.poincare.size(); ++d)
      if (out.poincare[d]) out.sphere_candidate.add(static_cast<int>(d), out.poincare[d]);
  }
  return out;
}

ZkProfile zk_profile(const SimplicialComplex& k, unsigned threads) { return zk_profile(bigraded_betti(k, threads)); }

}  // namespace zkw
