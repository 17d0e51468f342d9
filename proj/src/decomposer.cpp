#include "zkwedge/decomposer.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "zkwedge/error.hpp"

namespace zkw {

const char* phase_name(StepPhase p) {
  switch (p) {
    case StepPhase::Iteration1: return "iteration1";
    case StepPhase::Iteration2Pre: return "iteration2_pre";
    case StepPhase::Iteration2Main: return "iteration2_main";
  }
  return "?";
}

namespace {

VertexSet cone_points(const SimplicialComplex& a) {
  VertexSet common = a.ground();
  for (VertexSet m : a.maximal_faces()) common &= m;
  return common;
}

SimplicialComplex with_vertices(const SimplicialComplex& k) {
  std::vector<VertexSet> gens = k.maximal_faces();
  for (int v : vlist(k.ground())) gens.push_back(vbit(v));
  return SimplicialComplex::from_generators(k.ground(), std::move(gens));
}

SimplicialComplex adjoin(const SimplicialComplex& k, VertexSet face) {
  std::vector<VertexSet> gens = k.maximal_faces();
  gens.push_back(face);
  return SimplicialComplex::from_generators(k.ground(), std::move(gens));
}

bool unit_less(const FibreUnit& a, const FibreUnit& b) {
  if (a.index != b.index) return vsize_lex_less(a.index, b.index);
  if (a.suspension != b.suspension) return a.suspension < b.suspension;
  return vlex_less(a.witness, b.witness);
}

SymbolicWedge to_wedge(const std::vector<FibreUnit>& units) {
  SymbolicWedge w;
  for (const auto& u : units) w.add(u.suspension, u.index);
  return w;
}

void require_shifted(const SimplicialComplex& k) {
  ShiftVerdict v = k.is_shifted(ShiftMode::GivenOrder);
  if (!v.shifted)
    throw Error(ErrorKind::NotShifted, "complex is not shifted: replacing " + std::to_string(v.vertex) + " by " +
                                           std::to_string(v.replacement) + " in " + vformat(v.face) +
                                           " leaves the complex");
}

void require_no_ghosts(const SimplicialComplex& k) {
  if (VertexSet g = k.ghosts()) throw Error(ErrorKind::GhostVertex, "ghost vertices " + vformat(g));
}

class Recursion {
 public:
  explicit Recursion(bool certify) : certify_(certify) {}

  const std::vector<FibreUnit>& units(const SimplicialComplex& k) {
    auto key = std::make_pair(k.ground(), k.maximal_faces());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<FibreUnit> out = compute(k, nullptr);
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  // Top level: same as units() but also hands back the split.
  std::vector<FibreUnit> units_with_split(const SimplicialComplex& k, ThetaSplit& split) { return compute(k, &split); }

 private:
  std::vector<FibreUnit> compute(const SimplicialComplex& k, ThetaSplit* split_out) {
    const VertexSet ground = k.ground();
    std::vector<FibreUnit> out;
    if (!ground) return out;
    if (k.maximal_faces().front() == 0) {
      // K = {empty face}: every K_J is {empty face}, one unit per nonempty J.
      for_each_subset(ground, [&](VertexSet j) {
        if (j) out.push_back(FibreUnit{0, j, 0});
      });
      std::sort(out.begin(), out.end(), unit_less);
      return out;
    }
    const int v1 = vmin(ground);
    const VertexSet rest_ground = ground & ~vbit(v1);
    if (!rest_ground) return out;

    SimplicialComplex link = k.link(vbit(v1));
    SimplicialComplex rest = k.rest(rest_ground);
    ThetaSplit split = split_units(k, link, rest, units(link), units(rest));

    for (const auto& u : split.retract_part) out.push_back(u);
    for (const auto& u : split.trivial_part)
      out.push_back(FibreUnit{u.suspension + 1, u.index | vbit(v1), u.witness | vbit(vmin(u.index))});
    for (const auto& u : split.cokernel_part) {
      out.push_back(u);
      out.push_back(FibreUnit{u.suspension, u.index | vbit(v1), u.witness});
    }
    std::sort(out.begin(), out.end(), unit_less);
    if (split_out) *split_out = std::move(split);
    return out;
  }

  ThetaSplit split_units(const SimplicialComplex& k, const SimplicialComplex& link, const SimplicialComplex& rest,
                         const std::vector<FibreUnit>& link_units, const std::vector<FibreUnit>& rest_units) {
    ThetaSplit split;
    std::vector<char> hit(rest_units.size(), 0);
    for (const auto& u : link_units) {
      if (k.contains(u.witness | vbit(vmin(u.index)))) {
        split.trivial_part.push_back(u);
        continue;
      }
      // The witness stays critical in the rest, so the unit must reappear there.
      auto it = std::find(rest_units.begin(), rest_units.end(), u);
      if (it == rest_units.end())
        throw Error(ErrorKind::Invariant, "link unit (" + std::to_string(u.suspension) + "," + vformat(u.index) +
                                              ") has no image in the rest fibre");
      hit[it - rest_units.begin()] = 1;
      split.retract_part.push_back(u);
    }
    for (std::size_t i = 0; i < rest_units.size(); ++i)
      if (!hit[i]) split.cokernel_part.push_back(rest_units[i]);
    if (certify_ && link.ghosts() == 0) split.trace = certify(link, rest, link_units, split.trivial_part);
    return split;
  }

  // Runs the regular sequence Link(1) -> Star_R(2) u Link(1) and checks that it consumes
  // exactly the trivial units whose completion it adjoins, ending at the target's fibre.
  std::vector<StepTrace> certify(const SimplicialComplex& link, const SimplicialComplex& rest,
                                 const std::vector<FibreUnit>& link_units, const std::vector<FibreUnit>& trivial) {
    const int v2 = vmin(rest.ground());
    SimplicialComplex start = with_vertices(link);
    std::vector<VertexSet> gens = rest.star(vbit(v2)).maximal_faces();
    for (VertexSet m : start.maximal_faces()) gens.push_back(m);
    SimplicialComplex target = SimplicialComplex::from_generators(rest.ground(), std::move(gens));

    std::vector<RegularStep> steps = regular_sequence(start, target, v2);
    std::vector<StepTrace> trace = run_sequence(to_wedge(link_units), steps);

    std::map<VertexSet, std::size_t> step_of;
    for (std::size_t i = 0; i < steps.size(); ++i) step_of[steps[i].simplex] = i;
    std::vector<SymbolicWedge> consumed(steps.size());
    SymbolicWedge survivors = to_wedge(link_units);
    for (const auto& u : trivial) {
      VertexSet completion = u.witness | vbit(vmin(u.index));
      if (!target.contains(completion)) continue;
      auto it = step_of.find(completion);
      if (it == step_of.end())
        throw Error(ErrorKind::Invariant, "face " + vformat(completion) + " of the target was never adjoined");
      consumed[it->second].add(u.suspension, u.index);
      SymbolicWedge one;
      one.add(u.suspension, u.index);
      survivors = survivors.minus(one);
    }
    for (std::size_t i = 0; i < steps.size(); ++i)
      if (!trace[i].D.contains(consumed[i]))
        throw Error(ErrorKind::Invariant, "step " + vformat(steps[i].simplex) + " consumes units outside its D");
    const SymbolicWedge& final_fibre = trace.empty() ? survivors : trace.back().after;
    if (!trace.empty() && !final_fibre.contains(survivors))
      throw Error(ErrorKind::Invariant, "units surviving the regular sequence are missing from its final fibre");
    SymbolicWedge expected = to_wedge(units(target));
    SymbolicWedge reached = trace.empty() ? to_wedge(link_units) : trace.back().after;
    if (!(reached == expected))
      throw Error(ErrorKind::Invariant, "regular sequence ends at " + reached.format() + ", expected " +
                                            expected.format());
    return trace;
  }

  bool certify_;
  std::map<std::pair<VertexSet, std::vector<VertexSet>>, std::vector<FibreUnit>> cache_;
};

}  // namespace

std::vector<RegularStep> regular_sequence(const SimplicialComplex& start, const SimplicialComplex& target, int apex) {
  const VertexSet ground = target.ground();
  if (!(ground & vbit(apex))) throw Error(ErrorKind::InvalidArgument, "apex outside the ground set");
  SimplicialComplex current = with_vertices(start);
  std::vector<RegularStep> steps;
  auto push = [&](VertexSet face, StepPhase phase) {
    RegularStep step;
    step.simplex = face;
    step.S = cone_points(current) & ~face;
    step.T = ground & ~face & ~step.S;
    step.phase = phase;
    steps.push_back(step);
    current = adjoin(current, face);
  };
  for (int j : vlist(ground & ~vbit(apex))) {
    VertexSet edge = vbit(apex) | vbit(j);
    if (target.contains(edge) && !current.contains(edge)) push(edge, StepPhase::Iteration1);
  }
  std::vector<VertexSet> higher;
  for (VertexSet f : target.faces())
    if ((f & vbit(apex)) && vcount(f) >= 3) higher.push_back(f);
  std::sort(higher.begin(), higher.end(), vsize_lex_less);
  for (VertexSet f : higher) {
    if (current.contains(f)) continue;
    VertexSet opposite = f & ~vbit(apex);
    if (!current.contains(opposite)) push(opposite, StepPhase::Iteration2Pre);
    push(f, StepPhase::Iteration2Main);
  }
  for (VertexSet m : target.maximal_faces())
    if (!current.contains(m))
      throw Error(ErrorKind::InvalidArgument, "face " + vformat(m) + " of the target is not reached through the apex");
  return steps;
}

std::vector<RegularStep> build_regular_sequence(const SimplicialComplex& k) {
  require_shifted(k);
  require_no_ghosts(k);
  if (!k.ground()) throw Error(ErrorKind::InvalidArgument, "complex has no vertices");
  const int apex = vmin(k.ground());
  SimplicialComplex wedge_stage = SimplicialComplex::from_generators(k.ground(), {});
  SimplicialComplex target = with_vertices(k.star(vbit(apex)));
  return regular_sequence(wedge_stage, target, apex);
}

StepTrace construction_step(const SymbolicWedge& before, const RegularStep& step) {
  const VertexSet i = step.simplex;
  if (vcount(i) < 2) throw Error(ErrorKind::InvalidArgument, "adjoined simplex needs at least two vertices");
  if ((step.S & step.T) || (i & (step.S | step.T)))
    throw Error(ErrorKind::InvalidArgument, "step sets I, S, T must be disjoint");
  SymbolicWedge y;
  y.add(vcount(i) - 1, i);
  StepTrace out;
  out.step = step;
  out.before = before;
  SymbolicWedge ys = smash_with_torus(y, step.S);
  out.C = wedge(ys, smash_with_torus(ys, step.T));
  out.D = wedge(y, smash_with_torus(y, step.T));
  if (!before.contains(out.D))
    throw Error(ErrorKind::NonRegularStep, "non-regular step at " + vformat(i) + ": D = " + out.D.format() +
                                               " is not contained in F = " + before.format());
  out.E = before.minus(out.D);
  out.after = wedge(suspend(out.C, 1), out.E);
  return out;
}

std::vector<StepTrace> run_sequence(const SymbolicWedge& start, const std::vector<RegularStep>& steps) {
  std::vector<StepTrace> out;
  SymbolicWedge f = start;
  for (const auto& step : steps) {
    out.push_back(construction_step(f, step));
    f = out.back().after;
  }
  return out;
}

std::vector<FibreUnit> fibre_units(const SimplicialComplex& k, bool certify) {
  require_shifted(k);
  Recursion rec(certify);
  return rec.units(k);
}

ThetaSplit split_theta(const SimplicialComplex& k) {
  require_shifted(k);
  ThetaSplit split;
  Recursion rec(true);
  rec.units_with_split(k, split);
  return split;
}

Decomposition decompose_traced(const SimplicialComplex& k, bool certify) {
  require_shifted(k);
  require_no_ghosts(k);
  Recursion rec(certify);
  ThetaSplit split;
  std::vector<FibreUnit> units = rec.units_with_split(k, split);
  Decomposition out;
  for (const auto& u : units) {
    if (u.suspension < 1 || vcount(u.index) < 2)
      throw Error(ErrorKind::Invariant, "summand (" + std::to_string(u.suspension) + "," + vformat(u.index) +
                                            ") violates s >= 1, |I| >= 2");
    out.wedge.add(u.suspension, u.index);
  }
  out.trace = std::move(split.trace);
  return out;
}

SymbolicWedge decompose(const SimplicialComplex& k) { return decompose_traced(k).wedge; }

}  // namespace zkw
