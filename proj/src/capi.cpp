#include "zkwedge/zkwedge.h"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "zkwedge/decomposer.hpp"
#include "zkwedge/error.hpp"
#include "zkwedge/families.hpp"
#include "zkwedge/hochster.hpp"
#include "zkwedge/scx.hpp"
#include "zkwedge/series.hpp"

struct zkw_complex {
  zkw::SimplicialComplex value;
};
struct zkw_wedge {
  zkw::SymbolicWedge value;
};
struct zkw_spheres {
  std::vector<std::pair<int, std::uint64_t>> entries;
};
struct zkw_trace {
  std::vector<zkw::RegularStep> steps;
  std::optional<std::vector<zkw::StepTrace>> runs;
};
struct zkw_betti {
  zkw::BigradedBetti value;
};
struct zkw_family {
  zkw::FamilyElement value;
};
struct zkw_ratfun {
  zkw::RationalFunction value;
};

namespace {

thread_local std::string last_error;

zkw_status status_of(zkw::ErrorKind kind) {
  using zkw::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument: return ZKW_ERR_INVALID_ARGUMENT;
    case ErrorKind::Parse: return ZKW_ERR_PARSE;
    case ErrorKind::SizeLimit: return ZKW_ERR_SIZE_LIMIT;
    case ErrorKind::NotShifted: return ZKW_ERR_NOT_SHIFTED;
    case ErrorKind::GhostVertex: return ZKW_ERR_GHOST_VERTEX;
    case ErrorKind::NonRegularStep: return ZKW_ERR_NON_REGULAR_STEP;
    case ErrorKind::Invariant: return ZKW_ERR_INVARIANT;
    case ErrorKind::DivisionByZero: return ZKW_ERR_DIVISION_BY_ZERO;
  }
  return ZKW_ERR_INTERNAL;
}

template <class F>
zkw_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return ZKW_OK;
  } catch (const zkw::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ZKW_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ZKW_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw zkw::Error(zkw::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

zkw_spheres* make_spheres(const zkw::SphereWedge& s) {
  auto* out = new zkw_spheres;
  for (const auto& [d, c] : s.dims()) out->entries.emplace_back(d, c);
  return out;
}

std::vector<int> face_vector(const int* face, size_t size) {
  if (size && !face) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "face array is null");
  return std::vector<int>(face, face + size);
}

}  // namespace

extern "C" {

const char* zkw_version(void) { return "1.0.0"; }

const char* zkw_last_error(void) { return last_error.c_str(); }

void zkw_string_free(char* s) { delete[] s; }

zkw_status zkw_complex_parse_scx(const char* text, zkw_complex** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new zkw_complex{zkw::parse_scx(text)};
  });
}

zkw_status zkw_complex_to_scx(const zkw_complex* k, char** out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    *out = dup_string(zkw::print_scx(k->value));
  });
}

zkw_status zkw_complex_from_faces(int n, const zkw_vset* faces, size_t count, zkw_complex** out) {
  return guarded([&] {
    require(out, "out");
    if (count) require(faces, "faces");
    if (n < 0 || n > zkw::kMaxVertices) throw zkw::Error(zkw::ErrorKind::SizeLimit, "vertex count out of range");
    std::vector<zkw::VertexSet> gens(faces, faces + count);
    *out = new zkw_complex{zkw::SimplicialComplex::from_generators(zkw::vrange(n), std::move(gens))};
  });
}

zkw_status zkw_complex_skeleton(int n, int q, zkw_complex** out) {
  return guarded([&] {
    require(out, "out");
    *out = new zkw_complex{zkw::SimplicialComplex::skeleton(n, q)};
  });
}

void zkw_complex_free(zkw_complex* k) { delete k; }

zkw_vset zkw_complex_ground(const zkw_complex* k) { return k ? k->value.ground() : 0; }

size_t zkw_complex_maximal_count(const zkw_complex* k) { return k ? k->value.maximal_faces().size() : 0; }

zkw_vset zkw_complex_maximal_face(const zkw_complex* k, size_t i) {
  return k && i < k->value.maximal_faces().size() ? k->value.maximal_faces()[i] : 0;
}

size_t zkw_complex_face_count(const zkw_complex* k) { return k ? k->value.face_count() : 0; }

int zkw_complex_equal(const zkw_complex* a, const zkw_complex* b) { return a && b && a->value == b->value; }

zkw_status zkw_complex_subcomplex(const zkw_complex* k, zkw_subcomplex_kind kind, zkw_vset arg, zkw_complex** out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    if (kind < ZKW_LINK || kind > ZKW_FULL) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "unknown subcomplex kind");
    *out = new zkw_complex{k->value.subcomplex(static_cast<zkw::SubcomplexKind>(kind), arg)};
  });
}

zkw_status zkw_complex_combine(zkw_combine_kind kind, const zkw_complex* a, const zkw_complex* b, const int* face_a,
                               const int* face_b, size_t face_size, zkw_complex** out) {
  return guarded([&] {
    require(a, "first complex");
    require(b, "second complex");
    require(out, "out");
    if (kind < ZKW_DISJOINT_UNION || kind > ZKW_JOIN) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "unknown combine kind");
    *out = new zkw_complex{zkw::combine(static_cast<zkw::CombineKind>(kind), a->value, b->value,
                                        face_vector(face_a, face_size), face_vector(face_b, face_size))};
  });
}

zkw_status zkw_complex_relabel(const zkw_complex* k, const int* order, size_t length, zkw_complex** out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    *out = new zkw_complex{k->value.relabel(face_vector(order, length))};
  });
}

zkw_status zkw_is_shifted(const zkw_complex* k, int search, zkw_shift_verdict* out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    zkw::ShiftVerdict v = k->value.is_shifted(search ? zkw::ShiftMode::Search : zkw::ShiftMode::GivenOrder);
    *out = zkw_shift_verdict{};
    out->shifted = v.shifted;
    out->order_length = static_cast<int>(v.order.size());
    for (size_t i = 0; i < v.order.size(); ++i) out->order[i] = v.order[i];
    out->face = v.face;
    out->vertex = v.vertex;
    out->replacement = v.replacement;
  });
}

zkw_status zkw_decompose(const zkw_complex* k, zkw_wedge** out, zkw_trace** trace) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    zkw::Decomposition d = zkw::decompose_traced(k->value);
    if (trace) {
      auto* t = new zkw_trace;
      for (const auto& s : d.trace) t->steps.push_back(s.step);
      t->runs = std::move(d.trace);
      *trace = t;
    }
    *out = new zkw_wedge{std::move(d.wedge)};
  });
}

zkw_status zkw_skeleton_fibre(int n, int k, zkw_wedge** out) {
  return guarded([&] {
    require(out, "out");
    *out = new zkw_wedge{zkw::skeleton_fibre(n, k)};
  });
}

size_t zkw_wedge_count(const zkw_wedge* w) { return w ? w->value.summands().size() : 0; }

zkw_status zkw_wedge_summand(const zkw_wedge* w, size_t i, int* suspension, zkw_vset* index, uint64_t* mult) {
  return guarded([&] {
    require(w, "wedge");
    if (i >= w->value.summands().size()) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "summand index out of range");
    auto it = std::next(w->value.summands().begin(), static_cast<std::ptrdiff_t>(i));
    if (suspension) *suspension = it->first.suspension;
    if (index) *index = it->first.index;
    if (mult) *mult = it->second;
  });
}

zkw_status zkw_wedge_realize(const zkw_wedge* w, int loop_dim, zkw_spheres** out) {
  return guarded([&] {
    require(w, "wedge");
    require(out, "out");
    *out = make_spheres(zkw::realize(w->value, loop_dim));
  });
}

void zkw_wedge_free(zkw_wedge* w) { delete w; }

size_t zkw_spheres_count(const zkw_spheres* s) { return s ? s->entries.size() : 0; }

zkw_status zkw_spheres_entry(const zkw_spheres* s, size_t i, int* dim, uint64_t* count) {
  return guarded([&] {
    require(s, "spheres");
    if (i >= s->entries.size()) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "sphere index out of range");
    if (dim) *dim = s->entries[i].first;
    if (count) *count = s->entries[i].second;
  });
}

void zkw_spheres_free(zkw_spheres* s) { delete s; }

zkw_status zkw_regular_sequence(const zkw_complex* k, int run, zkw_trace** out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    auto t = std::make_unique<zkw_trace>();
    t->steps = zkw::build_regular_sequence(k->value);
    if (run) {
      int n = k->value.vertex_count();
      zkw::SymbolicWedge start = n >= 2 ? zkw::skeleton_fibre(n, n - 1) : zkw::SymbolicWedge{};
      if (k->value.ground() != zkw::vrange(n))
        throw zkw::Error(zkw::ErrorKind::InvalidArgument, "running a sequence needs vertices 1..n");
      t->runs = zkw::run_sequence(start, t->steps);
    }
    *out = t.release();
  });
}

size_t zkw_trace_count(const zkw_trace* t) { return t ? t->steps.size() : 0; }

zkw_status zkw_trace_step(const zkw_trace* t, size_t i, zkw_step* out) {
  return guarded([&] {
    require(t, "trace");
    require(out, "out");
    if (i >= t->steps.size()) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "step index out of range");
    const auto& s = t->steps[i];
    *out = zkw_step{s.simplex, s.S, s.T, static_cast<zkw_phase>(s.phase)};
  });
}

zkw_status zkw_trace_wedge(const zkw_trace* t, size_t i, zkw_trace_part part, zkw_wedge** out) {
  return guarded([&] {
    require(t, "trace");
    require(out, "out");
    if (!t->runs) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "trace holds steps only");
    if (i >= t->runs->size()) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "step index out of range");
    const auto& r = (*t->runs)[i];
    switch (part) {
      case ZKW_PART_C: *out = new zkw_wedge{r.C}; break;
      case ZKW_PART_D: *out = new zkw_wedge{r.D}; break;
      case ZKW_PART_E: *out = new zkw_wedge{r.E}; break;
      case ZKW_PART_BEFORE: *out = new zkw_wedge{r.before}; break;
      case ZKW_PART_AFTER: *out = new zkw_wedge{r.after}; break;
      default: throw zkw::Error(zkw::ErrorKind::InvalidArgument, "unknown trace part");
    }
  });
}

void zkw_trace_free(zkw_trace* t) { delete t; }

zkw_status zkw_bigraded_betti(const zkw_complex* k, unsigned threads, zkw_betti** out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    *out = new zkw_betti{zkw::bigraded_betti(k->value, threads)};
  });
}

size_t zkw_betti_count(const zkw_betti* b) { return b ? b->value.entries.size() : 0; }

zkw_status zkw_betti_entry(const zkw_betti* b, size_t i, zkw_vset* sigma, int* degree, uint64_t* rank, int* torsion) {
  return guarded([&] {
    require(b, "betti");
    if (i >= b->value.entries.size()) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "entry index out of range");
    const auto& e = b->value.entries[i];
    if (sigma) *sigma = e.sigma;
    if (degree) *degree = e.degree;
    if (rank) *rank = e.rank;
    if (torsion) *torsion = e.torsion;
  });
}

int zkw_betti_torsion_free(const zkw_betti* b) { return b && b->value.torsion_free(); }

zkw_status zkw_betti_poincare(const zkw_betti* b, uint64_t* coeffs, size_t cap, size_t* length) {
  return guarded([&] {
    require(b, "betti");
    auto p = b->value.poincare();
    if (cap) require(coeffs, "coeffs");
    for (size_t i = 0; i < p.size() && i < cap; ++i) coeffs[i] = p[i];
    if (length) *length = p.size();
  });
}

void zkw_betti_free(zkw_betti* b) { delete b; }

zkw_status zkw_family_from_shifted(const zkw_complex* k, zkw_family** out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    *out = new zkw_family{zkw::family_from_shifted(k->value)};
  });
}

zkw_status zkw_family_combine(zkw_combine_kind kind, const zkw_family* a, const zkw_family* b, const int* face_a,
                              const int* face_b, size_t face_size, zkw_family** out) {
  return guarded([&] {
    require(a, "first element");
    require(b, "second element");
    require(out, "out");
    switch (kind) {
      case ZKW_DISJOINT_UNION: *out = new zkw_family{zkw::op_disjoint_union(a->value, b->value)}; break;
      case ZKW_GLUE:
        *out = new zkw_family{
            zkw::op_glue(a->value, b->value, face_vector(face_a, face_size), face_vector(face_b, face_size))};
        break;
      case ZKW_JOIN: *out = new zkw_family{zkw::op_join(a->value, b->value)}; break;
      default: throw zkw::Error(zkw::ErrorKind::InvalidArgument, "unknown combine kind");
    }
  });
}

int zkw_family_level(const zkw_family* f) { return f ? f->value.level : -1; }

int zkw_family_is_symbolic(const zkw_family* f) { return f && f->value.symbolic; }

zkw_status zkw_family_complex(const zkw_family* f, zkw_complex** out) {
  return guarded([&] {
    require(f, "element");
    require(out, "out");
    *out = new zkw_complex{f->value.complex};
  });
}

zkw_status zkw_family_wedge(const zkw_family* f, zkw_wedge** out) {
  return guarded([&] {
    require(f, "element");
    require(out, "out");
    if (!f->value.symbolic) throw zkw::Error(zkw::ErrorKind::InvalidArgument, "element carries sphere data only");
    *out = new zkw_wedge{f->value.wedge};
  });
}

zkw_status zkw_family_spheres(const zkw_family* f, zkw_spheres** out) {
  return guarded([&] {
    require(f, "element");
    require(out, "out");
    *out = make_spheres(f->value.spheres);
  });
}

zkw_status zkw_family_check_oracle(const zkw_family* f, unsigned threads, int* poincare_match, int* torsion_free) {
  return guarded([&] {
    require(f, "element");
    zkw::OracleAgreement a = zkw::check_against_oracle(f->value, threads);
    if (poincare_match) *poincare_match = a.poincare_match;
    if (torsion_free) *torsion_free = a.torsion_free;
  });
}

void zkw_family_free(zkw_family* f) { delete f; }

zkw_status zkw_face_ring_poincare(unsigned n, const uint64_t* p_reduced, size_t length, zkw_ratfun** out) {
  return guarded([&] {
    require(out, "out");
    if (length) require(p_reduced, "polynomial");
    std::vector<zkw::Integer> c(p_reduced, p_reduced + length);
    *out = new zkw_ratfun{zkw::face_ring_poincare(n, zkw::IntPolynomial(std::move(c)))};
  });
}

zkw_status zkw_serre_series(unsigned n, zkw_ratfun** out) {
  return guarded([&] {
    require(out, "out");
    *out = new zkw_ratfun{zkw::serre_series(n)};
  });
}

zkw_status zkw_tate_series(unsigned n, unsigned m, zkw_ratfun** out) {
  return guarded([&] {
    require(out, "out");
    *out = new zkw_ratfun{zkw::tate_series(n, m)};
  });
}

zkw_status zkw_golod_series(unsigned n, const uint64_t* c, size_t length, zkw_ratfun** out) {
  return guarded([&] {
    require(out, "out");
    if (length) require(c, "coefficients");
    *out = new zkw_ratfun{zkw::golod_series(n, std::vector<zkw::Integer>(c, c + length))};
  });
}

zkw_status zkw_ratfun_to_string(const zkw_ratfun* r, char** out) {
  return guarded([&] {
    require(r, "rational function");
    require(out, "out");
    *out = dup_string(r->value.format());
  });
}

zkw_status zkw_ratfun_series(const zkw_ratfun* r, size_t order, char** out) {
  return guarded([&] {
    require(r, "rational function");
    require(out, "out");
    std::string s;
    for (const auto& c : r->value.series(order)) {
      if (!s.empty()) s += ' ';
      s += c.str();
    }
    *out = dup_string(s);
  });
}

void zkw_ratfun_free(zkw_ratfun* r) { delete r; }

zkw_status zkw_golod_verdict(const zkw_complex* k, int wedge_certificate, zkw_golod* out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    zkw::GolodVerdict v = zkw::golod_verdict(k->value, wedge_certificate != 0);
    out->golod = v.status == zkw::GolodStatus::Golod;
    switch (v.reason) {
      case zkw::GolodReason::Shifted: out->reason = ZKW_GOLOD_SHIFTED; break;
      case zkw::GolodReason::WedgeMemberF0: out->reason = ZKW_GOLOD_WEDGE_F0; break;
      case zkw::GolodReason::None: out->reason = ZKW_GOLOD_NONE; break;
    }
  });
}

}  // extern "C"
