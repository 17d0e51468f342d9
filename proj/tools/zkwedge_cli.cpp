// zkwedge command-line tool. Talks to the library only through the C interface.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "zkwedge/zkwedge.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kRefused = 2, kInvariant = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(zkw_status s) {
  switch (s) {
    case ZKW_OK: return kOk;
    case ZKW_ERR_INVALID_ARGUMENT:
    case ZKW_ERR_PARSE:
    case ZKW_ERR_DIVISION_BY_ZERO: return kUsage;
    case ZKW_ERR_SIZE_LIMIT:
    case ZKW_ERR_NOT_SHIFTED:
    case ZKW_ERR_GHOST_VERTEX: return kRefused;
    default: return kInvariant;
  }
}

void check(zkw_status s, const std::string& context) {
  if (s != ZKW_OK) throw Failure{exit_code_for(s), context + ": " + zkw_last_error()};
}

template <class T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using Complex = std::unique_ptr<zkw_complex, Deleter<zkw_complex, zkw_complex_free>>;
using Wedge = std::unique_ptr<zkw_wedge, Deleter<zkw_wedge, zkw_wedge_free>>;
using Spheres = std::unique_ptr<zkw_spheres, Deleter<zkw_spheres, zkw_spheres_free>>;
using Trace = std::unique_ptr<zkw_trace, Deleter<zkw_trace, zkw_trace_free>>;
using Betti = std::unique_ptr<zkw_betti, Deleter<zkw_betti, zkw_betti_free>>;
using Family = std::unique_ptr<zkw_family, Deleter<zkw_family, zkw_family_free>>;
using Ratfun = std::unique_ptr<zkw_ratfun, Deleter<zkw_ratfun, zkw_ratfun_free>>;

std::string take_string(char* s) {
  std::string out(s ? s : "");
  zkw_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kUsage, "cannot read " + path};
    buf << in.rdbuf();
  }
  return buf.str();
}

// FNV-1a, 64 bit.
void fnv_feed(std::uint64_t& h, const std::string& bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
}

std::string hex64(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<int> vertices(zkw_vset s) {
  std::vector<int> out;
  for (int v = 1; v <= 64; ++v)
    if (s & (zkw_vset{1} << (v - 1))) out.push_back(v);
  return out;
}

std::string set_text(zkw_vset s) {
  std::string out = "{";
  for (int v : vertices(s)) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// Translates vertex sets through back[new label] = old label.
zkw_vset map_back(zkw_vset s, const std::vector<int>& back) {
  if (back.empty()) return s;
  zkw_vset out = 0;
  for (int v : vertices(s)) out |= zkw_vset{1} << (back[v] - 1);
  return out;
}

Complex parse_complex(const std::string& text, const std::string& name) {
  zkw_complex* k = nullptr;
  check(zkw_complex_parse_scx(text.c_str(), &k), name);
  return Complex(k);
}

int vertex_count(const zkw_complex* k) { return static_cast<int>(vertices(zkw_complex_ground(k)).size()); }

struct Summand {
  int suspension;
  zkw_vset index;
  std::uint64_t mult;
};

std::vector<Summand> summands(const zkw_wedge* w, const std::vector<int>& back = {}) {
  std::vector<Summand> out;
  for (size_t i = 0; i < zkw_wedge_count(w); ++i) {
    Summand s{};
    check(zkw_wedge_summand(w, i, &s.suspension, &s.index, &s.mult), "wedge");
    s.index = map_back(s.index, back);
    out.push_back(s);
  }
  return out;
}

json summands_json(const std::vector<Summand>& list) {
  json out = json::array();
  for (const auto& s : list) out.push_back({{"suspension", s.suspension}, {"index", vertices(s.index)}, {"multiplicity", s.mult}});
  return out;
}

std::string summands_text(const std::vector<Summand>& list) {
  if (list.empty()) return "{}";
  std::string out;
  for (const auto& s : list) {
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(s.suspension) + "," + set_text(s.index);
    if (s.mult != 1) out += ",x" + std::to_string(s.mult);
    out += ")";
  }
  return out;
}

std::vector<std::pair<int, std::uint64_t>> sphere_list(const zkw_spheres* s) {
  std::vector<std::pair<int, std::uint64_t>> out;
  for (size_t i = 0; i < zkw_spheres_count(s); ++i) {
    int d = 0;
    std::uint64_t c = 0;
    check(zkw_spheres_entry(s, i, &d, &c), "spheres");
    out.emplace_back(d, c);
  }
  return out;
}

json spheres_json(const std::vector<std::pair<int, std::uint64_t>>& list) {
  json out = json::array();
  for (auto [d, c] : list) out.push_back({{"dim", d}, {"count", c}});
  return out;
}

std::string spheres_text(const std::vector<std::pair<int, std::uint64_t>>& list) {
  if (list.empty()) return "point";
  std::string out;
  for (auto [d, c] : list) out += (out.empty() ? "" : ", ") + std::string("S^") + std::to_string(d) + " x" + std::to_string(c);
  return out;
}

std::string poly_text(const std::vector<std::uint64_t>& p) {
  std::string out;
  for (size_t d = 0; d < p.size(); ++d) {
    if (!p[d]) continue;
    if (!out.empty()) out += " + ";
    if (p[d] != 1 || d == 0) out += std::to_string(p[d]);
    if (d >= 1) out += "t";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::uint64_t> betti_poincare(const zkw_betti* b) {
  size_t len = 0;
  check(zkw_betti_poincare(b, nullptr, 0, &len), "oracle");
  std::vector<std::uint64_t> p(len);
  check(zkw_betti_poincare(b, p.data(), p.size(), &len), "oracle");
  return p;
}

Betti run_oracle(const zkw_complex* k, unsigned threads) {
  zkw_betti* b = nullptr;
  check(zkw_bigraded_betti(k, threads, &b), "oracle");
  return Betti(b);
}

std::vector<int> parse_face(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Failure{kUsage, "malformed face specification '" + text + "'"};
    }
  }
  return out;
}

struct Report {
  std::string command;
  json input_hash = nullptr;
  json result = json::object();
  std::vector<std::string> warnings;
  std::string text;  // human-readable rendering
};

struct Options {
  bool json_out = false;
  bool timing = false;
  unsigned threads = 1;
};

// A shifted presentation of K: the complex itself or a relabeling, plus the map back.
struct Shifted {
  Complex complex;
  std::vector<int> back;  // back[new] = old; empty when no relabeling was needed
};

Shifted shifted_form(const zkw_complex* k, Report& report) {
  zkw_shift_verdict v{};
  check(zkw_is_shifted(k, 0, &v), "shiftedness");
  zkw_complex* copy = nullptr;
  if (v.shifted) {
    check(zkw_complex_subcomplex(k, ZKW_FULL, zkw_complex_ground(k), &copy), "copy");
    return {Complex(copy), {}};
  }
  check(zkw_is_shifted(k, 1, &v), "shifted search");
  if (!v.shifted)
    throw Failure{kRefused, "complex is not shifted under any vertex order; no decomposition is available"};
  check(zkw_complex_relabel(k, v.order, static_cast<size_t>(v.order_length), &copy), "relabel");
  std::vector<int> back(v.order_length + 1, 0);
  std::string order;
  for (int i = 0; i < v.order_length; ++i) {
    back[i + 1] = v.order[i];
    order += (i ? " " : "") + std::to_string(v.order[i]);
  }
  report.warnings.push_back("input is shifted under vertex order " + order + ", not the given one; decomposed after relabeling");
  return {Complex(copy), back};
}

void cmd_is_shifted(const std::string& text, bool search, Report& r) {
  Complex k = parse_complex(text, "input");
  zkw_shift_verdict v{};
  check(zkw_is_shifted(k.get(), search, &v), "shiftedness");
  r.result["mode"] = search ? "search" : "given_order";
  r.result["shifted"] = static_cast<bool>(v.shifted);
  if (v.shifted) {
    r.result["order"] = std::vector<int>(v.order, v.order + v.order_length);
    r.text = "shifted";
    if (search) r.text += " under order " + json(r.result["order"]).dump();
  } else {
    r.result["violation"] = {{"face", vertices(v.face)}, {"vertex", v.vertex}, {"replacement", v.replacement}};
    r.text = "not shifted";
    if (v.vertex)
      r.text += ": replacing " + std::to_string(v.vertex) + " by " + std::to_string(v.replacement) + " in " +
                set_text(v.face) + " leaves the complex";
  }
}

void cmd_decompose(const std::string& text, int loop_dim, bool with_trace, Report& r) {
  if (loop_dim != 1 && loop_dim != 3) throw Failure{kUsage, "--loop-dim must be 1 or 3"};
  Complex k = parse_complex(text, "input");
  Shifted s = shifted_form(k.get(), r);
  zkw_wedge* w = nullptr;
  zkw_trace* t = nullptr;
  check(zkw_decompose(s.complex.get(), &w, with_trace ? &t : nullptr), "decompose");
  Wedge wedge(w);
  Trace trace(t);
  zkw_spheres* sp = nullptr;
  check(zkw_wedge_realize(wedge.get(), loop_dim, &sp), "realize");
  Spheres spheres(sp);
  auto list = summands(wedge.get(), s.back);
  auto sl = sphere_list(spheres.get());
  r.result["loop_dim"] = loop_dim;
  r.result["spheres"] = spheres_json(sl);
  r.result["summary"] = spheres_text(sl);
  r.result["summands"] = summands_json(list);
  r.text = spheres_text(sl) + "\nsummands: " + summands_text(list);
  if (!with_trace) return;
  json steps = json::array();
  std::string lines;
  static const char* phases[] = {"iteration1", "iteration2_pre", "iteration2_main"};
  for (size_t i = 0; i < zkw_trace_count(trace.get()); ++i) {
    zkw_step st{};
    check(zkw_trace_step(trace.get(), i, &st), "trace");
    json step = {{"simplex", vertices(map_back(st.simplex, s.back))},
                 {"phase", phases[st.phase]},
                 {"S", vertices(map_back(st.S, s.back))},
                 {"T", vertices(map_back(st.T, s.back))}};
    static const std::pair<zkw_trace_part, const char*> parts[] = {
        {ZKW_PART_C, "C"}, {ZKW_PART_D, "D"}, {ZKW_PART_E, "E"}, {ZKW_PART_BEFORE, "before"}, {ZKW_PART_AFTER, "after"}};
    std::string line = "adjoin " + set_text(map_back(st.simplex, s.back)) + " [" + phases[st.phase] + "]";
    for (auto [part, name] : parts) {
      zkw_wedge* pw = nullptr;
      check(zkw_trace_wedge(trace.get(), i, part, &pw), "trace");
      Wedge piece(pw);
      auto pl = summands(piece.get(), s.back);
      step[name] = summands_json(pl);
      if (part == ZKW_PART_D || part == ZKW_PART_AFTER) line += std::string("  ") + name + " = " + summands_text(pl);
    }
    steps.push_back(step);
    lines += "\n" + line;
  }
  r.result["trace"] = steps;
  r.text += "\nsteps:" + (lines.empty() ? std::string(" none") : lines);
}

void cmd_betti(const std::string& text, bool bigraded, unsigned threads, Report& r) {
  Complex k = parse_complex(text, "input");
  Betti b = run_oracle(k.get(), threads);
  json rows = json::array();
  std::string out;
  if (bigraded) {
    for (size_t i = 0; i < zkw_betti_count(b.get()); ++i) {
      zkw_vset sigma = 0;
      int degree = 0, torsion = 0;
      std::uint64_t rank = 0;
      check(zkw_betti_entry(b.get(), i, &sigma, &degree, &rank, &torsion), "oracle");
      rows.push_back({{"sigma", vertices(sigma)}, {"degree", degree}, {"rank", rank}, {"torsion", static_cast<bool>(torsion)}});
      out += (out.empty() ? "" : "\n") + set_text(sigma) + " " + std::to_string(degree) + " " + std::to_string(rank) +
             (torsion ? " torsion" : "");
    }
  } else {
    auto p = betti_poincare(b.get());
    for (size_t d = 0; d < p.size(); ++d) {
      if (!p[d]) continue;
      rows.push_back({{"degree", d}, {"rank", p[d]}});
      out += (out.empty() ? "" : "\n") + std::to_string(d) + " " + std::to_string(p[d]);
    }
  }
  r.result["bigraded"] = bigraded;
  r.result["rows"] = rows;
  r.result["torsion_free"] = static_cast<bool>(zkw_betti_torsion_free(b.get()));
  r.text = out.empty() ? "(no reduced cohomology)" : out;
}

void cmd_profile(const std::string& text, unsigned threads, Report& r) {
  Complex k = parse_complex(text, "input");
  Betti b = run_oracle(k.get(), threads);
  auto p = betti_poincare(b.get());
  bool tf = zkw_betti_torsion_free(b.get());
  r.result["poincare"] = p;
  r.result["poincare_text"] = poly_text(p);
  r.result["torsion_free"] = tf;
  r.text = "P = " + poly_text(p) + "\ntorsion-free: " + (tf ? "yes" : "no");
  if (tf) {
    std::vector<std::pair<int, std::uint64_t>> cand;
    for (size_t d = 0; d < p.size(); ++d)
      if (p[d]) cand.emplace_back(static_cast<int>(d), p[d]);
    r.result["sphere_candidate"] = {{"spheres", spheres_json(cand)}, {"note", "necessary condition only"}};
    r.text += "\nsphere candidate (necessary condition only): " + spheres_text(cand);
  } else {
    r.result["sphere_candidate"] = nullptr;
    r.text += "\nno sphere candidate: integral torsion rules out every wedge decomposition";
  }
}

std::pair<std::string, std::string> golod_tag(const zkw_golod& g) {
  if (!g.golod) return {"unknown", "upper bound"};
  std::string reason = g.reason == ZKW_GOLOD_SHIFTED ? "shifted" : "wedge_member_F0";
  return {reason, "equality (Golod: " + reason + ")"};
}

void cmd_poincare(const std::string& text, int order, unsigned threads, Report& r) {
  if (order < 0) throw Failure{kUsage, "--order must be >= 0"};
  Complex k = parse_complex(text, "input");
  Betti b = run_oracle(k.get(), threads);
  auto p = betti_poincare(b.get());
  zkw_ratfun* rf = nullptr;
  check(zkw_face_ring_poincare(static_cast<unsigned>(vertex_count(k.get())), p.data(), p.size(), &rf), "poincare");
  Ratfun ratfun(rf);
  char* s = nullptr;
  check(zkw_ratfun_to_string(ratfun.get(), &s), "poincare");
  std::string formula = take_string(s);
  check(zkw_ratfun_series(ratfun.get(), static_cast<size_t>(order), &s), "series");
  std::string coeffs = take_string(s);
  zkw_golod g{};
  check(zkw_golod_verdict(k.get(), 0, &g), "golod");
  auto [reason, tag] = golod_tag(g);
  json list = json::array();
  std::istringstream in(coeffs);
  for (std::string c; in >> c;) list.push_back(c);
  r.result["rational_function"] = formula;
  r.result["series"] = list;
  r.result["relation"] = tag;
  r.text = "P(k[K]) " + std::string(g.golod ? "= " : "<= ") + formula + "\nseries: " + coeffs + "\n" + tag;
}

void cmd_golod(const std::string& text, Report& r) {
  Complex k = parse_complex(text, "input");
  zkw_golod g{};
  check(zkw_golod_verdict(k.get(), 0, &g), "golod");
  r.result["status"] = g.golod ? "golod" : "unknown";
  r.result["reason"] = golod_tag(g).first == "unknown" ? "none" : golod_tag(g).first;
  r.text = g.golod ? "golod (" + golod_tag(g).first + ")" : "unknown";
}

void cmd_compose(const std::string& kind, const std::string& a_text, const std::string& b_text, const std::string& face1,
                 const std::string& face2, const std::string& out_path, unsigned threads, Report& r) {
  zkw_combine_kind ck;
  if (kind == "union") ck = ZKW_DISJOINT_UNION;
  else if (kind == "glue") ck = ZKW_GLUE;
  else if (kind == "join") ck = ZKW_JOIN;
  else throw Failure{kUsage, "compose kind must be union, glue or join"};
  std::vector<int> f1 = parse_face(face1), f2 = parse_face(face2);
  if (ck != ZKW_GLUE && (!f1.empty() || !f2.empty())) r.warnings.push_back("face specification ignored for " + kind);
  if (ck == ZKW_GLUE && f1.size() != f2.size()) throw Failure{kUsage, "--face1 and --face2 must have the same size"};

  Complex a = parse_complex(a_text, "first input"), b = parse_complex(b_text, "second input");
  zkw_family *fa = nullptr, *fb = nullptr, *fo = nullptr;
  check(zkw_family_from_shifted(a.get(), &fa), "first input");
  Family ea(fa);
  check(zkw_family_from_shifted(b.get(), &fb), "second input");
  Family eb(fb);
  check(zkw_family_combine(ck, ea.get(), eb.get(), f1.data(), f2.data(), ck == ZKW_GLUE ? f1.size() : 0, &fo), "compose");
  Family out(fo);

  zkw_complex* kc = nullptr;
  check(zkw_family_complex(out.get(), &kc), "compose");
  Complex composed(kc);
  char* s = nullptr;
  check(zkw_complex_to_scx(composed.get(), &s), "compose");
  std::string scx = take_string(s);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Failure{kUsage, "cannot write " + out_path};
    f << scx;
    r.result["output"] = out_path;
  } else {
    r.result["complex"] = scx;
  }
  int level = zkw_family_level(out.get());
  zkw_spheres* sp = nullptr;
  check(zkw_family_spheres(out.get(), &sp), "compose");
  Spheres spheres(sp);
  auto sl = sphere_list(spheres.get());
  r.result["level"] = level;
  r.result["virtual_spheres"] = spheres_json(sl);
  if (zkw_family_is_symbolic(out.get())) {
    zkw_wedge* w = nullptr;
    check(zkw_family_wedge(out.get(), &w), "compose");
    Wedge wedge(w);
    r.result["summands"] = summands_json(summands(wedge.get()));
  }
  r.text = (out_path.empty() ? scx : "wrote " + out_path + "\n") + "level " + std::to_string(level) +
           ", virtual spheres: " + spheres_text(sl);
  if (vertex_count(composed.get()) <= 20) {
    int match = 0, tf = 0;
    check(zkw_family_check_oracle(out.get(), threads, &match, &tf), "oracle");
    r.result["oracle"] = {{"poincare_match", static_cast<bool>(match)}, {"torsion_free", static_cast<bool>(tf)},
                          {"zero_level_plausible", match && tf}};
    r.text += std::string("\noracle Poincare polynomial ") + (match ? "agrees" : "DISAGREES") +
              (match && tf ? "; level 0 plausible" : "");
    if (!match) throw Failure{kInvariant, "composed wedge disagrees with the oracle"};
  } else {
    r.warnings.push_back("composed complex exceeds the oracle size cap; no cross-check");
  }
  zkw_golod g{};
  check(zkw_golod_verdict(composed.get(), level == 0, &g), "golod");
  r.result["golod"] = golod_tag(g).first;
  r.text += "\ngolod: " + golod_tag(g).first;
}

void cmd_skeleton(int n, int q, Report& r) {
  zkw_complex* k = nullptr;
  check(zkw_complex_skeleton(n, q, &k), "skeleton");
  Complex c(k);
  char* s = nullptr;
  check(zkw_complex_to_scx(c.get(), &s), "skeleton");
  std::string scx = take_string(s);
  r.result["n"] = n;
  r.result["q"] = q;
  r.result["scx"] = scx;
  r.text = scx.substr(0, scx.size() - 1);
}

void cmd_oracle_check(const std::string& text, unsigned threads, Report& r) {
  Complex k = parse_complex(text, "input");
  Shifted s = shifted_form(k.get(), r);
  zkw_wedge* w = nullptr;
  check(zkw_decompose(s.complex.get(), &w, nullptr), "decompose");
  Wedge wedge(w);
  Betti b = run_oracle(k.get(), threads);

  // (sigma, degree) -> (decomposer, oracle)
  std::vector<std::tuple<zkw_vset, int, std::uint64_t, std::uint64_t>> rows;
  auto find = [&](zkw_vset sigma, int degree) -> std::tuple<zkw_vset, int, std::uint64_t, std::uint64_t>& {
    for (auto& row : rows)
      if (std::get<0>(row) == sigma && std::get<1>(row) == degree) return row;
    rows.emplace_back(sigma, degree, 0, 0);
    return rows.back();
  };
  for (size_t i = 0; i < zkw_betti_count(b.get()); ++i) {
    zkw_vset sigma = 0;
    int degree = 0, torsion = 0;
    std::uint64_t rank = 0;
    check(zkw_betti_entry(b.get(), i, &sigma, &degree, &rank, &torsion), "oracle");
    if (rank) std::get<3>(find(sigma, degree)) += rank;
  }
  for (const auto& sm : summands(wedge.get(), s.back))
    std::get<2>(find(sm.index, sm.suspension + static_cast<int>(vertices(sm.index).size()))) += sm.mult;
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    auto cx = vertices(std::get<0>(x)), cy = vertices(std::get<0>(y));
    if (cx.size() != cy.size()) return cx.size() < cy.size();
    if (cx != cy) return cx < cy;
    return std::get<1>(x) < std::get<1>(y);
  });
  bool agree = zkw_betti_torsion_free(b.get());
  json list = json::array();
  std::string lines;
  for (const auto& [sigma, degree, dec, ora] : rows) {
    int susp = degree - static_cast<int>(vertices(sigma).size());
    list.push_back({{"suspension", susp}, {"index", vertices(sigma)}, {"decomposer", dec}, {"oracle", ora}, {"agree", dec == ora}});
    lines += "\n(" + std::to_string(susp) + "," + set_text(sigma) + ") " + std::to_string(dec) + " " +
             std::to_string(ora) + (dec == ora ? "" : "  MISMATCH");
    agree = agree && dec == ora;
  }
  r.result["verdict"] = agree ? "agree" : "mismatch";
  r.result["torsion_free"] = static_cast<bool>(zkw_betti_torsion_free(b.get()));
  r.result["rows"] = list;
  r.text = std::string(agree ? "agree" : "mismatch") + lines;
  if (!agree) throw Failure{kInvariant, "decomposition disagrees with the oracle"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zkwedge: wedge decompositions of moment-angle complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_out, "machine-readable output");
  app.add_flag("--timing", opt.timing, "report elapsed milliseconds (makes --json output run-dependent)");
  app.add_option("--threads", opt.threads, "oracle worker threads, 0 for all cores")->capture_default_str();

  std::string file, file2, kind, face1, face2, out_path;
  bool search = false, trace = false, bigraded = false;
  int loop_dim = 1, order = 10, n = 0, q = 0;

  auto* is_shifted = app.add_subcommand("is-shifted", "test shiftedness");
  is_shifted->add_option("file", file, ".scx input, - for stdin")->required();
  is_shifted->add_flag("--search", search, "try every vertex order (n <= 10)");

  auto* decompose = app.add_subcommand("decompose", "wedge decomposition of Z_K for shifted K");
  decompose->add_option("file", file)->required();
  decompose->add_option("--loop-dim", loop_dim, "1 for complex, 3 for quaternionic arrangements")->capture_default_str();
  decompose->add_flag("--trace", trace, "show the construction steps");

  auto* betti = app.add_subcommand("betti", "Betti numbers of Z_K from full subcomplexes");
  betti->add_option("file", file)->required();
  betti->add_flag("--bigraded", bigraded, "one row per (sigma, degree)");

  auto* profile = app.add_subcommand("profile", "Poincare polynomial, torsion and sphere candidate");
  profile->add_option("file", file)->required();

  auto* poincare = app.add_subcommand("poincare", "Poincare series of the face ring");
  poincare->add_option("file", file)->required();
  poincare->add_option("--order", order, "last series coefficient")->capture_default_str();

  auto* golod = app.add_subcommand("golod", "Golod verdict");
  golod->add_option("file", file)->required();

  auto* compose = app.add_subcommand("compose", "disjoint union, glue or join of two shifted complexes");
  compose->add_option("kind", kind, "union, glue or join")->required();
  compose->add_option("first", file)->required();
  compose->add_option("second", file2)->required();
  compose->add_option("--face1", face1, "face of the first complex, e.g. \"1 2\"");
  compose->add_option("--face2", face2, "matching face of the second complex");
  compose->add_option("-o,--output", out_path, "write the composed complex here");

  auto* skeleton = app.add_subcommand("skeleton", "all faces of [n] with at most q vertices");
  skeleton->add_option("n", n)->required();
  skeleton->add_option("q", q)->required();

  auto* oracle_check = app.add_subcommand("oracle-check", "compare the decomposition with the oracle");
  oracle_check->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Report r;
  r.command = app.get_subcommands().front()->get_name();
  auto start = std::chrono::steady_clock::now();
  int code = kOk;
  std::string error;
  try {
    auto input = [&](const std::string& path) {
      std::string text = read_input(path);
      std::uint64_t h = 0xcbf29ce484222325ULL;
      fnv_feed(h, text);
      r.input_hash = hex64(h);
      return text;
    };
    if (*is_shifted) cmd_is_shifted(input(file), search, r);
    else if (*decompose) cmd_decompose(input(file), loop_dim, trace, r);
    else if (*betti) cmd_betti(input(file), bigraded, opt.threads, r);
    else if (*profile) cmd_profile(input(file), opt.threads, r);
    else if (*poincare) cmd_poincare(input(file), order, opt.threads, r);
    else if (*golod) cmd_golod(input(file), r);
    else if (*compose) {
      std::string a = read_input(file), b = read_input(file2);
      std::uint64_t h = 0xcbf29ce484222325ULL;
      fnv_feed(h, a);
      fnv_feed(h, std::string(1, '\0'));
      fnv_feed(h, b);
      r.input_hash = hex64(h);
      cmd_compose(kind, a, b, face1, face2, out_path, opt.threads, r);
    } else if (*skeleton) cmd_skeleton(n, q, r);
    else if (*oracle_check) cmd_oracle_check(input(file), opt.threads, r);
  } catch (const Failure& f) {
    code = f.code;
    error = f.message;
  } catch (const std::exception& e) {
    code = kInvariant;
    error = e.what();
  }
  auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (!error.empty()) std::cerr << "zkwedge " << r.command << ": " << error << "\n";
  // Refusals and usage errors carry no result; invariant failures still show what was computed.
  if (code == kUsage || code == kRefused) r.result = nullptr;

  if (opt.json_out) {
    json doc;
    doc["command"] = r.command;
    doc["input_hash"] = r.input_hash;
    doc["result"] = r.result;
    if (!error.empty()) doc["error"] = {{"exit_code", code}, {"message", error}};
    doc["warnings"] = r.warnings;
    doc["millis"] = opt.timing ? json(millis) : json(nullptr);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    if (!r.text.empty() && !r.result.is_null()) std::cout << r.text << "\n";
    if (opt.timing) std::cout << "(" << millis << " ms)\n";
  }
  return code;
}
