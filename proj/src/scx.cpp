#include "zkwedge/scx.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "zkwedge/error.hpp"

namespace zkw {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool parse_int(const std::string& s, long long& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

SimplicialComplex parse_scx(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  long long n = -1;
  std::vector<VertexSet> faces;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = tokens(raw);
    if (toks.empty()) continue;
    if (n < 0) {
      std::string head = raw.substr(raw.find_first_not_of(" \t"));
      if (head.rfind("vertices:", 0) != 0) fail(line, "expected header 'vertices: n'");
      auto rest = tokens(head.substr(9));
      if (rest.size() != 1 || !parse_int(rest[0], n) || n < 0) fail(line, "malformed vertex count");
      if (n > kMaxVertices) fail(line, "vertex count " + rest[0] + " exceeds " + std::to_string(kMaxVertices));
      continue;
    }
    VertexSet face = 0;
    for (const auto& t : toks) {
      long long v;
      if (!parse_int(t, v)) fail(line, "not an integer: '" + t + "'");
      if (v < 1 || v > n) fail(line, "vertex " + t + " out of range 1.." + std::to_string(n));
      if (face & vbit(static_cast<int>(v))) fail(line, "duplicate vertex " + t);
      face |= vbit(static_cast<int>(v));
    }
    faces.push_back(face);
  }
  if (n < 0) fail(line + 1, "missing header 'vertices: n'");
  return SimplicialComplex::from_generators(vrange(static_cast<int>(n)), std::move(faces));
}

std::string print_scx(const SimplicialComplex& k) {
  std::string out = "vertices: " + std::to_string(k.n()) + "\n";
  for (VertexSet m : k.maximal_faces()) {
    if (!m) continue;
    bool first = true;
    for (int v : vlist(m)) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace zkw
