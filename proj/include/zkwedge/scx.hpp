#pragma once
// The .scx text format: a `vertices: n` header, then one face per line.
// `#` starts a comment, blank lines are ignored.

#include <string>

#include "zkwedge/scomplex.hpp"

namespace zkw {

SimplicialComplex parse_scx(const std::string& text);

/// Normalized form: header, then maximal faces in lex order.
std::string print_scx(const SimplicialComplex& k);

}  // namespace zkw
