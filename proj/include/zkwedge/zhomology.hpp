#pragma once
// Exact integral (co)homology through Smith normal form.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "zkwedge/scomplex.hpp"

namespace zkw {

using Integer = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

struct SnfResult {
  std::vector<Integer> diagonal;  // positive, each divides the next
  std::size_t rank = 0;
};

SnfResult smith_normal_form(const IntegerMatrix& a);

/// Augmented boundary C_d -> C_{d-1}; rows follow faces(d-1), columns faces(d).
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};

/// Reduced homology in degrees -1 .. top; index 0 holds degree -1.
struct HomologySummary {
  std::vector<HomologyGroup> groups;

  int top_degree() const { return static_cast<int>(groups.size()) - 2; }
  std::size_t betti(int d) const;
  const std::vector<Integer>& torsion(int d) const;
  bool torsion_free() const;
};

HomologySummary reduced_homology(const SimplicialComplex& k);

/// Same as above for a downward-closed face list (the empty face included).
HomologySummary reduced_homology_of_faces(const std::vector<VertexSet>& faces);

/// Reduced cohomology dimensions over Q (prime = 0) or F_p; index 0 holds degree -1.
std::vector<std::size_t> cohomology_dims(const SimplicialComplex& k, unsigned prime = 0);
std::vector<std::size_t> cohomology_dims(const HomologySummary& h, unsigned prime = 0);

}  // namespace zkw
