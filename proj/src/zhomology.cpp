#include "zkwedge/zhomology.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>

#include "zkwedge/error.hpp"

namespace zkw {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw Error(ErrorKind::InvalidArgument, "matrix entry count does not match shape");
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shapes do not compose");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

namespace {

struct Overflow {};

// int64 with trapping arithmetic; the SNF retries in cpp_int when it traps.
struct Checked {
  std::int64_t v = 0;

  friend Checked operator-(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (a.v == INT64_MIN && b.v == -1) throw Overflow{};
    return Checked{a.v / b.v};
  }
  friend Checked operator%(Checked a, Checked b) {
    if (b.v == -1) return Checked{0};
    return Checked{a.v % b.v};
  }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
};

Checked abs_of(Checked a) {
  if (a.v == INT64_MIN) throw Overflow{};
  return Checked{a.v < 0 ? -a.v : a.v};
}
Integer abs_of(const Integer& a) { return a < 0 ? Integer(-a) : a; }
bool is_zero(Checked a) { return a.v == 0; }
bool is_zero(const Integer& a) { return a == 0; }

template <class T>
T gcd_of(T a, T b) {
  a = abs_of(a);
  b = abs_of(b);
  while (!is_zero(b)) {
    T r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Diagonalizes in place and returns the invariant factors.
template <class T>
std::vector<T> snf_diagonal(std::vector<T> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
  std::vector<T> diag;
  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    // Smallest nonzero magnitude in the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    T best{};
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        const T& x = at(r, c);
        if (is_zero(x)) continue;
        T m = abs_of(x);
        if (pr == rows || m < best) {
          best = m;
          pr = r;
          pc = c;
        }
      }
    if (pr == rows) break;

    auto move_pivot = [&](std::size_t r, std::size_t c) {
      if (r != t)
        for (std::size_t j = t; j < cols; ++j) std::swap(at(t, j), at(r, j));
      if (c != t)
        for (std::size_t i = t; i < rows; ++i) std::swap(at(i, t), at(i, c));
    };
    move_pivot(pr, pc);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (is_zero(at(i, t))) continue;
        T q = at(i, t) / at(t, t);
        for (std::size_t j = t; j < cols; ++j)
          if (!is_zero(at(t, j))) at(i, j) = at(i, j) - q * at(t, j);
        if (!is_zero(at(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (is_zero(at(t, j))) continue;
        T q = at(t, j) / at(t, t);
        for (std::size_t i = t; i < rows; ++i)
          if (!is_zero(at(i, t))) at(i, j) = at(i, j) - q * at(i, t);
        if (!is_zero(at(t, j))) clean = false;
      }
      if (clean) break;
      // A remainder is smaller than the pivot: bring it in and repeat.
      std::size_t br = t, bc = t;
      T bm = abs_of(at(t, t));
      for (std::size_t i = t + 1; i < rows; ++i)
        if (!is_zero(at(i, t)) && abs_of(at(i, t)) < bm) {
          bm = abs_of(at(i, t));
          br = i;
          bc = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!is_zero(at(t, j)) && abs_of(at(t, j)) < bm) {
          bm = abs_of(at(t, j));
          br = t;
          bc = j;
        }
      move_pivot(br, bc);
    }
    diag.push_back(abs_of(at(t, t)));
  }
  // diag(a, b) ~ diag(gcd, lcm) gives the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      T g = gcd_of(diag[i], diag[j]);
      if (g == diag[i]) continue;
      T l = (diag[i] / g) * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

struct SmallMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int8_t> entries;  // boundary entries are -1, 0, 1
};

SnfResult snf_small(const SmallMatrix& m) {
  SnfResult out;
  try {
    std::vector<Checked> a(m.entries.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i].v = m.entries[i];
    for (Checked d : snf_diagonal(std::move(a), m.rows, m.cols)) out.diagonal.emplace_back(d.v);
  } catch (const Overflow&) {
    std::vector<Integer> a(m.entries.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.entries[i];
    out.diagonal = snf_diagonal(std::move(a), m.rows, m.cols);
  }
  out.rank = out.diagonal.size();
  return out;
}

SmallMatrix boundary_of(const std::vector<VertexSet>& rows, const std::vector<VertexSet>& cols) {
  SmallMatrix m{rows.size(), cols.size(), std::vector<std::int8_t>(rows.size() * cols.size(), 0)};
  std::unordered_map<VertexSet, std::size_t> index;
  index.reserve(rows.size() * 2);
  for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int sign = 1;
    VertexSet rest = cols[c];
    while (rest) {
      VertexSet low = rest & (~rest + 1);
      auto it = index.find(cols[c] & ~low);
      if (it == index.end()) throw Error(ErrorKind::Invariant, "face list is not closed under subsets");
      m.entries[it->second * m.cols + c] = static_cast<std::int8_t>(sign);
      sign = -sign;
      rest &= rest - 1;
    }
  }
  return m;
}

std::vector<std::vector<VertexSet>> by_dimension(const std::vector<VertexSet>& faces) {
  int top = -1;
  for (VertexSet f : faces) top = std::max(top, vcount(f) - 1);
  std::vector<std::vector<VertexSet>> out(top + 2);
  for (VertexSet f : faces) out[vcount(f)].push_back(f);
  for (auto& layer : out) std::sort(layer.begin(), layer.end(), vlex_less);
  return out;
}

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& a) {
  std::vector<Integer> entries;
  entries.reserve(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) entries.push_back(a.at(r, c));
  SnfResult out;
  out.diagonal = snf_diagonal(std::move(entries), a.rows(), a.cols());
  out.rank = out.diagonal.size();
  return out;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "boundary degree must be >= 0");
  SmallMatrix m = boundary_of(k.faces(d - 1), k.faces(d));
  std::vector<Integer> entries(m.entries.begin(), m.entries.end());
  return IntegerMatrix(m.rows, m.cols, std::move(entries));
}

std::size_t HomologySummary::betti(int d) const {
  std::size_t i = static_cast<std::size_t>(d + 1);
  return d >= -1 && i < groups.size() ? groups[i].betti : 0;
}

const std::vector<Integer>& HomologySummary::torsion(int d) const {
  static const std::vector<Integer> none;
  std::size_t i = static_cast<std::size_t>(d + 1);
  return d >= -1 && i < groups.size() ? groups[i].torsion : none;
}

bool HomologySummary::torsion_free() const {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.torsion.empty(); });
}

HomologySummary reduced_homology_of_faces(const std::vector<VertexSet>& faces) {
  auto layers = by_dimension(faces);  // layers[k] holds faces with k vertices
  const std::size_t top = layers.size();
  // snf[k] describes the boundary from k-vertex faces to (k-1)-vertex faces; snf[0] is zero.
  std::vector<SnfResult> snf(top + 1);
  for (std::size_t k = 1; k < top; ++k) snf[k] = snf_small(boundary_of(layers[k - 1], layers[k]));
  HomologySummary out;
  out.groups.resize(top);
  for (std::size_t k = 0; k < top; ++k) {
    HomologyGroup& g = out.groups[k];
    g.betti = layers[k].size() - snf[k].rank - snf[k + 1].rank;
    for (const Integer& x : snf[k + 1].diagonal)
      if (x > 1) g.torsion.push_back(x);
  }
  return out;
}

HomologySummary reduced_homology(const SimplicialComplex& k) { return reduced_homology_of_faces(k.faces()); }

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t divisible_count(const std::vector<Integer>& torsion, unsigned p) {
  return static_cast<std::size_t>(
      std::count_if(torsion.begin(), torsion.end(), [p](const Integer& t) { return t % p == 0; }));
}

}  // namespace

std::vector<std::size_t> cohomology_dims(const HomologySummary& h, unsigned prime) {
  if (prime != 0 && !is_prime(prime)) throw Error(ErrorKind::InvalidArgument, std::to_string(prime) + " is not prime");
  std::vector<std::size_t> out(h.groups.size());
  for (std::size_t i = 0; i < h.groups.size(); ++i) {
    out[i] = h.groups[i].betti;
    if (prime == 0) continue;
    // H^d(K;F_p) = Hom(H_d, F_p) + Ext(H_{d-1}, F_p)
    out[i] += divisible_count(h.groups[i].torsion, prime);
    if (i > 0) out[i] += divisible_count(h.groups[i - 1].torsion, prime);
  }
  return out;
}

std::vector<std::size_t> cohomology_dims(const SimplicialComplex& k, unsigned prime) {
  return cohomology_dims(reduced_homology(k), prime);
}

}  // namespace zkw
