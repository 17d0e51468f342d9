#pragma once
// Integer polynomials in t, rational functions, and the face-ring Poincare series.

#include <string>
#include <vector>

#include "zkwedge/scomplex.hpp"
#include "zkwedge/zhomology.hpp"

namespace zkw {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  /// (1 + t)^n
  static IntPolynomial one_plus_t_pow(unsigned n);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  Integer content() const;
  IntPolynomial primitive_part() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial scaled(const Integer& c) const;
  /// Exact division; throws unless `d` divides this over Z.
  IntPolynomial divide_exact(const IntPolynomial& d) const;
  IntPolynomial divide_exact(const Integer& c) const;
  /// lc(d)^k * this = q * d + r with deg r < deg d.
  IntPolynomial pseudo_remainder(const IntPolynomial& d) const;

  std::string format() const;
  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(IntPolynomial::constant(1)) {}
  RationalFunction(IntPolynomial num, IntPolynomial den);  // normalizes
  static RationalFunction polynomial(IntPolynomial p) { return RationalFunction(std::move(p), IntPolynomial::constant(1)); }

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;

  /// Coefficients of t^0 .. t^order; the denominator's constant term must be +-1.
  std::vector<Integer> series(std::size_t order) const;

  std::string format() const;
  bool operator==(const RationalFunction&) const = default;

 private:
  IntPolynomial num_, den_;
};

/// t (1+t)^n / (t - p), with p the reduced Poincare polynomial of Z_K (no terms below t^3).
RationalFunction face_ring_poincare(unsigned n, const IntPolynomial& p_reduced);

RationalFunction serre_series(unsigned n);
RationalFunction tate_series(unsigned n, unsigned m);
/// (1+t)^n / (1 - sum c_i t^(i+1)), c given from c_1.
RationalFunction golod_series(unsigned n, const std::vector<Integer>& c);

enum class GolodStatus { Golod, Unknown };
enum class GolodReason { Shifted, WedgeMemberF0, None };

struct GolodVerdict {
  GolodStatus status = GolodStatus::Unknown;
  GolodReason reason = GolodReason::None;
};

const char* reason_name(GolodReason r);

/// Shifted under some order (searched up to 10 vertices, else the given order), or a t = 0 certificate.
GolodVerdict golod_verdict(const SimplicialComplex& k, bool wedge_certificate);

}  // namespace zkw
