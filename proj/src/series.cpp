#include "zkwedge/series.hpp"

#include <algorithm>
#include <utility>

#include "zkwedge/error.hpp"

namespace zkw {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_plus_t_pow(unsigned n) {
  std::vector<Integer> v(n + 1);
  v[0] = 1;
  for (unsigned k = 1; k <= n; ++k) v[k] = v[k - 1] * (n - k + 1) / k;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? Integer(-g) : g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  IntPolynomial p = divide_exact(content());
  if (p.coeffs_.back() < 0) p = -p;
  return p;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::scaled(const Integer& c) const {
  std::vector<Integer> v = coeffs_;
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divide_exact(const Integer& c) const {
  if (c == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  std::vector<Integer> v = coeffs_;
  for (auto& x : v) {
    if (x % c != 0) throw Error(ErrorKind::Invariant, "inexact polynomial division");
    x /= c;
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  std::vector<Integer> r = coeffs_;
  if (r.size() < d.coeffs_.size()) {
    if (!is_zero()) throw Error(ErrorKind::Invariant, "inexact polynomial division");
    return {};
  }
  std::vector<Integer> q(r.size() - d.coeffs_.size() + 1);
  const Integer& lead = d.coeffs_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer top = r[k + d.coeffs_.size() - 1];
    if (top % lead != 0) throw Error(ErrorKind::Invariant, "inexact polynomial division");
    q[k] = top / lead;
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j < d.coeffs_.size(); ++j) r[k + j] -= q[k] * d.coeffs_[j];
  }
  if (!IntPolynomial(r).is_zero()) throw Error(ErrorKind::Invariant, "inexact polynomial division");
  return IntPolynomial(std::move(q));
}

IntPolynomial IntPolynomial::pseudo_remainder(const IntPolynomial& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  IntPolynomial r = *this;
  const Integer& lead = d.coeffs_.back();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    IntPolynomial shift = monomial(r.coeffs_.back(), static_cast<std::size_t>(r.degree() - d.degree()));
    r = r.scaled(lead) - shift * d;
  }
  return r;
}

std::string IntPolynomial::format() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part(), y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = x.pseudo_remainder(y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = IntPolynomial();
    den_ = IntPolynomial::constant(1);
    return;
  }
  IntPolynomial g = gcd(num, den);
  num = num.divide_exact(g);
  den = den.divide_exact(g);
  Integer c = boost::multiprecision::gcd(num.content(), den.content());
  num = num.divide_exact(c);
  den = den.divide_exact(c);
  auto lowest = std::find_if(den.coeffs().begin(), den.coeffs().end(), [](const Integer& x) { return x != 0; });
  if (*lowest < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::vector<Integer> RationalFunction::series(std::size_t order) const {
  const Integer d0 = den_.coeff(0);
  if (d0 != 1 && d0 != -1)
    throw Error(ErrorKind::InvalidArgument, "denominator constant term must be +-1 for an integral expansion");
  std::vector<Integer> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    Integer acc = num_.coeff(i);
    for (std::size_t j = 1; j <= i && j < den_.coeffs().size(); ++j) acc -= den_.coeffs()[j] * out[i - j];
    out[i] = acc * d0;  // d0 is its own inverse
  }
  return out;
}

std::string RationalFunction::format() const {
  if (den_ == IntPolynomial::constant(1)) return num_.format();
  return "(" + num_.format() + ") / (" + den_.format() + ")";
}

RationalFunction face_ring_poincare(unsigned n, const IntPolynomial& p_reduced) {
  for (std::size_t i = 0; i < 3; ++i)
    if (p_reduced.coeff(i) != 0)
      throw Error(ErrorKind::InvalidArgument, "reduced Poincare polynomial must start at t^3");
  IntPolynomial t = IntPolynomial::monomial(1, 1);
  return RationalFunction(t * IntPolynomial::one_plus_t_pow(n), t - p_reduced);
}

RationalFunction serre_series(unsigned n) { return RationalFunction::polynomial(IntPolynomial::one_plus_t_pow(n)); }

RationalFunction tate_series(unsigned n, unsigned m) {
  IntPolynomial den = IntPolynomial::constant(1);
  IntPolynomial factor({1, 0, -1});
  for (unsigned i = 0; i < m; ++i) den = den * factor;
  return RationalFunction(IntPolynomial::one_plus_t_pow(n), den);
}

RationalFunction golod_series(unsigned n, const std::vector<Integer>& c) {
  std::vector<Integer> den(c.size() + 2);
  den[0] = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) throw Error(ErrorKind::InvalidArgument, "Golod coefficients must be nonnegative");
    den[i + 2] = -c[i];  // c_i multiplies t^(i+1), c indexed from c_1
  }
  return RationalFunction(IntPolynomial::one_plus_t_pow(n), IntPolynomial(std::move(den)));
}

const char* reason_name(GolodReason r) {
  switch (r) {
    case GolodReason::Shifted: return "shifted";
    case GolodReason::WedgeMemberF0: return "wedge_member_F0";
    case GolodReason::None: return "none";
  }
  return "?";
}

GolodVerdict golod_verdict(const SimplicialComplex& k, bool wedge_certificate) {
  GolodVerdict v;
  ShiftMode mode = k.vertex_count() <= 10 ? ShiftMode::Search : ShiftMode::GivenOrder;
  if (k.is_shifted(mode).shifted) {
    v.status = GolodStatus::Golod;
    v.reason = GolodReason::Shifted;
  } else if (wedge_certificate) {
    v.status = GolodStatus::Golod;
    v.reason = GolodReason::WedgeMemberF0;
  }
  return v;
}

}  // namespace zkw
