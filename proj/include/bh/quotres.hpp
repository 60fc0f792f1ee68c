#pragma once

// Local model of the minimal resolution of C^2/Z_k, (x,y) -> (zeta x, zeta^-1 y).
// The invariants X = x^k, Y = y^k, Z = xy satisfy XY = Z^k. Chart i (1 <= i <= k) has
// coordinates (u, v) with X = u^i v^(i-1), Y = u^(k-i) v^(k+1-i), Z = uv, and the
// exceptional curve E_i is {u = 0} in chart i (equivalently {v = 0} in chart i+1).

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bh/exactalg.hpp"

namespace bh {

// Finite Laurent polynomial in (u, v) with rational coefficients; zero terms are never stored.
class LaurentPoly2 {
public:
  using Exponent = std::pair<int, int>;

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(const Rational& c, int eu, int ev);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;
  Rational coefficient(int eu, int ev) const;
  Rational eval(const Rational& u, const Rational& v) const;
  // Coefficients of f(0, v) by power of v; requires a polynomial.
  std::vector<Rational> restrict_u_zero() const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;
  LaurentPoly2 pow(unsigned k) const;

  std::string to_string() const;

private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

// Polynomial in the invariants (X, Y, Z).
struct Poly3 {
  std::map<std::array<int, 3>, Rational> terms;

  static Poly3 monomial(const Rational& c, int ex, int ey, int ez);
  Poly3& operator+=(const Poly3& o);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend bool operator==(const Poly3&, const Poly3&) = default;
  std::string to_string() const;
};

class ResolutionChart {
public:
  // Throws InvalidRange unless 1 <= i <= k.
  ResolutionChart(int i, int k);

  int index() const { return i_; }
  int order() const { return k_; }
  // (u, v) exponents of X, Y, Z.
  std::array<LaurentPoly2::Exponent, 3> substitution() const;
  LaurentPoly2 substitute(const Poly3& p) const;

private:
  int i_;
  int k_;
};

// Z^a + Y^((a+b)/k), the image of the curve x^a + y^b in the invariants; needs k | a+b.
Poly3 invariant_image(int a, int b, int k);
// Image of x^m + y^(k-m); requires 0 < m < k.
Poly3 invariant_image(int m, int k);

struct ProperTransform {
  LaurentPoly2::Exponent monomial;  // factor u^a v^b
  LaurentPoly2 unit;                // nonzero at the chart origin
};

ProperTransform proper_transform(const Poly3& curve, const ResolutionChart& chart);

// Pulls chart-i coordinates through (u, v) -> (1/v, u v^2) and checks that the
// substitution of chart i+1 reproduces chart i, for every i < k.
bool chart_transitions_consistent(int k);

struct ChartAttachment {
  int component = 0;  // E_component
  int branches = 0;   // distinct intersection points, all transversal
  bool transversal = true;
};

// Exceptional components met by the proper transform of the curve, found by
// scanning every chart for roots of unit(0, v) with v != 0.
std::vector<ChartAttachment> scan_attachments(const Poly3& curve, int k);

int attachment_index(int m, int k);
ChartAttachment attachment_double(int k);

// Everything needed to present one lemma instance.
struct LemmaInstance {
  Poly3 image;
  int chart = 0;
  ProperTransform transform;
  std::vector<ChartAttachment> attachments;
};
LemmaInstance lemma_single(int m, int k);
LemmaInstance lemma_double(int k);

}  // namespace bh
