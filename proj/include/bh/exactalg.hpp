#pragma once

// Exact integer algebra: dense univariate polynomials over Z, normalized
// rational functions, cyclotomic factorization, and square integer matrices
// with fraction-free determinant and characteristic polynomial.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bh {

using Integer = mpz_class;
using Rational = mpq_class;

// Coefficient i is the coefficient of t^i; the highest stored coefficient is
// nonzero unless the polynomial is zero (empty storage).
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t power);
  // t^n - 1 and 1 - t^n
  static IntPolynomial t_power_minus_one(std::size_t n);
  static IntPolynomial one_minus_t_power(std::size_t n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Coefficient of t^i; zero past the degree.
  Integer coefficient(std::size_t i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;
  Integer eval(const Integer& x) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable form, highest power first, e.g. "t^2 - t + 1".
  std::string to_string(char var = 't') const;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Division by a divisor whose leading coefficient is +-1; always exact over Z.
PolyDivision divmod_unit_leading(const IntPolynomial& a, const IntPolynomial& b);
// Throws InexactDivision unless b divides a in Z[t].
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& b, const IntPolynomial& a);
// Primitive gcd with positive leading coefficient (gcd in Q[t], scaled into Z[t]).
IntPolynomial primitive_gcd(IntPolynomial a, IntPolynomial b);
IntPolynomial pow(const IntPolynomial& p, unsigned k);

// A quotient of integer polynomials kept in lowest terms: the primitive
// gcd and the common integer content are removed and the denominator has
// positive leading coefficient.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(IntPolynomial{1}) {}
  RationalFunction(IntPolynomial numerator);
  RationalFunction(IntPolynomial numerator, IntPolynomial denominator);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  bool is_polynomial() const;
  // Throws InexactDivision if not a polynomial.
  IntPolynomial as_polynomial() const;
  // deg(numerator) - deg(denominator)
  int degree() const { return num_.degree() - den_.degree(); }

  // Taylor coefficients of t^0..t^max_power; requires denominator(0) = +-1.
  std::vector<Integer> series(std::size_t max_power) const;

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

private:
  void normalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

long euler_totient(long n);
// n-th cyclotomic polynomial; results are cached process-wide under a lock.
const IntPolynomial& cyclotomic(long n);

// unit * prod Phi_n^mult * remainder reconstructs the factored polynomial.
struct CyclotomicFactorization {
  std::map<long, long> factors;
  int unit = 1;
  IntPolynomial remainder{1};

  bool fully_cyclotomic() const { return remainder == IntPolynomial{1}; }
  // Degree of prod Phi_n^mult (ignores the remainder).
  long cyclotomic_degree() const;
  IntPolynomial expand() const;
  // e.g. "Φ2^2·Φ6·Φ18^2"; "-" prefix for unit -1, "·(rest)" when not fully cyclotomic.
  std::string notation() const;

  friend bool operator==(const CyclotomicFactorization&, const CyclotomicFactorization&) = default;
};

CyclotomicFactorization factor_cyclotomic(const IntPolynomial& p, long n_max);
// Spectrum of sigma^2 given the cyclotomic factorization of the char poly of sigma.
CyclotomicFactorization square_root_spectrum(const CyclotomicFactorization& c);

class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  static IntMatrix identity(std::size_t dim);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t dim() const { return dim_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  IntMatrix transposed() const;
  bool is_symmetric() const;
  Integer trace() const;
  std::vector<std::vector<long>> to_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& c, const IntMatrix& m);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }

private:
  std::size_t dim_ = 0;
  std::vector<Integer> a_;
};

Integer det_bareiss(const IntMatrix& m);
// det(t*I - M), monic of degree dim.
IntPolynomial char_poly(const IntMatrix& m);
IntMatrix pow(const IntMatrix& m, unsigned long k);
// p(M) by Horner's rule.
IntMatrix evaluate(const IntPolynomial& p, const IntMatrix& m);

}  // namespace bh
