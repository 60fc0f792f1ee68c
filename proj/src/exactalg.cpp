#include "bh/exactalg.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "bh/error.hpp"

namespace bh {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients)
    coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) {
  return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::t_power_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[0] -= 1;
  v[n] += 1;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_t_power(std::size_t n) {
  return -t_power_minus_one(n);
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty())
    fail(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const Integer& c : coeffs_)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero())
    return *this;
  Integer g = content();
  if (leading() < 0)
    g = -g;
  std::vector<Integer> v(coeffs_);
  for (Integer& c : v)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1)
    return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (Integer& c : r.coeffs_)
    c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  for (Integer& x : coeffs_)
    x *= c;
  trim();
  return *this;
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0)
      continue;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1)
      os << mag;
    if (k >= 1)
      os << var;
    if (k >= 2)
      os << '^' << k;
  }
  return os.str();
}

PolyDivision divmod_unit_leading(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero())
    fail(ErrorCode::InexactDivision, "division by the zero polynomial");
  const Integer& lb = b.leading();
  if (lb != 1 && lb != -1)
    fail(ErrorCode::InvalidArgument, "divisor must have leading coefficient +-1");
  std::vector<Integer> r = a.coefficients();
  const std::vector<Integer>& d = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db)
    return {IntPolynomial{}, a};
  std::vector<Integer> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0)
      continue;
    Integer f = r[k] * lb;  // r[k] / lb for lb = +-1
    q[k - db] = f;
    for (int j = 0; j <= db; ++j)
      r[k - db + j] -= f * d[j];
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero())
    fail(ErrorCode::InexactDivision, "division by the zero polynomial");
  if (a.is_zero())
    return {};
  const int db = b.degree();
  if (a.degree() < db)
    fail(ErrorCode::InexactDivision, a.to_string() + " / " + b.to_string());
  std::vector<Integer> r = a.coefficients();
  const std::vector<Integer>& d = b.coefficients();
  const Integer& lb = b.leading();
  std::vector<Integer> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0)
      continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t()))
      fail(ErrorCode::InexactDivision, a.to_string() + " / " + b.to_string());
    Integer f;
    mpz_divexact(f.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    q[k - db] = f;
    for (int j = 0; j <= db; ++j)
      r[k - db + j] -= f * d[j];
  }
  for (const Integer& c : r)
    if (c != 0)
      fail(ErrorCode::InexactDivision, a.to_string() + " / " + b.to_string());
  return IntPolynomial(std::move(q));
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  try {
    exact_div(a, b);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InexactDivision)
      throw;
    return false;
  }
}

namespace {

// lc(b)^(deg a - deg b + 1) * a  mod  b
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> r = a.coefficients();
  const std::vector<Integer>& d = b.coefficients();
  const int db = b.degree();
  const Integer& lb = b.leading();
  int dr = a.degree();
  while (dr >= db) {
    Integer f = r[dr];
    for (Integer& c : r)
      c *= lb;
    for (int j = 0; j <= db; ++j)
      r[dr - db + j] -= f * d[j];
    r.resize(dr);
    while (!r.empty() && r.back() == 0)
      r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial primitive_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero())
    return b.primitive_part();
  if (b.is_zero())
    return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree())
    std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part();
}

IntPolynomial pow(const IntPolynomial& p, unsigned k) {
  IntPolynomial result{1};
  IntPolynomial base = p;
  while (k) {
    if (k & 1u)
      result *= base;
    k >>= 1;
    if (k)
      base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(IntPolynomial numerator)
  : num_(std::move(numerator)), den_(IntPolynomial{1}) {}

RationalFunction::RationalFunction(IntPolynomial numerator, IntPolynomial denominator)
  : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero())
    fail(ErrorCode::InvalidArgument, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial{1};
    return;
  }
  IntPolynomial g = primitive_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Integer c = gcd(num_.content(), den_.content());
  if (den_.leading() < 0)
    c = -c;
  if (c != 1) {
    num_ = exact_div(num_, IntPolynomial::constant(c));
    den_ = exact_div(den_, IntPolynomial::constant(c));
  }
}

bool RationalFunction::is_polynomial() const {
  return den_ == IntPolynomial{1};
}

IntPolynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial())
    fail(ErrorCode::InexactDivision, "not a polynomial: " + to_string());
  return num_;
}

std::vector<Integer> RationalFunction::series(std::size_t max_power) const {
  const Integer d0 = den_.coefficient(0);
  if (d0 != 1 && d0 != -1)
    fail(ErrorCode::InvalidArgument, "series expansion needs denominator(0) = +-1");
  std::vector<Integer> s(max_power + 1);
  for (std::size_t k = 0; k <= max_power; ++k) {
    Integer acc = num_.coefficient(k);
    const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max(den_.degree(), 0)));
    for (std::size_t j = 1; j <= top; ++j)
      acc -= den_.coefficient(j) * s[k - j];
    s[k] = acc * d0;
  }
  return s;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero())
    fail(ErrorCode::InvalidArgument, "division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial())
    return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

long euler_totient(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

const IntPolynomial& cyclotomic(long n) {
  if (n < 1)
    fail(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<long, IntPolynomial> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end())
    return it->second;
  // Fill in every divisor in increasing order; Phi_n = (t^n - 1) / prod_{d|n, d<n} Phi_d.
  for (long m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m))
      continue;
    IntPolynomial p = IntPolynomial::t_power_minus_one(m);
    for (long d = 1; d < m; ++d)
      if (m % d == 0)
        p = divmod_unit_leading(p, cache.at(d)).quotient;
    cache.emplace(m, std::move(p));
  }
  return cache.at(n);
}

long CyclotomicFactorization::cyclotomic_degree() const {
  long deg = 0;
  for (auto [n, m] : factors)
    deg += euler_totient(n) * m;
  return deg;
}

IntPolynomial CyclotomicFactorization::expand() const {
  IntPolynomial p = remainder;
  for (auto [n, m] : factors)
    p *= pow(cyclotomic(n), static_cast<unsigned>(m));
  return p * Integer(unit);
}

std::string CyclotomicFactorization::notation() const {
  std::ostringstream os;
  if (unit < 0)
    os << '-';
  bool first = true;
  for (auto [n, m] : factors) {
    if (!first)
      os << "·";
    first = false;
    os << "Φ" << n;
    if (m != 1)
      os << '^' << m;
  }
  if (!fully_cyclotomic()) {
    if (!first)
      os << "·";
    os << '(' << remainder.to_string() << ')';
  } else if (first) {
    os << '1';
  }
  return os.str();
}

CyclotomicFactorization factor_cyclotomic(const IntPolynomial& p, long n_max) {
  if (p.is_zero())
    fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  CyclotomicFactorization out;
  IntPolynomial rest = p;
  for (long n = 1; n <= n_max && rest.degree() > 0; ++n) {
    const IntPolynomial& phi = cyclotomic(n);
    while (rest.degree() >= phi.degree()) {
      PolyDivision qr = divmod_unit_leading(rest, phi);
      if (!qr.remainder.is_zero())
        break;
      rest = std::move(qr.quotient);
      ++out.factors[n];
    }
  }
  out.unit = rest.leading() < 0 ? -1 : 1;
  out.remainder = rest * Integer(out.unit);
  return out;
}

CyclotomicFactorization square_root_spectrum(const CyclotomicFactorization& c) {
  if (!c.fully_cyclotomic())
    fail(ErrorCode::NotCyclotomic, "remainder " + c.remainder.to_string());
  CyclotomicFactorization out;
  for (auto [n, m] : c.factors) {
    if (n % 2 == 1)
      out.factors[n] += m;
    else if (n % 4 == 2)
      out.factors[n / 2] += m;
    else
      out.factors[n / 2] += 2 * m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      fail(ErrorCode::DimensionMismatch, "matrix rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i))
        return false;
  return true;
}

Integer IntMatrix::trace() const {
  Integer s = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    s += (*this)(i, i);
  return s;
}

std::vector<std::vector<long>> IntMatrix::to_rows() const {
  std::vector<std::vector<long>> rows(dim_, std::vector<long>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!(*this)(i, j).fits_slong_p())
        fail(ErrorCode::InvalidArgument, "matrix entry does not fit in a machine integer");
      rows[i][j] = (*this)(i, j).get_si();
    }
  return rows;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_)
    fail(ErrorCode::DimensionMismatch, "matrix product");
  const std::size_t n = a.dim_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_)
    fail(ErrorCode::DimensionMismatch, "matrix sum");
  IntMatrix c(a);
  for (std::size_t i = 0; i < c.a_.size(); ++i)
    c.a_[i] += b.a_[i];
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& m) {
  IntMatrix c(m);
  for (Integer& x : c.a_)
    x *= s;
  return c;
}

Integer det_bareiss(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0)
    return 1;
  IntMatrix a(m);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Faddeev-LeVerrier; every division by k is exact over Z.
IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    Integer tr = (a * m).trace();
    mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -tr;
  }
  return IntPolynomial(std::move(c));
}

IntMatrix pow(const IntMatrix& m, unsigned long k) {
  IntMatrix result = IntMatrix::identity(m.dim());
  IntMatrix base = m;
  while (k) {
    if (k & 1ul)
      result = result * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return result;
}

IntMatrix evaluate(const IntPolynomial& p, const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix acc(n);
  const IntMatrix id = IntMatrix::identity(n);
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    acc = acc * m + (*it) * id;
  return acc;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DuplicateMonomial: return "DuplicateMonomial";
    case ErrorCode::MonomialCountMismatch: return "MonomialCountMismatch";
    case ErrorCode::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorCode::NonIntegralWeights: return "NonIntegralWeights";
    case ErrorCode::NonPositiveWeights: return "NonPositiveWeights";
    case ErrorCode::NonPositiveQ0: return "NonPositiveQ0";
    case ErrorCode::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotCyclotomic: return "NotCyclotomic";
    case ErrorCode::NonIntegralMilnorNumber: return "NonIntegralMilnorNumber";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::MissingAttachment: return "MissingAttachment";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotARootBasis: return "NotARootBasis";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::MissingConvention: return "MissingConvention";
    case ErrorCode::CalibrationFailed: return "CalibrationFailed";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::InvalidFixture: return "InvalidFixture";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace bh
