#include "bh/weights.hpp"

#include <numeric>

#include "bh/error.hpp"

namespace bh {

namespace {

// Adjugate by cofactors; n <= 4 throughout.
IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i)
          continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j)
            continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Integer cof = det_bareiss(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
    }
  return adj;
}

long to_long(const Integer& v) {
  if (!v.fits_slong_p())
    fail(ErrorCode::InvalidArgument, "weight does not fit in a machine integer");
  return v.get_si();
}

}  // namespace

CanonicalWeights canonical_weights(const InvertiblePolynomial& f) {
  const IntMatrix e = f.matrix().to_int_matrix();
  const Integer det = det_bareiss(e);
  if (det == 0)
    fail(ErrorCode::ZeroDeterminant, "exponent matrix is singular");
  const IntMatrix adj = adjugate(e);
  const std::size_t n = e.dim();
  const int sign = det < 0 ? -1 : 1;
  CanonicalWeights out;
  out.d_prime = to_long(abs(det));
  std::vector<Integer> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      w[i] += adj(i, j);
    w[i] *= sign;
    if (w[i] <= 0)
      fail(ErrorCode::NonPositiveWeights, "weight " + w[i].get_str() + " at index " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j)
      row += e(i, j) * w[j];
    if (row != abs(det))
      fail(ErrorCode::NonIntegralWeights, "weighted degree check failed");
  }
  for (const Integer& x : w)
    out.w.push_back(to_long(x));
  return out;
}

std::vector<long> weights_for_degree(const InvertiblePolynomial& f, long degree) {
  const IntMatrix e = f.matrix().to_int_matrix();
  const Integer det = det_bareiss(e);
  if (det == 0)
    fail(ErrorCode::ZeroDeterminant, "exponent matrix is singular");
  const IntMatrix adj = adjugate(e);
  std::vector<long> out;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < e.dim(); ++j)
      s += adj(i, j);
    Rational wi(s * degree, det);
    wi.canonicalize();
    if (wi.get_den() != 1)
      fail(ErrorCode::NonIntegralWeights, "weight " + wi.get_str() + " at index " + std::to_string(i));
    if (wi <= 0)
      fail(ErrorCode::NonPositiveWeights, "weight " + wi.get_str() + " at index " + std::to_string(i));
    out.push_back(to_long(wi.get_num()));
  }
  return out;
}

ReducedWeights reduce(const CanonicalWeights& wsys) {
  long g = wsys.d_prime;
  for (long w : wsys.w)
    g = std::gcd(g, w);
  ReducedWeights rw;
  rw.c_f = g;
  rw.d = wsys.d_prime / g;
  for (long w : wsys.w)
    rw.q.push_back(w / g);
  return rw;
}

long gorenstein_parameter(const CanonicalWeights& wsys) {
  if (wsys.w.size() != 3)
    fail(ErrorCode::InvalidArgument, "Gorenstein parameter needs three variables");
  return wsys.d_prime - wsys.w[0] - wsys.w[1] - wsys.w[2];
}

CompactifierShape compactifier_shape(std::string_view monomial) {
  std::string s;
  for (char c : monomial)
    if (c != ' ' && c != '{' && c != '}')
      s += c;
  if (s.size() >= 2 && s[1] == '*' ) {
    switch (s[0]) {
      case 'x': return CompactifierShape::XTimes;
      case 'y': return CompactifierShape::YTimes;
      case 'z': return CompactifierShape::ZTimes;
      default: break;
    }
  } else if (!s.empty() && s[0] == 'w') {
    return CompactifierShape::WPower;
  }
  fail(ErrorCode::InvalidArgument, "unrecognized compactifier '" + std::string(monomial) + "'");
}

std::string AmbientWeights::compactifier_text() const {
  static constexpr const char* names[] = {"w", "x", "y", "z"};
  std::string out;
  for (int j = 1; j < 4; ++j)
    if (compactifier[j] == 1)
      out += std::string(names[j]) + "*";
  out += "w";
  if (compactifier[0] != 1)
    out += "^" + std::to_string(compactifier[0]);
  return out;
}

AmbientWeights ambient_weights(const ReducedWeights& rw, CompactifierShape shape) {
  if (rw.q.size() != 3)
    fail(ErrorCode::InvalidArgument, "ambient weights need three variables");
  AmbientWeights amb;
  amb.d = rw.d;
  amb.shape = shape;
  amb.q = {rw.q[0], rw.q[1], rw.q[2]};
  amb.q0 = rw.d - rw.q[0] - rw.q[1] - rw.q[2];
  if (amb.q0 <= 0)
    fail(ErrorCode::NonPositiveQ0, "q0 = " + std::to_string(amb.q0));
  long rest = rw.d;
  int extra = -1;
  switch (shape) {
    case CompactifierShape::WPower: break;
    case CompactifierShape::XTimes: extra = 0; break;
    case CompactifierShape::YTimes: extra = 1; break;
    case CompactifierShape::ZTimes: extra = 2; break;
  }
  if (extra >= 0)
    rest -= amb.q[extra];
  if (rest <= 0 || rest % amb.q0 != 0)
    fail(ErrorCode::NonIntegralExponent, std::to_string(rest) + "/" + std::to_string(amb.q0));
  amb.compactifier[0] = static_cast<int>(rest / amb.q0);
  if (extra >= 0)
    amb.compactifier[extra + 1] = 1;
  long deg = amb.q0 * amb.compactifier[0];
  for (int j = 0; j < 3; ++j)
    deg += amb.q[j] * amb.compactifier[j + 1];
  if (deg != rw.d)
    fail(ErrorCode::NonIntegralExponent, "compactifier degree " + std::to_string(deg));
  return amb;
}

std::vector<std::array<int, 4>> compactified_monomials(const InvertiblePolynomial& f, const AmbientWeights& amb) {
  if (f.n() != 3)
    fail(ErrorCode::InvalidArgument, "compactification needs three variables");
  std::vector<std::array<int, 4>> out;
  for (const auto& row : f.matrix().rows())
    out.push_back({0, row[0], row[1], row[2]});
  out.push_back(amb.compactifier);
  return out;
}

bool is_quasi_homogeneous(const std::vector<std::array<int, 4>>& monomials, const std::array<long, 4>& weights) {
  bool first = true;
  long deg0 = 0;
  for (const auto& m : monomials) {
    long deg = 0;
    for (int j = 0; j < 4; ++j)
      deg += weights[j] * m[j];
    if (first)
      deg0 = deg;
    else if (deg != deg0)
      return false;
    first = false;
  }
  return true;
}

bool validate_action(const std::vector<std::array<int, 4>>& monomials, const GroupActionData& action) {
  if (action.c < 1)
    fail(ErrorCode::InvalidArgument, "group order must be positive");
  auto mod = [&](long v) { return ((v % action.c) + action.c) % action.c; };
  bool first = true;
  long k0 = 0;
  for (const auto& mono : monomials) {
    long k = 0;
    for (int j = 0; j < 4; ++j)
      k += action.m[j] * mono[j];
    k = mod(k);
    if (first)
      k0 = k;
    else if (k != k0)
      return false;
    first = false;
  }
  return true;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

Verdict beta_congruence_check(const std::array<DolgachevPair, 3>& alpha_beta, long a, long c_f) {
  if (c_f != 1)
    return Verdict::Inapplicable;
  for (const auto& [alpha, beta] : alpha_beta)
    if (((a * beta - 1) % alpha + alpha) % alpha != 0)
      return Verdict::Fail;
  return Verdict::Pass;
}

}  // namespace bh
