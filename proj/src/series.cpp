#include "bh/series.hpp"

#include <functional>
#include <numeric>

#include "bh/error.hpp"

namespace bh {

RationalFunction poincare_series(const CanonicalWeights& wsys) {
  IntPolynomial den{1};
  for (long w : wsys.w)
    den *= IntPolynomial::one_minus_t_power(static_cast<std::size_t>(w));
  return RationalFunction(IntPolynomial::one_minus_t_power(static_cast<std::size_t>(wsys.d_prime)), den);
}

namespace {

// Number of exponent vectors a >= 0 with sum w_i a_i = k, for every k <= k_max.
std::vector<Integer> monomial_counts(const std::vector<long>& w, long k_max) {
  std::vector<Integer> counts(static_cast<std::size_t>(k_max + 1));
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long deg) {
    if (i == w.size()) {
      ++counts[static_cast<std::size_t>(deg)];
      return;
    }
    for (long d = deg; d <= k_max; d += w[i])
      walk(i + 1, d);
  };
  walk(0, 0);
  return counts;
}

}  // namespace

std::vector<Integer> poincare_bruteforce(const CanonicalWeights& wsys, long k_max) {
  if (k_max < 0)
    fail(ErrorCode::InvalidRange, "k_max must be non-negative");
  for (long w : wsys.w)
    if (w <= 0)
      fail(ErrorCode::NonPositiveWeights, "weights must be positive");
  std::vector<Integer> counts = monomial_counts(wsys.w, k_max);
  std::vector<Integer> out(counts);
  for (long k = wsys.d_prime; k <= k_max; ++k)
    out[k] -= counts[k - wsys.d_prime];
  return out;
}

RationalFunction delta0(const std::array<long, 3>& alpha) {
  IntPolynomial num{1};
  for (long a : alpha) {
    if (a < 2)
      fail(ErrorCode::InvalidRange, "Dolgachev numbers must be at least 2");
    num *= IntPolynomial::one_minus_t_power(static_cast<std::size_t>(a));
  }
  return RationalFunction(num, pow(IntPolynomial{1, -1}, 2));
}

RationalFunction characteristic_function(const InvertiblePolynomial& f, const std::array<long, 3>& alpha) {
  return poincare_series(canonical_weights(f)) * delta0(alpha);
}

PoincareData poincare_data(const InvertiblePolynomial& f, const std::array<long, 3>& alpha) {
  PoincareData pd{poincare_series(canonical_weights(f)), delta0(alpha), {}};
  pd.phi_f = pd.p_f * pd.delta0;
  return pd;
}

MonodromyData monodromy(const ReducedWeights& rw) {
  const long d = rw.d;
  Integer mu_num = 1, mu_den = 1;
  RationalFunction p(IntPolynomial{1});
  for (long q : rw.q) {
    if (q <= 0 || d - q <= 0)
      fail(ErrorCode::NonIntegralMilnorNumber, "weights must satisfy 0 < q_i < d");
    mu_num *= d - q;
    mu_den *= q;
    p = p * RationalFunction(IntPolynomial::t_power_minus_one(static_cast<std::size_t>(d - q)),
                             IntPolynomial::t_power_minus_one(static_cast<std::size_t>(q)));
  }
  if (!mpz_divisible_p(mu_num.get_mpz_t(), mu_den.get_mpz_t()) || !p.is_polynomial())
    fail(ErrorCode::NonIntegralMilnorNumber, "Milnor number " + mu_num.get_str() + "/" + mu_den.get_str());
  MonodromyData out;
  out.mu = Integer(mu_num / mu_den).get_si();
  out.milnor_poincare = p.as_polynomial();

  // A basis monomial of weighted degree k has eigenvalue exp(2 pi i (k + sum q)/d).
  const long shift = std::accumulate(rw.q.begin(), rw.q.end(), 0L);
  std::map<long, Integer> by_order;
  const auto& coeffs = out.milnor_poincare.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0)
      continue;
    long e = (static_cast<long>(k) + shift) % d;
    by_order[d / std::gcd(e, d)] += coeffs[k];
  }
  for (const auto& [n, count] : by_order) {
    long phi = euler_totient(n);
    if (!mpz_divisible_ui_p(count.get_mpz_t(), static_cast<unsigned long>(phi)))
      fail(ErrorCode::NotCyclotomic, "eigenvalues of order " + std::to_string(n) + " are not Galois-stable");
    out.factorization.factors[n] = Integer(count / phi).get_si();
  }
  if (out.factorization.cyclotomic_degree() != out.mu)
    fail(ErrorCode::NonIntegralMilnorNumber, "basis count differs from Milnor number");
  return out;
}

CyclotomicFactorization milnor_orlik(const ReducedWeights& rw) {
  return monodromy(rw).factorization;
}

PhiIdentityReport verify_phi_identity(const InvertiblePolynomial& f, const InvertiblePolynomial& f_T,
                                      const std::array<long, 3>& alpha) {
  ReducedWeights rw_T = reduce(canonical_weights(f_T));
  if (rw_T.c_f != 1)
    fail(ErrorCode::HypothesisNotMet, "canonical weights of f^T are not reduced (c = " + std::to_string(rw_T.c_f) + ")");
  MonodromyData mono = monodromy(rw_T);
  RationalFunction phi = characteristic_function(f, alpha);
  PhiIdentityReport rep;
  rep.mu = mono.mu;
  rep.shift_exponent = mono.mu - phi.degree();
  if (rep.shift_exponent < 0)
    return rep;
  RationalFunction lifted =
    phi * RationalFunction(pow(IntPolynomial{-1, 1}, static_cast<unsigned>(rep.shift_exponent)));
  if (!lifted.is_polynomial())
    return rep;
  IntPolynomial p = lifted.as_polynomial();
  IntPolynomial target = mono.factorization.expand();
  rep.holds = (p == target) || (p == -target);
  return rep;
}

SquareRelationReport verify_square_relation(const RationalFunction& phi_f, long shift_exponent,
                                            const CyclotomicFactorization& coxeter) {
  if (shift_exponent < 0)
    return {false, "negative shift exponent"};
  RationalFunction lifted =
    phi_f * RationalFunction(pow(IntPolynomial{-1, 1}, static_cast<unsigned>(shift_exponent)));
  if (!lifted.is_polynomial())
    return {false, "(t-1)^e * phi_f is not a polynomial"};
  CyclotomicFactorization fac = factor_cyclotomic(lifted.as_polynomial(), 132);
  if (!fac.fully_cyclotomic())
    return {false, "(t-1)^e * phi_f is not a product of cyclotomic polynomials"};
  CyclotomicFactorization squared = square_root_spectrum(fac);
  if (squared.factors != coxeter.factors)
    return {false, "squared spectrum " + squared.notation() + " differs from " + coxeter.notation()};
  return {true, "squared spectrum " + squared.notation() + " matches the Coxeter element"};
}

}  // namespace bh
