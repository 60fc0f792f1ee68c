#pragma once

#include <array>
#include <string>
#include <vector>

#include "bh/exactalg.hpp"
#include "bh/weights.hpp"

namespace bh {

struct PoincareData {
  RationalFunction p_f;
  RationalFunction delta0;
  RationalFunction phi_f;
};

// (1 - t^d') / prod (1 - t^w_i)
RationalFunction poincare_series(const CanonicalWeights& wsys);
// dim R_{f,k} for k = 0..k_max by counting monomials of weighted degree k and k - d'.
std::vector<Integer> poincare_bruteforce(const CanonicalWeights& wsys, long k_max);
// (1-t)^-2 prod (1 - t^alpha_i)
RationalFunction delta0(const std::array<long, 3>& alpha);
RationalFunction characteristic_function(const InvertiblePolynomial& f, const std::array<long, 3>& alpha);
PoincareData poincare_data(const InvertiblePolynomial& f, const std::array<long, 3>& alpha);

// Monodromy of a weighted homogeneous isolated singularity with reduced weights rw.
struct MonodromyData {
  long mu = 0;
  IntPolynomial milnor_poincare;  // Poincare polynomial of the Milnor algebra
  CyclotomicFactorization factorization;
};
MonodromyData monodromy(const ReducedWeights& rw);
CyclotomicFactorization milnor_orlik(const ReducedWeights& rw);

struct PhiIdentityReport {
  bool holds = false;
  long shift_exponent = 0;
  long mu = 0;
};
// Compares phi_f * (t-1)^e with the monodromy polynomial of f^T; e = mu - deg phi_f.
// Throws HypothesisNotMet unless the canonical system of f^T is reduced.
PhiIdentityReport verify_phi_identity(const InvertiblePolynomial& f, const InvertiblePolynomial& f_T,
                                      const std::array<long, 3>& alpha);

struct SquareRelationReport {
  bool holds = false;
  std::string reason;
};
SquareRelationReport verify_square_relation(const RationalFunction& phi_f, long shift_exponent,
                                            const CyclotomicFactorization& coxeter);

}  // namespace bh
