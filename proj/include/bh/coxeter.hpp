#pragma once

#include <optional>
#include <vector>

#include "bh/exactalg.hpp"

namespace bh {

// Matrix of s_{e_i}(x) = x + <x, e_i> e_i; throws NotARoot unless G(i,i) = -2.
IntMatrix reflection_matrix(const IntMatrix& g, std::size_t i);

struct CoxeterResult {
  IntMatrix tau;
  IntPolynomial char_poly;  // det(t I - tau)
  CyclotomicFactorization factorization;
  std::optional<long> order;  // empty when tau has infinite order
};

// tau = s_{e_1} s_{e_2} ... s_{e_n}; throws NotARootBasis unless every diagonal entry is -2.
CoxeterResult coxeter_element(const IntMatrix& g, long n_max = 132);

bool preserves_form(const IntMatrix& tau, const IntMatrix& g);
// t^n p(1/t) = +-p(t)
bool is_plus_minus_reciprocal(const IntPolynomial& p);

struct LatticeInvariants {
  std::size_t rank = 0;
  Integer det;
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
};

// Throws NotSymmetric.
LatticeInvariants lattice_invariants(const IntMatrix& g);

// A permutation p with G2(i,j) = G1(p[i], p[j]) for all i, j, or nothing.
std::optional<std::vector<std::size_t>> graph_isomorphic(const IntMatrix& g1, const IntMatrix& g2);

}  // namespace bh
