#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bh/polyparse.hpp"

namespace bh {

struct CanonicalWeights {
  std::vector<long> w;
  long d_prime = 0;
  friend bool operator==(const CanonicalWeights&, const CanonicalWeights&) = default;
};

struct ReducedWeights {
  std::vector<long> q;
  long d = 0;
  long c_f = 1;
  friend bool operator==(const ReducedWeights&, const ReducedWeights&) = default;
};

// Solves E*w = |det E| * (1,...,1) through the adjugate.
CanonicalWeights canonical_weights(const InvertiblePolynomial& f);
// Solves E*w = degree * (1,...,1) over Q; throws NonIntegralWeights or NonPositiveWeights.
std::vector<long> weights_for_degree(const InvertiblePolynomial& f, long degree);
ReducedWeights reduce(const CanonicalWeights& wsys);
// d' - w1 - w2 - w3; requires n = 3.
long gorenstein_parameter(const CanonicalWeights& wsys);

// The four ways of adding a fourth variable w to f(x,y,z).
enum class CompactifierShape { WPower, ZTimes, YTimes, XTimes };

// Recognizes "w^N", "z*w^N", "y*w^N", "x*w^N" (the exponent itself is recomputed).
CompactifierShape compactifier_shape(std::string_view monomial);

struct AmbientWeights {
  long q0 = 0;
  std::array<long, 3> q{};
  long d = 0;
  CompactifierShape shape = CompactifierShape::WPower;
  // Exponents over (w, x, y, z).
  std::array<int, 4> compactifier{};

  std::array<long, 4> projective() const { return {q0, q[0], q[1], q[2]}; }
  std::string compactifier_text() const;
};

AmbientWeights ambient_weights(const ReducedWeights& rw, CompactifierShape shape);

// Monomials of F = f + compactifier as exponent rows over (w, x, y, z).
std::vector<std::array<int, 4>> compactified_monomials(const InvertiblePolynomial& f, const AmbientWeights& amb);
bool is_quasi_homogeneous(const std::vector<std::array<int, 4>>& monomials, const std::array<long, 4>& weights);

struct GroupActionData {
  long c = 1;
  std::array<long, 4> m{};
  friend bool operator==(const GroupActionData&, const GroupActionData&) = default;
};

bool validate_action(const std::vector<std::array<int, 4>>& monomials, const GroupActionData& action);

enum class Verdict { Pass, Fail, Inapplicable };
std::string_view to_string(Verdict v);

struct DolgachevPair {
  long alpha = 0;
  long beta = 0;
  friend bool operator==(const DolgachevPair&, const DolgachevPair&) = default;
};

Verdict beta_congruence_check(const std::array<DolgachevPair, 3>& alpha_beta, long a, long c_f);

}  // namespace bh
