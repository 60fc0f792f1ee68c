#pragma once

// K-classes on the resolved surface as (rank, divisor, degree) with the form
//   <v, w> = D.D' - r deg' - r' deg,
// which is the negative Euler pairing on a K3 surface.

#include <string>
#include <vector>

#include "bh/curveconf.hpp"
#include "bh/exactalg.hpp"

namespace bh {

struct MukaiClass {
  long rank = 0;
  std::vector<long> divisor;  // indexed by configuration nodes
  long degree = 0;

  friend MukaiClass operator+(const MukaiClass& a, const MukaiClass& b);
  friend MukaiClass operator*(long s, const MukaiClass& v);
  friend bool operator==(const MukaiClass&, const MukaiClass&) = default;
};

struct SheafDescriptor {
  enum class Kind { OCminus1, OC, OX, OXshift1, Twist };
  Kind kind = Kind::OX;
  CurveLabel curve;   // OCminus1, OC; Twist: the root B
  CurveLabel target;  // Twist: the class C being twisted

  static SheafDescriptor oc_minus1(CurveLabel c) { return {Kind::OCminus1, c, {}}; }
  static SheafDescriptor oc(CurveLabel c) { return {Kind::OC, c, {}}; }
  static SheafDescriptor ox() { return {Kind::OX, {}, {}}; }
  static SheafDescriptor ox_shift1() { return {Kind::OXshift1, {}, {}}; }
  static SheafDescriptor twist(CurveLabel b, CurveLabel c) { return {Kind::Twist, b, c}; }

  // e.g. "O_{E3_2}(-1)", "O_X[1]", "T_{O_{E3_1}(-1)}(O_{E3_2}(-1))"
  std::string to_string() const;
};

MukaiClass class_of(const SheafDescriptor& s, const CurveConfiguration& conf);
long mukai_pairing(const MukaiClass& v, const MukaiClass& w, const CurveConfiguration& conf);

struct Generator {
  SheafDescriptor sheaf;
  MukaiClass cls;
};
using GeneratorList = std::vector<Generator>;

// The ordered generator system for the configuration's case; throws CaseMismatch
// when a does not match the case tag.
GeneratorList generator_list(long a, const std::array<DolgachevPair, 3>& alpha_beta, const CurveConfiguration& conf);
IntMatrix gram_matrix(const GeneratorList& gens, const CurveConfiguration& conf);
// x + <x,e> e ; throws NotARoot unless <e,e> = -2.
MukaiClass reflect(const MukaiClass& x, const MukaiClass& root, const CurveConfiguration& conf);

}  // namespace bh
