#include "bh/klattice.hpp"

#include "bh/error.hpp"

namespace bh {

MukaiClass operator+(const MukaiClass& a, const MukaiClass& b) {
  if (a.divisor.size() != b.divisor.size())
    fail(ErrorCode::DimensionMismatch, "classes over different configurations");
  MukaiClass r{a.rank + b.rank, a.divisor, a.degree + b.degree};
  for (std::size_t i = 0; i < r.divisor.size(); ++i)
    r.divisor[i] += b.divisor[i];
  return r;
}

MukaiClass operator*(long s, const MukaiClass& v) {
  MukaiClass r{s * v.rank, v.divisor, s * v.degree};
  for (long& x : r.divisor)
    x *= s;
  return r;
}

std::string SheafDescriptor::to_string() const {
  switch (kind) {
    case Kind::OCminus1: return "O_{" + curve.id() + "}(-1)";
    case Kind::OC: return "O_{" + curve.id() + "}";
    case Kind::OX: return "O_X";
    case Kind::OXshift1: return "O_X[1]";
    case Kind::Twist: return "T_{O_{" + curve.id() + "}(-1)}(O_{" + target.id() + "}(-1))";
  }
  return "?";
}

MukaiClass class_of(const SheafDescriptor& s, const CurveConfiguration& conf) {
  MukaiClass v{0, std::vector<long>(conf.size(), 0), 0};
  switch (s.kind) {
    case SheafDescriptor::Kind::OCminus1:
      v.divisor[conf.index_of(s.curve)] = 1;
      break;
    case SheafDescriptor::Kind::OC:
      v.divisor[conf.index_of(s.curve)] = 1;
      v.degree = 1;
      break;
    case SheafDescriptor::Kind::OX:
      v.rank = 1;
      v.degree = 1;
      break;
    case SheafDescriptor::Kind::OXshift1:
      v.rank = -1;
      v.degree = -1;
      break;
    case SheafDescriptor::Kind::Twist:
      v.divisor[conf.index_of(s.curve)] += 1;
      v.divisor[conf.index_of(s.target)] += 1;
      break;
  }
  return v;
}

long mukai_pairing(const MukaiClass& v, const MukaiClass& w, const CurveConfiguration& conf) {
  if (v.divisor.size() != conf.size() || w.divisor.size() != conf.size())
    fail(ErrorCode::DimensionMismatch, "class length does not match the configuration");
  long dd = 0;
  for (std::size_t i = 0; i < conf.size(); ++i) {
    if (v.divisor[i] == 0)
      continue;
    for (std::size_t j = 0; j < conf.size(); ++j)
      if (w.divisor[j] != 0)
        dd += v.divisor[i] * w.divisor[j] * conf.intersection(i, j);
  }
  return dd - v.rank * w.degree - w.rank * v.degree;
}

GeneratorList generator_list(long a, const std::array<DolgachevPair, 3>& alpha_beta, const CurveConfiguration& conf) {
  const CaseTag tag = conf.tag();
  const bool r1 = tag == CaseTag::Quadrilateral_r1;
  const bool ok = (tag == CaseTag::Exceptional_a2 && a == 2) || (tag == CaseTag::Exceptional_a3 && a == 3) ||
                  (tag == CaseTag::Exceptional_a5 && a == 5) ||
                  ((tag == CaseTag::Quadrilateral_r1 || tag == CaseTag::Quadrilateral_other) && a == 2);
  if (!ok)
    fail(ErrorCode::CaseMismatch, "case " + std::string(to_string(tag)) + " with a = " + std::to_string(a));

  std::vector<SheafDescriptor> list;
  const bool twisted = r1 || a == 5;
  for (int i = 1; i <= 3; ++i) {
    const int alpha = static_cast<int>(alpha_beta[i - 1].alpha);
    for (int j = 1; j < alpha; ++j) {
      if (twisted && i == 3 && j == 1)
        continue;
      if (twisted && i == 3 && j == 2)
        list.push_back(SheafDescriptor::twist(CurveLabel::arm(3, 1), CurveLabel::arm(3, 2)));
      else
        list.push_back(SheafDescriptor::oc_minus1(CurveLabel::arm(i, j)));
    }
  }
  list.push_back(SheafDescriptor::oc_minus1(CurveLabel::center()));
  list.push_back(SheafDescriptor::oc(CurveLabel::center()));
  if (a == 5) {
    list.push_back(SheafDescriptor::ox_shift1());
    list.push_back(SheafDescriptor::oc(CurveLabel::f(1)));
    for (int l = 2; l <= 4; ++l)
      list.push_back(SheafDescriptor::oc_minus1(CurveLabel::f(l)));
    list.push_back(SheafDescriptor::oc_minus1(CurveLabel::e0()));
  } else {
    list.push_back(SheafDescriptor::ox());
    if (a == 3)
      list.push_back(SheafDescriptor::oc_minus1(CurveLabel::f(1)));
    if (r1) {
      list.push_back(SheafDescriptor::oc_minus1(CurveLabel::e0_prime()));
      list.push_back(SheafDescriptor::oc(CurveLabel::e0_double_prime()));
    } else {
      list.push_back(SheafDescriptor::oc(CurveLabel::e0()));
    }
  }

  GeneratorList gens;
  for (const auto& s : list)
    gens.push_back({s, class_of(s, conf)});
  return gens;
}

IntMatrix gram_matrix(const GeneratorList& gens, const CurveConfiguration& conf) {
  IntMatrix g(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      long p = mukai_pairing(gens[i].cls, gens[j].cls, conf);
      g(i, j) = p;
      g(j, i) = p;
    }
  return g;
}

MukaiClass reflect(const MukaiClass& x, const MukaiClass& root, const CurveConfiguration& conf) {
  if (mukai_pairing(root, root, conf) != -2)
    fail(ErrorCode::NotARoot, "reflection needs a class of square -2");
  return x + mukai_pairing(x, root, conf) * root;
}

}  // namespace bh
