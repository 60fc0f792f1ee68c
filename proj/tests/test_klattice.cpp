#include <doctest.h>

#include "bh/error.hpp"
#include "bh/klattice.hpp"
#include "bh/pipeline.hpp"
#include "oracles.hpp"

using namespace bh;

namespace {

CurveConfiguration conf_of(std::string_view name) {
  const FixtureRow& row = find_fixture(builtin_fixtures(), name);
  return build_configuration(configuration_input(row, row.attachment_table));
}

MukaiClass cls(const SheafDescriptor& s, const CurveConfiguration& c) { return class_of(s, c); }

MukaiClass random_class(std::mt19937& gen, const CurveConfiguration& c) {
  std::uniform_int_distribution<long> d(-3, 3);
  MukaiClass v{d(gen), std::vector<long>(c.size()), d(gen)};
  for (auto& x : v.divisor)
    x = d(gen);
  return v;
}

}  // namespace

TEST_CASE("pairing examples") {
  CurveConfiguration c = conf_of("S_16");
  const CurveLabel e1 = CurveLabel::arm(2, 1), e2 = CurveLabel::arm(2, 2);
  MukaiClass ox = cls(SheafDescriptor::ox(), c);
  CHECK(ox.rank == 1);
  CHECK(ox.degree == 1);
  CHECK(mukai_pairing(ox, ox, c) == -2);
  CHECK(mukai_pairing(cls(SheafDescriptor::oc_minus1(e1), c), cls(SheafDescriptor::oc_minus1(e2), c), c) == 1);
  CHECK(mukai_pairing(ox, cls(SheafDescriptor::oc_minus1(e1), c), c) == 0);
  MukaiClass short_class{0, {1, 0}, 0};
  CHECK_THROWS_AS(mukai_pairing(short_class, ox, c), Error);
}

TEST_CASE("class dictionary") {
  CurveConfiguration c = conf_of("E_20");
  MukaiClass tw = cls(SheafDescriptor::twist(CurveLabel::arm(3, 1), CurveLabel::arm(3, 2)), c);
  CHECK(tw.rank == 0);
  CHECK(tw.degree == 0);
  CHECK(tw.divisor[c.index_of(CurveLabel::arm(3, 1))] == 1);
  CHECK(tw.divisor[c.index_of(CurveLabel::arm(3, 2))] == 1);
  CHECK(mukai_pairing(tw, tw, c) == -2);

  MukaiClass sh = cls(SheafDescriptor::ox_shift1(), c);
  CHECK(sh == (-1) * cls(SheafDescriptor::ox(), c));

  MukaiClass oc = cls(SheafDescriptor::oc(CurveLabel::center()), c);
  CHECK(oc.degree == 1);
  CHECK(mukai_pairing(oc, cls(SheafDescriptor::oc_minus1(CurveLabel::center()), c), c) == -2);
  CHECK(mukai_pairing(oc, cls(SheafDescriptor::ox(), c), c) == -1);

  CHECK_THROWS_AS(cls(SheafDescriptor::oc(CurveLabel::e0_prime()), c), Error);
  CHECK(SheafDescriptor::oc_minus1(CurveLabel::arm(3, 2)).to_string() == "O_{E3_2}(-1)");
  CHECK(SheafDescriptor::ox_shift1().to_string() == "O_X[1]");
}

TEST_CASE("generator counts") {
  for (const auto& [name, mu] : std::vector<std::pair<std::string, std::size_t>>{{"S_16", 16}, {"E_20", 20}, {"Z_1,0", 15}}) {
    CAPTURE(name);
    const FixtureRow& row = find_fixture(builtin_fixtures(), name);
    CurveConfiguration c = conf_of(name);
    CHECK(generator_list(row.a, row.alpha_beta, c).size() == mu);
  }
  const FixtureRow& e20 = find_fixture(builtin_fixtures(), "E_20");
  GeneratorList g = generator_list(5, e20.alpha_beta, conf_of("E_20"));
  CHECK(g.back().sheaf.to_string() == "O_{E0}(-1)");
  CHECK(g[g.size() - 6].sheaf.kind == SheafDescriptor::Kind::OXshift1);
  CHECK_THROWS_AS(generator_list(3, e20.alpha_beta, conf_of("E_20")), Error);
}

TEST_CASE("Gram matrix on every row") {
  for (const auto& row : builtin_fixtures()) {
    CAPTURE(row.name);
    RowModel m = build_row_model(row);
    CHECK(static_cast<long>(m.gens.size()) == row.mu);
    CHECK(m.mono.mu == row.mu);
    const IntMatrix& g = m.k_gram;
    CHECK(g.is_symmetric());
    for (std::size_t i = 0; i < g.dim(); ++i) {
      CHECK(g(i, i) == -2);
      for (std::size_t j = 0; j < g.dim(); ++j)
        if (i != j)
          CHECK((g(i, j) >= -2 && g(i, j) <= 1));
    }
    CHECK(gram_matrix(m.gens, m.conf) == g);
  }
}

TEST_CASE("Gram matrix entries from the sheaf dictionary") {
  RowModel m = build_row_model(find_fixture(builtin_fixtures(), "S_16"));
  auto at = [&](const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < m.gens.size(); ++k) {
      if (m.gens[k].sheaf.to_string() == a)
        i = k;
      if (m.gens[k].sheaf.to_string() == b)
        j = k;
    }
    return m.k_gram(i, j);
  };
  CHECK(at("O_{E2_1}(-1)", "O_{E2_2}(-1)") == 1);
  CHECK(at("O_{Einf}(-1)", "O_{Einf}") == -2);
  CHECK(at("O_X", "O_{Einf}") == -1);
  CHECK(at("O_X", "O_{E2_1}(-1)") == 0);
}

TEST_CASE("reflections") {
  CurveConfiguration c = conf_of("E_20");
  MukaiClass b = cls(SheafDescriptor::oc_minus1(CurveLabel::arm(3, 1)), c);
  MukaiClass cc = cls(SheafDescriptor::oc_minus1(CurveLabel::arm(3, 2)), c);
  CHECK(reflect(b, b, c) == (-1) * b);
  CHECK(reflect(cc, b, c) == cls(SheafDescriptor::twist(CurveLabel::arm(3, 1), CurveLabel::arm(3, 2)), c));
  MukaiClass far = cls(SheafDescriptor::oc_minus1(CurveLabel::arm(1, 1)), c);
  CHECK(reflect(far, b, c) == far);
  CHECK_THROWS_AS(reflect(far, MukaiClass{0, std::vector<long>(c.size()), 0}, c), Error);

  auto gen = oracle::rng(51);
  GeneratorList roots = generator_list(5, find_fixture(builtin_fixtures(), "E_20").alpha_beta, c);
  for (int trial = 0; trial < 60; ++trial) {
    const MukaiClass& e = roots[static_cast<std::size_t>(trial) % roots.size()].cls;
    MukaiClass x = random_class(gen, c), y = random_class(gen, c);
    CHECK(mukai_pairing(reflect(x, e, c), reflect(y, e, c), c) == mukai_pairing(x, y, c));
    CHECK(reflect(reflect(x, e, c), e, c) == x);
    CHECK(mukai_pairing(x, y, c) == mukai_pairing(y, x, c));
  }
}

TEST_CASE("base change through the twist is transparent") {
  for (const auto& row : builtin_fixtures()) {
    if (!(row.r1() || row.a == 5))
      continue;
    CAPTURE(row.name);
    RowModel m = build_row_model(row);
    const CurveLabel b = CurveLabel::arm(3, 1), c = CurveLabel::arm(3, 2);
    MukaiClass ob = cls(SheafDescriptor::oc_minus1(b), m.conf);
    MukaiClass oc = cls(SheafDescriptor::oc_minus1(c), m.conf);
    MukaiClass tw = cls(SheafDescriptor::twist(b, c), m.conf);
    CHECK(tw == reflect(oc, ob, m.conf));
    for (const auto& g : m.gens) {
      if (g.sheaf.kind == SheafDescriptor::Kind::Twist)
        continue;
      CHECK(mukai_pairing(tw, g.cls, m.conf) == mukai_pairing(ob, g.cls, m.conf) + mukai_pairing(oc, g.cls, m.conf));
      CHECK(mukai_pairing(reflect(g.cls, ob, m.conf), reflect(oc, ob, m.conf), m.conf) ==
            mukai_pairing(g.cls, oc, m.conf));
    }
  }
}
