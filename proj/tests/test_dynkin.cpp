#include <doctest.h>

#include <algorithm>

#include "bh/coxeter.hpp"
#include "bh/dynkin.hpp"
#include "bh/error.hpp"
#include "bh/pipeline.hpp"

using namespace bh;

namespace {

std::size_t at(const DynkinDiagram& d, const std::string& label) {
  auto it = std::find(d.labels.begin(), d.labels.end(), label);
  REQUIRE(it != d.labels.end());
  return static_cast<std::size_t>(it - d.labels.begin());
}

long edge(const DynkinDiagram& d, const std::string& a, const std::string& b) {
  return d.gram(at(d, a), at(d, b)).get_si();
}

std::vector<std::string> neighbours(const DynkinDiagram& d, const std::string& v) {
  std::vector<std::string> out;
  const std::size_t i = at(d, v);
  for (std::size_t j = 0; j < d.size(); ++j)
    if (j != i && d.gram(i, j) != 0)
      out.push_back(d.labels[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1))
    ++n;
  return n;
}

DynkinDiagram rules_for(const FixtureRow& row) { return rule_diagram(row.alpha_beta, row.a, row.r1()); }

}  // namespace

TEST_CASE("T-graph vertex counts") {
  CHECK(t_graph({2, 2, 2}).size() == 5);
  CHECK(t_graph({3, 5, 7}).size() == 14);
  CHECK(t_graph({2, 3, 11}).size() == 15);
  CHECK_THROWS_AS(t_graph({1, 3, 4}), Error);
}

TEST_CASE("T-graph shape") {
  DynkinDiagram t = t_graph({3, 5, 7});
  CHECK(t.labels[12] == "Cl");
  CHECK(t.labels[13] == "Cu");
  CHECK(edge(t, "Cl", "Cu") == -2);
  CHECK(neighbours(t, "Cl") == std::vector<std::string>{"Cu", "E1_2", "E2_4", "E3_6"});
  CHECK(neighbours(t, "Cu") == std::vector<std::string>{"Cl", "E1_2", "E2_4", "E3_6"});
  CHECK(neighbours(t, "E2_1") == std::vector<std::string>{"E2_2"});
  for (std::size_t i = 0; i < t.size(); ++i)
    CHECK(t.gram(i, i) == -2);
  CHECK(t.gram.is_symmetric());
  CHECK(is_connected(t));
}

TEST_CASE("arm positions") {
  CHECK(arm_position(AttachmentReading::OutsideMinus1, 5, 3) == 1);
  CHECK(arm_position(AttachmentReading::OutsideMinus1, 7, 4) == 2);
  CHECK(arm_position(AttachmentReading::OutsidePlus1, 7, 4) == 4);
  CHECK(arm_position(AttachmentReading::InsidePlus1, 7, 4) == 3);
  CHECK(arm_position(AttachmentReading::InsideMinus1, 7, 4) == 5);
  CHECK_FALSE(arm_position(AttachmentReading::OutsideMinus1, 3, 2).has_value());
  CHECK_THROWS_AS(arm_position(AttachmentReading::OutsidePlus1, 5, 1), Error);
  for (AttachmentReading r : all_readings())
    CHECK(attachment_reading_from_string(to_string(r)) == r);
  CHECK(to_string(AttachmentReading::OutsideMinus1) == "alpha-beta-1 from outside");
}

TEST_CASE("S_16 rule diagram") {
  const FixtureRow& row = find_fixture(builtin_fixtures(), "S_16");
  DynkinDiagram d = rules_for(row);
  CHECK(d.size() == 16);
  CHECK(d.labels[14] == "B1");
  CHECK(d.labels[15] == "B2");
  CHECK(edge(d, "Cu", "B1") != 0);
  CHECK(edge(d, "Cl", "B1") == 0);
  CHECK(neighbours(d, "B2") == std::vector<std::string>{"B1", "E2_1", "E3_2"});
  std::string dot = diagram_dot(d, "S_16");
  CHECK(count_substr(dot, "Cl -- Cu [style=dashed]") == 2);
  CHECK(count_substr(dot, "[label=") == 16);
}

TEST_CASE("E_20 rule diagram") {
  DynkinDiagram d = rules_for(find_fixture(builtin_fixtures(), "E_20"));
  CHECK(d.size() == 20);
  for (int l = 1; l < 5; ++l)
    CHECK(edge(d, "B" + std::to_string(l), "B" + std::to_string(l + 1)) != 0);
  CHECK(edge(d, "Cu", "B1") != 0);
  CoxeterResult r = coxeter_element(d.gram);
  CHECK(r.char_poly == cyclotomic(66));
}

TEST_CASE("extension escape clause and errors") {
  std::array<DolgachevPair, 3> ab{DolgachevPair{2, 1}, DolgachevPair{3, 2}, DolgachevPair{4, 3}};
  DynkinDiagram d = rule_diagram(ab, 2, false);
  CHECK(d.size() == 1 + 2 + 3 + 2 + 2);
  CHECK(neighbours(d, "B2") == std::vector<std::string>{"B1"});
  CHECK(neighbours(d, "B1") == std::vector<std::string>{"B2", "Cu"});
  try {
    rule_diagram(ab, 4, false);
    FAIL("expected MissingConvention");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingConvention);
  }
  CHECK_THROWS_AS(rule_diagram(ab, 2, false, ConventionTable{}), Error);
}

TEST_CASE("toy diagram from a Gram matrix") {
  DynkinDiagram a2 = diagram_from_gram(IntMatrix::from_rows({{-2, 1}, {1, -2}}), {"x", "y"});
  CHECK(a2.labels == std::vector<std::string>{"G1", "G2"});
  CHECK(coxeter_element(a2.gram).char_poly == IntPolynomial{1, 1, 1});
  CHECK(is_connected(a2));
  CHECK_FALSE(is_connected(diagram_from_gram(IntMatrix::from_rows({{-2, 0}, {0, -2}}))));
}

TEST_CASE("rule diagrams agree with the K-lattice on every row") {
  for (const auto& row : builtin_fixtures()) {
    CAPTURE(row.name);
    RowModel m = build_row_model(row);
    DynkinDiagram d = rules_for(row);
    long expected = 2 + row.a;
    for (const auto& p : row.alpha_beta)
      expected += p.alpha - 1;
    CHECK(static_cast<long>(d.size()) == expected);
    CHECK(static_cast<long>(d.size()) == row.mu);
    CHECK(is_connected(d));
    CHECK(is_connected(diagram_from_gram(m.k_gram)));
    CoxeterResult r = coxeter_element(d.gram);
    CHECK(r.char_poly == m.mono.factorization.expand());
    CHECK(r.char_poly == coxeter_element(m.k_gram).char_poly);
    CHECK(graph_isomorphic(d.gram, m.k_gram).has_value());
  }
}

TEST_CASE("calibration reproduces the committed table") {
  std::vector<CalibrationRow> rows;
  for (const auto& row : builtin_fixtures())
    rows.push_back(calibration_row(build_row_model(row)));
  CalibrationOutcome out = calibrate(rows);
  CHECK(out.table == committed_conventions());
  CHECK(out.log.size() == committed_conventions().size());
  for (const auto& [key, entry] : committed_conventions()) {
    CHECK_FALSE(entry.provenance.empty());
    CHECK(entry.reading == AttachmentReading::OutsideMinus1);
  }
  CHECK(committed_conventions().at({5, false}).carrier == 3);
  CHECK(committed_conventions().at({2, false}).carrier == 2);
  CHECK(committed_conventions().at({3, false}).carrier == 2);
}

TEST_CASE("calibration fails loudly on an impossible oracle") {
  CalibrationRow row = calibration_row(build_row_model(find_fixture(builtin_fixtures(), "E_20")));
  row.monodromy = factor_cyclotomic(cyclotomic(1) * cyclotomic(2), 132);
  try {
    calibrate({row});
    FAIL("expected CalibrationFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CalibrationFailed);
  }
}
