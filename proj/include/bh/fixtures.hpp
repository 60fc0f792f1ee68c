#pragma once

// Transcribed table data for the weighted homogeneous bimodal classes.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bh/curveconf.hpp"
#include "bh/weights.hpp"

namespace bh {

struct FixtureRow {
  std::string name;
  std::string dual_name;
  std::string f_T;
  std::string f;
  // Printed f is transpose(f^T) after this variable substitution, when not the identity.
  std::optional<std::vector<std::string>> f_renaming;
  std::array<long, 3> gabrielov{};
  std::array<long, 3> dolgachev{};
  std::array<DolgachevPair, 3> alpha_beta{};
  long a = 0;
  long c_f = 0;
  std::array<long, 4> ambient{};
  std::optional<std::array<long, 4>> ambient_printed;  // as printed, when it differs
  std::string compactifier;
  GroupActionData action;
  std::optional<std::array<long, 4>> action_printed;  // as printed, when it differs
  CaseTag case_tag = CaseTag::Quadrilateral_other;
  AttachmentTable attachment_table;
  std::string attachment_reading;
  long mu = 0;  // derived: degree of the monodromy polynomial of f^T
  std::string kodaira;
  int r = 0;
  std::optional<bool> square_relation_expected;

  bool r1() const { return case_tag == CaseTag::Quadrilateral_r1; }
  friend bool operator==(const FixtureRow&, const FixtureRow&) = default;
};

// Throws InvalidFixture on schema violations.
std::vector<FixtureRow> load_fixtures(std::string_view json_text);
std::string serialize_fixtures(const std::vector<FixtureRow>& rows);
// The fixture document compiled into the library.
std::string_view builtin_fixture_json();
const std::vector<FixtureRow>& builtin_fixtures();

// "J_3,0", "J30" and "j_{3,0}" all name the same row.
std::string normalize_fixture_name(std::string_view name);
// Throws UnknownFixture.
const FixtureRow& find_fixture(const std::vector<FixtureRow>& rows, std::string_view name);

}  // namespace bh
