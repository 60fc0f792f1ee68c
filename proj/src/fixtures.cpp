#include "bh/fixtures.hpp"

#include <cctype>

#include <json.hpp>

#include "bh/error.hpp"

namespace bh {

namespace {

using json = nlohmann::ordered_json;

template <std::size_t N>
std::array<long, N> long_array(const json& j, const char* field) {
  if (!j.is_array() || j.size() != N)
    fail(ErrorCode::InvalidFixture, std::string(field) + " must have " + std::to_string(N) + " entries");
  std::array<long, N> out{};
  for (std::size_t i = 0; i < N; ++i)
    out[i] = j[i].get<long>();
  return out;
}

json optional_int(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<int> read_optional_int(const json& j) {
  if (j.is_null())
    return std::nullopt;
  return j.get<int>();
}

FixtureRow row_from_json(const json& j) {
  FixtureRow r;
  r.name = j.at("name").get<std::string>();
  r.dual_name = j.at("dual_name").get<std::string>();
  r.f_T = j.at("f_T").get<std::string>();
  r.f = j.at("f").get<std::string>();
  if (j.contains("f_renaming"))
    r.f_renaming = j.at("f_renaming").get<std::vector<std::string>>();
  r.gabrielov = long_array<3>(j.at("gabrielov"), "gabrielov");
  r.dolgachev = long_array<3>(j.at("dolgachev"), "dolgachev");
  const json& ab = j.at("alpha_beta");
  if (!ab.is_array() || ab.size() != 3)
    fail(ErrorCode::InvalidFixture, r.name + ": alpha_beta must have three pairs");
  for (std::size_t i = 0; i < 3; ++i) {
    auto p = long_array<2>(ab[i], "alpha_beta pair");
    r.alpha_beta[i] = {p[0], p[1]};
    if (p[0] != r.dolgachev[i])
      fail(ErrorCode::InvalidFixture, r.name + ": alpha_beta disagrees with dolgachev");
  }
  r.a = j.at("a").get<long>();
  r.c_f = j.at("c_f").get<long>();
  r.ambient = long_array<4>(j.at("ambient"), "ambient");
  if (j.contains("ambient_printed"))
    r.ambient_printed = long_array<4>(j.at("ambient_printed"), "ambient_printed");
  r.compactifier = j.at("compactifier").get<std::string>();
  r.action.c = j.at("action").at("c").get<long>();
  r.action.m = long_array<4>(j.at("action").at("m"), "action.m");
  if (j.contains("action_printed"))
    r.action_printed = long_array<4>(j.at("action_printed"), "action_printed");
  r.case_tag = case_tag_from_string(j.at("case_tag").get<std::string>());
  const json& att = j.at("attachment_table");
  const json& arms = att.at("arms");
  if (!arms.is_array() || arms.size() != 3)
    fail(ErrorCode::InvalidFixture, r.name + ": attachment_table.arms must have three slots");
  for (std::size_t i = 0; i < 3; ++i)
    r.attachment_table.arm[i] = read_optional_int(arms[i]);
  r.attachment_table.f_target = read_optional_int(att.at("f_target"));
  r.attachment_reading = att.at("reading").get<std::string>();
  r.attachment_table.provenance = att.at("provenance").get<std::string>();
  r.mu = j.at("mu").get<long>();
  r.kodaira = j.at("kodaira").get<std::string>();
  r.r = j.at("r").get<int>();
  const json& sq = j.at("square_relation_expected");
  if (!sq.is_null())
    r.square_relation_expected = sq.get<bool>();
  return r;
}

json row_to_json(const FixtureRow& r) {
  json j;
  j["name"] = r.name;
  j["dual_name"] = r.dual_name;
  j["f_T"] = r.f_T;
  j["f"] = r.f;
  if (r.f_renaming)
    j["f_renaming"] = *r.f_renaming;
  j["gabrielov"] = r.gabrielov;
  j["dolgachev"] = r.dolgachev;
  json ab = json::array();
  for (const auto& p : r.alpha_beta)
    ab.push_back({p.alpha, p.beta});
  j["alpha_beta"] = ab;
  j["a"] = r.a;
  j["c_f"] = r.c_f;
  j["ambient"] = r.ambient;
  if (r.ambient_printed)
    j["ambient_printed"] = *r.ambient_printed;
  j["compactifier"] = r.compactifier;
  j["action"] = {{"c", r.action.c}, {"m", r.action.m}};
  if (r.action_printed)
    j["action_printed"] = *r.action_printed;
  j["case_tag"] = std::string(to_string(r.case_tag));
  json arms = json::array();
  for (const auto& a : r.attachment_table.arm)
    arms.push_back(optional_int(a));
  j["attachment_table"] = {{"arms", arms},
                           {"f_target", optional_int(r.attachment_table.f_target)},
                           {"reading", r.attachment_reading},
                           {"provenance", r.attachment_table.provenance}};
  j["mu"] = r.mu;
  j["kodaira"] = r.kodaira;
  j["r"] = r.r;
  j["square_relation_expected"] = r.square_relation_expected ? json(*r.square_relation_expected) : json(nullptr);
  return j;
}

}  // namespace

std::vector<FixtureRow> load_fixtures(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidFixture, e.what());
  }
  std::vector<FixtureRow> rows;
  try {
    if (doc.at("schema").get<std::string>() != "bh-fixtures/1")
      fail(ErrorCode::InvalidFixture, "unsupported fixture schema");
    for (const json& j : doc.at("rows"))
      rows.push_back(row_from_json(j));
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidFixture, e.what());
  }
  return rows;
}

std::string serialize_fixtures(const std::vector<FixtureRow>& rows) {
  json doc;
  doc["schema"] = "bh-fixtures/1";
  doc["rows"] = json::array();
  for (const auto& r : rows)
    doc["rows"].push_back(row_to_json(r));
  return doc.dump(2) + "\n";
}

const std::vector<FixtureRow>& builtin_fixtures() {
  static const std::vector<FixtureRow> rows = load_fixtures(builtin_fixture_json());
  return rows;
}

std::string normalize_fixture_name(std::string_view name) {
  std::string out;
  for (char c : name)
    if (c != '_' && c != ',' && c != '{' && c != '}' && c != ' ')
      out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

const FixtureRow& find_fixture(const std::vector<FixtureRow>& rows, std::string_view name) {
  const std::string key = normalize_fixture_name(name);
  for (const auto& r : rows)
    if (normalize_fixture_name(r.name) == key)
      return r;
  fail(ErrorCode::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

}  // namespace bh
