#pragma once

// Configurations of smooth rational -2-curves: three arm chains around a
// central curve E_inf, the curve E_0 (or its two components) and, for the
// exceptional classes, a chain F_1 - ... - F_(a-1).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bh/exactalg.hpp"
#include "bh/weights.hpp"

namespace bh {

enum class CaseTag { Quadrilateral_r1, Quadrilateral_other, Exceptional_a2, Exceptional_a3, Exceptional_a5 };

std::string_view to_string(CaseTag tag);
CaseTag case_tag_from_string(std::string_view s);
bool is_exceptional(CaseTag tag);

struct CurveLabel {
  enum class Kind { Arm, Center, E0, E0Prime, E0DoublePrime, F };
  Kind kind = Kind::Center;
  int i = 0;  // arm index (1..3) or F index
  int j = 0;  // position along the arm, 1 = outermost

  static CurveLabel arm(int i, int j) { return {Kind::Arm, i, j}; }
  static CurveLabel center() { return {Kind::Center, 0, 0}; }
  static CurveLabel e0() { return {Kind::E0, 0, 0}; }
  static CurveLabel e0_prime() { return {Kind::E0Prime, 0, 0}; }
  static CurveLabel e0_double_prime() { return {Kind::E0DoublePrime, 0, 0}; }
  static CurveLabel f(int l) { return {Kind::F, l, 0}; }

  // DOT-safe id: E1_1, Einf, E0, E0p, E0pp, F2
  std::string id() const;
  // Id parsing for the CLI and fixtures; throws UnknownNode.
  static CurveLabel from_id(std::string_view id);

  friend auto operator<=>(const CurveLabel&, const CurveLabel&) = default;
};

// Where E_0 meets the rest of the configuration. Arm positions are counted
// from the outer end; an empty slot means E_0 misses that arm.
struct AttachmentTable {
  std::array<std::optional<int>, 3> arm;
  std::optional<int> f_target;
  std::string provenance;
  friend bool operator==(const AttachmentTable& a, const AttachmentTable& b) {
    return a.arm == b.arm && a.f_target == b.f_target;
  }
};

struct ConfigurationInput {
  std::array<DolgachevPair, 3> alpha_beta;
  long a = 2;
  CaseTag tag = CaseTag::Quadrilateral_other;
  AttachmentTable attachments;
};

class CurveConfiguration {
public:
  CurveConfiguration() = default;
  explicit CurveConfiguration(CaseTag tag) : tag_(tag) {}

  CaseTag tag() const { return tag_; }
  const std::vector<CurveLabel>& nodes() const { return nodes_; }
  // Unordered pairs (lower index first) with intersection number.
  const std::map<std::pair<std::size_t, std::size_t>, int>& edges() const { return edges_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t edge_count() const;

  std::size_t add_node(const CurveLabel& label);
  void add_edge(const CurveLabel& a, const CurveLabel& b, int multiplicity = 1);
  bool contains(const CurveLabel& label) const;
  // Throws UnknownNode.
  std::size_t index_of(const CurveLabel& label) const;
  int intersection(std::size_t a, std::size_t b) const;

  void mark_unused(const CurveLabel& label);
  bool is_unused(const CurveLabel& label) const;

  // -2 on the diagonal, intersection numbers off it.
  IntMatrix intersection_matrix() const;

private:
  CaseTag tag_ = CaseTag::Quadrilateral_other;
  std::vector<CurveLabel> nodes_;
  std::map<CurveLabel, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, int> edges_;
  std::vector<CurveLabel> unused_;
};

// Throws MissingAttachment when the table lacks an entry the case needs.
CurveConfiguration build_configuration(const ConfigurationInput& in);
// The arms together with E_inf form a tree with exactly three branches at E_inf.
bool validate_tree(const CurveConfiguration& conf);
bool is_connected(const CurveConfiguration& conf);
std::string dual_graph_dot(const CurveConfiguration& conf, const std::string& name = "X");

}  // namespace bh
