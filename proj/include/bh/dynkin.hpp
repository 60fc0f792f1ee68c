#pragma once

// Rule-built Coxeter-Dynkin diagrams: the T-shaped graph T(alpha_1, alpha_2, alpha_3)
// extended by a chain of a bullets.
//
// Both central vertices of the T-graph meet every arm end and are joined to each
// other by a doubled dashed edge, matching the pairings of O_{E_inf}(-1), O_{E_inf}
// and the arm classes.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bh/exactalg.hpp"
#include "bh/weights.hpp"

namespace bh {

struct DynkinDiagram {
  std::vector<std::string> labels;  // E1_1 ..., Cl, Cu, B1 ...
  IntMatrix gram;
  std::vector<std::string> captions;  // optional display text per vertex

  std::size_t size() const { return labels.size(); }
};

DynkinDiagram t_graph(const std::array<long, 3>& alpha);

// How "the (alpha - beta -+ 1)-th vertex" is read: offset and end of the arm it counts from.
enum class AttachmentReading { OutsidePlus1, OutsideMinus1, InsidePlus1, InsideMinus1 };
std::string_view to_string(AttachmentReading r);
AttachmentReading attachment_reading_from_string(std::string_view s);
const std::array<AttachmentReading, 4>& all_readings();

// Position counted from the outer end (1 = outermost), nothing when beta = alpha - 1;
// throws InvalidRange if the reading falls off the arm.
std::optional<int> arm_position(AttachmentReading reading, long alpha, long beta);

struct ConventionKey {
  long a = 2;
  bool r1 = false;
  friend auto operator<=>(const ConventionKey&, const ConventionKey&) = default;
};

struct ConventionEntry {
  AttachmentReading reading = AttachmentReading::OutsideMinus1;
  int carrier = 2;          // bullet joined to the arms
  int sign_up = 1;          // upper central - bullet 1
  std::vector<int> chain;   // bullet l - bullet l+1, l = 1..a-1
  int sign_arm = 1;         // carrier - arm vertex
  std::string provenance;   // literal-rule | worked-example | calibrated
  friend bool operator==(const ConventionEntry& x, const ConventionEntry& y) {
    return x.reading == y.reading && x.carrier == y.carrier && x.sign_up == y.sign_up && x.chain == y.chain &&
           x.sign_arm == y.sign_arm;
  }
};

using ConventionTable = std::map<ConventionKey, ConventionEntry>;

// The table committed after calibration.
const ConventionTable& committed_conventions();

// Throws MissingConvention if the table has no entry for (a, r1).
DynkinDiagram extend(const DynkinDiagram& t, const std::array<DolgachevPair, 3>& alpha_beta, long a, bool r1,
                     const ConventionTable& conv);
DynkinDiagram rule_diagram(const std::array<DolgachevPair, 3>& alpha_beta, long a, bool r1,
                           const ConventionTable& conv = committed_conventions());

// Vertices G1..Gn for a Gram matrix, captioned with the given names.
DynkinDiagram diagram_from_gram(const IntMatrix& g, std::vector<std::string> captions = {});
bool is_connected(const DynkinDiagram& d);
// Negative entries are dashed; |<e_i,e_j>| parallel edges.
std::string diagram_dot(const DynkinDiagram& d, const std::string& name = "D");

struct CalibrationRow {
  std::string name;
  std::array<DolgachevPair, 3> alpha_beta;
  long a = 2;
  bool r1 = false;
  IntMatrix k_gram;                  // Gram matrix of the K-lattice generator list
  CyclotomicFactorization monodromy; // oracle
};

struct CalibrationOutcome {
  ConventionTable table;
  std::vector<std::string> log;  // one line per case
};

// Phase 1 searches signs and readings with the literal carrier bullet; phase 2
// unlocks the carrier. Throws CalibrationFailed with a per-row report if a case
// admits no variant passing all its rows.
CalibrationOutcome calibrate(const std::vector<CalibrationRow>& rows);

}  // namespace bh
