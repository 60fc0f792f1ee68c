#pragma once

// Everything derived from one fixture row: parsed polynomials, weights, the
// curve configuration, the K-lattice generators and the monodromy oracle.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bh/coxeter.hpp"
#include "bh/curveconf.hpp"
#include "bh/dynkin.hpp"
#include "bh/fixtures.hpp"
#include "bh/klattice.hpp"
#include "bh/polyparse.hpp"
#include "bh/series.hpp"
#include "bh/weights.hpp"

namespace bh {

inline const std::vector<std::string> kXYZ{"x", "y", "z"};

struct RowModel {
  const FixtureRow* row = nullptr;
  InvertiblePolynomial f;
  InvertiblePolynomial f_T;
  CanonicalWeights cw_f;
  CanonicalWeights cw_fT;
  ReducedWeights rw_f;
  ReducedWeights rw_fT;
  CurveConfiguration conf;
  GeneratorList gens;
  IntMatrix k_gram;
  MonodromyData mono;
};

ConfigurationInput configuration_input(const FixtureRow& row, const AttachmentTable& table);
RowModel build_row_model(const FixtureRow& row);
CalibrationRow calibration_row(const RowModel& m);

struct AttachmentCalibration {
  AttachmentTable table;
  std::string reading;
};

// Per row: tries each arm reading and each F-chain target in a fixed order and returns the
// first one whose K-lattice Coxeter polynomial equals the monodromy of f^T.
// Throws CalibrationFailed.
AttachmentCalibration calibrate_attachments(const FixtureRow& row);

struct AttachmentReadingCalibration {
  std::optional<AttachmentReading> reading;  // first reading passing every row
  std::map<std::string, AttachmentTable> tables;  // per row under that reading
  std::vector<std::string> log;  // one line per reading
};

// Runs every reading over the whole fixture set. Rows with a split E_0 use the
// outermost curve of arm 3 whatever the reading. Throws CalibrationFailed.
AttachmentReadingCalibration calibrate_attachment_reading(const std::vector<FixtureRow>& rows);

}  // namespace bh
