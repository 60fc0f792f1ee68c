#include "bh/pipeline.hpp"

#include "bh/error.hpp"

namespace bh {

ConfigurationInput configuration_input(const FixtureRow& row, const AttachmentTable& table) {
  return {row.alpha_beta, row.a, row.case_tag, table};
}

namespace {

RowModel base_model(const FixtureRow& row) {
  InvertiblePolynomial f = parse_polynomial(row.f, kXYZ);
  InvertiblePolynomial f_T = parse_polynomial(row.f_T, kXYZ);
  RowModel m{&row, f, f_T, {}, {}, {}, {}, {}, {}, {}, {}};
  m.cw_f = canonical_weights(f);
  m.cw_fT = canonical_weights(f_T);
  m.rw_f = reduce(m.cw_f);
  m.rw_fT = reduce(m.cw_fT);
  m.mono = monodromy(m.rw_fT);
  return m;
}

void attach_lattice(RowModel& m, const AttachmentTable& table) {
  m.conf = build_configuration(configuration_input(*m.row, table));
  m.gens = generator_list(m.row->a, m.row->alpha_beta, m.conf);
  m.k_gram = gram_matrix(m.gens, m.conf);
}

}  // namespace

RowModel build_row_model(const FixtureRow& row) {
  RowModel m = base_model(row);
  attach_lattice(m, row.attachment_table);
  return m;
}

CalibrationRow calibration_row(const RowModel& m) {
  return {m.row->name, m.row->alpha_beta, m.row->a, m.row->r1(), m.k_gram, m.mono.factorization};
}

namespace {

bool reproduces_monodromy(RowModel& m, const AttachmentTable& t) {
  attach_lattice(m, t);
  const IntPolynomial target = m.mono.factorization.expand();
  IntPolynomial c = coxeter_element(m.k_gram).char_poly;
  return c == target || c == -target;
}

AttachmentTable split_e0_table() {
  AttachmentTable t;
  t.arm = {std::nullopt, std::nullopt, 1};
  return t;
}

// The first F-chain target for which this reading reproduces the monodromy.
std::optional<AttachmentTable> try_reading(RowModel& m, AttachmentReading reading) {
  const FixtureRow& row = *m.row;
  AttachmentTable t;
  try {
    for (int i = 0; i < 3; ++i)
      t.arm[i] = arm_position(reading, row.alpha_beta[i].alpha, row.alpha_beta[i].beta);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidRange)
      throw;
    return std::nullopt;
  }
  std::vector<std::optional<int>> f_targets{std::nullopt};
  if (is_exceptional(row.case_tag)) {
    f_targets.clear();
    for (int l = 1; l < row.a; ++l)
      f_targets.push_back(l);
  }
  for (const auto& ft : f_targets) {
    t.f_target = ft;
    if (reproduces_monodromy(m, t))
      return t;
  }
  return std::nullopt;
}

}  // namespace

AttachmentCalibration calibrate_attachments(const FixtureRow& row) {
  RowModel m = base_model(row);
  if (row.r1()) {
    if (reproduces_monodromy(m, split_e0_table()))
      return {split_e0_table(), "outermost curve of arm 3"};
    fail(ErrorCode::CalibrationFailed, row.name + ": split E_0 on the outermost curve of arm 3 fails");
  }
  for (AttachmentReading reading : all_readings())
    if (auto t = try_reading(m, reading))
      return {*t, std::string(to_string(reading))};
  fail(ErrorCode::CalibrationFailed, row.name + ": no attachment reading reproduces the monodromy");
}

AttachmentReadingCalibration calibrate_attachment_reading(const std::vector<FixtureRow>& rows) {
  std::vector<RowModel> models;
  for (const auto& row : rows)
    models.push_back(base_model(row));
  AttachmentReadingCalibration out;
  for (AttachmentReading reading : all_readings()) {
    std::map<std::string, AttachmentTable> tables;
    std::vector<std::string> failing;
    for (RowModel& m : models) {
      if (m.row->r1()) {
        if (reproduces_monodromy(m, split_e0_table()))
          tables[m.row->name] = split_e0_table();
        else
          failing.push_back(m.row->name);
      } else if (auto t = try_reading(m, reading)) {
        tables[m.row->name] = *t;
      } else {
        failing.push_back(m.row->name);
      }
    }
    std::string line = std::string(to_string(reading)) + ": " + std::to_string(tables.size()) + "/" +
                       std::to_string(rows.size()) + " rows";
    if (!failing.empty()) {
      line += ", fails on";
      for (const auto& n : failing)
        line += " " + n;
    }
    out.log.push_back(line);
    if (failing.empty() && !out.reading) {
      out.reading = reading;
      out.tables = std::move(tables);
    }
  }
  if (!out.reading) {
    std::string report;
    for (const auto& l : out.log)
      report += "\n  " + l;
    fail(ErrorCode::CalibrationFailed, "no attachment reading passes every row:" + report);
  }
  return out;
}

}  // namespace bh
