#include "bh/dynkin.hpp"

#include <future>
#include <sstream>

#include "bh/coxeter.hpp"
#include "bh/error.hpp"

namespace bh {

namespace {

std::string arm_label(int i, int j) {
  return "E" + std::to_string(i) + "_" + std::to_string(j);
}

std::size_t find_label(const DynkinDiagram& d, const std::string& label) {
  for (std::size_t k = 0; k < d.labels.size(); ++k)
    if (d.labels[k] == label)
      return k;
  fail(ErrorCode::UnknownNode, "diagram has no vertex " + label);
}

void set_edge(IntMatrix& g, std::size_t i, std::size_t j, long w) {
  g(i, j) = w;
  g(j, i) = w;
}

}  // namespace

DynkinDiagram t_graph(const std::array<long, 3>& alpha) {
  DynkinDiagram d;
  for (int i = 1; i <= 3; ++i) {
    if (alpha[i - 1] < 2)
      fail(ErrorCode::InvalidRange, "Dolgachev numbers must be at least 2");
    for (int j = 1; j < alpha[i - 1]; ++j)
      d.labels.push_back(arm_label(i, j));
  }
  d.labels.push_back("Cl");
  d.labels.push_back("Cu");
  const std::size_t n = d.labels.size();
  d.gram = IntMatrix(n);
  for (std::size_t k = 0; k < n; ++k)
    d.gram(k, k) = -2;
  const std::size_t lower = n - 2, upper = n - 1;
  std::size_t base = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t len = static_cast<std::size_t>(alpha[i] - 1);
    for (std::size_t j = 0; j + 1 < len; ++j)
      set_edge(d.gram, base + j, base + j + 1, 1);
    set_edge(d.gram, base + len - 1, lower, 1);
    set_edge(d.gram, base + len - 1, upper, 1);
    base += len;
  }
  set_edge(d.gram, lower, upper, -2);
  return d;
}

std::string_view to_string(AttachmentReading r) {
  switch (r) {
    case AttachmentReading::OutsidePlus1: return "alpha-beta+1 from outside";
    case AttachmentReading::OutsideMinus1: return "alpha-beta-1 from outside";
    case AttachmentReading::InsidePlus1: return "alpha-beta+1 from inside";
    case AttachmentReading::InsideMinus1: return "alpha-beta-1 from inside";
  }
  return "?";
}

AttachmentReading attachment_reading_from_string(std::string_view s) {
  for (AttachmentReading r : all_readings())
    if (to_string(r) == s)
      return r;
  fail(ErrorCode::InvalidFixture, "unknown attachment reading '" + std::string(s) + "'");
}

const std::array<AttachmentReading, 4>& all_readings() {
  static const std::array<AttachmentReading, 4> r{AttachmentReading::OutsidePlus1, AttachmentReading::OutsideMinus1,
                                                  AttachmentReading::InsidePlus1, AttachmentReading::InsideMinus1};
  return r;
}

std::optional<int> arm_position(AttachmentReading reading, long alpha, long beta) {
  if (beta == alpha - 1)
    return std::nullopt;
  long p = 0;
  switch (reading) {
    case AttachmentReading::OutsidePlus1: p = alpha - beta + 1; break;
    case AttachmentReading::OutsideMinus1: p = alpha - beta - 1; break;
    case AttachmentReading::InsidePlus1: p = alpha - (alpha - beta + 1); break;
    case AttachmentReading::InsideMinus1: p = alpha - (alpha - beta - 1); break;
  }
  if (p < 1 || p > alpha - 1)
    fail(ErrorCode::InvalidRange, "reading '" + std::string(to_string(reading)) + "' gives position " +
                                    std::to_string(p) + " on an arm of length " + std::to_string(alpha - 1));
  return static_cast<int>(p);
}

const ConventionTable& committed_conventions() {
  static const ConventionTable table = [] {
    ConventionTable t;
    ConventionEntry a2{AttachmentReading::OutsideMinus1, 2, -1, {-1}, 1,
                       "calibrated: literal carrier bullet 2, signs fixed by search"};
    t[{2, false}] = a2;
    a2.provenance = "calibrated: same entry as the a=2 rule, E_0 split does not change the rule diagram";
    t[{2, true}] = a2;
    t[{3, false}] = ConventionEntry{AttachmentReading::OutsideMinus1, 2, -1, {-1, 1}, 1,
                                    "calibrated: carrier unlocked to bullet 2 (bullet 3 pendant); "
                                    "the literal carrier bullet 3 has no passing sign choice"};
    t[{5, false}] = ConventionEntry{AttachmentReading::OutsideMinus1, 3, 1, {1, 1, 1, 1}, 1,
                                    "calibrated: literal carrier bullet 3, all edges plain"};
    return t;
  }();
  return table;
}

DynkinDiagram extend(const DynkinDiagram& t, const std::array<DolgachevPair, 3>& alpha_beta, long a, bool r1,
                     const ConventionTable& conv) {
  auto it = conv.find({a, r1});
  if (it == conv.end())
    fail(ErrorCode::MissingConvention, "no convention for a = " + std::to_string(a) + (r1 ? " (r = 1)" : ""));
  const ConventionEntry& c = it->second;
  if (c.carrier < 1 || c.carrier > a || static_cast<long>(c.chain.size()) != a - 1)
    fail(ErrorCode::MissingConvention, "malformed convention for a = " + std::to_string(a));

  DynkinDiagram d;
  d.labels = t.labels;
  const std::size_t n0 = t.size();
  for (long l = 1; l <= a; ++l)
    d.labels.push_back("B" + std::to_string(l));
  d.gram = IntMatrix(d.size());
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      d.gram(i, j) = t.gram(i, j);
  for (std::size_t k = n0; k < d.size(); ++k)
    d.gram(k, k) = -2;
  for (long l = 1; l < a; ++l)
    set_edge(d.gram, n0 + l - 1, n0 + l, c.chain[l - 1]);
  set_edge(d.gram, find_label(t, "Cu"), n0, c.sign_up);
  const std::size_t carrier = n0 + static_cast<std::size_t>(c.carrier - 1);
  for (int i = 1; i <= 3; ++i) {
    const auto [alpha, beta] = alpha_beta[i - 1];
    if (auto p = arm_position(c.reading, alpha, beta))
      set_edge(d.gram, find_label(t, arm_label(i, *p)), carrier, c.sign_arm);
  }
  return d;
}

DynkinDiagram rule_diagram(const std::array<DolgachevPair, 3>& alpha_beta, long a, bool r1,
                           const ConventionTable& conv) {
  return extend(t_graph({alpha_beta[0].alpha, alpha_beta[1].alpha, alpha_beta[2].alpha}), alpha_beta, a, r1, conv);
}

DynkinDiagram diagram_from_gram(const IntMatrix& g, std::vector<std::string> captions) {
  DynkinDiagram d;
  for (std::size_t i = 0; i < g.dim(); ++i)
    d.labels.push_back("G" + std::to_string(i + 1));
  d.gram = g;
  d.captions = std::move(captions);
  return d;
}

bool is_connected(const DynkinDiagram& d) {
  const std::size_t n = d.size();
  if (n == 0)
    return true;
  std::vector<bool> seen(n);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++count;
    for (std::size_t w = 0; w < n; ++w)
      if (!seen[w] && d.gram(v, w) != 0) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return count == n;
}

std::string diagram_dot(const DynkinDiagram& d, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t i = 0; i < d.size(); ++i)
    os << "  " << d.labels[i] << " [label=\"" << i + 1 << ": "
       << (i < d.captions.size() ? d.captions[i] : d.labels[i]) << "\"];\n";
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Integer& w = d.gram(i, j);
      if (w == 0)
        continue;
      const long count = Integer(abs(w)).get_si();
      for (long r = 0; r < count; ++r) {
        os << "  " << d.labels[i] << " -- " << d.labels[j];
        if (w < 0)
          os << " [style=dashed]";
        os << ";\n";
      }
    }
  os << "}\n";
  return os.str();
}

namespace {

struct RowOracle {
  const CalibrationRow* row;
  IntPolynomial k_char;
  IntPolynomial mono;
};

// Empty string when the variant passes the row, otherwise the reason.
std::string check_variant(const RowOracle& o, long a, bool r1, const ConventionEntry& e) {
  ConventionTable t{{{a, r1}, e}};
  DynkinDiagram d;
  try {
    d = rule_diagram(o.row->alpha_beta, a, r1, t);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::InvalidRange)
      throw;
    return "attachment off the arm";
  }
  if (d.size() != o.row->k_gram.dim())
    return "vertex count " + std::to_string(d.size());
  if (!graph_isomorphic(d.gram, o.row->k_gram))
    return "not isomorphic to the K-lattice diagram";
  IntPolynomial c = coxeter_element(d.gram).char_poly;
  if (!(c == o.k_char))
    return "Coxeter polynomial differs from the K-lattice one";
  if (!(c == o.mono || c == -o.mono))
    return "Coxeter polynomial differs from the monodromy";
  return {};
}

std::vector<ConventionEntry> variants(long a, const std::vector<int>& carriers) {
  std::vector<ConventionEntry> out;
  const int bits = static_cast<int>(a) + 1;  // sign_up, chain (a-1), sign_arm
  for (int carrier : carriers)
    for (AttachmentReading reading : all_readings())
      for (int mask = 0; mask < (1 << bits); ++mask) {
        ConventionEntry e;
        e.reading = reading;
        e.carrier = carrier;
        auto sign = [&](int b) { return (mask >> b) & 1 ? -1 : 1; };
        e.sign_up = sign(0);
        for (int l = 1; l < a; ++l)
          e.chain.push_back(sign(l));
        e.sign_arm = sign(bits - 1);
        out.push_back(e);
      }
  return out;
}

struct CaseResult {
  std::optional<ConventionEntry> entry;
  std::string log;
};

CaseResult calibrate_case(long a, bool r1, const std::vector<RowOracle>& rows) {
  const int literal = a == 2 ? 2 : 3;
  std::vector<int> unlocked;
  for (int c = 1; c <= a; ++c)
    if (c != literal)
      unlocked.push_back(c);
  std::string key = "a=" + std::to_string(a) + (r1 ? " r=1" : "");
  std::map<std::string, std::string> last_reason;
  for (int phase = 1; phase <= 2; ++phase) {
    for (ConventionEntry e : variants(a, phase == 1 ? std::vector<int>{literal} : unlocked)) {
      bool ok = true;
      for (const RowOracle& o : rows) {
        std::string why = check_variant(o, a, r1, e);
        if (!why.empty()) {
          last_reason[o.row->name] = why;
          ok = false;
          break;
        }
      }
      if (ok) {
        e.provenance = phase == 1 ? "calibrated: literal carrier" : "calibrated: carrier unlocked";
        std::ostringstream os;
        os << key << ": phase " << phase << ", carrier bullet " << e.carrier << ", " << to_string(e.reading)
           << ", " << rows.size() << " rows pass";
        return {e, os.str()};
      }
    }
  }
  std::ostringstream os;
  os << key << ": no variant passes;";
  for (const auto& [name, why] : last_reason)
    os << " " << name << ": " << why << ";";
  return {std::nullopt, os.str()};
}

}  // namespace

CalibrationOutcome calibrate(const std::vector<CalibrationRow>& rows) {
  std::map<ConventionKey, std::vector<RowOracle>> by_case;
  for (const CalibrationRow& r : rows) {
    RowOracle o{&r, coxeter_element(r.k_gram).char_poly, r.monodromy.expand()};
    by_case[{r.a, r.r1}].push_back(std::move(o));
  }
  std::vector<std::pair<ConventionKey, std::future<CaseResult>>> jobs;
  for (const auto& [key, oracles] : by_case)
    jobs.emplace_back(key, std::async(std::launch::async, calibrate_case, key.a, key.r1, std::cref(oracles)));
  CalibrationOutcome out;
  bool failed = false;
  for (auto& [key, fut] : jobs) {
    CaseResult res = fut.get();
    out.log.push_back(res.log);
    if (res.entry)
      out.table[key] = *res.entry;
    else
      failed = true;
  }
  if (failed) {
    std::string report;
    for (const auto& l : out.log)
      report += l + "\n";
    fail(ErrorCode::CalibrationFailed, report);
  }
  return out;
}

}  // namespace bh
