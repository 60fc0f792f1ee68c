// bh: command-line front end for the bimodal Berglund-Hubsch toolkit.
//
// Exit codes: 0 ok, 1 verification failures, 2 parse or usage error, 3 unknown fixture.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bh/error.hpp"
#include "bh/pipeline.hpp"
#include "bh/quotres.hpp"
#include "bh/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace bh;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnknownFixture = 3;

const FixtureRow& fixture_or_throw(const std::string& name) {
  return find_fixture(builtin_fixtures(), name);
}

int cmd_transpose(const std::string& text) {
  std::cout << render(transpose(parse_polynomial(text))) << "\n";
  return kExitOk;
}

int cmd_weights(const std::string& text) {
  InvertiblePolynomial f = parse_polynomial(text);
  CanonicalWeights cw = canonical_weights(f);
  ReducedWeights rw = reduce(cw);
  json out;
  out["variables"] = f.variables();
  json canonical = cw.w;
  canonical.push_back(cw.d_prime);
  json reduced = rw.q;
  reduced.push_back(rw.d);
  out["canonical"] = canonical;
  out["reduced"] = reduced;
  out["c_f"] = rw.c_f;
  if (f.n() == 3)
    out["a"] = gorenstein_parameter(cw);
  std::cout << out.dump() << "\n";
  return kExitOk;
}

std::vector<std::string> generator_names(const GeneratorList& gens) {
  std::vector<std::string> names;
  for (const auto& g : gens)
    names.push_back(g.sheaf.to_string());
  return names;
}

int cmd_diagram(const std::string& name, const std::string& source, const std::string& format) {
  const FixtureRow& row = fixture_or_throw(name);
  RowModel m = build_row_model(row);
  if (source == "curves") {
    if (format == "json") {
      std::cout << json(m.conf.intersection_matrix().to_rows()).dump() << "\n";
    } else {
      std::cout << dual_graph_dot(m.conf, row.name);
    }
    return kExitOk;
  }
  DynkinDiagram d = source == "rules" ? rule_diagram(row.alpha_beta, row.a, row.r1())
                                      : diagram_from_gram(m.k_gram, generator_names(m.gens));
  if (format == "json")
    std::cout << json(d.gram.to_rows()).dump() << "\n";
  else
    std::cout << diagram_dot(d, row.name + " (" + source + ")");
  return kExitOk;
}

int cmd_coxeter(const std::string& name, const std::string& source) {
  const FixtureRow& row = fixture_or_throw(name);
  RowModel m = build_row_model(row);
  IntMatrix g = source == "rules" ? rule_diagram(row.alpha_beta, row.a, row.r1()).gram : m.k_gram;
  CoxeterResult cr = coxeter_element(g);
  LatticeInvariants inv = lattice_invariants(g);
  json out;
  out["name"] = row.name;
  out["source"] = source;
  out["rank"] = inv.rank;
  out["char_poly"] = cr.char_poly.to_string();
  out["factorization"] = cr.factorization.notation();
  out["order"] = cr.order ? json(*cr.order) : json("infinite");
  out["monodromy"] = m.mono.factorization.notation();
  const IntPolynomial target = m.mono.factorization.expand();
  out["matches_monodromy"] = cr.char_poly == target || cr.char_poly == -target;
  out["det"] = inv.det.get_str();
  out["signature"] = {inv.positive, inv.zero, inv.negative};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

void print_lemma(const LemmaInstance& li, bool symbolic) {
  if (!symbolic) {
    for (const auto& a : li.attachments)
      std::cout << "E_" << a.component << " (" << a.branches << (a.branches == 1 ? " branch" : " branches")
                << (a.transversal ? ", transversal" : "") << ")\n";
    return;
  }
  std::cout << "image:     " << li.image.to_string() << " = 0\n";
  std::cout << "chart:     " << li.chart << "\n";
  std::cout << "transform: u^" << li.transform.monomial.first << "*v^" << li.transform.monomial.second << " * ("
            << li.transform.unit.to_string() << ")\n";
  for (const auto& a : li.attachments)
    std::cout << "meets:     E_" << a.component << " in " << a.branches << " point(s)"
              << (a.transversal ? ", transversally" : "") << "\n";
}

int cmd_tables(const std::string& format, bool conventions) {
  if (conventions) {
    json out = json::array();
    for (const auto& [key, e] : committed_conventions())
      out.push_back({{"a", key.a},
                     {"r1", key.r1},
                     {"reading", std::string(to_string(e.reading))},
                     {"carrier", e.carrier},
                     {"sign_up", e.sign_up},
                     {"chain", e.chain},
                     {"sign_arm", e.sign_arm},
                     {"provenance", e.provenance}});
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (format == "json") {
    std::cout << serialize_fixtures(builtin_fixtures());
    return kExitOk;
  }
  std::cout << "name    dual    f^T                    f                      gamma     alpha     a c_f ambient      "
               "compactifier case\n";
  for (const auto& r : builtin_fixtures()) {
    auto triple = [](const std::array<long, 3>& t) {
      return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    };
    std::string amb = "P(" + std::to_string(r.ambient[0]) + "," + std::to_string(r.ambient[1]) + "," +
                      std::to_string(r.ambient[2]) + "," + std::to_string(r.ambient[3]) + ")";
    std::printf("%-7s %-7s %-22s %-22s %-9s %-9s %ld %-3ld %-12s %-12s %s\n", r.name.c_str(), r.dual_name.c_str(),
                r.f_T.c_str(), r.f.c_str(), triple(r.gabrielov).c_str(), triple(r.dolgachev).c_str(), r.a, r.c_f,
                amb.c_str(), r.compactifier.c_str(), std::string(to_string(r.case_tag)).c_str());
  }
  return kExitOk;
}

int cmd_verify(bool all, const std::vector<std::string>& names) {
  VerificationReport rep = all ? verify_all(builtin_fixtures()) : verify_rows(builtin_fixtures(), names);
  std::cout << report_json(rep).dump(2) << "\n";
  std::cerr << report_table(rep);
  return rep.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter-Dynkin diagrams of bimodal singularities from Berglund-Hubsch transposes"};
  app.require_subcommand(1);

  std::string poly;
  auto* transpose_cmd = app.add_subcommand("transpose", "Berglund-Hubsch transpose of an invertible polynomial");
  transpose_cmd->add_option("polynomial", poly, "e.g. \"x^6*y + y^3 + z^2\"")->required();

  auto* weights_cmd = app.add_subcommand("weights", "canonical and reduced weights as JSON");
  weights_cmd->add_option("polynomial", poly)->required();

  std::string name, source = "ktheory", format = "dot";
  auto* diagram_cmd = app.add_subcommand("diagram", "Coxeter-Dynkin diagram of a fixture row");
  diagram_cmd->add_option("--name", name)->required();
  diagram_cmd->add_option("--source", source)->check(CLI::IsMember({"rules", "ktheory", "curves"}));
  diagram_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  std::string cox_source = "ktheory";
  auto* coxeter_cmd = app.add_subcommand("coxeter", "Coxeter element of a fixture row");
  coxeter_cmd->add_option("--name", name)->required();
  coxeter_cmd->add_option("--source", cox_source)->check(CLI::IsMember({"rules", "ktheory"}));

  int m = 0, k = 0;
  bool symbolic = false;
  auto* lemma_cmd = app.add_subcommand("lemma", "local resolution of cyclic quotient singularities");
  lemma_cmd->require_subcommand(1);
  auto* c2 = lemma_cmd->add_subcommand("c2", "curve x^m + y^(k-m) through a singularity of type (k, k-1)");
  c2->add_option("--m", m)->required();
  c2->add_option("--k", k)->required();
  c2->add_flag("--symbolic", symbolic);
  auto* c2d = lemma_cmd->add_subcommand("c2-double", "curve x^2 + y^(2k-2)");
  c2d->add_option("--k", k)->required();
  c2d->add_flag("--symbolic", symbolic);

  bool all = false;
  std::vector<std::string> names;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  auto* all_opt = verify_cmd->add_flag("--all", all);
  verify_cmd->add_option("--name", names)->excludes(all_opt);

  std::string tables_format = "text";
  bool conventions = false;
  auto* tables_cmd = app.add_subcommand("tables", "print the fixture tables");
  tables_cmd->add_option("--format", tables_format)->check(CLI::IsMember({"text", "json"}));
  tables_cmd->add_flag("--conventions", conventions);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*transpose_cmd)
      return cmd_transpose(poly);
    if (*weights_cmd)
      return cmd_weights(poly);
    if (*diagram_cmd)
      return cmd_diagram(name, source, format);
    if (*coxeter_cmd)
      return cmd_coxeter(name, cox_source);
    if (*c2) {
      print_lemma(lemma_single(m, k), symbolic);
      return kExitOk;
    }
    if (*c2d) {
      print_lemma(lemma_double(k), symbolic);
      return kExitOk;
    }
    if (*verify_cmd) {
      if (!all && names.empty()) {
        std::cerr << "verify: pass --all or --name\n";
        return kExitParse;
      }
      return cmd_verify(all, names);
    }
    if (*tables_cmd)
      return cmd_tables(tables_format, conventions);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == ErrorCode::UnknownFixture) {
      std::cerr << "valid names:";
      for (const auto& r : builtin_fixtures())
        std::cerr << " " << r.name;
      std::cerr << "\n";
      return kExitUnknownFixture;
    }
    return kExitParse;
  }
  return kExitParse;
}
