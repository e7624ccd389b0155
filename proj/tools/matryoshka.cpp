// matryoshka: command-line front end for the special-forms library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 search bound exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "matryoshka.hpp"

namespace mk = matryoshka;
using nlohmann::ordered_json;

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSearchBound = 3;

struct Output {
  std::string path;
  bool zero_ten = false;

  void form(const mk::Form& f) const {
    const std::string text = mk::serialize_form(f, zero_ten);
    if (path.empty() || path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(path);
      if (!out) throw mk::Error("cannot write " + path);
      out << text;
    }
  }
};

mk::Form load(const std::string& path) {
  if (path == "-") return mk::parse_form(std::cin);
  return mk::read_form_file(path);
}

// Spec file for `construct`:
//   target_dim 8
//   target_deg 4
//   append 8
//   generator (1 2)(3 6 7 4 5 8)
//   bound 100000
struct ConstructSpec {
  int target_dim = 0;
  int target_deg = 0;
  std::vector<int> append;
  std::vector<std::string> generators;
  std::size_t bound = mk::kDefaultClosureBound;
};

ConstructSpec read_construct_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mk::ParseError("cannot open spec file " + path, 0);
  ConstructSpec s;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ss(raw);
    std::string key;
    if (!(ss >> key)) continue;
    std::string rest;
    std::getline(ss, rest);
    rest = mk::detail::trim(rest);
    if (key == "target_dim") {
      s.target_dim = mk::detail::parse_int(rest, line);
    } else if (key == "target_deg") {
      s.target_deg = mk::detail::parse_int(rest, line);
    } else if (key == "append") {
      std::istringstream vs(rest);
      std::string tok;
      while (vs >> tok) s.append.push_back(mk::detail::parse_int(tok, line));
    } else if (key == "generator") {
      s.generators.push_back(rest);
    } else if (key == "bound") {
      s.bound = static_cast<std::size_t>(mk::detail::parse_int(rest, line));
    } else {
      throw mk::ParseError("unknown key '" + key + "'", line);
    }
  }
  return s;
}

mk::Form construct(const std::string& scheme, const mk::Form& source, const std::string& spec_path) {
  if (scheme == "Z5") return mk::extend(source, mk::z5_spec());
  if (scheme == "Z6") return mk::build_psi12(source);
  if (spec_path.empty()) throw mk::Error("scheme " + scheme + " needs a spec file");
  const ConstructSpec s = read_construct_spec(spec_path);
  const int D = s.target_dim ? s.target_dim : source.dim();
  std::vector<mk::SignedPermutation> gens;
  for (const auto& g : s.generators) gens.push_back(mk::SignedPermutation::parse(D, g));
  if (scheme == "A") {
    if (D != source.dim()) throw mk::DimensionError("scheme A keeps the dimension of the seed file");
    std::vector<mk::SeedComponent> seeds;
    for (const auto& [t, c] : source.components()) seeds.push_back({t.indices(), static_cast<int>(c.get_si())});
    return mk::expand_presentation(D, seeds, gens, s.bound);
  }
  mk::EmbeddingSpec e{source.dim(), D, source.degree(), source.degree(), s.append, gens, s.bound};
  if (scheme == "B") {
    if (s.target_deg && s.target_deg != source.degree()) throw mk::DegreeError("scheme B keeps the degree");
    if (!s.append.empty()) throw mk::DegreeError("scheme B takes no appended slots");
  } else if (scheme == "C") {
    e.target_deg = s.target_deg ? s.target_deg : source.degree() + static_cast<int>(s.append.size());
  } else {
    throw mk::Error("unknown scheme '" + scheme + "'");
  }
  return mk::extend(source, e);
}

std::string describe(const mk::Form& f) {
  return "dim " + std::to_string(f.dim()) + ", degree " + std::to_string(f.degree()) + ", weight " +
         std::to_string(f.weight());
}

ordered_json claim_json(const mk::Claim& c) {
  ordered_json j;
  j["id"] = c.id;
  j["criterion"] = c.criterion;
  j["section"] = c.section;
  j["topic"] = c.topic;
  j["status"] = c.passed() ? "PASS" : "FAIL";
  j["seconds"] = c.seconds;
  j["checks"] = ordered_json::array();
  for (const auto& chk : c.checks)
    j["checks"].push_back({{"name", chk.name},
                           {"expected", chk.expected},
                           {"computed", chk.computed},
                           {"status", chk.informational ? "INFO" : (chk.passed ? "PASS" : "FAIL")}});
  return j;
}

ordered_json profile_json(const mk::ValenceProfile& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [d, n] : p) j["d" + std::to_string(d)] = n;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special p-forms: construction, symmetries and spectra"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--zero-ten", out.zero_ten, "Write index 10 as 0 in form output");

  std::string file, file2, name;
  bool json = false;

  auto* cat = app.add_subcommand("catalog", "List catalog forms or write one");
  cat->add_option("name", name, "Catalog name");
  cat->add_option("-o,--output", out.path, "Output file");

  bool orthogonal = false, commutator = false, democracy = false;
  std::size_t max_group_order = 0;
  auto* sym = app.add_subcommand("symmetries", "Symmetry census of a form");
  sym->add_option("form", file)->required();
  sym->add_flag("--orthogonal", orthogonal, "Include signed permutations");
  sym->add_flag("--commutator", commutator, "Report commutator subgroup orders");
  sym->add_flag("--democracy", democracy, "Report whether the bisymmetries act transitively");
  sym->add_option("--max-group-order", max_group_order, "Store orthogonal sets up to this size");

  int k = 0;
  std::size_t max_matrix = 0;
  bool expanded = false;
  auto* cp = app.add_subcommand("charpoly", "Characteristic polynomial of a 2k-form acting on k-forms");
  cp->add_option("form", file)->required();
  cp->add_option("--k", k, "Degree of the k-forms acted on")->required();
  cp->add_option("--max-matrix", max_matrix, "Largest matrix size allowed");
  cp->add_flag("--expanded", expanded, "Print coefficients instead of factors");

  std::string scheme, spec_path;
  auto* con = app.add_subcommand("construct", "Build a form by presentation or embedding");
  con->add_option("--scheme", scheme, "A, B, C, Z5 or Z6")->required()->check(CLI::IsMember({"A", "B", "C", "Z5", "Z6"}));
  con->add_option("form", file, "Seed or source form")->required();
  con->add_option("spec", spec_path, "Spec file (schemes A, B, C)");
  con->add_option("-o,--output", out.path, "Output file");

  int ci = 0, cj = 0;
  auto* ctr = app.add_subcommand("contract", "Contract with the plane (i, j)");
  ctr->add_option("form", file)->required();
  ctr->add_option("i", ci)->required();
  ctr->add_option("j", cj)->required();
  ctr->add_option("-o,--output", out.path, "Output file");

  bool zero_first = false;
  auto* hod = app.add_subcommand("hodge", "Hodge dual");
  hod->add_option("form", file)->required();
  hod->add_flag("--zero-first", zero_first, "Orientation with index 10 first (d >= 10)");
  hod->add_option("-o,--output", out.path, "Output file");

  auto* wed = app.add_subcommand("wedge", "Wedge product of two forms");
  wed->add_option("left", file)->required();
  wed->add_option("right", file2)->required();
  wed->add_option("-o,--output", out.path, "Output file");

  std::vector<int> subset;
  auto* res = app.add_subcommand("restrict", "Restrict to a coordinate subspace");
  res->add_option("form", file)->required();
  res->add_option("--indices", subset, "Increasing indices kept")->required();
  res->add_option("-o,--output", out.path, "Output file");

  auto* inv = app.add_subcommand("invariants", "I1, I2 and classification of a 2-form");
  inv->add_option("form", file)->required();

  auto* gr = app.add_subcommand("graph", "Vertex-space valence profile");
  gr->add_option("form", file)->required();
  gr->add_flag("--json", json);

  auto* tab = app.add_subcommand("table1", "Regenerate the table of special 2-forms in four dimensions");
  tab->add_flag("--json", json);

  std::string section = "all";
  bool verbose = false;
  auto* ver = app.add_subcommand("verify-paper", "Run the published-claim verification harness");
  ver->add_option("--section", section)->check(CLI::IsMember(mk::verification_sections()));
  ver->add_flag("--json", json);
  ver->add_flag("-v,--verbose", verbose, "Show passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cat) {
      if (name.empty()) {
        for (const auto& n : mk::catalog_names()) std::cout << n << "  " << describe(mk::catalog(n)) << "\n";
      } else {
        out.form(mk::catalog(name));
      }
    } else if (*sym) {
      const mk::Form f = load(file);
      mk::CensusOptions opts;
      opts.orthogonal = orthogonal;
      if (max_group_order) opts.max_group_order = max_group_order;
      const auto c = mk::compute_census(f, opts);
      std::cout << "form: " << describe(f) << "\n";
      std::cout << "permutation symmetries: " << c.perm_symmetries.order() << "\n";
      std::cout << "permutation antisymmetries: " << c.perm_antisymmetries.size() << "\n";
      if (orthogonal) {
        std::cout << "orthogonal symmetries: " << c.orth_symmetry_count << "\n";
        std::cout << "orthogonal antisymmetries: " << c.orth_antisymmetry_count << "\n";
      }
      std::cout << "cycle types:";
      for (const auto& [type, n] : c.perm_symmetries.cycle_type_histogram()) std::cout << "  " << n << " x " << type;
      std::cout << "\n";
      if (commutator) {
        std::cout << "permutation commutator subgroup: " << mk::commutator_subgroup(c.perm_symmetries).order() << "\n";
        if (orthogonal) {
          c.require_stored();
          std::cout << "orthogonal commutator subgroup: " << mk::commutator_subgroup(c.orth_symmetries).order() << "\n";
        }
      }
      if (democracy) {
        const auto d = mk::democracy(c);
        std::cout << "democratic: " << (d.democratic ? "yes" : "no") << "\n";
        if (d.democratic) std::cout << "achieved by: " << d.achieved_by << "\n";
      }
    } else if (*cp) {
      const mk::Form f = load(file);
      const auto M = mk::endomorphism_matrix(f, k, file, max_matrix);
      const auto p = mk::char_poly(M.matrix);
      std::optional<mk::Factorization> fac;
      if (!expanded) fac = mk::factor_with(p, mk::reference::known_factors());
      std::cout << (fac ? mk::to_string(*fac) : p.to_string()) << "\n";
    } else if (*con) {
      out.form(construct(scheme, load(file), spec_path));
    } else if (*ctr) {
      out.form(mk::contract_plane(load(file), ci, cj));
    } else if (*hod) {
      out.form(mk::hodge_star(load(file), zero_first ? mk::Orientation::zero_first : mk::Orientation::standard));
    } else if (*wed) {
      out.form(mk::wedge(load(file), load(file2)));
    } else if (*res) {
      out.form(mk::restrict_to(load(file), mk::IndexTuple(subset)));
    } else if (*inv) {
      const mk::Form f = load(file);
      std::cout << "I1: " << mk::invariant_I1(f) << "\n";
      if (f.dim() == 4) {
        std::cout << "I2: " << mk::invariant_I2(f) << "\n";
        const auto cls = mk::classify_2form_4d(f);
        std::cout << "class: " << (cls ? cls->label : std::string("unmatched")) << "\n";
      }
    } else if (*gr) {
      const mk::Form f = load(file);
      const auto g = mk::vertex_graph(f);
      const auto classes = mk::valence_profile(f);
      if (json) {
        ordered_json j;
        j["vertices"] = g.vertices.size();
        j["edges"] = g.edges.size();
        j["classes"] = ordered_json::array();
        for (const auto& pc : classes) j["classes"].push_back({{"count", pc.count}, {"profile", profile_json(pc.profile)}});
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "vertices: " << g.vertices.size() << "\nedges: " << g.edges.size() << "\n";
        for (const auto& pc : classes) std::cout << pc.count << " x " << mk::to_string(pc.profile) << "\n";
      }
    } else if (*tab) {
      if (json) {
        ordered_json j = ordered_json::array();
        for (const auto& e : mk::table1()) {
          ordered_json comps = ordered_json::object();
          for (const auto& [t, c] : e.representative.components()) comps[t.to_string()] = c.get_si();
          j.push_back({{"label", e.label},
                       {"components", comps},
                       {"I1", mk::invariant_I1(e.representative).get_si()},
                       {"I2", mk::invariant_I2(e.representative).get_si()},
                       {"democratic", mk::is_democratic(e.representative)},
                       {"published_democratic", e.democratic}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "label  e12 e13 e14 e23 e24 e34    I1   I2  computed  published\n";
        static const int pairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
        for (const auto& e : mk::table1()) {
          std::ostringstream row;
          row << e.label << std::string(5 - e.label.size(), ' ');
          for (const auto& pr : pairs) {
            const long v = e.representative.coefficient(mk::IndexTuple{pr[0], pr[1]}).get_si();
            row << "  " << (v > 0 ? " +" : v < 0 ? " -" : "  ") << (v ? "1" : "0");
          }
          const long i1 = mk::invariant_I1(e.representative).get_si(), i2 = mk::invariant_I2(e.representative).get_si();
          char buf[64];
          std::snprintf(buf, sizeof buf, "  %4ld %4ld  %-8s  %s", i1, i2, mk::is_democratic(e.representative) ? "D" : "-",
                        e.democratic ? "D" : "-");
          std::cout << row.str() << buf << "\n";
        }
      }
    } else if (*ver) {
      const auto report = mk::verify(section);
      if (json) {
        ordered_json j;
        j["section"] = section;
        j["status"] = report.passed() ? "PASS" : "FAIL";
        j["claims"] = ordered_json::array();
        for (const auto& c : report.claims) j["claims"].push_back(claim_json(c));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << mk::to_text(report, verbose);
      }
      return report.passed() ? 0 : kExitVerificationFailed;
    }
  } catch (const mk::SearchBoundError& e) {
    std::cerr << "search bound exceeded: " << e.what() << "\n";
    return kExitSearchBound;
  } catch (const mk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
