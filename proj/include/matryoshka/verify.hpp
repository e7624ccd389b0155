#pragma once

// Verification harness: every published claim the library can recompute,
// grouped into thirteen numbered criteria. Each criterion is one claim with
// named sub-checks; informational checks are reported but never gate.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matryoshka/construct.hpp"
#include "matryoshka/group.hpp"
#include "matryoshka/invariants.hpp"
#include "matryoshka/properties.hpp"
#include "matryoshka/reference_data.hpp"
#include "matryoshka/spectral.hpp"
#include "matryoshka/su2.hpp"
#include "matryoshka/symmetry.hpp"

namespace matryoshka {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
  bool informational = false;
};

struct Claim {
  Claim() = default;
  Claim(std::string id_, int criterion_, std::string section_, std::string topic_, double budget)
      : id(std::move(id_)), criterion(criterion_), section(std::move(section_)), topic(std::move(topic_)),
        budget_seconds(budget) {}

  std::string id;
  int criterion = 0;
  std::string section;
  std::string topic;
  double budget_seconds = 0;
  double seconds = 0;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.informational && !c.passed) return false;
    return !checks.empty();
  }

  void expect(std::string name, const std::string& expected, const std::string& computed) {
    checks.push_back({std::move(name), expected, computed, expected == computed, false});
  }
  void expect_true(std::string name, bool value, std::string detail = "") {
    checks.push_back({std::move(name), "true", detail.empty() ? (value ? "true" : "false") : detail, value, false});
  }
  void note(std::string name, const std::string& expected, const std::string& computed) {
    checks.push_back({std::move(name), expected, computed, expected == computed, true});
  }
};

struct VerificationReport {
  std::vector<Claim> claims;

  bool passed() const {
    for (const auto& c : claims)
      if (!c.passed()) return false;
    return !claims.empty();
  }
};

inline const std::vector<std::string>& verification_sections() {
  static const std::vector<std::string> s = {"all", "forms", "omega", "complex", "twelve", "table", "graphs", "properties"};
  return s;
}

namespace detail {

inline std::string str(std::size_t v) { return std::to_string(v); }
inline std::string str(int v) { return std::to_string(v); }
inline std::string str(const mpz_class& v) { return v.get_str(); }
inline std::string str(bool v) { return v ? "true" : "false"; }

inline std::string poly_text(const IntPolynomial& p) {
  if (auto f = factor_with(p, reference::known_factors())) return to_string(*f);
  return p.to_string();
}

inline IntPolynomial spectrum(const Form& f, int k) { return char_poly(endomorphism_matrix(f, k).matrix); }

inline void expect_poly(Claim& c, const std::string& name, const Form& f, int k, const std::string& reference_name) {
  const IntPolynomial p = spectrum(f, k);
  const Factorization ref = reference::factorization(reference_name);
  c.checks.push_back({name, to_string(ref), poly_text(p), verify_factorization(p, ref), false});
}

inline std::string profile_text(const std::vector<ProfileClass>& classes) {
  std::string out;
  for (const auto& pc : classes) {
    if (!out.empty()) out += " ";
    out += std::to_string(pc.count) + "x" + to_string(pc.profile);
  }
  return out;
}

inline SignedPermutation perm(int d, const std::string& text) { return SignedPermutation::parse(d, text); }

inline std::string census_pair(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

}  // namespace detail

// ---------------------------------------------------------------------------

inline Claim criterion_g2_census() {
  using namespace detail;
  Claim c{"g2-census", 1, "forms", "symmetries of the G2 3-form", 5};
  const Form psi = g2();
  const auto census = compute_census(psi);
  c.expect("permutation symmetries", "21", str(census.perm_symmetries.order()));
  c.expect("permutation antisymmetries", "0", str(census.perm_antisymmetries.size()));
  c.expect("orthogonal symmetries", "672", str(census.orth_symmetry_count));
  c.expect("orthogonal antisymmetries", "672", str(census.orth_antisymmetry_count));
  c.expect("orthogonal commutator subgroup", "168", str(commutator_subgroup(census.orth_symmetries).order()));
  c.note("orthogonal symmetries modulo -1", "672", str(census.orth_symmetry_count / 2));
  c.note("permutation commutator subgroup (generated by the 7-cycle)", "7",
         str(commutator_subgroup(census.perm_symmetries).order()));
  return c;
}

inline Claim criterion_spin7_census() {
  using namespace detail;
  Claim c{"spin7-census", 2, "forms", "symmetries of the Spin(7) 4-form", 30};
  const Form phi = spin7();
  const auto census = compute_census(phi);
  c.expect("permutation symmetries", "168", str(census.perm_symmetries.order()));
  const auto hist = census.perm_symmetries.cycle_type_histogram();
  auto count = [&](const std::string& type) { return hist.count(type) ? hist.at(type) : std::size_t{0}; };
  c.expect("class 1^1 7^1", "48", str(count("1^1 7^1")));
  c.expect("class 2^1 6^1", "56", str(count("2^1 6^1")));
  c.expect("class 1^2 3^2", "56", str(count("1^2 3^2")));
  c.expect("class 2^4", "7", str(count("2^4")));
  c.expect("identity", "1", str(count("1^8")));
  c.expect("permutation antisymmetries", "0", str(census.perm_antisymmetries.size()));
  c.expect("orthogonal symmetries", "10752", str(census.orth_symmetry_count));
  c.expect("orthogonal antisymmetries", "0", str(census.orth_antisymmetry_count));
  c.expect("orthogonal commutator subgroup", "1344", str(commutator_subgroup(census.orth_symmetries).order()));
  c.expect("permutation commutator subgroup", "56", str(commutator_subgroup(census.perm_symmetries).order()));
  c.note("orthogonal symmetries modulo -1", "10752", str(census.orth_symmetry_count / 2));
  const Group gen = Group::generated_by(8, {perm(8, "(1 3 2 8 4 5 6)"), perm(8, "(1 5 7 2 8 3 4)")});
  c.note("group generated by the two listed commutator generators", "1344", str(gen.order()));
  return c;
}

inline Claim criterion_kahler_census() {
  using namespace detail;
  Claim c{"kahler-census", 3, "forms", "symmetries of the Kahler 2-form", 5};
  for (int n : {2, 3}) {
    const Form w = kahler(n);
    std::size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
    const std::size_t orth = (std::size_t{1} << (2 * n)) * fact;
    const auto census = compute_census(w);
    const std::string tag = "n=" + std::to_string(n) + " ";
    c.expect(tag + "permutation symmetries", str(fact), str(census.perm_symmetries.order()));
    c.expect(tag + "permutation antisymmetries", str(fact), str(census.perm_antisymmetries.size()));
    c.expect(tag + "orthogonal symmetries", str(orth), str(census.orth_symmetry_count));
    c.expect(tag + "orthogonal antisymmetries", str(orth), str(census.orth_antisymmetry_count));
    if (n == 2) {
      const auto brute = brute_force_census(w);
      c.expect_true("n=2 pruned census equals exhaustive search of all 384 elements",
                    brute.orth_symmetries == census.orth_symmetries &&
                        brute.orth_antisymmetries == census.orth_antisymmetries &&
                        brute.perm_symmetries == census.perm_symmetries &&
                        brute.perm_antisymmetries == census.perm_antisymmetries);
    }
  }
  return c;
}

inline Claim criterion_omega10() {
  using namespace detail;
  Claim c{"omega10-construction", 4, "omega", "the Z5 lift of the Spin(7) form", 60};
  const Form om = build_omega10();
  c.expect("omega10.weight", "50", str(om.weight()));
  c.expect_true("componentwise equal to the published sign table", om == reference::omega10_from_table());
  const Form phi = spin7();
  for (int j = 1; j <= 5; ++j) {
    const int a = 2 * j - 1, b = 2 * j;
    c.expect_true("contraction with plane (" + std::to_string(a) + "," + std::to_string(b) + ") ~ spin7",
                  orbit_equivalent(contract_plane(om, a, b), phi));
  }
  const Form t = t17();
  c.expect_true("contraction with plane (10,1) ~ t17", orbit_equivalent(contract_plane(om, 10, 1), t));
  c.note("contraction with plane (1,10) ~ t17", "true", str(orbit_equivalent(contract_plane(om, 1, 10), t)));
  c.note("contraction with plane (1,10) ~ -t17", "true", str(orbit_equivalent(contract_plane(om, 1, 10), negate(t))));
  const auto census = compute_census(om);
  c.expect("permutation symmetries/antisymmetries", "60/60",
           census_pair(census.perm_symmetries.order(), census.perm_antisymmetries.size()));
  c.expect("orthogonal symmetries/antisymmetries", "120/120",
           census_pair(census.orth_symmetry_count, census.orth_antisymmetry_count));
  c.note("orthogonal counts modulo -1", "120/120",
         census_pair(census.orth_symmetry_count / 2, census.orth_antisymmetry_count / 2));
  c.expect_true("invariant under (1 3 5 7 9)(2 4 6 8 10)", act(perm(10, "(1 3 5 7 9)(2 4 6 8 10)"), om) == om);
  c.expect_true("anti-invariant under (1 2)(10 3)(9 4)(8 5)(7 6)",
                act(perm(10, "(1 2)(10 3)(9 4)(8 5)(7 6)"), om) == negate(om));
  const auto s = plane_shift(4);
  c.expect_true("sigma^2 = rho1 rho2 in eight dimensions",
                s * s == perm(8, "(1 8)(2 7)(3 6)(4 5)") * perm(8, "(1 4)(2 3)(5 8)(6 7)"));
  return c;
}

inline Claim criterion_spectra() {
  using namespace detail;
  Claim c{"omega10-spectra", 5, "omega", "self-duality spectra of the 6-form and its dual", 120};
  const Form om = build_omega10();
  const auto M3 = endomorphism_matrix(om, 3, "omega10");
  c.expect_true("matrix on 3-forms is 120x120 antisymmetric", M3.size() == 120 && M3.matrix.is_antisymmetric());
  const IntPolynomial p3 = char_poly(M3.matrix);
  const Factorization f55 = reference::factorization("omega10 on 3-forms");
  c.checks.push_back({"char poly on 3-forms", to_string(f55), poly_text(p3), verify_factorization(p3, f55), false});
  c.expect_true("division-free route agrees on 3-forms", char_poly_berkowitz(M3.matrix) == p3);
  c.note("x^2+3 (eigenvalues +-i sqrt3) divides the 3-form polynomial", "true",
         str(p3.divisible_by(IntPolynomial({3, 0, 1}))));
  c.note("x^2+9 (eigenvalues +-3i) divides the 3-form polynomial", "true", str(p3.divisible_by(IntPolynomial({9, 0, 1}))));

  const Form dual = hodge_star(om, kHighDimOrientation);
  const auto M2 = endomorphism_matrix(dual, 2, "dual of omega10");
  c.expect_true("matrix on 2-forms is 45x45 symmetric, trace 0",
                M2.size() == 45 && M2.matrix.is_symmetric() && M2.matrix.trace() == 0);
  const IntPolynomial p2 = char_poly(M2.matrix);
  const Factorization fd = reference::factorization("dual of omega10 on 2-forms");
  c.checks.push_back({"char poly of the dual on 2-forms", to_string(fd), poly_text(p2), verify_factorization(p2, fd), false});
  c.expect_true("division-free route agrees on 2-forms", char_poly_berkowitz(M2.matrix) == p2);
  const std::size_t e1 = eigenspace_dimension(M2.matrix, IntPolynomial::linear(1), p2);
  c.expect("lambda=1 eigenspace dimension", "24", str(e1));
  c.expect("independent constraint equations", "21", str(M2.size() - e1));
  c.expect("lambda=-4 eigenspace dimension", "1", str(eigenspace_dimension(M2.matrix, IntPolynomial::linear(-4), p2)));
  std::size_t total = 0;
  for (const auto& [q, m] : fd) total += eigenspace_dimension(M2.matrix, q, p2);
  c.expect("sum of eigenspace dimensions", "45", str(total));
  c.note("standard orientation negates the 2-form matrix", "true",
         str(endomorphism_matrix(hodge_star(om), 2).matrix == mpz_class(-1) * M2.matrix));

  const Form t = t17();
  const IntPolynomial pt = spectrum(t, 2);
  const Factorization f72 = reference::factorization("t17 on 2-forms");
  c.checks.push_back({"char poly of t17 on 2-forms", to_string(f72), poly_text(pt), verify_factorization(pt, f72), false});
  int zeros = 0;
  while (pt.coefficient(zeros) == 0 && zeros <= pt.degree()) ++zeros;
  c.expect("zero-eigenvalue multiplicity of t17", "4", str(zeros));
  const IntPolynomial p13 = spectrum(contract_plane(om, 1, 3), 2);
  c.note("contraction with the same-parity plane (1,3) on 2-forms", to_string(f72), poly_text(p13));
  return c;
}

inline Claim criterion_stabilizers() {
  using namespace detail;
  Claim c{"stabilizer-algebras", 6, "omega", "infinitesimal stabilizers", 10};
  c.expect("dim stabilizer of omega10 in so(10)", "16", str(stabilizer_algebra_dimension(build_omega10())));
  c.expect("dim stabilizer of spin7 in so(8)", "21", str(stabilizer_algebra_dimension(spin7())));
  c.expect("dim stabilizer of epsilon4 in so(4)", "6", str(stabilizer_algebra_dimension(epsilon(4))));
  c.note("dim stabilizer of g2 in so(7)", "14", str(stabilizer_algebra_dimension(g2())));
  return c;
}

inline Claim criterion_su2() {
  Claim c{"su2-reduction", 7, "omega", "su(2) acting orthogonally to a non-exceptional plane", 5};
  for (const auto& chk : verify_su2_reduction().checks)
    c.checks.push_back({chk.name, "true", chk.detail.empty() ? detail::str(chk.passed) : chk.detail, chk.passed, false});
  return c;
}

inline Claim criterion_complex_family() {
  using namespace detail;
  Claim c{"su4u1-family", 8, "complex", "the SU(4) x U(1) invariant 4-forms and their duals", 300};
  const std::vector<std::pair<std::string, Form>> phis = {{"phiA", phiA()}, {"phiB", phiB()}, {"phiC", phiC()}, {"phiD", phiD()}};
  const std::vector<std::string> weights = {"10", "60", "40", "40"};
  const std::vector<std::string> perm_sym = {"240", "240", "120", "120"};
  const std::vector<std::string> perm_anti = {"0", "0", "120", "120"};
  const std::vector<std::string> orth_sym = {"122880", "960", "480", "240"};
  const std::vector<std::string> orth_anti = {"0", "0", "480", "240"};
  const char* letters = "ABCD";
  for (std::size_t k = 0; k < phis.size(); ++k) {
    const auto& [name, f] = phis[k];
    c.expect(name + ".weight", weights[k], str(f.weight()));
    expect_poly(c, name + " char poly on 2-forms", f, 2, name + " on 2-forms");
    const std::string oname = std::string("omega") + letters[k];
    expect_poly(c, oname + " char poly on 3-forms", hodge_star(f, kHighDimOrientation), 3, oname + " on 3-forms");
    const auto census = compute_census(f);
    c.expect(name + " permutation symmetries", perm_sym[k], str(census.perm_symmetries.order()));
    c.expect(name + " permutation commutator subgroup", "60", str(commutator_subgroup(census.perm_symmetries).order()));
    c.expect(name + " permutation antisymmetries", perm_anti[k], str(census.perm_antisymmetries.size()));
    c.expect(name + " orthogonal symmetries", orth_sym[k], str(census.orth_symmetry_count));
    c.expect(name + " orthogonal antisymmetries", orth_anti[k], str(census.orth_antisymmetry_count));
    c.note(name + " orthogonal counts modulo -1", orth_sym[k] + "/" + orth_anti[k],
           census_pair(census.orth_symmetry_count / 2, census.orth_antisymmetry_count / 2));
  }
  const Form om = build_omega10();
  c.expect_true("dual of omega10 = -phiA - phiC", hodge_star(om, kHighDimOrientation) == negate(phiA()) - phiC());
  c.note("standard orientation gives dual of omega10 = phiA + phiC", "true", str(hodge_star(om) == phiA() + phiC()));
  const Form omA = omega_dual(ComplexPattern::A);
  const Form target = su4u1_8d();
  for (int j = 1; j <= 5; ++j)
    c.expect_true("omegaA contracted with plane (" + std::to_string(2 * j - 1) + "," + std::to_string(2 * j) + ") ~ su4u1_8d",
                  orbit_equivalent(contract_plane(omA, 2 * j - 1, 2 * j), target));
  return c;
}

inline Claim criterion_psi12() {
  using namespace detail;
  Claim c{"psi12", 9, "twelve", "Z6 lifts to 8-forms in twelve dimensions", 60};
  for (const char* v : {"A", "B"}) {
    const std::string name = std::string("psi12") + v;
    const Form source = omega_dual(*v == 'A' ? ComplexPattern::A : ComplexPattern::B);
    Form psi(12, 8);
    bool ok = true;
    std::string err;
    try {
      psi = build_psi12(source);
    } catch (const IncompatibleEmbeddingError& e) {
      ok = false;
      err = e.what();
    }
    c.expect_true(name + " builds without sign conflicts", ok, ok ? "true" : err);
    if (!ok) continue;
    c.expect_true(name + " contracted with (11,12) recovers its source", contract_trailing(psi, {11, 12}) == source);
    expect_poly(c, "dual of " + name + " char poly on 2-forms", hodge_star(psi, kHighDimOrientation), 2,
                "dual of " + name + " on 2-forms");
    c.note(name + ".weight", str(psi.weight()), str(psi.weight()));
  }
  return c;
}

inline Claim criterion_table1() {
  using namespace detail;
  Claim c{"table1", 10, "table", "special 2-forms in four dimensions", 5};
  std::mt19937_64 rng(kPropertySeed);
  bool distinct = true;
  const auto& rows = table1();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      distinct = distinct && !(rows[i].I1 == rows[j].I1 && rows[i].I2 == rows[j].I2);
  c.expect_true("19 invariant pairs pairwise distinct", rows.size() == 19 && distinct);
  std::size_t orth_agree = 0;
  for (const auto& e : rows) {
    const Form& f = e.representative;
    c.expect(e.label + " (I1, I2)", "(" + str(e.I1) + ", " + str(e.I2) + ")",
             "(" + str(invariant_I1(f)) + ", " + str(invariant_I2(f)) + ")");
    const auto census = compute_census(f);
    c.expect(e.label + " democratic", str(e.democratic), str(is_democratic(census)));
    orth_agree += is_orthogonally_democratic(census) == e.democratic;
    bool back = true;
    for (int s = 0; s < 20; ++s) {
      SignedPermutation g = SignedPermutation::random(4, rng);
      while (!g.in_SO()) g = SignedPermutation::random(4, rng);
      const auto cls = classify_2form_4d(act(g, f));
      back = back && cls && cls->label == e.label;
    }
    c.expect_true(e.label + " random SO(4,Z) images classify back", back);
  }
  c.note("rows whose flag matches orthogonal-bisymmetry transitivity", "19", str(orth_agree));
  c.expect_true("zero form is unmatched", !classify_2form_4d(Form(4, 2)));
  return c;
}

inline Claim criterion_graphs() {
  using namespace detail;
  Claim c{"graph-profiles", 11, "graphs", "vertex-space graph profiles", 5};
  c.expect("spin7 profile", "14x{d1:0, d2:12, d3:0, d4:1}", profile_text(valence_profile(spin7())));
  c.expect("omega10 profile", "40x{d1:4, d2:24, d3:16, d4:5, d5:0, d6:0} 10x{d1:0, d2:30, d3:16, d4:3, d5:0, d6:0}",
           profile_text(valence_profile(build_omega10())));
  c.expect("phiB profile", "60x{d1:6, d2:27, d3:30, d4:6}", profile_text(valence_profile(phiB())));
  c.expect("phiC profile", "40x{d1:4, d2:18, d3:12, d4:5}", profile_text(valence_profile(phiC())));
  c.note("phiD profile", "40x{d1:4, d2:18, d3:12, d4:5}", profile_text(valence_profile(phiD())));
  const std::vector<std::pair<std::string, Form>> counts = {{"g2", g2()},     {"spin7", spin7()}, {"omega10", build_omega10()},
                                                            {"phiA", phiA()}, {"phiB", phiB()},   {"phiC", phiC()},
                                                            {"phiD", phiD()}};
  const std::vector<std::string> expected = {"7", "14", "50", "10", "60", "40", "40"};
  for (std::size_t k = 0; k < counts.size(); ++k)
    c.expect(counts[k].first + " vertex count", expected[k], str(vertex_graph(counts[k].second).vertices.size()));
  return c;
}

inline Claim criterion_presentations() {
  using namespace detail;
  Claim c{"presentations", 12, "forms", "presentations and matryoshka embeddings", 10};
  const Form psi = g2(), phi = spin7(), w3 = kahler(3);
  const auto h7 = perm(7, "(1 2 5 4 6 7 3)");

  for (int n : {2, 3}) {
    const Form w = expand_presentation(2 * n, {{{1, 2}, 1}}, {plane_shift(n)});
    c.expect_true("P[1;1](omega), n=" + std::to_string(n), w == kahler(n));
    c.expect_true("epsilon2 lifted by the plane shift gives omega, n=" + std::to_string(n),
                  extend(epsilon(2), {2, 2 * n, 2, 2, {}, {plane_shift(n)}}) == kahler(n));
  }
  c.expect_true("H3 is the commutator subgroup of the Kahler symmetries, n=3",
                commutator_subgroup(compute_census(w3).perm_symmetries) == Group::generated_by(6, {plane_shift(3)}));
  c.expect_true("P[1;1](psi)", expand_presentation(7, {{{1, 2, 7}, 1}}, {h7}) == psi);
  std::vector<SeedComponent> seeds;
  for (std::vector<int> s : {std::vector<int>{1, 2, 7}, {1, 3, 6}, {2, 4, 6}})
    seeds.push_back({s, static_cast<int>(psi.value(s).get_si())});
  c.expect_true("P[3;1](psi)", expand_presentation(7, seeds, {perm(7, "(1 3 5)(2 4 6)")}) == psi);
  c.expect_true("dual of psi from epsilon4 and H7", extend(epsilon(4), {4, 7, 4, 4, {}, {h7}}) == hodge_star(psi));

  const std::vector<std::string> minimal = {"(1 2 5 4 6 7 3)", "(2 6 5)(3 4 7)", "(1 3 6)(4 7 5)"};
  for (const auto& g : minimal) {
    std::string computed;
    bool ok = false;
    try {
      const Form lifted = extend(w3, {6, 7, 2, 3, {7}, {perm(7, g)}});
      ok = orbit_equivalent(lifted, psi);
      computed = "weight " + str(lifted.weight()) + (ok ? ", equivalent" : ", not equivalent");
    } catch (const IncompatibleEmbeddingError& e) {
      computed = e.what();
    }
    c.checks.push_back({"omega lifted with H = <" + g + "> ~ psi", "equivalent to psi", computed, ok, false});
  }
  c.expect_true("epsilon2 lifted with H7 (slot 7) gives psi", extend(epsilon(2), {2, 7, 2, 3, {7}, {h7}}) == psi);

  const std::vector<SignedPermutation> h12 = {perm(8, "(1 2)(3 4)(5 6)(7 8)"), perm(8, "(2 3 4)(5 8 7)")};
  const Form lift12 = extend(epsilon(4), {4, 8, 4, 4, {}, h12});
  c.checks.push_back({"epsilon4 lifted with H12 gives spin7", "weight 14, equal to spin7",
                      "weight " + str(lift12.weight()) + (lift12 == phi ? ", equal" : ", not equal"), lift12 == phi, false});
  const Group g168 = Group::generated_by(8, {perm(8, "(1 2 5 4 6 7 3)"), perm(8, "(3 5 7)(4 6 8)")});
  c.note("H12 equals the stabilizer of the 1234 component in G168", "true",
         str(g168.filter([](const SignedPermutation& g) {
                   std::uint64_t m = 0;
                   for (int i = 1; i <= 4; ++i) m |= std::uint64_t{1} << (g.image(i) - 1);
                   return m == 0xF;
                 }) == Group::generated_by(8, h12)));
  c.note("epsilon4 lifted with G168 gives spin7", "true",
         str(extend(epsilon(4), {4, 8, 4, 4, {}, {perm(8, "(1 2 5 4 6 7 3)"), perm(8, "(3 5 7)(4 6 8)")}}) == phi));

  c.expect_true("psi lifted with H6 = <(1 2)(3 6 7 4 5 8)> gives spin7",
                orbit_equivalent(extend(psi, {7, 8, 3, 4, {8}, {perm(8, "(1 2)(3 6 7 4 5 8)")}}), phi));
  c.expect_true("psi lifted with the three 2^4 involutions gives spin7",
                orbit_equivalent(extend(psi, {7, 8, 3, 4, {8},
                                              {perm(8, "(1 2)(3 4)(5 6)(7 8)"), perm(8, "(1 3)(2 4)(5 7)(6 8)"),
                                               perm(8, "(1 5)(2 6)(3 7)(4 8)")}}),
                                 phi));
  c.expect_true("phi_ijk8 = psi_ijk", contract_trailing(phi, {8}) == psi);
  c.expect_true("phi_ijkl = (1/6) eps_ijklmnp psi_mnp", restrict_to(phi, iota_tuple(7)) == hodge_star(psi));
  c.expect_true("epsilon2 lifted with H21 (slots 7, 8) gives spin7",
                extend(epsilon(2), {2, 8, 2, 4, {7, 8}, {perm(8, "(1 2 6 4 7 5 8)"), perm(8, "(2 3 4)(5 8 7)")}}) == phi);
  return c;
}

inline Claim criterion_properties() {
  Claim c{"property-suites", 13, "properties", "randomized properties, 100 cases each", 600};
  for (const auto& r : run_property_suites(100))
    c.checks.push_back({r.name, "100 cases, 0 failures",
                        std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures" +
                            (r.first_failure.empty() ? "" : " (first: " + r.first_failure + ")"),
                        r.passed() && r.cases == 100, false});
  return c;
}

inline const std::vector<std::function<Claim()>>& criterion_runners() {
  static const std::vector<std::function<Claim()>> r = {
      criterion_g2_census,  criterion_spin7_census, criterion_kahler_census, criterion_omega10,
      criterion_spectra,    criterion_stabilizers,  criterion_su2,           criterion_complex_family,
      criterion_psi12,      criterion_table1,       criterion_graphs,        criterion_presentations,
      criterion_properties,
  };
  return r;
}

/// Runs one criterion (1..13), timing it against its budget.
inline Claim run_criterion(int n) {
  const auto& runners = criterion_runners();
  if (n < 1 || n > static_cast<int>(runners.size())) throw Error("no criterion " + std::to_string(n));
  const auto t0 = std::chrono::steady_clock::now();
  Claim c;
  try {
    c = runners[n - 1]();
  } catch (const std::exception& e) {
    c.id = "criterion-" + std::to_string(n);
    c.criterion = n;
    c.checks.push_back({"completed without error", "no exception", e.what(), false, false});
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.budget_seconds > 0) {
    std::ostringstream s;
    s.precision(3);
    s << c.seconds << " s";
    c.checks.push_back({"runtime", "< " + std::to_string(static_cast<int>(c.budget_seconds)) + " s", s.str(),
                        c.seconds < c.budget_seconds, false});
  }
  return c;
}

inline VerificationReport verify(const std::string& section = "all") {
  bool known = false;
  for (const auto& s : verification_sections()) known = known || s == section;
  if (!known) throw Error("unknown section '" + section + "'");
  VerificationReport report;
  for (int n = 1; n <= static_cast<int>(criterion_runners().size()); ++n) {
    static const char* sections[] = {"forms", "forms", "forms", "omega", "omega", "omega", "omega",
                                     "complex", "twelve", "table", "graphs", "forms", "properties"};
    if (section != "all" && section != sections[n - 1]) continue;
    report.claims.push_back(run_criterion(n));
  }
  return report;
}

inline std::string to_text(const Claim& c, bool verbose = false) {
  std::ostringstream out;
  out << (c.passed() ? "PASS" : "FAIL") << "  criterion " << (c.criterion < 10 ? " " : "") << c.criterion << "  " << c.id
      << "  (" << c.topic << ")\n";
  for (const auto& chk : c.checks) {
    if (!verbose && chk.passed && !chk.informational) continue;
    out << "      " << (chk.informational ? "info" : (chk.passed ? "ok  " : "FAIL")) << "  " << chk.name << ": expected "
        << chk.expected << ", computed " << chk.computed << "\n";
  }
  return out.str();
}

inline std::string to_text(const VerificationReport& r, bool verbose = false) {
  std::string out;
  std::size_t pass = 0;
  for (const auto& c : r.claims) {
    out += to_text(c, verbose);
    pass += c.passed();
  }
  out += std::to_string(pass) + "/" + std::to_string(r.claims.size()) + " criteria passed\n";
  return out;
}

}  // namespace matryoshka
