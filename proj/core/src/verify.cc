#include "z4k/verify.h"

#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "z4k/braid.h"
#include "z4k/clifford.h"
#include "z4k/code_analysis.h"
#include "z4k/distance.h"
#include "z4k/incidence.h"
#include "z4k/kagome.h"
#include "z4k/matching.h"
#include "z4k/perturbation.h"

namespace z4k {

namespace {

std::string fmt(const char *f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void add(std::vector<CheckLine> &out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

/// Number of generator pairs whose commutation exponent is nonzero.
long noncommuting_pairs(size_t num_qudits, const std::vector<SparseWord> &words) {
  Incidence inc(num_qudits, words);
  std::map<std::pair<int, int>, int> acc;
  for (size_t q = 0; q < num_qudits; ++q) {
    auto hits = inc.hits(static_cast<int>(q));
    for (size_t i = 0; i < hits.size(); ++i)
      for (size_t j = i + 1; j < hits.size(); ++j) {
        auto key = std::minmax(hits[i].word, hits[j].word);
        int sign = hits[i].word < hits[j].word ? 1 : -1;
        acc[key] += sign * Incidence::delta(hits[i], hits[j].a, hits[j].b);
      }
  }
  long bad = 0;
  for (const auto &[k, v] : acc) bad += (v & 3) != 0;
  return bad;
}

std::string incidence_error(const KagomeLattice &lat) {
  std::map<std::pair<int, int>, int> tri_edges, hex_edges;
  for (int t = 0; t < lat.num_triangles(); ++t) {
    auto c = lat.triangle_corners(t);
    for (int k = 0; k < 3; ++k) ++tri_edges[std::minmax(c[k], c[(k + 1) % 3])];
  }
  for (int h = 0; h < lat.num_hexagons(); ++h) {
    auto c = lat.hex_corners(h);
    for (int k = 0; k < 6; ++k) ++hex_edges[std::minmax(c[k], c[(k + 1) % 6])];
  }
  for (const auto &[e, n] : tri_edges) {
    if (n != 1) return "edge in " + std::to_string(n) + " triangles";
    auto it = hex_edges.find(e);
    if (it == hex_edges.end() || it->second != 1) return "triangle edge not in exactly one hexagon";
  }
  if (hex_edges.size() != tri_edges.size()) return "hexagon edge outside every triangle";
  std::vector<int> ntri(lat.num_qudits()), nhex(lat.num_qudits());
  for (int t = 0; t < lat.num_triangles(); ++t)
    for (int q : lat.triangle_corners(t)) ++ntri[q];
  for (int h = 0; h < lat.num_hexagons(); ++h)
    for (int q : lat.hex_corners(h)) ++nhex[q];
  for (int q = 0; q < lat.num_qudits(); ++q) {
    if (ntri[q] != 2 || nhex[q] != 2) return "site " + std::to_string(q) + " has wrong plaquette count";
  }
  return {};
}

void perturbation_suite(std::vector<CheckLine> &out) {
  static const std::map<EnergyRoute, int64_t> expected = {
      {{2, 2, 2, 2, 2}, 96}, {{2, 4, 2, 2, 2}, 48}, {{2, 2, 4, 2, 2}, 48},
      {{2, 2, 2, 4, 2}, 48}, {{2, 4, 4, 2, 2}, 96}, {{2, 2, 4, 4, 2}, 96},
      {{2, 4, 4, 4, 2}, 192}, {{2, 4, 2, 4, 2}, 24}, {{2, 4, 6, 4, 2}, 72}};
  RouteCensus census = enumerate_routes();
  add(out, "orderings", census.total() == 720, fmt("%lld", static_cast<long long>(census.total())));
  add(out, "route count", census.multiplicity.size() == expected.size(),
      fmt("%zu routes", census.multiplicity.size()));
  for (const auto &[route, m] : expected) {
    auto it = census.multiplicity.find(route);
    int64_t got = it == census.multiplicity.end() ? 0 : it->second;
    add(out, "route " + route_string(route), got == m,
        fmt("%lld (expected %lld)", static_cast<long long>(got), static_cast<long long>(m)));
  }
  add(out, "prefactor q", census.q == Rational(63, 8),
      fmt("%lld/%lld", static_cast<long long>(census.q.numerator()),
          static_cast<long long>(census.q.denominator())));

  GadgetFit g = gadget_check(0.02, 0.02, 1.0);
  add(out, "gadget three-body", g.relative_error() < 0.05,
      fmt("%.6e vs %.6e (rel %.2e)", g.zzz, g.expected_zzz, g.relative_error()));
  const double tol = std::max(g.alpha, g.beta) / g.Delta;
  add(out, "gadget one-body residual", g.one_body_ratio() < tol,
      fmt("a %.2e b %.2e c %.2e (%.2e of beta)", g.z_a, g.z_b, g.z_c, g.one_body_ratio()));
  add(out, "gadget two-body residual", g.two_body_ratio() < tol,
      fmt("ab %.2e ac %.2e bc %.2e (%.2e of gamma)", g.zz_ab, g.zz_ac, g.zz_bc, g.two_body_ratio()));
}

void braiding_suite(std::vector<CheckLine> &out) {
  for (const auto &c : verify_identities()) add(out, c.name, c.passed, fmt("residual %.3e", c.residual));

  auto show = [](const std::array<int, 4> &p) { return fmt("(%d,%d,%d,%d)/8 turns", p[0], p[1], p[2], p[3]); };
  std::array<int, 4> want222{}, want122{};
  for (int g = 0; g < 4; ++g) {
    want222[g] = (g * g + 2 * g * (g + 1)) & 7;
    want122[g] = (1 - g * g) & 7;
  }
  ExchangeResult r222 = exchange_effect(ExchangeSpec::standard(2, 2, 2));
  ExchangeResult r122 = exchange_effect(ExchangeSpec::standard(1, 2, 2));
  add(out, "exchange a=b=c=2", equal_up_to_global(r222.phase, want222), show(r222.phase));
  add(out, "exchange a=1 b=c=2", r122.phase == want122, show(r122.phase));
  std::array<int, 4> ratio{};
  for (int g = 0; g < 4; ++g) ratio[g] = (2 * r122.phase[g] - 2 * g * g) & 7;
  bool gamma_sq = true;
  for (int g = 0; g < 4; ++g) gamma_sq &= ((ratio[g] - ratio[0]) & 7) == ((4 * g) & 7);
  add(out, "squared exchange vs monodromy", gamma_sq, show(ratio));

  add(out, "monodromy e1 m1", monodromy_phase(Species::e, 1, Species::m, 1) == 2);
  add(out, "monodromy r2 r3", monodromy_phase(Species::r, 2, Species::r, 3) == 0);
  add(out, "monodromy psi1 psi1", monodromy_phase(Species::psi, 1, Species::psi, 1) == 4);
  add(out, "line converts m1 to e3", cross_defect_line(anyon(Species::m, 1)) == anyon(Species::e, 3));
}

void clifford_suite(std::vector<CheckLine> &out, const VerifyOptions &opts) {
  auto group = enumerate_sl2z4();
  add(out, "|SL(2,Z4)|", group.size() == 48, std::to_string(group.size()));
  auto words = word_search();
  size_t longest = 0;
  for (const auto &[m, w] : words) longest = std::max(longest, w.size());
  add(out, "S,T words cover SL(2,Z4)", words.size() == group.size(), std::to_string(words.size()));
  add(out, "longest word <= 9", longest <= 9, std::to_string(longest));

  std::mt19937_64 rng(opts.seed);
  int ok = 0;
  size_t max_gates = 0;
  for (int s = 0; s < opts.clifford_samples; ++s) {
    const int n = 1 + s % opts.clifford_max_qudits;
    CliffordTableau target = random_tableau(n, 10 * n + 10, rng);
    GateWord w = synthesize(target);
    ok += evaluate(w, n) == target;
    max_gates = std::max(max_gates, w.size());
  }
  add(out, "random tableaux synthesize", ok == opts.clifford_samples,
      fmt("%d/%d, longest %zu gates", ok, opts.clifford_samples, max_gates));
}

void matching_suite(std::vector<CheckLine> &out, const VerifyOptions &opts) {
  std::mt19937_64 rng(opts.seed);
  int agree = 0;
  for (int t = 0; t < opts.matching_graphs; ++t) {
    const int n = 2 * (1 + static_cast<int>(rng() % (opts.matching_max_nodes / 2)));
    WeightedGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.set_weight(i, j, static_cast<int64_t>(rng() % 32));
    agree += mwpm(g).total_weight == brute_force_mwpm(g).total_weight;
  }
  add(out, "blossom equals brute force", agree == opts.matching_graphs,
      fmt("%d/%d graphs", agree, opts.matching_graphs));
}

void code_suite(std::vector<CheckLine> &out, const VerifyOptions &opts) {
  for (int L : opts.code_sizes) {
    KagomeCode code = KagomeCode::build(L);
    for (auto &c : validate_code(code)) {
      c.name = "L=" + std::to_string(L) + " " + c.name;
      out.push_back(std::move(c));
    }
  }
  for (int L : opts.defect_sizes) {
    KagomeCode code = KagomeCode::build_with_defects(L);
    const std::string tag = "defects L=" + std::to_string(L) + " ";
    for (auto &c : validate_code(code)) {
      c.name = tag + c.name;
      out.push_back(std::move(c));
    }
    int xl = code_distance(code, "XL").weight;
    int zl = code_distance(code, "ZL").weight;
    add(out, tag + "distance XL", xl == L + 2, fmt("%d (expected %d)", xl, L + 2));
    add(out, tag + "distance ZL", zl == L / 2 + 4, fmt("%d (expected %d)", zl, L / 2 + 4));
  }
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto &l : lines)
    if (!l.passed) return false;
  return !lines.empty();
}

std::string VerifyReport::text() const {
  std::ostringstream s;
  for (const auto &l : lines) {
    s << (l.passed ? "PASS " : "FAIL ") << suite << ": " << l.name;
    if (!l.detail.empty()) s << ": " << l.detail;
    s << "\n";
  }
  return s.str();
}

std::vector<CheckLine> validate_code(const KagomeCode &code) {
  std::vector<CheckLine> out;
  const int L = code.L();
  const size_t n = code.num_qudits();

  std::string err = incidence_error(code.lattice());
  add(out, "plaquette incidence", err.empty(), err);

  std::vector<SparseWord> words;
  if (code.has_defects()) {
    for (const auto &c : code.checks()) words.push_back(c.word);
    const size_t num_checks = words.size();
    for (const auto &line : code.defect_lines())
      for (size_t k = 0; k < line.qudits_on_line.size(); ++k) words.push_back(to_sparse(line.term(k, n)));
    long bad = noncommuting_pairs(n, words);
    add(out, "checks and defect terms commute", bad == 0,
        fmt("%zu checks, %zu defect terms, %ld bad pairs", num_checks, words.size() - num_checks, bad));
  } else {
    for (int h = 0; h < code.lattice().num_hexagons(); ++h) words.push_back(code.E(h));
    for (int t = 0; t < code.lattice().num_triangles(); ++t) words.push_back(code.M(t));
    long bad = noncommuting_pairs(n, words);
    add(out, "generators commute", bad == 0, fmt("%zu generators, %ld bad pairs", words.size(), bad));

    StabilizerSets sr = transform_stabilizers(code);
    PhasedPauli ps(n), pr(n);
    for (const auto &s : sr.S) ps *= s;
    for (const auto &r : sr.R) pr *= r;
    add(out, "product of S is identity", ps.is_identity_word());
    add(out, "product of R is identity", pr.is_identity_word());

    SmithForm sf = generator_smith(code, true);
    add(out, "generator rank", sf.units == 3 * L * L - 2 && sf.twos == 0,
        fmt("%d units, %d twos (expected %d)", sf.units, sf.twos, 3 * L * L - 2));
  }
  err = validate_logical_basis(code);
  add(out, "logical algebra", err.empty(), err.empty() ? fmt("%zu logicals", code.logicals().size()) : err);
  return out;
}

const std::vector<std::string> &verify_suites() {
  static const std::vector<std::string> s = {"perturbation", "braiding", "clifford", "matching", "code"};
  return s;
}

VerifyReport run_verify(const std::string &suite, const VerifyOptions &opts) {
  VerifyReport r;
  r.suite = suite;
  if (suite == "perturbation") {
    perturbation_suite(r.lines);
  } else if (suite == "braiding") {
    braiding_suite(r.lines);
  } else if (suite == "clifford") {
    clifford_suite(r.lines, opts);
  } else if (suite == "matching") {
    matching_suite(r.lines, opts);
  } else if (suite == "code") {
    code_suite(r.lines, opts);
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  }
  return r;
}

}  // namespace z4k
