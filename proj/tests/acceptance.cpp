// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "modtrace/catalog.hpp"
#include "modtrace/cli.hpp"
#include "modtrace/frobenius.hpp"
#include "modtrace/io.hpp"
#include "modtrace/trace_solver.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <string>

using namespace modtrace;
namespace fs = std::filesystem;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double max_dist(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Outcome vectg_exhaustive() {
  const auto start = std::chrono::steady_clock::now();
  int triples = 0;
  int disagreements = 0;
  for (const auto& [name, group] : abelian_groups_up_to(12)) {
    const auto ring = group_ring(group);
    const auto table = group_character_table(group);
    for (const auto& h : subgroups(group)) {
      const auto rep = vect_g_module(group, h);
      for (const auto& kappa : table) {
        ++triples;
        const bool matched = solve_module_trace(ring, to_dim_char(group, kappa), rep).matched;
        if (matched != matched_vectg_oracle(group, h, kappa)) ++disagreements;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {disagreements == 0 && secs < 5.0, std::to_string(disagreements) + " disagreements over " +
                                                std::to_string(triples) + " triples in " + fmt(secs) + " s (< 5 s)"};
}

Outcome q_properties(const std::vector<testing::Instance>& instances) {
  int failures = 0;
  double worst_square = 0.0;
  double worst_herm = 0.0;
  for (const auto& inst : instances) {
    const auto Q = dimension_matrix(inst.ring, inst.chr, inst.rep);
    const auto r = q_property_report(Q, global_dimension(inst.chr));
    worst_square = std::max(worst_square, r.square_residual);
    worst_herm = std::max(worst_herm, r.hermitian_residual);
    if (!(r.square_residual < 1e-8 && r.hermitian_residual < 1e-10)) ++failures;
  }
  const bool enough = instances.size() >= 500;
  return {enough && failures == 0, std::to_string(instances.size()) + " instances (>= 500), " +
                                       std::to_string(failures) + " failures; max square " + fmt(worst_square) +
                                       " (< 1e-8), max hermitian " + fmt(worst_herm) + " (< 1e-10)"};
}

Outcome eigen_contracts(const std::vector<testing::Instance>& instances) {
  int matched = 0;
  int failures = 0;
  double worst = 0.0;
  for (const auto& inst : instances) {
    const auto cert = solve_module_trace(inst.ring, inst.chr, inst.rep);
    if (!cert.matched) continue;
    ++matched;
    worst = std::max({worst, cert.right_eigen_residual, cert.left_eigen_residual});
    const bool spherical = is_spherical(inst.ring, inst.chr);
    const bool near_dim = std::abs(cert.C - cert.dim_C) < 1e-7;
    const bool near_zero = std::abs(cert.C) < 1e-7;
    const bool dichotomy = spherical ? near_dim : near_zero;
    if (!(cert.right_eigen_residual < 1e-8 && cert.left_eigen_residual < 1e-8 && dichotomy)) ++failures;
  }
  return {matched > 0 && failures == 0, std::to_string(matched) + " matched instances, " + std::to_string(failures) +
                                            " failures; max eigen residual " + fmt(worst) +
                                            " (< 1e-8), C vs {dim(C), 0} within 1e-7"};
}

Outcome fp_flexibility() {
  std::vector<std::pair<FusionRing, std::vector<NimRep>>> cases;
  for (const std::string name : {"fibonacci", "ising", "rep_s3"}) {
    const auto ring = builtin(name).ring;
    cases.push_back({ring, {regular_module(ring)}});
  }
  for (int n = 1; n <= 8; ++n) {
    const auto group = cyclic_group(n);
    std::vector<NimRep> reps;
    for (const auto& h : subgroups(group)) reps.push_back(vect_g_module(group, h));
    cases.push_back({group_ring(group), reps});
  }
  int modules = 0;
  int failures = 0;
  double worst = 0.0;
  for (const auto& [ring, reps] : cases) {
    const auto chr = fp_character(ring);
    for (const auto& rep : reps) {
      ++modules;
      const auto cert = solve_module_trace(ring, chr, rep);
      if (!cert.matched) {
        ++failures;
        continue;
      }
      const auto w = fp_module_trace(ring, rep);
      const std::vector<Complex> wc(w.begin(), w.end());
      const double dist = max_dist(wc, cert.trace->d);
      worst = std::max(worst, dist);
      if (!(dist < 1e-8)) ++failures;
    }
  }
  return {failures == 0, std::to_string(modules) + " modules, " + std::to_string(failures) +
                             " failures; max |w - d_M| " + fmt(worst) + " (< 1e-8)"};
}

Outcome fibonacci_closed_form() {
  const auto ring = builtin("fibonacci").ring;
  const auto reg = regular_module(ring);
  const auto fp = solve_module_trace(ring, make_char(ring, {1.0, kPhi}), reg);
  const auto galois = solve_module_trace(ring, make_char(ring, {1.0, 1.0 - kPhi}), reg);
  if (!fp.matched || !galois.matched) return {false, "a Fibonacci instance is unmatched"};
  const double e1 = std::abs(fp.dim_C - (kPhi + 2.0));
  const double e2 = std::abs(galois.dim_C - (3.0 - kPhi));
  const double e3 = max_dist(fp.trace->d, {1.0, kPhi});
  const double e4 = max_dist(galois.trace->d, {1.0, 1.0 - kPhi});
  const double worst = std::max({e1, e2, e3, e4});
  return {worst < 1e-10, "dim(C) errors " + fmt(e1) + ", " + fmt(e2) + "; d_M errors " + fmt(e3) + ", " + fmt(e4) +
                             " (< 1e-10)"};
}

Outcome conjugation() {
  int chars = 0;
  int failures = 0;
  for (const auto& name : builtin_suite()) {
    const auto ring = builtin(name).ring;
    for (const auto& c : enumerate_characters(ring)) {
      ++chars;
      const bool involution = chars_equal(conjugate_char(conjugate_char(c)), c, 1e-10);
      const bool fixed = chars_equal(conjugate_char(c), c, 1e-10);
      if (!involution || fixed != is_spherical(ring, c)) ++failures;
    }
  }
  return {failures == 0, std::to_string(chars) + " characters, " + std::to_string(failures) +
                             " failures (involution within 1e-10, fixed point iff spherical)"};
}

Outcome frobenius_positivity(const std::vector<testing::Instance>& instances) {
  int objects = 0;
  int failures = 0;
  double min_dim = INFINITY;
  double worst = 0.0;
  for (const auto& inst : instances) {
    if (!inst.indecomposable) continue;
    const auto cert = solve_module_trace(inst.ring, inst.chr, inst.rep);
    if (!cert.matched) continue;
    for (int m = 0; m < inst.rep.module_rank; ++m) {
      ++objects;
      const auto r = frobenius_report(inst.ring, inst.chr, inst.rep, m, cert);
      const auto morita = morita_rescale_check(inst.ring, inst.chr, inst.rep, m, cert);
      // The literal identity Q[n][m] = conj(d[m]) d[n], independent of the report's own check.
      double lit = 0.0;
      for (int n = 0; n < inst.rep.module_rank; ++n)
        lit = std::max(lit, std::abs(cert.Q(n, m) - std::conj(cert.trace->d[m]) * cert.trace->d[n]));
      min_dim = std::min(min_dim, r.dim_A);
      worst = std::max({worst, morita.max_residual, lit});
      if (!(r.dim_A > 1e-9 && morita.max_residual < 1e-8 && lit < 1e-8)) ++failures;
    }
  }
  return {objects > 0 && failures == 0, std::to_string(objects) + " objects, " + std::to_string(failures) +
                                            " failures; min dim<m,m> " + fmt(min_dim) +
                                            " (> 1e-9), max Morita residual " + fmt(worst) + " (< 1e-8)"};
}

Outcome oracle_equivalence(const std::vector<testing::Instance>& instances) {
  std::vector<const testing::Instance*> pool;
  for (const auto& inst : instances)
    if (inst.indecomposable && inst.rep.module_rank <= 3) pool.push_back(&inst);
  if (pool.empty()) return {false, "no small instances"};
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int matched = 0;
  int disagreements = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const auto& inst = *pool[pick(rng)];
    std::vector<int> perm(static_cast<std::size_t>(inst.rep.module_rank));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto rep = testing::permute_module(inst.rep, perm);
    const auto cert = solve_module_trace(inst.ring, inst.chr, rep);
    const bool brute = testing::nowhere_zero_eigenvector_exists(testing::to_rows(cert.Q), cert.dim_C, 1e-7);
    matched += cert.matched ? 1 : 0;
    if (brute != cert.matched) ++disagreements;
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements over " + std::to_string(trials) +
                                  " randomized instances (" + std::to_string(matched) + " matched, pool " +
                                  std::to_string(pool.size()) + ")"};
}

Outcome cli_determinism() {
  const fs::path scratch = fs::path(MODTRACE_SCRATCH_DIR);
  int cases = 0;
  int failures = 0;
  for (const auto& c : testing::golden_cases()) {
    ++cases;
    const auto args = testing::materialize_args(c, scratch / "golden");
    const auto first = testing::run_cli(args);
    const auto second = testing::run_cli(args);
    const auto golden = fs::path(MODTRACE_GOLDEN_DIR) / (c.name + ".json");
    if (first.code != 0 || first.out != second.out || !fs::exists(golden) || first.out != testing::read_text(golden)) {
      std::printf("  golden mismatch: %s\n", c.name.c_str());
      ++failures;
    }
  }
  int roundtrips = 0;
  for (const auto& name : builtin_suite()) {
    std::string stem = name;
    std::replace(stem.begin(), stem.end(), ':', '_');
    const auto dir = scratch / ("emit_" + stem);
    ++roundtrips;
    if (testing::run_cli({"builtin", name, "--emit", dir.string()}).code != 0) {
      ++failures;
      continue;
    }
    const auto ring_doc = io::read_json_file(dir / "ring.json");
    const auto ring = io::ring_from_json(ring_doc);
    const auto char_doc = io::read_json_file(dir / "char_0.json");
    const auto mod_doc = io::read_json_file(dir / "regular.json");
    const bool same = io::ring_to_json(ring) == ring_doc &&
                      io::char_to_json(io::char_from_json(ring, char_doc), ring.fingerprint()) == char_doc &&
                      io::nimrep_to_json(io::nimrep_from_json(ring, mod_doc), ring.fingerprint()) == mod_doc;
    if (!same) ++failures;
  }
  return {failures == 0, std::to_string(cases) + " golden cases run twice, " + std::to_string(roundtrips) +
                             " emit/load round-trips, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  const auto instances = testing::generated_instances();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"vectg criterion matches kappa|_H = 1, exhaustive", vectg_exhaustive},
      {"Q^2 = dim(C) Q and Q hermitian", [&] { return q_properties(instances); }},
      {"eigenvector contracts and C dichotomy", [&] { return eigen_contracts(instances); }},
      {"FP character is flexible, Perron vector = d_M", fp_flexibility},
      {"Fibonacci closed forms", fibonacci_closed_form},
      {"conjugation involution, fixed points spherical", conjugation},
      {"Frobenius positivity and Morita rescaling", [&] { return frobenius_positivity(instances); }},
      {"rank-1 test agrees with brute-force eigenspace search", [&] { return oracle_equivalence(instances); }},
      {"CLI determinism, goldens and round-trip", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
