#pragma once

#include "modtrace/catalog.hpp"
#include "modtrace/fusion_ring.hpp"
#include "modtrace/nimrep.hpp"
#include "modtrace/pivotal.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace modtrace::testing {

/// A (ring, character, module) triple with a readable label.
struct Instance {
  std::string label;
  FusionRing ring;
  DimChar chr;
  NimRep rep;
  bool indecomposable = true;
};

/// Builtin rings and abelian group rings up to order 12 (plus S3), crossed
/// with their pivotal candidates and with regular, subgroup and direct-sum
/// modules.
std::vector<Instance> generated_instances();

/// The trivial and sign characters of S3 as dimension characters.
std::vector<DimChar> s3_characters();

/// Ising with eps ⊗ eps = 1 ⊕ eps: fails associativity only.
FusionRing broken_ising();

/// Relabels the module simples by a permutation.
NimRep permute_module(const NimRep& rep, const std::vector<int>& perm);

// Independent linear algebra on plain nested vectors (no Eigen) used as an
// oracle for the solver.
using Rows = std::vector<std::vector<Complex>>;

Rows to_rows(const ComplexMatrix& m);

/// Basis of the null space of A by Gaussian elimination with partial pivoting.
std::vector<std::vector<Complex>> null_space(Rows A, double tol);

/// True iff Q x = lambda x has a solution with no zero entry.
bool nowhere_zero_eigenvector_exists(const Rows& Q, double lambda, double tol);

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

/// A CLI invocation with a frozen expected output in the golden directory.
/// The token "@ring" in args stands for a ring file written by
/// materialize_args.
struct GoldenCase {
  std::string name;
  std::string ring;
  std::vector<std::string> args;
};

/// Every verb with --json over the builtin suite plus a few groups.
std::vector<GoldenCase> golden_cases();

/// Writes the case's ring to `scratch` and substitutes "@ring".
std::vector<std::string> materialize_args(const GoldenCase& c, const std::filesystem::path& scratch);

std::string read_text(const std::filesystem::path& path);

}  // namespace modtrace::testing
