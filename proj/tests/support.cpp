#include "support.hpp"

#include "modtrace/cli.hpp"
#include "modtrace/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace modtrace::testing {
namespace {

void add_group_instances(std::vector<Instance>& out, const std::string& name, const GroupTable& group,
                         const std::vector<DimChar>& chars) {
  const FusionRing ring = group_ring(group);
  const auto subs = subgroups(group);
  std::vector<std::pair<std::string, NimRep>> modules;
  for (std::size_t h = 0; h < subs.size(); ++h)
    modules.emplace_back("H" + std::to_string(h), vect_g_module(group, subs[h]));
  for (std::size_t h = 0; h + 1 < subs.size(); ++h)
    modules.emplace_back("H" + std::to_string(h) + "+H" + std::to_string(h + 1),
                         direct_sum(vect_g_module(group, subs[h]), vect_g_module(group, subs[h + 1])));
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (const auto& [mname, rep] : modules)
      out.push_back({name + "/chi" + std::to_string(c) + "/" + mname, ring, chars[c], rep, is_indecomposable(rep)});
}

}  // namespace

std::vector<DimChar> s3_characters() {
  const auto group = symmetric_group_3();
  const auto ring = group_ring(group);
  return {make_char(ring, {1, 1, 1, 1, 1, 1}), make_char(ring, {1, -1, -1, 1, 1, -1})};
}

FusionRing broken_ising() {
  auto t = builtin("ising").ring.tensor();
  t[1][1][1] = 1;
  return FusionRing({"1", "eps", "sigma"}, 0, {0, 1, 2}, t);
}

std::vector<Instance> generated_instances() {
  std::vector<Instance> out;
  for (const auto& name : {"fibonacci", "ising", "rep_s3"}) {
    const auto inst = builtin(name);
    const auto reg = regular_module(inst.ring);
    for (std::size_t c = 0; c < inst.characters.size(); ++c) {
      out.push_back({inst.name + "/chi" + std::to_string(c) + "/regular", inst.ring, inst.characters[c], reg, true});
      out.push_back({inst.name + "/chi" + std::to_string(c) + "/regular+regular", inst.ring, inst.characters[c],
                     direct_sum(reg, reg), false});
    }
  }
  for (const auto& [name, group] : abelian_groups_up_to(12)) add_group_instances(out, name, group, group_characters(group));
  add_group_instances(out, "S3", symmetric_group_3(), s3_characters());
  return out;
}

NimRep permute_module(const NimRep& rep, const std::vector<int>& perm) {
  NimRep out = rep;
  for (std::size_t u = 0; u < rep.M.size(); ++u)
    for (int j = 0; j < rep.module_rank; ++j)
      for (int i = 0; i < rep.module_rank; ++i) out.M[u](perm[j], perm[i]) = rep.M[u](j, i);
  return out;
}

Rows to_rows(const ComplexMatrix& m) {
  Rows rows(static_cast<std::size_t>(m.rows()), std::vector<Complex>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

std::vector<std::vector<Complex>> null_space(Rows A, double tol) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (std::abs(A[i][c]) > std::abs(A[best][c])) best = i;
    if (std::abs(A[best][c]) <= tol) continue;
    std::swap(A[r], A[best]);
    const Complex p = A[r][c];
    for (auto& x : A[r]) x /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Complex f = A[i][c];
      if (f == Complex(0.0)) continue;
      for (std::size_t j = 0; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Complex>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Complex> v(cols, 0.0);
    v[free] = 1.0;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -A[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool nowhere_zero_eigenvector_exists(const Rows& Q, double lambda, double tol) {
  Rows A = Q;
  for (std::size_t i = 0; i < A.size(); ++i) A[i][i] -= lambda;
  const auto basis = null_space(A, tol);
  if (basis.empty()) return false;
  // A generic combination avoids zeros unless some coordinate vanishes on the whole space.
  for (std::size_t i = 0; i < Q.size(); ++i) {
    bool some_nonzero = false;
    for (const auto& b : basis) some_nonzero = some_nonzero || std::abs(b[i]) > tol;
    if (!some_nonzero) return false;
  }
  return true;
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;
  for (const auto& name : builtin_suite()) {
    const auto inst = builtin(name);
    std::string stem = name;
    std::replace(stem.begin(), stem.end(), ':', '_');
    const std::string last = std::to_string(inst.ring.rank() - 1);
    cases.push_back({stem + "_builtin", name, {"--json", "builtin", name}});
    cases.push_back({stem + "_validate", name, {"--json", "validate", "@ring"}});
    cases.push_back({stem + "_fp_dims", name, {"--json", "fp-dims", name}});
    cases.push_back({stem + "_characters", name, {"--json", "characters", name}});
    cases.push_back({stem + "_trace", name, {"--json", "trace", name, "--char", "0", "--module", "regular"}});
    cases.push_back({stem + "_flexible", name, {"--json", "flexible", name, "--char", "fp", "--modules", "regular"}});
    cases.push_back(
        {stem + "_frobenius", name, {"--json", "frobenius", name, "--char", "0", "--module", "regular", "--object", last}});
  }
  cases.push_back({"fibonacci_trace_galois", "fibonacci",
                   {"--json", "trace", "fibonacci", "--char", "1", "--module", "regular"}});
  for (const std::string group : {"Z:4", "Z2xZ2", "Z:6", "S3"}) {
    std::string stem = group;
    std::replace(stem.begin(), stem.end(), ':', '_');
    cases.push_back({"vectg_" + stem, "", {"--json", "vectg", "--group", group, "--subgroups", "--characters"}});
  }
  return cases;
}

std::vector<std::string> materialize_args(const GoldenCase& c, const std::filesystem::path& scratch) {
  std::vector<std::string> args = c.args;
  for (auto& a : args) {
    if (a != "@ring") continue;
    std::filesystem::create_directories(scratch);
    const auto path = scratch / (c.name + "_ring.json");
    io::write_json_file(path, io::ring_to_json(builtin(c.ring).ring));
    a = path.string();
  }
  return args;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace modtrace::testing
