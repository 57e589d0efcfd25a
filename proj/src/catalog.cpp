#include "modtrace/catalog.hpp"

#include "modtrace/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

namespace modtrace {
namespace {

std::vector<int> closure(const GroupTable& group, std::vector<int> generators) {
  std::set<int> members(generators.begin(), generators.end());
  members.insert(group.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<int> current(members.begin(), members.end());
    for (int a : current)
      for (int b : current)
        if (members.insert(group.mul(a, b)).second) grew = true;
  }
  return {members.begin(), members.end()};
}

void check_subgroup(const GroupTable& group, const std::vector<int>& subgroup) {
  if (subgroup.empty()) throw StructuralError("subgroup must be non-empty");
  std::set<int> members;
  for (int h : subgroup) {
    if (h < 0 || h >= group.order()) throw StructuralError("subgroup element out of range");
    members.insert(h);
  }
  if (!members.contains(group.identity())) throw StructuralError("subset does not contain the identity");
  for (int a : members)
    for (int b : members)
      if (!members.contains(group.mul(a, b))) throw StructuralError("subset is not closed under multiplication");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

FusionRing make_ring(std::vector<std::string> labels, std::vector<int> dual,
                     const std::function<std::int64_t(int, int, int)>& rule) {
  const int n = static_cast<int>(labels.size());
  FusionRing::Tensor t(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t[a][b][c] = rule(a, b, c);
  return FusionRing(std::move(labels), 0, std::move(dual), t);
}

int parse_positive(const std::string& text, const std::string& context) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError("bad number in '" + context + "'");
  const long value = std::stol(text);
  if (value < 1 || value > 4096) throw UsageError("order out of range in '" + context + "'");
  return static_cast<int>(value);
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<int>> mul, std::vector<std::string> names)
    : mul_(std::move(mul)), names_(std::move(names)) {
  const int n = order();
  if (n < 1) throw StructuralError("group must have at least one element");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw StructuralError("multiplication table is not square");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x : row) {
      if (x < 0 || x >= n) throw StructuralError("table entry out of range");
      if (seen[x]) throw StructuralError("table row is not a permutation");
      seen[x] = true;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int a = 0; a < n; ++a) {
      if (seen[mul_[a][b]]) throw StructuralError("table column is not a permutation");
      seen[mul_[a][b]] = true;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw StructuralError("table has no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw StructuralError("multiplication is not associative");
  inverse_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == identity_) inverse_[a] = b;
  if (names_.empty())
    for (int a = 0; a < n; ++a) names_.push_back("g" + std::to_string(a));
  if (static_cast<int>(names_.size()) != n) throw StructuralError("group element names do not match order");
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

int GroupTable::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul_[x][a]) ++k;
  return k;
}

GroupTable cyclic_group(int n) {
  if (n < 1) throw StructuralError("cyclic group order must be positive");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return GroupTable(std::move(mul), std::move(names));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int m = h.order();
  const int n = g.order() * m;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back("(" + g.names()[a / m] + "," + h.names()[a % m] + ")");
    for (int b = 0; b < n; ++b) mul[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  }
  return GroupTable(std::move(mul), std::move(names));
}

GroupTable symmetric_group_3() {
  // Permutations of {0,1,2} as images, in lexicographic order.
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const std::vector<std::string> names = {"()", "(12)", "(01)", "(012)", "(021)", "(02)"};
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> composed{};
      for (int x = 0; x < 3; ++x) composed[x] = perms[a][perms[b][x]];
      mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), composed) - perms.begin());
    }
  return GroupTable(std::move(mul), names);
}

GroupTable builtin_group(const std::string& name) {
  if (name == "S3") return symmetric_group_3();
  std::vector<int> factors;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t end = std::min(name.find('x', start), name.size());
    std::string token = name.substr(start, end - start);
    if (token.rfind("Z:", 0) == 0)
      token = token.substr(2);
    else if (token.rfind("Z", 0) == 0)
      token = token.substr(1);
    else
      throw UsageError("unknown group '" + name + "' (expected S3, Z:<n> or products like Z2xZ2)");
    factors.push_back(parse_positive(token, name));
    start = end + 1;
  }
  GroupTable g = cyclic_group(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic_group(factors[i]));
  return g;
}

std::vector<std::pair<std::string, GroupTable>> abelian_groups_up_to(int max_order) {
  // Invariant factor sequences d1 | d2 | ... with every di >= 2.
  std::vector<std::vector<int>> sequences = {{}};
  std::function<void(std::vector<int>&, int)> extend = [&](std::vector<int>& seq, int product) {
    const int last = seq.empty() ? 1 : seq.back();
    for (int next = std::max(2, last); product * next <= max_order; next += 1) {
      if (next % last != 0) continue;
      seq.push_back(next);
      sequences.push_back(seq);
      extend(seq, product * next);
      seq.pop_back();
    }
  };
  std::vector<int> seq;
  extend(seq, 1);

  std::vector<std::pair<std::string, GroupTable>> out;
  for (const auto& s : sequences) {
    if (s.empty()) {
      out.emplace_back("Z:1", cyclic_group(1));
      continue;
    }
    std::string name;
    GroupTable g = cyclic_group(s.front());
    name = "Z:" + std::to_string(s.front());
    for (std::size_t i = 1; i < s.size(); ++i) {
      g = direct_product(g, cyclic_group(s[i]));
      name += "xZ:" + std::to_string(s[i]);
    }
    out.emplace_back(name, std::move(g));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.second.order() < y.second.order(); });
  return out;
}

FusionRing group_ring(const GroupTable& group) {
  const int n = group.order();
  std::vector<int> dual(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) dual[a] = group.inverse(a);
  FusionRing::Tensor t(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b][group.mul(a, b)] = 1;
  return FusionRing(group.names(), group.identity(), std::move(dual), t);
}

Complex GroupCharacter::value(int g) const {
  const int e = exponent.at(static_cast<std::size_t>(g));
  // Quarter turns are returned exactly.
  if ((4L * e) % order == 0) {
    switch ((4L * e / order) % 4) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * e / order);
}

bool GroupCharacter::is_trivial_on(const std::vector<int>& subset) const {
  return std::all_of(subset.begin(), subset.end(), [this](int h) { return exponent.at(h) == 0; });
}

std::vector<GroupCharacter> group_character_table(const GroupTable& group) {
  if (!group.is_abelian()) throw UnsupportedError("linear character table needs an abelian group");
  const int n = group.order();
  std::vector<int> members = {group.identity()};
  std::vector<bool> in_subgroup(static_cast<std::size_t>(n), false);
  in_subgroup[group.identity()] = true;
  std::vector<std::vector<int>> partial = {std::vector<int>(static_cast<std::size_t>(n), -1)};
  partial.front()[group.identity()] = 0;

  while (static_cast<int>(members.size()) < n) {
    int g = 0;
    while (in_subgroup[g]) ++g;
    int m = 1;
    int power = g;
    while (!in_subgroup[power]) {
      power = group.mul(power, g);
      ++m;
    }
    // Every element of <H, g> is h·g^j with h in H and 0 <= j < m.
    std::vector<int> new_members;
    std::vector<std::pair<int, int>> decomposition;
    int gj = group.identity();
    for (int j = 0; j < m; ++j) {
      for (int h : members) {
        const int x = group.mul(h, gj);
        new_members.push_back(x);
        decomposition.emplace_back(h, j);
      }
      gj = group.mul(gj, g);
    }

    std::vector<std::vector<int>> extended;
    for (const auto& chr : partial) {
      const int base = chr[power];
      for (int t = 0; t < m; ++t) {
        const long numerator = static_cast<long>(base) + static_cast<long>(n) * t;
        if (numerator % m != 0) continue;
        const int x = static_cast<int>(numerator / m) % n;
        std::vector<int> next = chr;
        for (std::size_t idx = 0; idx < new_members.size(); ++idx) {
          const auto [h, j] = decomposition[idx];
          next[new_members[idx]] = static_cast<int>((chr[h] + static_cast<long>(j) * x) % n);
        }
        extended.push_back(std::move(next));
      }
    }
    partial = std::move(extended);
    members = std::move(new_members);
    for (int x : members) in_subgroup[x] = true;
  }

  std::vector<GroupCharacter> out;
  for (auto& e : partial) out.push_back(GroupCharacter{n, std::move(e)});
  if (static_cast<int>(out.size()) != n)
    throw NumericError("character extension produced " + std::to_string(out.size()) + " characters");

  // Same order as sort_characters applies to the complex values.
  auto key = [&group](const GroupCharacter& kappa) {
    std::vector<std::pair<long long, long long>> k;
    for (int g = 0; g < group.order(); ++g) {
      const Complex z = kappa.value(g);
      k.emplace_back(std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9));
    }
    return k;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&key](const GroupCharacter& a, const GroupCharacter& b) { return key(a) > key(b); });
  return out;
}

DimChar to_dim_char(const GroupTable& group, const GroupCharacter& kappa) {
  std::vector<Complex> d;
  for (int g = 0; g < group.order(); ++g) d.push_back(kappa.value(g));
  return make_char(group_ring(group), std::move(d));
}

std::vector<DimChar> group_characters(const GroupTable& group) {
  std::vector<DimChar> out;
  for (const auto& kappa : group_character_table(group)) out.push_back(to_dim_char(group, kappa));
  return out;
}

std::vector<std::vector<int>> subgroups(const GroupTable& group, int max_order) {
  if (group.order() > max_order)
    throw UnsupportedError("subgroup enumeration limited to order " + std::to_string(max_order));
  std::set<std::vector<int>> found = {closure(group, {})};
  std::vector<std::vector<int>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier)
      for (int g = 0; g < group.order(); ++g) {
        if (std::binary_search(s.begin(), s.end(), g)) continue;
        std::vector<int> gens = s;
        gens.push_back(g);
        auto bigger = closure(group, gens);
        if (found.insert(bigger).second) next.push_back(std::move(bigger));
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::vector<int>> cosets(const GroupTable& group, const std::vector<int>& subgroup) {
  check_subgroup(group, subgroup);
  const auto h = sorted_unique(subgroup);
  std::vector<int> owner(static_cast<std::size_t>(group.order()), -1);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < group.order(); ++g) {
    if (owner[g] >= 0) continue;
    std::vector<int> coset;
    for (int x : h) coset.push_back(group.mul(g, x));
    coset = sorted_unique(std::move(coset));
    for (int x : coset) owner[x] = static_cast<int>(out.size());
    out.push_back(std::move(coset));
  }
  return out;
}

NimRep vect_g_module(const GroupTable& group, const std::vector<int>& subgroup) {
  const auto cs = cosets(group, subgroup);
  const int k = static_cast<int>(cs.size());
  std::vector<int> owner(static_cast<std::size_t>(group.order()));
  for (int j = 0; j < k; ++j)
    for (int x : cs[j]) owner[x] = j;
  NimRep rep{group_ring(group).fingerprint(), k, {}};
  for (int x = 0; x < group.order(); ++x) {
    IntMatrix m = IntMatrix::Zero(k, k);
    for (int i = 0; i < k; ++i) m(owner[group.mul(x, cs[i].front())], i) = 1;
    rep.M.push_back(std::move(m));
  }
  return rep;
}

int identity_coset(const GroupTable& group, const std::vector<int>& subgroup) {
  const auto cs = cosets(group, subgroup);
  for (int j = 0; j < static_cast<int>(cs.size()); ++j)
    if (std::binary_search(cs[j].begin(), cs[j].end(), group.identity())) return j;
  return 0;
}

bool matched_vectg_oracle(const GroupTable& group, const std::vector<int>& subgroup,
                          const GroupCharacter& kappa) {
  check_subgroup(group, subgroup);
  return kappa.is_trivial_on(subgroup);
}

BuiltinInstance builtin(const std::string& name) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double root2 = std::sqrt(2.0);
  if (name == "fibonacci") {
    // tau ⊗ tau = 1 ⊕ tau
    auto ring = make_ring({"1", "tau"}, {0, 1}, [](int a, int b, int c) -> std::int64_t {
      if (a == 0) return b == c;
      if (b == 0) return a == c;
      return 1;
    });
    std::vector<DimChar> chars = {make_char(ring, {1.0, phi}), make_char(ring, {1.0, 1.0 - phi})};
    return {name, ring, chars, std::nullopt};
  }
  if (name == "ising") {
    // eps ⊗ eps = 1, eps ⊗ sigma = sigma, sigma ⊗ sigma = 1 ⊕ eps
    auto ring = make_ring({"1", "eps", "sigma"}, {0, 1, 2}, [](int a, int b, int c) -> std::int64_t {
      if (a == 0) return b == c;
      if (b == 0) return a == c;
      if (a == 1 && b == 1) return c == 0;
      if (a == 2 && b == 2) return c == 0 || c == 1;
      return c == 2;
    });
    std::vector<DimChar> chars = {make_char(ring, {1.0, 1.0, root2}), make_char(ring, {1.0, 1.0, -root2})};
    return {name, ring, chars, std::nullopt};
  }
  if (name == "rep_s3") {
    // sgn ⊗ sgn = 1, sgn ⊗ V = V, V ⊗ V = 1 ⊕ sgn ⊕ V
    auto ring = make_ring({"1", "sgn", "V"}, {0, 1, 2}, [](int a, int b, int c) -> std::int64_t {
      if (a == 0) return b == c;
      if (b == 0) return a == c;
      if (a == 1 && b == 1) return c == 0;
      if (a == 2 && b == 2) return 1;
      return c == 2;
    });
    // The third ring character (1, -1, 0) has a zero and is not a pivotal candidate.
    std::vector<DimChar> chars = {make_char(ring, {1.0, 1.0, 2.0}), make_char(ring, {1.0, 1.0, -1.0})};
    return {name, ring, chars, std::nullopt};
  }
  if (name.rfind("zn:", 0) == 0) {
    const int n = parse_positive(name.substr(3), name);
    auto group = cyclic_group(n);
    return {name, group_ring(group), group_characters(group), group};
  }
  throw UsageError("unknown builtin '" + name + "' (expected fibonacci, ising, rep_s3 or zn:<n>)");
}

std::vector<std::string> builtin_suite() {
  std::vector<std::string> names = {"fibonacci", "ising", "rep_s3"};
  for (int n = 1; n <= 8; ++n) names.push_back("zn:" + std::to_string(n));
  return names;
}

}  // namespace modtrace
