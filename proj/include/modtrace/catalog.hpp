#pragma once

#include "modtrace/fusion_ring.hpp"
#include "modtrace/nimrep.hpp"
#include "modtrace/pivotal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modtrace {

/// Multiplication table of a finite group; mul(a, b) is the index of a·b.
class GroupTable {
 public:
  /// Throws StructuralError unless the table is a group: every row and
  /// column a permutation, an identity exists, and mul is associative.
  explicit GroupTable(std::vector<std::vector<int>> mul, std::vector<std::string> names = {});

  int order() const noexcept { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int identity() const noexcept { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const noexcept { return mul_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool is_abelian() const;
  int element_order(int a) const;

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<std::string> names_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

GroupTable cyclic_group(int n);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
GroupTable symmetric_group_3();

/// "S3", "Z:<n>", "Z<n>", or products of cyclic factors joined by 'x'
/// ("Z2xZ2", "Z:2xZ:6"). Throws UsageError on anything else.
GroupTable builtin_group(const std::string& name);

/// One representative per isomorphism class of abelian groups of order ≤ max_order.
std::vector<std::pair<std::string, GroupTable>> abelian_groups_up_to(int max_order);

/// Fusion ring of Vect_G: N[a][b][c] = δ(a·b, c), dual = inverse.
FusionRing group_ring(const GroupTable& group);

/// A linear character of an abelian group in exact form:
/// κ(g) = exp(2πi · exponent[g] / order).
struct GroupCharacter {
  int order = 1;
  std::vector<int> exponent;

  Complex value(int g) const;
  bool is_trivial_on(const std::vector<int>& subset) const;
};

/// All |G| linear characters, built by extending along generators with
/// exact roots of unity, in the order sort_characters gives their values.
/// Throws UnsupportedError for non-abelian groups.
std::vector<GroupCharacter> group_character_table(const GroupTable& group);

/// group_character_table as dimension characters of group_ring(group).
std::vector<DimChar> group_characters(const GroupTable& group);

/// Converts an exact group character to a dimension character on the group ring.
DimChar to_dim_char(const GroupTable& group, const GroupCharacter& kappa);

inline constexpr int kDefaultSubgroupBound = 64;

/// All subgroups (sorted index sets), ordered by size then lexicographically.
/// Throws UnsupportedError above the order bound.
std::vector<std::vector<int>> subgroups(const GroupTable& group, int max_order = kDefaultSubgroupBound);

/// Left cosets gH, each sorted, ordered by their smallest element (the
/// representative). Throws StructuralError if H is not a subgroup.
std::vector<std::vector<int>> cosets(const GroupTable& group, const std::vector<int>& subgroup);

/// Module category of Vect_G from a subgroup H (untwisted): simples are the
/// cosets, x acts by x·gH = xgH. Twisting 2-cocycles do not change these
/// multiplicities and are not represented.
NimRep vect_g_module(const GroupTable& group, const std::vector<int>& subgroup);

/// Index of the coset containing the identity in the order used by vect_g_module.
int identity_coset(const GroupTable& group, const std::vector<int>& subgroup);

/// Closed-form criterion: a trace exists iff κ restricted to H is trivial.
bool matched_vectg_oracle(const GroupTable& group, const std::vector<int>& subgroup,
                          const GroupCharacter& kappa);

/// A builtin fusion ring with its pivotal candidate characters.
struct BuiltinInstance {
  std::string name;
  FusionRing ring;
  std::vector<DimChar> characters;
  std::optional<GroupTable> group;
};

/// "fibonacci", "ising", "rep_s3", "zn:<n>". Throws UsageError otherwise.
BuiltinInstance builtin(const std::string& name);

/// Names making up the builtin suite used by tests and the CLI.
std::vector<std::string> builtin_suite();

}  // namespace modtrace
