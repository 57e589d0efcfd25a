#pragma once

#include "modtrace/fusion_ring.hpp"
#include "modtrace/numeric.hpp"

#include <string>
#include <vector>

namespace modtrace {

/// Dimension character standing in for a pivotal structure: d[a] is the
/// quantum dimension of simple a. `ring_id` is the fingerprint of the ring
/// the vector belongs to.
///
/// A valid character is multiplicative over fusion, has d[unit] = 1, no zero
/// entries and d[dual(a)] = conj(d[a]). It is a necessary shadow of a pivotal
/// structure; nothing here certifies that it lifts to one.
struct DimChar {
  std::string ring_id;
  std::vector<Complex> d;

  int size() const noexcept { return static_cast<int>(d.size()); }
  Complex operator[](int a) const { return d.at(static_cast<std::size_t>(a)); }
};

DimChar make_char(const FusionRing& ring, std::vector<Complex> d);

/// Throws StructuralError on length or ring mismatch; reports every
/// violation of the four invariant families otherwise.
ValidationReport validate_dim_char(const FusionRing& ring, const DimChar& chr,
                                   double tol = kDefaultTolerance);

/// All characters of a commutative fusion ring, without the pivotal filters,
/// in descending lexicographic order of their rounded entries.
std::vector<DimChar> ring_characters(const FusionRing& ring);

/// ring_characters filtered to pivotal candidates (no zeros, duality).
/// Throws UnsupportedError for non-commutative rings and NumericError when
/// the simultaneous eigenproblem stays degenerate after all retries.
std::vector<DimChar> enumerate_characters(const FusionRing& ring, double tol = kDefaultTolerance);

/// Orders characters by their entries rounded to 1e-9, largest first.
void sort_characters(std::vector<DimChar>& chars);

/// The character of Frobenius–Perron dimensions.
DimChar fp_character(const FusionRing& ring);

/// Entrywise complex conjugate; equals d[dual(a)] on valid characters.
DimChar conjugate_char(const DimChar& chr);

bool is_spherical(const FusionRing& ring, const DimChar& chr, double tol = kDefaultTolerance);

/// dim(C) = Σ_a |d[a]|².
double global_dimension(const DimChar& chr);

/// C = Σ_a d[a]²; equals dim(C) for spherical characters and 0 otherwise.
Complex c_invariant(const DimChar& chr);

bool chars_equal(const DimChar& a, const DimChar& b, double tol = kDefaultTolerance);

}  // namespace modtrace
