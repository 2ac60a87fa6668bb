#pragma once

// Brute-force verifiers for the face ring. They work over explicitly
// enumerated coordinates with exact linear algebra and share no code path
// with the closed-form Hilbert count or the support-based decomposition.

#include <cstdint>
#include <optional>
#include <vector>

#include "facering/face_ring.hpp"

namespace facering {

using Matrix = std::vector<std::vector<Scalar>>;

/// Rank of a matrix over the field. Fraction-free (Bareiss) elimination
/// over Q, ordinary elimination over F_p.
std::size_t exact_rank(const Field& k, const Matrix& rows);

/// Some x with sum_j x_j * columns[j] == target, if one exists.
std::optional<std::vector<Scalar>> solve_linear(const Field& k, const Matrix& columns,
                                                const std::vector<Scalar>& target);

/// Dimensions via the Stanley-Reisner count: monomials in x_1..x_m whose
/// support is the label of some face. Throws NotAcyclic when some face has
/// cohomology beyond degree 0, DuplicateLabelSets when two faces share a
/// label.
std::vector<std::uint64_t> sr_hilbert(const FaceComplex& c, int max_degree);

/// A spanning face element: basis class b of H*(E) times a monomial with
/// every exponent >= 1 over label(E).
struct Generator {
  FaceId face;
  Monomial monomial;
  std::size_t basis;

  int degree(const FaceComplex& c) const {
    return c.algebra(face).degree_of(basis) + monomial.degree();
  }
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// All generators of exactly the given degree, in a fixed order.
std::vector<Generator> generators_of_degree(const FaceComplex& c, int degree);
RingElement embed(const FaceComplex& c, const Generator& g);

struct BruteHilbert {
  std::vector<std::uint64_t> dims;        // rank of the embedded generators
  std::vector<std::uint64_t> generators;  // how many were enumerated
  bool independent() const { return dims == generators; }
};

/// Enumerates every generator up to max_degree, embeds it in A, and takes
/// the exact rank degree by degree.
BruteHilbert brute_basis_hilbert(const FaceComplex& c, int max_degree);

struct Membership {
  bool member = false;
  std::vector<std::pair<Generator, Scalar>> solution;  // nonzero coefficients only
};

/// Solves for the element in the span of all generators, degree by degree.
Membership naive_membership(const FaceComplex& c, const RingElement& a);

/// Groups a membership solution into per-face parts, for comparison with
/// decompose.
FaceDecomposition to_decomposition(const FaceComplex& c, const Membership& m);

}  // namespace facering
