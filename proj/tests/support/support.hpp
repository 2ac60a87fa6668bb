#pragma once

// Shared helpers for the test suites: seeded random elements and the
// invalid complexes used by the validation tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "facering/models.hpp"

namespace facering::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 0x5eed'f00d'2026ULL;

/// Uniform in {-2, ..., 2}, reduced into the field.
Scalar random_scalar(const Field& k, Rng& rng);
Scalar random_nonzero_scalar(const Field& k, Rng& rng);

/// Random class in H*(F) with coefficients in {-2..2}.
AlgebraElement random_coeff(const FaceComplex& c, FaceId f, Rng& rng);

/// Random E-face element: up to max_terms monomials with support exactly
/// label(E), exponents in 1..3.
RingElement random_face_element(const FaceComplex& c, FaceId e, Rng& rng, int max_terms = 3);

FaceId random_face(const FaceComplex& c, Rng& rng);

/// Random linear combination of a few random face elements.
RingElement random_member(const FaceComplex& c, Rng& rng);

/// Adds, at a single face F of positive codimension, a term whose support
/// is a proper subset of label(F). The face of that support sits strictly
/// above F and is left untouched, so the result is never in the face ring.
/// Returns false when the complex has no face of positive codimension.
bool perturb(const FaceComplex& c, RingElement& a, Rng& rng);

/// Invalid complexes, one per axiom. Each breaks the named axiom; some
/// necessarily break others too.
FaceComplex two_maxima();              // unique maximum
FaceComplex codim_label_mismatch();    // niceness
FaceComplex label_shrinks_downward();  // monotonicity
FaceComplex duplicate_facet();         // facet indexing
FaceComplex missing_component();       // unique component
FaceComplex noncommuting_square();     // restriction functoriality
FaceComplex split_intersection();      // partition

}  // namespace facering::testing
