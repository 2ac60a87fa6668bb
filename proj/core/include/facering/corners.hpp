#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facering/algebra.hpp"

namespace facering {

using FaceId = std::size_t;

/// Sorted set of facet indices in 1..m; the value of Psi on a face.
using Label = std::vector<int>;

bool is_subset(const Label& a, const Label& b);
Label label_union(const Label& a, const Label& b);
std::string label_to_string(const Label& l);

struct Face {
  std::string name;
  int codim = 0;
  Label label;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Covering relation lower < upper with nothing in between.
struct Cover {
  FaceId lower;
  FaceId upper;

  friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// Combinatorial model of a nice manifold with corners: face poset, facet
/// labels, cohomology of each face and restriction maps along covers.
///
/// Construction only rejects data that cannot be indexed (dangling ids,
/// mismatched vector sizes). Everything else is checked by
/// validate_complex, and the remaining operations assume a validated
/// complex. Composite restrictions are computed once here, along the first
/// available chain.
class FaceComplex {
 public:
  /// restrictions is keyed by cover; the map goes H*(upper) -> H*(lower).
  FaceComplex(Field field, int m, std::vector<Face> faces, std::vector<Cover> covers,
              std::vector<std::shared_ptr<const GradedAlgebra>> cohomology,
              std::map<Cover, AlgebraMap> restrictions);

  const Field& field() const { return field_; }
  int m() const { return m_; }
  std::size_t size() const { return faces_.size(); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_.at(f); }
  const Label& label(FaceId f) const { return faces_.at(f).label; }
  int codim(FaceId f) const { return faces_.at(f).codim; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::map<Cover, AlgebraMap>& restrictions() const { return restrictions_; }

  const GradedAlgebra& algebra(FaceId f) const { return *cohomology_.at(f); }
  const std::shared_ptr<const GradedAlgebra>& algebra_ptr(FaceId f) const {
    return cohomology_.at(f);
  }

  /// E <= F, i.e. E is a face of F. Reflexive.
  bool leq(FaceId e, FaceId f) const { return leq_[e][f]; }
  bool order_is_acyclic() const { return acyclic_; }

  std::optional<FaceId> find(const std::string& name) const;

  /// The unique codim-0 face with empty label.
  FaceId top() const;

  /// The facet F_i, 1 <= i <= m.
  FaceId facet(int i) const;

  /// Face ids sorted by (codim, id).
  const std::vector<FaceId>& by_codim() const { return by_codim_; }

  std::vector<FaceId> lower_covers(FaceId f) const;
  std::vector<FaceId> upper_covers(FaceId f) const;

  /// Composite restriction H*(F) -> H*(E) for E <= F, or nullptr when it
  /// cannot be formed (missing cover data or E not below F).
  const AlgebraMap* composite(FaceId f, FaceId e) const;

  friend bool operator==(const FaceComplex& a, const FaceComplex& b);

 private:
  Field field_;
  int m_;
  std::vector<Face> faces_;
  std::vector<Cover> covers_;
  std::vector<std::shared_ptr<const GradedAlgebra>> cohomology_;
  std::map<Cover, AlgebraMap> restrictions_;

  std::vector<std::vector<bool>> leq_;
  bool acyclic_ = true;
  std::vector<FaceId> by_codim_;
  std::map<std::pair<FaceId, FaceId>, AlgebraMap> composites_;
};

struct ComplexViolation {
  enum class Kind {
    Structure,
    UniqueMaximum,
    Niceness,
    Monotonicity,
    FacetIndexing,
    UniqueComponent,
    RestrictionFunctoriality,
    Partition,
    Algebra,
    Homomorphism,
  };
  Kind kind;
  std::vector<FaceId> faces;  // witness faces, meaning depends on kind
  Label label;                // witness label set where relevant
  std::string detail;
};

const char* to_string(ComplexViolation::Kind kind);

struct ComplexReport {
  std::vector<ComplexViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ComplexViolation::Kind kind) const;
  std::vector<ComplexViolation> of_kind(ComplexViolation::Kind kind) const;
  /// One line per violation, or "VALID".
  std::string to_string(const FaceComplex& c) const;
};

ComplexReport validate_complex(const FaceComplex& c);

/// The unique E >= F with label S. Throws LabelNotSubset if S is not
/// contained in the label of F.
FaceId face_of_label(const FaceComplex& c, FaceId f, const Label& s);

/// Maximal common lower bounds of e1 and e2; empty when they do not meet.
std::vector<FaceId> components(const FaceComplex& c, FaceId e1, FaceId e2);

/// Restriction of a class on F to E <= F. Throws NotComparable otherwise.
AlgebraElement restrict_coeff(const FaceComplex& c, FaceId f, FaceId e, const AlgebraElement& a);

}  // namespace facering
