#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facering/scalar.hpp"

namespace facering {

/// Dense coefficient vector over the basis of a GradedAlgebra.
using AlgebraElement = std::vector<Scalar>;

struct BasisElement {
  std::string name;
  int degree = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Sparse structure constants: (i, j) -> basis_i * basis_j. Absent pairs
/// multiply to zero.
using StructureTable = std::map<std::pair<std::size_t, std::size_t>, AlgebraElement>;

/// A finite-dimensional graded-commutative algebra presented by a named
/// basis and structure constants. Products of total degree above
/// top_degree are zero. Construction checks only shapes; the algebraic
/// laws are checked by validate_algebra.
class GradedAlgebra {
 public:
  GradedAlgebra(Field field, int top_degree, std::vector<BasisElement> basis, std::size_t unit,
                StructureTable products);

  /// The algebra k concentrated in degree 0 (cohomology of a contractible face).
  static GradedAlgebra point(Field field);

  const Field& field() const { return field_; }
  int top_degree() const { return top_degree_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t unit() const { return unit_; }
  const StructureTable& products() const { return products_; }

  int degree_of(std::size_t i) const { return basis_.at(i).degree; }
  std::size_t dim_in_degree(int d) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  AlgebraElement zero() const { return AlgebraElement(dim()); }
  AlgebraElement unit_element() const { return basis_element(unit_); }
  AlgebraElement basis_element(std::size_t i) const;

  /// Product of two basis elements, or nullptr when it is zero.
  const AlgebraElement* product(std::size_t i, std::size_t j) const;

  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

 private:
  Field field_;
  int top_degree_;
  std::vector<BasisElement> basis_;
  std::size_t unit_;
  StructureTable products_;
};

AlgebraElement alg_mul(const GradedAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_add(const GradedAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_scale(const GradedAlgebra& a, const Scalar& s, const AlgebraElement& x);
bool alg_is_zero(const AlgebraElement& x);

/// Component of x in degree d.
AlgebraElement alg_homogeneous(const GradedAlgebra& a, const AlgebraElement& x, int d);

/// Degrees in which x has a nonzero coefficient, ascending.
std::vector<int> alg_degrees(const GradedAlgebra& a, const AlgebraElement& x);

/// Human-readable form, e.g. "2*a - 1/3*b1". Zero prints as "0".
std::string alg_to_string(const GradedAlgebra& a, const AlgebraElement& x);

struct AlgebraViolation {
  enum class Kind {
    Shape,
    UnitLaw,
    DegreeAdditivity,
    GradedCommutativity,
    Associativity,
  };
  Kind kind;
  std::vector<std::size_t> witness;  // basis indices
  std::string detail;
};

const char* to_string(AlgebraViolation::Kind kind);

struct AlgebraReport {
  std::vector<AlgebraViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has(AlgebraViolation::Kind kind) const;
};

/// Checks unit law, degree additivity, graded commutativity and
/// associativity on all basis pairs and triples.
AlgebraReport validate_algebra(const GradedAlgebra& a);

/// Linear map between graded algebras, stored as the image of each source
/// basis element. A missing image marks a degree the map leaves undefined.
class AlgebraMap {
 public:
  AlgebraMap(std::shared_ptr<const GradedAlgebra> source,
             std::shared_ptr<const GradedAlgebra> target,
             std::vector<std::optional<AlgebraElement>> images);

  static AlgebraMap identity(std::shared_ptr<const GradedAlgebra> a);

  const GradedAlgebra& source() const { return *source_; }
  const GradedAlgebra& target() const { return *target_; }
  const std::shared_ptr<const GradedAlgebra>& source_ptr() const { return source_; }
  const std::shared_ptr<const GradedAlgebra>& target_ptr() const { return target_; }
  const std::vector<std::optional<AlgebraElement>>& images() const { return images_; }

 private:
  std::shared_ptr<const GradedAlgebra> source_;
  std::shared_ptr<const GradedAlgebra> target_;
  std::vector<std::optional<AlgebraElement>> images_;
};

/// Throws DegreeMismatch if x uses a basis element whose image is undefined.
AlgebraElement apply_map(const AlgebraMap& f, const AlgebraElement& x);

/// g after f. Images undefined in f or needed-but-undefined in g stay undefined.
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

struct MapViolation {
  enum class Kind { Undefined, NotDegreePreserving, UnitNotPreserved, NotMultiplicative, FieldMismatch };
  Kind kind;
  std::vector<std::size_t> witness;
  std::string detail;
};

const char* to_string(MapViolation::Kind kind);

std::vector<MapViolation> check_homomorphism(const AlgebraMap& f);

}  // namespace facering
