#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "facering/corners.hpp"
#include "facering/errors.hpp"

namespace facering {

/// Monomial x_{i1}^{m1} ... x_{ik}^{mk} in the facet variables. Stored
/// sparsely with strictly positive exponents, sorted by facet index.
class Monomial {
 public:
  Monomial() = default;
  /// Zero exponents are dropped; negative ones throw IndexOutOfRange.
  explicit Monomial(const std::map<int, int>& exponents);
  static Monomial variable(int i, int power = 1);

  const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
  int exponent(int i) const;
  /// Sum of exponents; the monomial has cohomological degree 2 * total().
  int total() const;
  int degree() const { return 2 * total(); }
  Label support() const;
  bool is_one() const { return exps_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "x1^2*x2", or "1" for the empty monomial.
  std::string to_string() const;

 private:
  std::vector<std::pair<int, int>> exps_;
};

/// Element of H*(F)[x_F]: monomial -> coefficient in H*(F). Zero
/// coefficients are never stored.
using Polynomial = std::map<Monomial, AlgebraElement>;

/// Element of A = (+)_F H*(F)[x_F]. Absent faces are zero.
class RingElement {
 public:
  RingElement() = default;

  /// Checks every monomial support against the face label (SupportViolation)
  /// and coefficient lengths (IndexOutOfRange); prunes zeros.
  static RingElement from_components(const FaceComplex& c, std::map<FaceId, Polynomial> components);

  /// Takes components already satisfying the invariants; drops empty ones.
  static RingElement adopt(std::map<FaceId, Polynomial> components);

  const std::map<FaceId, Polynomial>& components() const { return components_; }
  const Polynomial& component(FaceId f) const;
  bool is_zero() const { return components_.empty(); }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::map<FaceId, Polynomial> components_;
};

/// Parts E -> polynomial whose monomials all have support exactly label(E).
struct FaceDecomposition {
  std::map<FaceId, Polynomial> parts;
  friend bool operator==(const FaceDecomposition&, const FaceDecomposition&) = default;
};

/// Raised by decompose when the element is not in the face ring.
class NotInFaceRing : public Error {
 public:
  NotInFaceRing(FaceId face, Label support, const std::string& what)
      : Error(what), face_(face), support_(std::move(support)) {}
  FaceId face() const { return face_; }
  const Label& support() const { return support_; }

 private:
  FaceId face_;
  Label support_;
};

// Polynomial arithmetic inside H*(F)[x_F].
Polynomial poly_add(const FaceComplex& c, FaceId f, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const FaceComplex& c, FaceId f, const Scalar& s, const Polynomial& a);
Polynomial poly_mul(const FaceComplex& c, FaceId f, const Polynomial& a, const Polynomial& b);

/// phi_FE: restrict coefficients from F to E when E <= F, zero otherwise.
Polynomial phi(const FaceComplex& c, FaceId f, FaceId e, const Polynomial& p);

/// The E-face element whose E-component is p. Throws SupportViolation if
/// some monomial of p misses a variable of label(E).
RingElement make_face_element(const FaceComplex& c, FaceId e, const Polynomial& p);

/// Q-face element with the given coefficient in H*(Q).
RingElement top_element(const FaceComplex& c, const AlgebraElement& coeff);
RingElement one(const FaceComplex& c);

bool is_face_element(const FaceComplex& c, const RingElement& a, FaceId e);

/// Second face-element condition only: every component is the restriction
/// of the e-component.
bool is_compatible_at(const FaceComplex& c, const RingElement& a, FaceId e);

/// Theta_EG. The result has F-component phi_GF(phi_EG(a_E)). Throws
/// NotFaceElement unless a is an E-face element.
RingElement theta(const FaceComplex& c, FaceId e, FaceId g, const RingElement& a);

RingElement add(const FaceComplex& c, const RingElement& a, const RingElement& b);
RingElement scale(const FaceComplex& c, const Scalar& s, const RingElement& a);
RingElement sub(const FaceComplex& c, const RingElement& a, const RingElement& b);
RingElement linear_combine(const FaceComplex& c,
                           std::span<const std::pair<Scalar, RingElement>> terms);

/// Componentwise product in A. The x variables are central.
RingElement multiply(const FaceComplex& c, const RingElement& a, const RingElement& b);

/// Canonical decomposition into face elements by monomial support.
/// Throws NotInFaceRing with the first offending face and support.
FaceDecomposition decompose(const FaceComplex& c, const RingElement& a);

/// Sum of make_face_element over the parts.
RingElement reconstruct(const FaceComplex& c, const FaceDecomposition& d);

RingElement homogeneous_component(const FaceComplex& c, const RingElement& a, int degree);

/// Degrees with a nonzero homogeneous component, ascending.
std::vector<int> degrees(const FaceComplex& c, const RingElement& a);

/// dim k[Q]_d for d = 0..max_degree, from the canonical decomposition.
std::vector<std::uint64_t> hilbert(const FaceComplex& c, int max_degree);

/// Number of monomials in `vars` variables, every exponent >= 1, total `total`.
std::uint64_t positive_monomial_count(int vars, int total);

/// The Thom class of facet i: the F_i-face element x_i.
RingElement tau(const FaceComplex& c, int i);

/// Weights v_i in H_2(BT) and the map c: H^2(BT) -> H^2(Q).
struct TorusData {
  int n = 0;
  std::vector<std::vector<long>> v;     // m rows of length n
  std::vector<std::vector<Scalar>> c;   // dim H^2(Q) rows of length n

  friend bool operator==(const TorusData&, const TorusData&) = default;
};

/// Throws ShapeMismatch when the shapes do not fit the complex.
void validate_torus_data(const FaceComplex& c, const TorusData& t);

/// Image of u in H^2(BT) in the face ring: theta(Q) + sum <v_i, u> tau_i.
RingElement eta(const FaceComplex& c, const TorusData& t, std::span<const Scalar> u);

std::string to_string(const FaceComplex& c, FaceId f, const Polynomial& p);
/// One "face: polynomial" line per nonzero component; "0" for zero.
std::string to_string(const FaceComplex& c, const RingElement& a);
std::string to_string(const FaceComplex& c, const FaceDecomposition& d);

}  // namespace facering
