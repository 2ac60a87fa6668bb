#include "facering/charclass.hpp"

namespace facering {

namespace {

const AlgebraElement& require_class(const std::optional<AlgebraElement>& cls, const char* what) {
  if (!cls) throw ShapeMismatch(std::string("no ") + what + " class supplied");
  return *cls;
}

RingElement total_class(const FaceComplex& c, const AlgebraElement& cls, int power) {
  RingElement unit = one(c);
  RingElement out = top_element(c, cls);
  for (int i = 1; i <= c.m(); ++i) {
    RingElement t = tau(c, i);
    RingElement tp = t;
    for (int k = 1; k < power; ++k) tp = multiply(c, tp, t);
    out = multiply(c, out, add(c, unit, tp));
  }
  return out;
}

}  // namespace

void validate_char_data(const FaceComplex& c, const CharClassData& data) {
  const GradedAlgebra& hq = c.algebra(c.top());
  for (const auto* cls : {&data.sw, &data.pont}) {
    if (!*cls) continue;
    if ((*cls)->size() != hq.dim()) throw ShapeMismatch("class has wrong length for H*(Q)");
    if (alg_homogeneous(hq, **cls, 0) != hq.unit_element())
      throw DegreeMismatch("degree-0 part of a total class must be 1");
  }
}

RingElement sw_total(const FaceComplex& c, const CharClassData& data) {
  if (c.field().characteristic() != 2)
    throw WrongCharacteristic("Stiefel-Whitney classes need F2 coefficients, complex is over " +
                              c.field().name());
  validate_char_data(c, data);
  return total_class(c, require_class(data.sw, "Stiefel-Whitney"), 1);
}

RingElement pontrjagin_total(const FaceComplex& c, const CharClassData& data) {
  validate_char_data(c, data);
  return total_class(c, require_class(data.pont, "Pontrjagin"), 2);
}

Polynomial expected_total_component(const FaceComplex& c, const AlgebraElement& cls, FaceId f,
                                    int power) {
  const GradedAlgebra& alg = c.algebra(f);
  Polynomial out;
  AlgebraElement restricted = restrict_coeff(c, c.top(), f, cls);
  if (!alg_is_zero(restricted)) out[Monomial()] = restricted;
  for (int i : c.label(f)) {
    Polynomial factor;
    factor[Monomial()] = alg.unit_element();
    factor[Monomial::variable(i, power)] = alg.unit_element();
    out = poly_mul(c, f, out, factor);
  }
  return out;
}

}  // namespace facering
