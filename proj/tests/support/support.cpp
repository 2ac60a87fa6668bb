#include "support.hpp"

#include <algorithm>

namespace facering::testing {

Scalar random_scalar(const Field& k, Rng& rng) {
  std::uniform_int_distribution<long> d(-2, 2);
  return k.from_int(d(rng));
}

Scalar random_nonzero_scalar(const Field& k, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(k, rng);
    if (!s.is_zero()) return s;
  }
}

AlgebraElement random_coeff(const FaceComplex& c, FaceId f, Rng& rng) {
  const GradedAlgebra& a = c.algebra(f);
  AlgebraElement x = a.zero();
  for (auto& s : x) s = random_scalar(c.field(), rng);
  return x;
}

RingElement random_face_element(const FaceComplex& c, FaceId e, Rng& rng, int max_terms) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> expo(1, 3);
  Polynomial p;
  const int n = c.label(e).empty() ? 1 : terms(rng);
  for (int t = 0; t < n; ++t) {
    std::map<int, int> exps;
    for (int i : c.label(e)) exps[i] = expo(rng);
    Monomial m(exps);
    Polynomial term{{m, random_coeff(c, e, rng)}};
    p = poly_add(c, e, p, term);
  }
  return make_face_element(c, e, p);
}

FaceId random_face(const FaceComplex& c, Rng& rng) {
  std::uniform_int_distribution<FaceId> d(0, c.size() - 1);
  return d(rng);
}

RingElement random_member(const FaceComplex& c, Rng& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<std::pair<Scalar, RingElement>> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i)
    terms.emplace_back(random_scalar(c.field(), rng),
                       random_face_element(c, random_face(c, rng), rng));
  return linear_combine(c, terms);
}

bool perturb(const FaceComplex& c, RingElement& a, Rng& rng) {
  std::vector<FaceId> candidates;
  for (FaceId f = 0; f < c.size(); ++f)
    if (c.codim(f) > 0) candidates.push_back(f);
  if (candidates.empty()) return false;
  FaceId f = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];

  // Proper subset of the label: drop at least one index.
  const Label& lf = c.label(f);
  std::bernoulli_distribution keep(0.5);
  std::size_t dropped = std::uniform_int_distribution<std::size_t>(0, lf.size() - 1)(rng);
  std::map<int, int> exps;
  for (std::size_t b = 0; b < lf.size(); ++b)
    if (b != dropped && keep(rng)) exps[lf[b]] = std::uniform_int_distribution<int>(1, 3)(rng);

  const GradedAlgebra& alg = c.algebra(f);
  AlgebraElement coeff = alg_scale(alg, random_nonzero_scalar(c.field(), rng), alg.unit_element());
  std::map<FaceId, Polynomial> comps = a.components();
  comps[f] = poly_add(c, f, comps[f], Polynomial{{Monomial(exps), coeff}});
  a = RingElement::from_components(c, std::move(comps));
  return true;
}

// -- invalid complexes ---------------------------------------------------------

FaceComplex two_maxima() {
  ComplexBuilder b(Field::rationals(), 1);
  b.face("Q", 0, {}).face("Q2", 0, {}).face("F1", 1, {1});
  b.cover("F1", "Q");
  return b.build();
}

FaceComplex codim_label_mismatch() {
  ComplexBuilder b(Field::rationals(), 1);
  b.face("Q", 0, {}).face("F1", 1, {1}).face("w", 2, {1});
  b.cover("F1", "Q").cover("w", "F1");
  return b.build();
}

FaceComplex label_shrinks_downward() {
  ComplexBuilder b(Field::rationals(), 2);
  b.face("Q", 0, {}).face("F1", 1, {1}).face("F2", 1, {2}).face("v", 2, {1, 2});
  b.cover("F1", "Q").cover("F2", "Q").cover("v", "F1").cover("v", "F2");
  b.cover("F2", "F1");
  return b.build();
}

FaceComplex duplicate_facet() {
  ComplexBuilder b(Field::rationals(), 1);
  b.face("Q", 0, {}).face("F1", 1, {1}).face("F1b", 1, {1});
  b.cover("F1", "Q").cover("F1b", "Q");
  return b.build();
}

FaceComplex missing_component() {
  ComplexBuilder b(Field::rationals(), 2);
  b.face("Q", 0, {}).face("F1", 1, {1}).face("F2", 1, {2}).face("p", 2, {1, 2});
  b.cover("F1", "Q").cover("F2", "Q").cover("p", "F1");
  return b.build();
}

FaceComplex noncommuting_square() {
  Field k = Field::rationals();
  auto circle = [&] {
    StructureTable t;
    t[{0, 0}] = {k.one(), k.zero()};
    t[{0, 1}] = {k.zero(), k.one()};
    t[{1, 0}] = {k.zero(), k.one()};
    return GradedAlgebra(k, 1, {{"1", 0}, {"b", 1}}, 0, t);
  };
  ComplexBuilder b(k, 2);
  b.face("Q", 0, {}, circle()).face("F1", 1, {1}, circle()).face("F2", 1, {2}, circle());
  b.face("v", 2, {1, 2}, circle());
  b.cover("F1", "Q").cover("F2", "Q").cover("v", "F1");
  // b -> -b is a homomorphism on its own, but the square no longer commutes.
  b.cover("v", "F2", {AlgebraElement{k.one(), k.zero()}, AlgebraElement{k.zero(), k.from_int(-1)}});
  return b.build();
}

FaceComplex split_intersection() {
  // F1 and F2 meet in two edges G and H which share the vertex v.
  ComplexBuilder b(Field::rationals(), 3);
  b.face("Q", 0, {}).face("F1", 1, {1}).face("F2", 1, {2}).face("F3", 1, {3});
  b.face("G", 2, {1, 2}).face("H", 2, {1, 2}).face("G13", 2, {1, 3}).face("G23", 2, {2, 3});
  b.face("v", 3, {1, 2, 3});
  b.cover("F1", "Q").cover("F2", "Q").cover("F3", "Q");
  b.cover("G", "F1").cover("G", "F2").cover("H", "F1").cover("H", "F2");
  b.cover("G13", "F1").cover("G13", "F3").cover("G23", "F2").cover("G23", "F3");
  b.cover("v", "G").cover("v", "H").cover("v", "G13").cover("v", "G23");
  return b.build();
}

}  // namespace facering::testing
