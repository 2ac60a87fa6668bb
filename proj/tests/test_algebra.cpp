#include <gtest/gtest.h>

#include "facering/algebra.hpp"
#include "facering/errors.hpp"

namespace facering {
namespace {

Field Q() { return Field::rationals(); }

// H*(RP^2; F2) = F2[a]/(a^3).
GradedAlgebra rp2() {
  Field k = Field::of_characteristic(2);
  auto e = [&](std::size_t i) {
    AlgebraElement v(3, k.zero());
    v[i] = k.one();
    return v;
  };
  StructureTable t;
  for (std::size_t i = 0; i < 3; ++i) t[{0, i}] = t[{i, 0}] = e(i);
  t[{1, 1}] = e(2);
  return GradedAlgebra(k, 2, {{"1", 0}, {"a", 1}, {"a2", 2}}, 0, t);
}

// Exterior algebra on b1, b2 in degree 1 over Q.
GradedAlgebra torus2() {
  Field k = Q();
  auto e = [&](std::size_t i, long s = 1) {
    AlgebraElement v(4, k.zero());
    v[i] = k.from_int(s);
    return v;
  };
  StructureTable t;
  for (std::size_t i = 0; i < 4; ++i) t[{0, i}] = t[{i, 0}] = e(i);
  t[{1, 2}] = e(3);
  t[{2, 1}] = e(3, -1);
  return GradedAlgebra(k, 2, {{"1", 0}, {"b1", 1}, {"b2", 1}, {"w", 2}}, 0, t);
}

TEST(Field, RationalArithmeticIsExact) {
  Field k = Q();
  Scalar third = k.parse("1/3");
  EXPECT_EQ(k.add(third, k.add(third, third)), k.one());
  EXPECT_EQ(k.mul(k.parse("-2/4"), k.from_int(2)), k.from_int(-1));
  EXPECT_EQ(k.parse("6/4").to_string(), "3/2");
  EXPECT_EQ(k.inv(k.parse("-3/7")), k.parse("-7/3"));
}

TEST(Field, PrimeFieldReducesResidues) {
  Field f5 = Field::of_characteristic(5);
  EXPECT_EQ(f5.from_int(-1), f5.from_int(4));
  EXPECT_EQ(f5.parse("1/2"), f5.from_int(3));  // 2 * 3 = 6 = 1
  EXPECT_EQ(f5.mul(f5.from_int(3), f5.from_int(4)), f5.from_int(2));
  EXPECT_TRUE(f5.add(f5.from_int(2), f5.from_int(3)).is_zero());
  EXPECT_EQ(f5.name(), "F5");
  EXPECT_EQ(Q().name(), "Q");
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(Field::of_characteristic(4), InvalidField);
  EXPECT_THROW(Field::of_characteristic(1), InvalidField);
  EXPECT_THROW(Q().parse("1.5"), ParseError);
  EXPECT_THROW(Q().parse("1/0"), ParseError);
  EXPECT_THROW(Q().parse(""), ParseError);
  EXPECT_THROW(Q().inv(Q().zero()), DivisionByZero);
  EXPECT_THROW(Field::of_characteristic(7).inv(Field::of_characteristic(7).from_int(14)), DivisionByZero);
}

TEST(GradedAlgebra, PointIsOneDimensional) {
  GradedAlgebra pt = GradedAlgebra::point(Q());
  EXPECT_EQ(pt.dim(), 1u);
  EXPECT_EQ(pt.dim_in_degree(0), 1u);
  EXPECT_EQ(pt.dim_in_degree(1), 0u);
  EXPECT_TRUE(validate_algebra(pt).ok());
}

TEST(GradedAlgebra, TruncatedPolynomialProducts) {
  GradedAlgebra a = rp2();
  const Field& k = a.field();
  AlgebraElement x{k.zero(), k.one(), k.zero()};
  AlgebraElement x2 = alg_mul(a, x, x);
  EXPECT_EQ(x2, (AlgebraElement{k.zero(), k.zero(), k.one()}));
  EXPECT_TRUE(alg_is_zero(alg_mul(a, x2, x)));  // a^3 = 0 above the top degree
  // (1 + a)^3 = 1 + a + a^2 over F2.
  AlgebraElement one_plus{k.one(), k.one(), k.zero()};
  AlgebraElement cube = alg_mul(a, alg_mul(a, one_plus, one_plus), one_plus);
  EXPECT_EQ(cube, (AlgebraElement{k.one(), k.one(), k.one()}));
  EXPECT_TRUE(validate_algebra(a).ok());
}

TEST(GradedAlgebra, GradedCommutativityWithSigns) {
  GradedAlgebra a = torus2();
  const Field& k = a.field();
  AlgebraElement b1 = a.basis_element(1), b2 = a.basis_element(2);
  EXPECT_EQ(alg_mul(a, b1, b2), a.basis_element(3));
  EXPECT_EQ(alg_mul(a, b2, b1), alg_scale(a, k.from_int(-1), a.basis_element(3)));
  EXPECT_TRUE(alg_is_zero(alg_mul(a, b1, b1)));
  EXPECT_TRUE(validate_algebra(a).ok());
  EXPECT_EQ(alg_to_string(a, alg_add(a, b1, alg_scale(a, k.parse("-1/3"), b2))), "b1 - 1/3*b2");
  EXPECT_EQ(alg_to_string(a, a.zero()), "0");
}

TEST(GradedAlgebra, HomogeneousPartsAndDegrees) {
  GradedAlgebra a = torus2();
  const Field& k = a.field();
  AlgebraElement x{k.one(), k.from_int(2), k.zero(), k.from_int(5)};
  EXPECT_EQ(alg_degrees(a, x), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(alg_homogeneous(a, x, 1), (AlgebraElement{k.zero(), k.from_int(2), k.zero(), k.zero()}));
  EXPECT_TRUE(alg_is_zero(alg_homogeneous(a, x, 3)));
}

TEST(GradedAlgebra, ShapeErrors) {
  GradedAlgebra a = torus2();
  EXPECT_THROW(alg_mul(a, AlgebraElement(2), a.unit_element()), IndexOutOfRange);
  EXPECT_THROW(GradedAlgebra(Q(), 0, {{"1", 0}}, 3, {}), IndexOutOfRange);
}

TEST(ValidateAlgebra, DetectsEachLaw) {
  Field k = Q();
  auto e = [&](std::size_t n, std::size_t i) {
    AlgebraElement v(n, k.zero());
    v[i] = k.one();
    return v;
  };
  {
    // Missing unit products.
    GradedAlgebra a(k, 1, {{"1", 0}, {"b", 1}}, 0, {{{0, 0}, e(2, 0)}});
    EXPECT_TRUE(validate_algebra(a).has(AlgebraViolation::Kind::UnitLaw));
  }
  {
    // b * b lands in degree 0 instead of 2.
    StructureTable t{{{0, 0}, e(2, 0)}, {{0, 1}, e(2, 1)}, {{1, 0}, e(2, 1)}, {{1, 1}, e(2, 0)}};
    GradedAlgebra a(k, 2, {{"1", 0}, {"b", 1}}, 0, t);
    EXPECT_TRUE(validate_algebra(a).has(AlgebraViolation::Kind::DegreeAdditivity));
  }
  {
    // Degree-1 classes that commute instead of anticommuting.
    StructureTable t;
    for (std::size_t i = 0; i < 4; ++i) t[{0, i}] = t[{i, 0}] = e(4, i);
    t[{1, 2}] = e(4, 3);
    t[{2, 1}] = e(4, 3);
    GradedAlgebra a(k, 2, {{"1", 0}, {"b1", 1}, {"b2", 1}, {"w", 2}}, 0, t);
    EXPECT_TRUE(validate_algebra(a).has(AlgebraViolation::Kind::GradedCommutativity));
  }
  {
    // Degree-2 classes y, z with y*y = z but z*y = 0 while y*z = w: (yy)y != y(yy).
    StructureTable t;
    for (std::size_t i = 0; i < 4; ++i) t[{0, i}] = t[{i, 0}] = e(4, i);
    t[{1, 1}] = e(4, 2);
    t[{1, 2}] = e(4, 3);
    GradedAlgebra a(k, 6, {{"1", 0}, {"y", 2}, {"z", 4}, {"w", 6}}, 0, t);
    EXPECT_TRUE(validate_algebra(a).has(AlgebraViolation::Kind::Associativity));
  }
}

TEST(AlgebraMap, ApplyComposeAndCheck) {
  auto src = std::make_shared<const GradedAlgebra>(torus2());
  auto pt = std::make_shared<const GradedAlgebra>(GradedAlgebra::point(Q()));
  const Field& k = src->field();
  AlgebraMap to_point(src, pt, {AlgebraElement{k.one()}, AlgebraElement{k.zero()},
                                AlgebraElement{k.zero()}, AlgebraElement{k.zero()}});
  EXPECT_TRUE(check_homomorphism(to_point).empty());
  AlgebraElement x{k.from_int(3), k.one(), k.zero(), k.one()};
  EXPECT_EQ(apply_map(to_point, x), AlgebraElement{k.from_int(3)});

  AlgebraMap id = AlgebraMap::identity(src);
  EXPECT_EQ(apply_map(id, x), x);
  EXPECT_EQ(compose(to_point, id).images(), to_point.images());

  // Swapping b1 and b2 reverses the sign of w = b1 b2, so keeping w fixed is
  // not multiplicative.
  AlgebraMap swap(src, src, {src->basis_element(0), src->basis_element(2), src->basis_element(1),
                             src->basis_element(3)});
  auto v = check_homomorphism(swap);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().kind, MapViolation::Kind::NotMultiplicative);

  AlgebraMap shifts(src, src, {src->basis_element(0), src->basis_element(3), src->basis_element(2),
                               src->basis_element(3)});
  bool degree_violation = false;
  for (const auto& mv : check_homomorphism(shifts))
    degree_violation |= mv.kind == MapViolation::Kind::NotDegreePreserving;
  EXPECT_TRUE(degree_violation);

  AlgebraMap partial(src, pt, {AlgebraElement{k.one()}, std::nullopt, std::nullopt, std::nullopt});
  EXPECT_THROW(apply_map(partial, x), DegreeMismatch);
  EXPECT_EQ(apply_map(partial, src->unit_element()), AlgebraElement{k.one()});
}

}  // namespace
}  // namespace facering
