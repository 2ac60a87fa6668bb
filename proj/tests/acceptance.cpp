// Acceptance suite: one PASS/FAIL line per criterion, with wall time.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "facering/charclass.hpp"
#include "facering/models.hpp"
#include "facering/oracle.hpp"
#include "support/support.hpp"

namespace {

using namespace facering;
namespace ft = facering::testing;
using Dims = std::vector<std::uint64_t>;
using K = ComplexViolation::Kind;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string dims_str(const Dims& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

FaceId id(const FaceComplex& c, const std::string& n) { return c.find(n).value(); }

// (1 + x_i^power)(1 + x_j^power) with unit coefficients at face f.
Polynomial two_factor(const FaceComplex& c, FaceId f, int i, int j, int power) {
  const AlgebraElement& u = c.algebra(f).unit_element();
  Monomial xi = Monomial::variable(i, power), xj = Monomial::variable(j, power);
  return Polynomial{{Monomial(), u}, {xi, u}, {xj, u}, {xi * xj, u}};
}

Outcome hilbert_bigon() {
  Outcome o;
  FaceComplex c = build_builtin("bigon").complex;
  Dims expected{1, 0, 2, 0, 4, 0, 6, 0, 8, 0, 10, 0, 12};
  Dims fast = hilbert(c, 12), brute = brute_basis_hilbert(c, 12).dims;
  o.require(fast == expected, "hilbert = " + dims_str(fast));
  o.require(brute == expected, "brute_basis_hilbert = " + dims_str(brute));
  return o;
}

Outcome hilbert_triangle() {
  Outcome o;
  FaceComplex c = build_builtin("triangle").complex;
  Dims fast = hilbert(c, 20), sr = sr_hilbert(c, 20), brute = brute_basis_hilbert(c, 20).dims;
  o.require(fast == sr, "hilbert " + dims_str(fast) + " vs sr " + dims_str(sr));
  o.require(fast == brute, "hilbert " + dims_str(fast) + " vs brute " + dims_str(brute));
  return o;
}

Outcome hilbert_connected_sum() {
  Outcome o;
  FaceComplex c = build_builtin("connected-sum").complex;
  Dims expected{1, 2, 3, 0, 6, 0, 9, 0, 12, 0, 15, 0, 18};
  Dims fast = hilbert(c, 12), brute = brute_basis_hilbert(c, 12).dims;
  o.require(fast == expected, "hilbert = " + dims_str(fast));
  o.require(brute == expected, "brute_basis_hilbert = " + dims_str(brute));
  return o;
}

Outcome subring_closure() {
  Outcome o;
  for (const auto& name : builtin_names()) {
    FaceComplex c = build_builtin(name).complex;
    ft::Rng rng(ft::kSeed + 100);
    for (int trial = 0; trial < 100 && o.ok; ++trial) {
      FaceId e1 = ft::random_face(c, rng), e2 = ft::random_face(c, rng);
      RingElement a = ft::random_face_element(c, e1, rng), b = ft::random_face_element(c, e2, rng);
      RingElement prod = multiply(c, a, b);
      try {
        o.require(reconstruct(c, decompose(c, prod)) == prod, name + ": nonzero residual");
      } catch (const NotInFaceRing& e) {
        o.require(false, name + ": product left the face ring: " + e.what());
      }
      RingElement via;
      for (FaceId g : components(c, e1, e2))
        via = add(c, via, multiply(c, theta(c, e1, g, a), theta(c, e2, g, b)));
      o.require(via == prod, name + ": theta identity fails for " + c.face(e1).name + ", " +
                                 c.face(e2).name);
    }
  }
  return o;
}

Outcome face_element_rules() {
  Outcome o;
  std::size_t product_samples = 0, transfer_samples = 0, transfer_failures = 0;
  std::string first_counterexample;
  for (const auto& name : builtin_names()) {
    FaceComplex c = build_builtin(name).complex;
    ft::Rng rng(ft::kSeed + 200);
    for (int trial = 0; trial < 60; ++trial) {
      FaceId e = ft::random_face(c, rng);
      RingElement a = ft::random_face_element(c, e, rng), b = ft::random_face_element(c, e, rng);
      ++product_samples;
      o.require(is_face_element(c, multiply(c, a, b), e),
                name + ": product of " + c.face(e).name + "-face elements is not one");
      for (FaceId g = 0; g < c.size(); ++g) {
        ++transfer_samples;
        RingElement t = theta(c, e, g, a);
        o.require(is_compatible_at(c, t, g), name + ": theta result is not compatible at G");
        if (c.label(g) == c.label(e) || !c.leq(g, e))
          o.require(is_face_element(c, t, g), name + ": theta fails where labels agree");
        if (is_face_element(c, t, g)) continue;
        ++transfer_failures;
        if (first_counterexample.empty()) {
          std::ostringstream os;
          os << name << ": E=" << c.face(e).name << " G=" << c.face(g).name
             << ", theta has G-component " << to_string(c, g, t.component(g))
             << " which is not strictly positive in " << label_to_string(c.label(g));
          first_counterexample = os.str();
        }
      }
    }
  }
  o.notes.push_back("products of E-face elements are E-face elements: " + std::to_string(product_samples) +
                    " samples");
  if (transfer_failures > 0) {
    o.ok = false;
    o.notes.push_back("theta(E,G,a) is a G-face element: fails on " +
                      std::to_string(transfer_failures) + " of " + std::to_string(transfer_samples) +
                      " (E,G,a) samples");
    o.notes.push_back("first counterexample: " + first_counterexample);
    o.notes.push_back("compatibility at G, and strictness when label(G) = label(E) or G is not "
                      "below E, hold on every sample");
  } else {
    o.notes.push_back("theta(E,G,a) is a G-face element: " + std::to_string(transfer_samples) + " samples");
  }
  return o;
}

Outcome membership_agreement() {
  Outcome o;
  for (const auto& name : builtin_names()) {
    FaceComplex c = build_builtin(name).complex;
    ft::Rng rng(ft::kSeed + 300);
    int members = 0, non_members = 0, disagreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
      RingElement a = ft::random_member(c, rng);
      if (trial % 2 == 1) ft::perturb(c, a, rng);
      bool fast = true;
      FaceDecomposition d;
      try {
        d = decompose(c, a);
      } catch (const NotInFaceRing&) {
        fast = false;
      }
      Membership slow = naive_membership(c, a);
      if (slow.member != fast || (fast && !(to_decomposition(c, slow) == d))) ++disagreements;
      (fast ? members : non_members)++;
    }
    o.require(disagreements == 0, name + ": " + std::to_string(disagreements) + " disagreements");
    o.notes.push_back(name + ": " + std::to_string(members) + " members, " +
                      std::to_string(non_members) + " non-members");
  }
  return o;
}

Outcome characteristic_classes() {
  Outcome o;
  {
    Model m = build_builtin("triangle", Field::of_characteristic(2));
    const FaceComplex& c = m.complex;
    RingElement w = sw_total(c, *m.chars);
    RingElement expected = one(c);
    for (int i = 1; i <= 3; ++i) expected = multiply(c, expected, add(c, one(c), tau(c, i)));
    o.require(w == expected, "triangle sw_total differs from the product of (1 + tau_i)");
    FaceId v = id(c, "v12");
    o.require(w.component(v) == two_factor(c, v, 1, 2, 1),
              "triangle sw at v12: " + to_string(c, v, w.component(v)));
  }
  {
    Model m = build_builtin("rp2-no-boundary");
    const FaceComplex& c = m.complex;
    const Field& k = c.field();
    o.require(sw_total(c, *m.chars) == top_element(c, AlgebraElement{k.one(), k.one(), k.one()}),
              "rp2 sw_total is not 1 + a + a2");
  }
  {
    Model m = build_builtin("triangle");
    const FaceComplex& c = m.complex;
    FaceId v = id(c, "v12");
    RingElement p = pontrjagin_total(c, *m.chars);
    const Polynomial& got = p.component(v);
    o.require(got == two_factor(c, v, 1, 2, 2), "triangle p at v12: " + to_string(c, v, got));
  }
  std::vector<Model> models{build_builtin("triangle", Field::of_characteristic(2)),
                            build_builtin("rp2-no-boundary")};
  for (const auto& m : models) {
    const FaceComplex& c = m.complex;
    RingElement w = sw_total(c, *m.chars), p = pontrjagin_total(c, *m.chars);
    for (const RingElement* r : {&w, &p}) {
      try {
        decompose(c, *r);
      } catch (const NotInFaceRing& e) {
        o.require(false, std::string("total class outside the face ring: ") + e.what());
      }
    }
    for (FaceId f = 0; f < c.size(); ++f) {
      o.require(w.component(f) == expected_total_component(c, *m.chars->sw, f, 1),
                "sw component identity fails at " + c.face(f).name);
      o.require(p.component(f) == expected_total_component(c, *m.chars->pont, f, 2),
                "p component identity fails at " + c.face(f).name);
    }
  }
  return o;
}

Outcome eta_checks() {
  Outcome o;
  for (const auto& name : builtin_names()) {
    Model m = build_builtin(name);
    const FaceComplex& c = m.complex;
    const Field& k = c.field();
    const TorusData& t = *m.torus;
    ft::Rng rng(ft::kSeed + 400);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Scalar> u(t.n), w(t.n), uw(t.n);
      Scalar s = ft::random_scalar(k, rng);
      for (int i = 0; i < t.n; ++i) {
        u[i] = ft::random_scalar(k, rng);
        w[i] = ft::random_scalar(k, rng);
        uw[i] = k.add(k.mul(s, u[i]), w[i]);
      }
      o.require(eta(c, t, uw) == add(c, scale(c, s, eta(c, t, u)), eta(c, t, w)),
                name + ": eta is not linear");
    }
  }
  Model bigon = build_builtin("bigon");
  const FaceComplex& c = bigon.complex;
  const Field& k = c.field();
  for (int i = 1; i <= 2; ++i) {
    std::vector<Scalar> e(2, k.zero());
    e[static_cast<std::size_t>(i - 1)] = k.one();
    o.require(eta(c, *bigon.torus, e) == tau(c, i), "bigon eta(e" + std::to_string(i) + ") != tau");
  }
  return o;
}

Outcome validation_suite() {
  Outcome o;
  auto check = [&](const std::string& axiom, const FaceComplex& c, K kind,
                   const std::function<bool(const ComplexViolation&)>& witness) {
    auto v = validate_complex(c).of_kind(kind);
    bool hit = std::any_of(v.begin(), v.end(), witness);
    o.require(hit, axiom + ": expected violation with the right witness was not reported");
  };
  FaceComplex two = ft::two_maxima();
  check("unique maximum", two, K::UniqueMaximum,
        [&](const auto& v) { return v.faces == std::vector<FaceId>{id(two, "Q"), id(two, "Q2")}; });
  FaceComplex nice = ft::codim_label_mismatch();
  check("niceness", nice, K::Niceness,
        [&](const auto& v) { return v.faces == std::vector<FaceId>{id(nice, "w")}; });
  FaceComplex mono = ft::label_shrinks_downward();
  check("monotonicity", mono, K::Monotonicity, [&](const auto& v) {
    return v.faces == std::vector<FaceId>{id(mono, "F2"), id(mono, "F1")};
  });
  FaceComplex dup = ft::duplicate_facet();
  check("facet indexing", dup, K::FacetIndexing, [&](const auto& v) {
    return v.faces == std::vector<FaceId>{id(dup, "F1"), id(dup, "F1b")} && v.label == Label{1};
  });
  FaceComplex miss = ft::missing_component();
  check("unique component", miss, K::UniqueComponent, [&](const auto& v) {
    return v.faces == std::vector<FaceId>{id(miss, "p")} && v.label == Label{2};
  });
  FaceComplex sq = ft::noncommuting_square();
  check("restriction functoriality", sq, K::RestrictionFunctoriality, [&](const auto& v) {
    if (v.faces.size() != 4 || v.faces[0] != id(sq, "Q") || v.faces[1] != id(sq, "v")) return false;
    std::vector<FaceId> via{v.faces[2], v.faces[3]};
    std::sort(via.begin(), via.end());
    return via == std::vector<FaceId>{id(sq, "F1"), id(sq, "F2")};
  });
  FaceComplex split = ft::split_intersection();
  check("partition", split, K::Partition, [&](const auto& v) {
    return v.faces == std::vector<FaceId>{id(split, "F1"), id(split, "F2"), id(split, "v"),
                                          id(split, "G"), id(split, "H")};
  });
  for (const auto& name : builtin_names())
    o.require(validate_complex(build_builtin(name).complex).ok(), name + " does not validate");
  return o;
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Hilbert agreement, bigon", 1, hilbert_bigon},
      {2, "Hilbert agreement, triangle", 5, hilbert_triangle},
      {3, "Hilbert agreement, connected-sum", 5, hilbert_connected_sum},
      {4, "Subring closure and theta decomposition", 30, subring_closure},
      {5, "Face element products and transfers", 10, face_element_rules},
      {6, "Membership oracle agreement", 30, membership_agreement},
      {7, "Characteristic classes", 1, characteristic_classes},
      {8, "eta linearity and support", 1, eta_checks},
      {9, "Validation suite", 1, validation_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      o.notes.push_back("over the time budget of " + std::to_string(c.budget_seconds) + " s");
    }
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << secs * 1000;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ("
              << ms.str() << " ms)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    failed += o.ok ? 0 : 1;
  }
  return failed;
}
