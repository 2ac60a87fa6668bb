#include "facering/face_ring.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace facering {

namespace {

void prune(Polynomial& p) {
  std::erase_if(p, [](const auto& kv) { return alg_is_zero(kv.second); });
}

void accumulate(const GradedAlgebra& a, Polynomial& p, const Monomial& m, const AlgebraElement& x) {
  if (alg_is_zero(x)) return;
  auto [it, inserted] = p.try_emplace(m, x);
  if (!inserted) {
    it->second = alg_add(a, it->second, x);
    if (alg_is_zero(it->second)) p.erase(it);
  }
}

RingElement from_pruned(std::map<FaceId, Polynomial> comps) {
  return RingElement::adopt(std::move(comps));
}

}  // namespace

// -- Monomial ---------------------------------------------------------------

Monomial::Monomial(const std::map<int, int>& exponents) {
  for (auto [i, e] : exponents) {
    if (e < 0) throw IndexOutOfRange("negative exponent on x" + std::to_string(i));
    if (e > 0) exps_.emplace_back(i, e);
  }
}

Monomial Monomial::variable(int i, int power) { return Monomial(std::map<int, int>{{i, power}}); }

int Monomial::exponent(int i) const {
  for (auto [j, e] : exps_)
    if (j == i) return e;
  return 0;
}

int Monomial::total() const {
  int t = 0;
  for (auto [i, e] : exps_) t += e;
  return t;
}

Label Monomial::support() const {
  Label l;
  for (auto [i, e] : exps_) l.push_back(i);
  return l;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::map<int, int> e;
  for (auto [i, k] : a.exps_) e[i] += k;
  for (auto [i, k] : b.exps_) e[i] += k;
  return Monomial(e);
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (auto [i, e] : exps_) {
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// -- RingElement ------------------------------------------------------------

RingElement RingElement::adopt(std::map<FaceId, Polynomial> components) {
  std::erase_if(components, [](const auto& kv) { return kv.second.empty(); });
  RingElement r;
  r.components_ = std::move(components);
  return r;
}

RingElement RingElement::from_components(const FaceComplex& c,
                                         std::map<FaceId, Polynomial> components) {
  for (auto& [f, p] : components) {
    if (f >= c.size()) throw IndexOutOfRange("unknown face id " + std::to_string(f));
    for (const auto& [m, coeff] : p) {
      if (!is_subset(m.support(), c.label(f)))
        throw SupportViolation("monomial " + m.to_string() + " uses a variable outside " +
                               label_to_string(c.label(f)) + " at face " + c.face(f).name);
      if (coeff.size() != c.algebra(f).dim())
        throw IndexOutOfRange("coefficient length does not match H*(" + c.face(f).name + ")");
    }
    prune(p);
  }
  return from_pruned(std::move(components));
}

const Polynomial& RingElement::component(FaceId f) const {
  static const Polynomial empty;
  auto it = components_.find(f);
  return it == components_.end() ? empty : it->second;
}

// -- polynomial arithmetic ----------------------------------------------------

Polynomial poly_add(const FaceComplex& c, FaceId f, const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, x] : b) accumulate(c.algebra(f), out, m, x);
  return out;
}

Polynomial poly_scale(const FaceComplex& c, FaceId f, const Scalar& s, const Polynomial& a) {
  Polynomial out;
  if (s.is_zero()) return out;
  for (const auto& [m, x] : a) accumulate(c.algebra(f), out, m, alg_scale(c.algebra(f), s, x));
  return out;
}

Polynomial poly_mul(const FaceComplex& c, FaceId f, const Polynomial& a, const Polynomial& b) {
  const GradedAlgebra& alg = c.algebra(f);
  Polynomial out;
  for (const auto& [ma, xa] : a)
    for (const auto& [mb, xb] : b) accumulate(alg, out, ma * mb, alg_mul(alg, xa, xb));
  return out;
}

Polynomial phi(const FaceComplex& c, FaceId f, FaceId e, const Polynomial& p) {
  Polynomial out;
  if (!c.leq(e, f)) return out;
  for (const auto& [m, x] : p) accumulate(c.algebra(e), out, m, restrict_coeff(c, f, e, x));
  return out;
}

// -- face elements --------------------------------------------------------------

RingElement make_face_element(const FaceComplex& c, FaceId e, const Polynomial& p) {
  for (const auto& [m, x] : p) {
    if (m.support() != c.label(e))
      throw SupportViolation("monomial " + m.to_string() + " does not have support exactly " +
                             label_to_string(c.label(e)) + " of " + c.face(e).name);
    if (x.size() != c.algebra(e).dim())
      throw IndexOutOfRange("coefficient length does not match H*(" + c.face(e).name + ")");
  }
  std::map<FaceId, Polynomial> comps;
  for (FaceId f = 0; f < c.size(); ++f)
    if (c.leq(f, e)) comps[f] = phi(c, e, f, p);
  return from_pruned(std::move(comps));
}

RingElement top_element(const FaceComplex& c, const AlgebraElement& coeff) {
  Polynomial p;
  if (!alg_is_zero(coeff)) p[Monomial()] = coeff;
  return make_face_element(c, c.top(), p);
}

RingElement one(const FaceComplex& c) {
  return top_element(c, c.algebra(c.top()).unit_element());
}

bool is_compatible_at(const FaceComplex& c, const RingElement& a, FaceId e) {
  const Polynomial& ae = a.component(e);
  for (FaceId f = 0; f < c.size(); ++f) {
    if (f == e) continue;
    if (a.component(f) != phi(c, e, f, ae)) return false;
  }
  for (const auto& [f, p] : a.components())
    if (f >= c.size()) return false;
  return true;
}

bool is_face_element(const FaceComplex& c, const RingElement& a, FaceId e) {
  for (const auto& [m, x] : a.component(e))
    if (m.support() != c.label(e)) return false;
  return is_compatible_at(c, a, e);
}

RingElement theta(const FaceComplex& c, FaceId e, FaceId g, const RingElement& a) {
  if (!is_face_element(c, a, e))
    throw NotFaceElement("argument is not a " + c.face(e).name + "-face element");
  Polynomial at_g = phi(c, e, g, a.component(e));
  std::map<FaceId, Polynomial> comps;
  for (FaceId f = 0; f < c.size(); ++f) comps[f] = phi(c, g, f, at_g);
  RingElement out = from_pruned(std::move(comps));
  if (!is_compatible_at(c, out, g))
    throw std::logic_error("theta result is not compatible at " + c.face(g).name);
  return out;
}

// -- ring structure -------------------------------------------------------------

RingElement add(const FaceComplex& c, const RingElement& a, const RingElement& b) {
  std::map<FaceId, Polynomial> comps = a.components();
  for (const auto& [f, p] : b.components()) comps[f] = poly_add(c, f, comps[f], p);
  return from_pruned(std::move(comps));
}

RingElement scale(const FaceComplex& c, const Scalar& s, const RingElement& a) {
  std::map<FaceId, Polynomial> comps;
  for (const auto& [f, p] : a.components()) comps[f] = poly_scale(c, f, s, p);
  return from_pruned(std::move(comps));
}

RingElement sub(const FaceComplex& c, const RingElement& a, const RingElement& b) {
  return add(c, a, scale(c, c.field().from_int(-1), b));
}

RingElement linear_combine(const FaceComplex& c,
                           std::span<const std::pair<Scalar, RingElement>> terms) {
  RingElement out;
  for (const auto& [s, x] : terms) out = add(c, out, scale(c, s, x));
  return out;
}

RingElement multiply(const FaceComplex& c, const RingElement& a, const RingElement& b) {
  std::map<FaceId, Polynomial> comps;
  for (const auto& [f, pa] : a.components()) {
    const Polynomial& pb = b.component(f);
    if (pb.empty()) continue;
    comps[f] = poly_mul(c, f, pa, pb);
  }
  return from_pruned(std::move(comps));
}

FaceDecomposition decompose(const FaceComplex& c, const RingElement& a) {
  FaceDecomposition d;
  for (const auto& [f, p] : a.components())
    if (f >= c.size()) throw IndexOutOfRange("unknown face id " + std::to_string(f));
  // Faces above F have smaller codimension, so their parts are known when F
  // is reached.
  for (FaceId f : c.by_codim()) {
    Polynomial residual = a.component(f);
    for (const auto& [e, part] : d.parts) {
      if (e == f || !c.leq(f, e)) continue;
      residual = poly_add(c, f, residual, poly_scale(c, f, c.field().from_int(-1), phi(c, e, f, part)));
    }
    Polynomial own;
    for (const auto& [m, x] : residual) {
      if (m.support() != c.label(f)) {
        throw NotInFaceRing(f, m.support(),
                            "not in the face ring: at face " + c.face(f).name + " the support " +
                                label_to_string(m.support()) +
                                " part is not the restriction of a face element");
      }
      own.emplace(m, x);
    }
    if (!own.empty()) d.parts.emplace(f, std::move(own));
  }
  return d;
}

RingElement reconstruct(const FaceComplex& c, const FaceDecomposition& d) {
  RingElement out;
  for (const auto& [e, part] : d.parts) out = add(c, out, make_face_element(c, e, part));
  return out;
}

RingElement homogeneous_component(const FaceComplex& c, const RingElement& a, int degree) {
  std::map<FaceId, Polynomial> comps;
  for (const auto& [f, p] : a.components()) {
    const GradedAlgebra& alg = c.algebra(f);
    Polynomial q;
    for (const auto& [m, x] : p) accumulate(alg, q, m, alg_homogeneous(alg, x, degree - m.degree()));
    comps[f] = std::move(q);
  }
  return from_pruned(std::move(comps));
}

std::vector<int> degrees(const FaceComplex& c, const RingElement& a) {
  std::set<int> out;
  for (const auto& [f, p] : a.components())
    for (const auto& [m, x] : p)
      for (int d : alg_degrees(c.algebra(f), x)) out.insert(d + m.degree());
  return {out.begin(), out.end()};
}

std::uint64_t positive_monomial_count(int vars, int total) {
  if (vars == 0) return total == 0 ? 1 : 0;
  if (total < vars) return 0;
  // C(total - 1, vars - 1)
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(total - 1),
               static_cast<unsigned long>(vars - 1));
  if (!b.fits_ulong_p()) throw std::overflow_error("monomial count overflows");
  return b.get_ui();
}

std::vector<std::uint64_t> hilbert(const FaceComplex& c, int max_degree) {
  std::vector<std::uint64_t> dims(static_cast<std::size_t>(std::max(max_degree + 1, 0)), 0);
  for (FaceId e = 0; e < c.size(); ++e) {
    const GradedAlgebra& alg = c.algebra(e);
    const int vars = static_cast<int>(c.label(e).size());
    for (int d = 0; d <= max_degree; ++d) {
      std::uint64_t sum = 0;
      for (int j = 0; 2 * j <= d; ++j) {
        std::uint64_t h = alg.dim_in_degree(d - 2 * j);
        if (h == 0) continue;
        sum += h * positive_monomial_count(vars, j);
      }
      dims[static_cast<std::size_t>(d)] += sum;
    }
  }
  return dims;
}

RingElement tau(const FaceComplex& c, int i) {
  if (i < 1 || i > c.m()) throw IndexOutOfRange("facet index " + std::to_string(i));
  FaceId fi = c.facet(i);
  Polynomial p;
  p[Monomial::variable(i)] = c.algebra(fi).unit_element();
  return make_face_element(c, fi, p);
}

// -- torus data -------------------------------------------------------------------

void validate_torus_data(const FaceComplex& c, const TorusData& t) {
  if (t.n < 0) throw ShapeMismatch("negative torus rank");
  if (static_cast<int>(t.v.size()) != c.m())
    throw ShapeMismatch("expected " + std::to_string(c.m()) + " weight vectors, got " +
                        std::to_string(t.v.size()));
  for (const auto& vi : t.v)
    if (static_cast<int>(vi.size()) != t.n) throw ShapeMismatch("weight vector of wrong length");
  std::size_t h2 = c.algebra(c.top()).dim_in_degree(2);
  if (t.c.size() != h2)
    throw ShapeMismatch("c needs " + std::to_string(h2) + " rows (dim H^2(Q)), got " +
                        std::to_string(t.c.size()));
  for (const auto& row : t.c)
    if (static_cast<int>(row.size()) != t.n) throw ShapeMismatch("row of c has wrong length");
}

RingElement eta(const FaceComplex& c, const TorusData& t, std::span<const Scalar> u) {
  validate_torus_data(c, t);
  if (static_cast<int>(u.size()) != t.n)
    throw ShapeMismatch("u has length " + std::to_string(u.size()) + ", torus rank is " +
                        std::to_string(t.n));
  const Field& k = c.field();
  const GradedAlgebra& hq = c.algebra(c.top());

  AlgebraElement cu = hq.zero();
  std::size_t row = 0;
  for (std::size_t b = 0; b < hq.dim(); ++b) {
    if (hq.degree_of(b) != 2) continue;
    Scalar s = k.zero();
    for (int j = 0; j < t.n; ++j) s = k.add(s, k.mul(t.c[row][j], u[j]));
    cu[b] = s;
    ++row;
  }
  RingElement out = top_element(c, cu);
  for (int i = 1; i <= c.m(); ++i) {
    Scalar pairing = k.zero();
    for (int j = 0; j < t.n; ++j) pairing = k.add(pairing, k.mul(k.from_int(t.v[i - 1][j]), u[j]));
    out = add(c, out, scale(c, pairing, tau(c, i)));
  }
  return out;
}

// -- printing ---------------------------------------------------------------------

std::string to_string(const FaceComplex& c, FaceId f, const Polynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, x] : p) {
    if (!first) os << " + ";
    os << "[" << alg_to_string(c.algebra(f), x) << "]";
    if (!m.is_one()) os << " " << m.to_string();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string to_string(const FaceComplex& c, const RingElement& a) {
  if (a.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [f, p] : a.components()) os << c.face(f).name << ": " << to_string(c, f, p) << "\n";
  return os.str();
}

std::string to_string(const FaceComplex& c, const FaceDecomposition& d) {
  if (d.parts.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [f, p] : d.parts)
    os << "theta(" << c.face(f).name << "): " << to_string(c, f, p) << "\n";
  return os.str();
}

}  // namespace facering
