#include "facering/algebra.hpp"

#include <set>
#include <sstream>

#include "facering/errors.hpp"

namespace facering {

namespace {

void require_size(const GradedAlgebra& a, const AlgebraElement& x) {
  if (x.size() != a.dim())
    throw IndexOutOfRange("element has " + std::to_string(x.size()) +
                          " coefficients, algebra has dimension " + std::to_string(a.dim()));
}

std::string basis_names(const GradedAlgebra& a, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i : idx) {
    if (!s.empty()) s += ",";
    s += a.basis()[i].name;
  }
  return s;
}

}  // namespace

GradedAlgebra::GradedAlgebra(Field field, int top_degree, std::vector<BasisElement> basis,
                             std::size_t unit, StructureTable products)
    : field_(field),
      top_degree_(top_degree),
      basis_(std::move(basis)),
      unit_(unit),
      products_(std::move(products)) {
  if (top_degree_ < 0) throw IndexOutOfRange("negative top degree");
  if (unit_ >= basis_.size()) throw IndexOutOfRange("unit index out of range");
  for (auto it = products_.begin(); it != products_.end();) {
    auto [i, j] = it->first;
    if (i >= basis_.size() || j >= basis_.size())
      throw IndexOutOfRange("structure constant references a nonexistent basis element");
    if (it->second.size() != basis_.size())
      throw IndexOutOfRange("structure constant has wrong length");
    if (alg_is_zero(it->second)) {
      it = products_.erase(it);
    } else {
      ++it;
    }
  }
}

GradedAlgebra GradedAlgebra::point(Field field) {
  StructureTable t;
  t[{0, 0}] = AlgebraElement{field.one()};
  return GradedAlgebra(field, 0, {{"1", 0}}, 0, std::move(t));
}

std::size_t GradedAlgebra::dim_in_degree(int d) const {
  std::size_t n = 0;
  for (const auto& b : basis_) n += (b.degree == d);
  return n;
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

AlgebraElement GradedAlgebra::basis_element(std::size_t i) const {
  if (i >= dim()) throw IndexOutOfRange("basis index " + std::to_string(i));
  AlgebraElement e = zero();
  e[i] = field_.one();
  return e;
}

const AlgebraElement* GradedAlgebra::product(std::size_t i, std::size_t j) const {
  if (basis_[i].degree + basis_[j].degree > top_degree_) return nullptr;
  auto it = products_.find({i, j});
  return it == products_.end() ? nullptr : &it->second;
}

AlgebraElement alg_mul(const GradedAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  require_size(a, x);
  require_size(a, y);
  const Field& f = a.field();
  AlgebraElement out = a.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      const AlgebraElement* p = a.product(i, j);
      if (p == nullptr) continue;
      Scalar c = f.mul(x[i], y[j]);
      for (std::size_t k = 0; k < p->size(); ++k)
        if (!(*p)[k].is_zero()) out[k] = f.add(out[k], f.mul(c, (*p)[k]));
    }
  }
  return out;
}

AlgebraElement alg_add(const GradedAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  require_size(a, x);
  require_size(a, y);
  AlgebraElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a.field().add(x[i], y[i]);
  return out;
}

AlgebraElement alg_scale(const GradedAlgebra& a, const Scalar& s, const AlgebraElement& x) {
  require_size(a, x);
  AlgebraElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a.field().mul(s, x[i]);
  return out;
}

bool alg_is_zero(const AlgebraElement& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

AlgebraElement alg_homogeneous(const GradedAlgebra& a, const AlgebraElement& x, int d) {
  require_size(a, x);
  AlgebraElement out = a.zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (a.degree_of(i) == d) out[i] = x[i];
  return out;
}

std::vector<int> alg_degrees(const GradedAlgebra& a, const AlgebraElement& x) {
  std::set<int> ds;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) ds.insert(a.degree_of(i));
  return {ds.begin(), ds.end()};
}

std::string alg_to_string(const GradedAlgebra& a, const AlgebraElement& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    mpq_class v = x[i].value();
    bool negative = sgn(v) < 0;
    if (negative) v = -v;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    // The unit is printed as a bare scalar.
    if (i == a.unit()) os << v.get_str();
    else {
      if (v != 1) os << v.get_str() << "*";
      os << a.basis()[i].name;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

const char* to_string(AlgebraViolation::Kind kind) {
  switch (kind) {
    case AlgebraViolation::Kind::Shape: return "shape";
    case AlgebraViolation::Kind::UnitLaw: return "unit law";
    case AlgebraViolation::Kind::DegreeAdditivity: return "degree additivity";
    case AlgebraViolation::Kind::GradedCommutativity: return "graded commutativity";
    case AlgebraViolation::Kind::Associativity: return "associativity";
  }
  return "?";
}

bool AlgebraReport::has(AlgebraViolation::Kind kind) const {
  for (const auto& v : violations)
    if (v.kind == kind) return true;
  return false;
}

AlgebraReport validate_algebra(const GradedAlgebra& a) {
  using K = AlgebraViolation::Kind;
  AlgebraReport r;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  auto add = [&](K kind, std::vector<std::size_t> w, const std::string& what) {
    r.violations.push_back({kind, w, what + " [" + basis_names(a, w) + "]"});
  };

  std::set<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = a.basis()[i];
    if (b.degree < 0 || b.degree > a.top_degree())
      add(K::Shape, {i}, "basis degree outside [0, top_degree]");
    if (!names.insert(b.name).second) add(K::Shape, {i}, "duplicate basis name");
  }
  if (a.degree_of(a.unit()) != 0) add(K::Shape, {a.unit()}, "unit is not in degree 0");
  if (!r.ok()) return r;

  for (std::size_t i = 0; i < n; ++i) {
    AlgebraElement b = a.basis_element(i);
    if (alg_mul(a, a.unit_element(), b) != b || alg_mul(a, b, a.unit_element()) != b)
      add(K::UnitLaw, {a.unit(), i}, "unit does not act as identity");
  }

  // Raw table entries, before truncation.
  for (const auto& [key, value] : a.products()) {
    auto [i, j] = key;
    int want = a.degree_of(i) + a.degree_of(j);
    for (int d : alg_degrees(a, value)) {
      if (d != want) {
        add(K::DegreeAdditivity, {i, j},
            "product of degrees " + std::to_string(a.degree_of(i)) + "+" +
                std::to_string(a.degree_of(j)) + " lands in degree " + std::to_string(d));
        break;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      AlgebraElement bi = a.basis_element(i), bj = a.basis_element(j);
      AlgebraElement lhs = alg_mul(a, bi, bj);
      AlgebraElement rhs = alg_mul(a, bj, bi);
      if ((a.degree_of(i) * a.degree_of(j)) % 2 != 0) rhs = alg_scale(a, f.from_int(-1), rhs);
      if (lhs != rhs) add(K::GradedCommutativity, {i, j}, "b_i*b_j != (-1)^{|i||j|} b_j*b_i");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a.degree_of(i) + a.degree_of(j) + a.degree_of(k) > a.top_degree()) continue;
        AlgebraElement bi = a.basis_element(i), bj = a.basis_element(j), bk = a.basis_element(k);
        if (alg_mul(a, alg_mul(a, bi, bj), bk) != alg_mul(a, bi, alg_mul(a, bj, bk)))
          add(K::Associativity, {i, j, k}, "(b_i*b_j)*b_k != b_i*(b_j*b_k)");
      }
    }
  }
  return r;
}

AlgebraMap::AlgebraMap(std::shared_ptr<const GradedAlgebra> source,
                       std::shared_ptr<const GradedAlgebra> target,
                       std::vector<std::optional<AlgebraElement>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->dim())
    throw IndexOutOfRange("map needs one image slot per source basis element");
  for (const auto& img : images_)
    if (img && img->size() != target_->dim())
      throw IndexOutOfRange("image has wrong length for the target algebra");
}

AlgebraMap AlgebraMap::identity(std::shared_ptr<const GradedAlgebra> a) {
  std::vector<std::optional<AlgebraElement>> images;
  for (std::size_t i = 0; i < a->dim(); ++i) images.emplace_back(a->basis_element(i));
  return AlgebraMap(a, a, std::move(images));
}

AlgebraElement apply_map(const AlgebraMap& f, const AlgebraElement& x) {
  require_size(f.source(), x);
  const Field& k = f.target().field();
  AlgebraElement out = f.target().zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    const auto& img = f.images()[i];
    if (!img)
      throw DegreeMismatch("map undefined on degree " + std::to_string(f.source().degree_of(i)) +
                           " (basis element " + f.source().basis()[i].name + ")");
    for (std::size_t j = 0; j < img->size(); ++j)
      if (!(*img)[j].is_zero()) out[j] = k.add(out[j], k.mul(x[i], (*img)[j]));
  }
  return out;
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
  std::vector<std::optional<AlgebraElement>> images;
  for (const auto& img : f.images()) {
    if (!img) {
      images.emplace_back();
      continue;
    }
    try {
      images.emplace_back(apply_map(g, *img));
    } catch (const DegreeMismatch&) {
      images.emplace_back();
    }
  }
  return AlgebraMap(f.source_ptr(), g.target_ptr(), std::move(images));
}

const char* to_string(MapViolation::Kind kind) {
  switch (kind) {
    case MapViolation::Kind::Undefined: return "undefined degree";
    case MapViolation::Kind::NotDegreePreserving: return "not degree preserving";
    case MapViolation::Kind::UnitNotPreserved: return "unit not preserved";
    case MapViolation::Kind::NotMultiplicative: return "not multiplicative";
    case MapViolation::Kind::FieldMismatch: return "field mismatch";
  }
  return "?";
}

std::vector<MapViolation> check_homomorphism(const AlgebraMap& f) {
  using K = MapViolation::Kind;
  std::vector<MapViolation> out;
  const GradedAlgebra& s = f.source();
  const GradedAlgebra& t = f.target();
  if (s.field() != t.field()) {
    out.push_back({K::FieldMismatch, {}, s.field().name() + " vs " + t.field().name()});
    return out;
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto& img = f.images()[i];
    if (!img) {
      out.push_back({K::Undefined, {i}, "no image for " + s.basis()[i].name});
      continue;
    }
    for (int d : alg_degrees(t, *img)) {
      if (d != s.degree_of(i)) {
        out.push_back({K::NotDegreePreserving, {i},
                       s.basis()[i].name + " maps into degree " + std::to_string(d)});
        break;
      }
    }
  }
  if (!out.empty()) return out;
  if (apply_map(f, s.unit_element()) != t.unit_element())
    out.push_back({K::UnitNotPreserved, {s.unit()}, "unit maps to " +
                   alg_to_string(t, apply_map(f, s.unit_element()))});
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      AlgebraElement bi = s.basis_element(i), bj = s.basis_element(j);
      if (apply_map(f, alg_mul(s, bi, bj)) !=
          alg_mul(t, apply_map(f, bi), apply_map(f, bj)))
        out.push_back({K::NotMultiplicative, {i, j},
                       "f(" + s.basis()[i].name + "*" + s.basis()[j].name + ") differs"});
    }
  }
  return out;
}

}  // namespace facering
