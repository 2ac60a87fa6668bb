#include "facering/corners.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "facering/errors.hpp"

namespace facering {

bool is_subset(const Label& a, const Label& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Label label_union(const Label& a, const Label& b) {
  Label out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string label_to_string(const Label& l) {
  std::string s = "{";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + "}";
}

FaceComplex::FaceComplex(Field field, int m, std::vector<Face> faces, std::vector<Cover> covers,
                         std::vector<std::shared_ptr<const GradedAlgebra>> cohomology,
                         std::map<Cover, AlgebraMap> restrictions)
    : field_(field),
      m_(m),
      faces_(std::move(faces)),
      covers_(std::move(covers)),
      cohomology_(std::move(cohomology)),
      restrictions_(std::move(restrictions)) {
  const std::size_t n = faces_.size();
  if (m_ < 0) throw IndexOutOfRange("negative facet count");
  if (cohomology_.size() != n) throw IndexOutOfRange("need one algebra per face");
  for (const auto& a : cohomology_)
    if (!a) throw IndexOutOfRange("missing algebra");
  for (auto& f : faces_) std::sort(f.label.begin(), f.label.end());
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  for (const auto& cv : covers_)
    if (cv.lower >= n || cv.upper >= n) throw IndexOutOfRange("cover references unknown face");
  for (const auto& [cv, map] : restrictions_) {
    if (!std::binary_search(covers_.begin(), covers_.end(), cv))
      throw IndexOutOfRange("restriction supplied for a pair that is not a cover");
    if (map.source_ptr() != cohomology_[cv.upper] || map.target_ptr() != cohomology_[cv.lower])
      throw IndexOutOfRange("restriction does not connect the algebras of its cover");
  }

  // Reflexive-transitive closure of the cover relation.
  leq_.assign(n, std::vector<bool>(n, false));
  std::vector<std::vector<FaceId>> up(n);
  for (const auto& cv : covers_) up[cv.lower].push_back(cv.upper);
  for (FaceId e = 0; e < n; ++e) {
    std::vector<FaceId> stack{e};
    leq_[e][e] = true;
    while (!stack.empty()) {
      FaceId x = stack.back();
      stack.pop_back();
      for (FaceId y : up[x]) {
        if (!leq_[e][y]) {
          leq_[e][y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  for (FaceId a = 0; a < n && acyclic_; ++a)
    for (FaceId b = a + 1; b < n; ++b)
      if (leq_[a][b] && leq_[b][a]) {
        acyclic_ = false;
        break;
      }

  by_codim_.resize(n);
  for (FaceId f = 0; f < n; ++f) by_codim_[f] = f;
  std::stable_sort(by_codim_.begin(), by_codim_.end(),
                   [&](FaceId a, FaceId b) { return faces_[a].codim < faces_[b].codim; });

  if (!acyclic_) return;
  std::function<const AlgebraMap*(FaceId, FaceId)> build = [&](FaceId f,
                                                               FaceId e) -> const AlgebraMap* {
    if (auto it = composites_.find({f, e}); it != composites_.end()) return &it->second;
    if (f == e) return &composites_.emplace(std::pair{f, e}, AlgebraMap::identity(cohomology_[f]))
                             .first->second;
    for (FaceId g : lower_covers(f)) {
      if (!leq_[e][g]) continue;
      auto r = restrictions_.find(Cover{g, f});
      if (r == restrictions_.end()) continue;
      const AlgebraMap* rest = build(g, e);
      if (rest == nullptr) continue;
      return &composites_.emplace(std::pair{f, e}, compose(*rest, r->second)).first->second;
    }
    return nullptr;
  };
  for (FaceId f = 0; f < n; ++f)
    for (FaceId e = 0; e < n; ++e)
      if (leq_[e][f]) build(f, e);
}

std::optional<FaceId> FaceComplex::find(const std::string& name) const {
  for (FaceId f = 0; f < faces_.size(); ++f)
    if (faces_[f].name == name) return f;
  return std::nullopt;
}

FaceId FaceComplex::top() const {
  for (FaceId f = 0; f < faces_.size(); ++f)
    if (faces_[f].codim == 0 && faces_[f].label.empty()) return f;
  throw Error("complex has no top face");
}

FaceId FaceComplex::facet(int i) const {
  for (FaceId f = 0; f < faces_.size(); ++f)
    if (faces_[f].label == Label{i}) return f;
  throw IndexOutOfRange("no facet with index " + std::to_string(i));
}

std::vector<FaceId> FaceComplex::lower_covers(FaceId f) const {
  std::vector<FaceId> out;
  for (const auto& cv : covers_)
    if (cv.upper == f) out.push_back(cv.lower);
  return out;
}

std::vector<FaceId> FaceComplex::upper_covers(FaceId f) const {
  std::vector<FaceId> out;
  for (const auto& cv : covers_)
    if (cv.lower == f) out.push_back(cv.upper);
  return out;
}

const AlgebraMap* FaceComplex::composite(FaceId f, FaceId e) const {
  auto it = composites_.find({f, e});
  return it == composites_.end() ? nullptr : &it->second;
}

bool operator==(const FaceComplex& a, const FaceComplex& b) {
  if (a.field_ != b.field_ || a.m_ != b.m_ || a.faces_ != b.faces_ || a.covers_ != b.covers_)
    return false;
  for (FaceId f = 0; f < a.size(); ++f)
    if (!(a.algebra(f) == b.algebra(f))) return false;
  if (a.restrictions_.size() != b.restrictions_.size()) return false;
  for (const auto& [cv, map] : a.restrictions_) {
    auto it = b.restrictions_.find(cv);
    if (it == b.restrictions_.end() || it->second.images() != map.images()) return false;
  }
  return true;
}

const char* to_string(ComplexViolation::Kind kind) {
  using K = ComplexViolation::Kind;
  switch (kind) {
    case K::Structure: return "structure";
    case K::UniqueMaximum: return "unique maximum";
    case K::Niceness: return "niceness";
    case K::Monotonicity: return "monotonicity";
    case K::FacetIndexing: return "facet indexing";
    case K::UniqueComponent: return "unique component";
    case K::RestrictionFunctoriality: return "restriction functoriality";
    case K::Partition: return "partition";
    case K::Algebra: return "algebra";
    case K::Homomorphism: return "homomorphism";
  }
  return "?";
}

bool ComplexReport::has(ComplexViolation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const auto& v) { return v.kind == kind; });
}

std::vector<ComplexViolation> ComplexReport::of_kind(ComplexViolation::Kind kind) const {
  std::vector<ComplexViolation> out;
  for (const auto& v : violations)
    if (v.kind == kind) out.push_back(v);
  return out;
}

std::string ComplexReport::to_string(const FaceComplex& c) const {
  if (ok()) return "VALID\n";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << "VIOLATION " << facering::to_string(v.kind) << ":";
    for (FaceId f : v.faces)
      os << " " << (f < c.size() ? c.face(f).name : "#" + std::to_string(f));
    if (!v.label.empty()) os << " " << label_to_string(v.label);
    os << " -- " << v.detail << "\n";
  }
  return os.str();
}

ComplexReport validate_complex(const FaceComplex& c) {
  using K = ComplexViolation::Kind;
  ComplexReport r;
  const std::size_t n = c.size();
  auto add = [&](K kind, std::vector<FaceId> faces, Label label, std::string detail) {
    r.violations.push_back({kind, std::move(faces), std::move(label), std::move(detail)});
  };

  // Structure.
  std::set<std::string> names;
  for (FaceId f = 0; f < n; ++f) {
    const Face& face = c.face(f);
    if (!names.insert(face.name).second) add(K::Structure, {f}, {}, "duplicate face name");
    if (std::adjacent_find(face.label.begin(), face.label.end()) != face.label.end())
      add(K::Structure, {f}, face.label, "label repeats a facet index");
    if (!(c.algebra(f).field() == c.field()))
      add(K::Structure, {f}, {}, "face algebra is over " + c.algebra(f).field().name());
  }
  for (const auto& cv : c.covers()) {
    if (cv.lower == cv.upper) add(K::Structure, {cv.lower}, {}, "face covers itself");
    if (!c.restrictions().contains(cv))
      add(K::Structure, {cv.upper, cv.lower}, {}, "missing restriction for cover");
  }
  if (!c.order_is_acyclic()) {
    add(K::Structure, {}, {}, "containment relation has a cycle");
    return r;
  }

  // Q is the unique maximum.
  std::vector<FaceId> roots;
  for (FaceId f = 0; f < n; ++f)
    if (c.codim(f) == 0 && c.label(f).empty()) roots.push_back(f);
  if (roots.size() != 1) {
    add(K::UniqueMaximum, roots, {},
        std::to_string(roots.size()) + " faces with codim 0 and empty label");
  } else {
    for (FaceId f = 0; f < n; ++f)
      if (!c.leq(f, roots[0])) add(K::UniqueMaximum, {roots[0], f}, {}, "face not below the top");
  }

  for (FaceId f = 0; f < n; ++f)
    if (static_cast<int>(c.label(f).size()) != c.codim(f))
      add(K::Niceness, {f}, c.label(f),
          "codim " + std::to_string(c.codim(f)) + " but " + std::to_string(c.label(f).size()) +
              " facets");

  for (FaceId e = 0; e < n; ++e)
    for (FaceId f = 0; f < n; ++f)
      if (e != f && c.leq(e, f) && !is_subset(c.label(f), c.label(e)))
        add(K::Monotonicity, {e, f}, c.label(f), "E <= F but label(F) not inside label(E)");

  for (FaceId f = 0; f < n; ++f)
    for (int i : c.label(f))
      if (i < 1 || i > c.m())
        add(K::FacetIndexing, {f}, {i}, "facet index outside 1..m");
  for (int i = 1; i <= c.m(); ++i) {
    std::vector<FaceId> hits;
    for (FaceId f = 0; f < n; ++f)
      if (c.label(f) == Label{i}) hits.push_back(f);
    if (hits.size() != 1)
      add(K::FacetIndexing, hits, {i}, std::to_string(hits.size()) + " faces labelled {i}");
  }

  for (FaceId f = 0; f < n; ++f) {
    const Label& lf = c.label(f);
    if (lf.size() > 20) continue;  // reported by niceness/structure anyway
    for (std::size_t mask = 0; mask < (std::size_t{1} << lf.size()); ++mask) {
      Label s;
      for (std::size_t b = 0; b < lf.size(); ++b)
        if (mask >> b & 1) s.push_back(lf[b]);
      std::vector<FaceId> hits;
      for (FaceId e = 0; e < n; ++e)
        if (c.leq(f, e) && c.label(e) == s) hits.push_back(e);
      if (hits.size() != 1) {
        std::vector<FaceId> w{f};
        w.insert(w.end(), hits.begin(), hits.end());
        add(K::UniqueComponent, std::move(w), s,
            std::to_string(hits.size()) + " faces above with this label");
      }
    }
  }

  for (FaceId f = 0; f < n; ++f) {
    for (FaceId e = 0; e < n; ++e) {
      if (e == f || !c.leq(e, f)) continue;
      const AlgebraMap* reference = c.composite(f, e);
      std::optional<FaceId> reference_via;
      for (FaceId g : c.lower_covers(f)) {
        if (!c.leq(e, g)) continue;
        auto rit = c.restrictions().find(Cover{g, f});
        const AlgebraMap* rest = c.composite(g, e);
        if (rit == c.restrictions().end() || rest == nullptr || reference == nullptr) continue;
        auto via = compose(*rest, rit->second);
        if (!reference_via) {
          if (via.images() == reference->images()) reference_via = g;
          continue;
        }
        if (via.images() != reference->images()) {
          add(K::RestrictionFunctoriality, {f, e, *reference_via, g}, {},
              "restrictions through the two intermediate faces disagree");
          break;
        }
      }
    }
  }

  for (FaceId e1 = 0; e1 < n; ++e1) {
    for (FaceId e2 = e1; e2 < n; ++e2) {
      std::vector<FaceId> comps = components(c, e1, e2);
      for (FaceId f = 0; f < n; ++f) {
        if (!c.leq(f, e1) || !c.leq(f, e2)) continue;
        std::vector<FaceId> above;
        for (FaceId g : comps)
          if (c.leq(f, g)) above.push_back(g);
        if (above.size() != 1) {
          std::vector<FaceId> w{e1, e2, f};
          w.insert(w.end(), above.begin(), above.end());
          add(K::Partition, std::move(w), {},
              std::to_string(above.size()) + " maximal common lower bounds above the face");
        }
      }
    }
  }

  for (FaceId f = 0; f < n; ++f) {
    for (const auto& v : validate_algebra(c.algebra(f)).violations)
      add(K::Algebra, {f}, {}, std::string(to_string(v.kind)) + ": " + v.detail);
  }
  for (const auto& [cv, map] : c.restrictions()) {
    for (const auto& v : check_homomorphism(map))
      add(K::Homomorphism, {cv.upper, cv.lower}, {}, std::string(to_string(v.kind)) + ": " + v.detail);
  }
  return r;
}

FaceId face_of_label(const FaceComplex& c, FaceId f, const Label& s) {
  Label sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (!is_subset(sorted, c.label(f)))
    throw LabelNotSubset(label_to_string(sorted) + " is not inside the label " +
                         label_to_string(c.label(f)) + " of " + c.face(f).name);
  for (FaceId e = 0; e < c.size(); ++e)
    if (c.leq(f, e) && c.label(e) == sorted) return e;
  throw Error("no face above " + c.face(f).name + " carries label " + label_to_string(sorted));
}

std::vector<FaceId> components(const FaceComplex& c, FaceId e1, FaceId e2) {
  std::vector<FaceId> common;
  for (FaceId f = 0; f < c.size(); ++f)
    if (c.leq(f, e1) && c.leq(f, e2)) common.push_back(f);
  std::vector<FaceId> out;
  for (FaceId f : common) {
    bool maximal = std::none_of(common.begin(), common.end(),
                                [&](FaceId g) { return g != f && c.leq(f, g); });
    if (maximal) out.push_back(f);
  }
  return out;
}

AlgebraElement restrict_coeff(const FaceComplex& c, FaceId f, FaceId e, const AlgebraElement& a) {
  if (!c.leq(e, f))
    throw NotComparable(c.face(e).name + " is not a face of " + c.face(f).name);
  const AlgebraMap* map = c.composite(f, e);
  if (map == nullptr)
    throw NotComparable("no restriction data from " + c.face(f).name + " to " + c.face(e).name);
  return apply_map(*map, a);
}

}  // namespace facering
