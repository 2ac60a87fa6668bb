#include "facering/models.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace facering {

using nlohmann::json;

// -- builder --------------------------------------------------------------------

ComplexBuilder& ComplexBuilder::face(std::string name, int codim, Label label) {
  return face(std::move(name), codim, std::move(label), GradedAlgebra::point(field_));
}

ComplexBuilder& ComplexBuilder::face(std::string name, int codim, Label label,
                                     GradedAlgebra algebra) {
  faces_.push_back({std::move(name), codim, std::move(label)});
  algebras_.push_back(std::make_shared<const GradedAlgebra>(std::move(algebra)));
  return *this;
}

ComplexBuilder& ComplexBuilder::cover(const std::string& lower, const std::string& upper) {
  covers_.push_back({lower, upper, true, true, {}});
  return *this;
}

ComplexBuilder& ComplexBuilder::cover(const std::string& lower, const std::string& upper,
                                      std::vector<std::optional<AlgebraElement>> images) {
  covers_.push_back({lower, upper, true, false, std::move(images)});
  return *this;
}

ComplexBuilder& ComplexBuilder::bare_cover(const std::string& lower, const std::string& upper) {
  covers_.push_back({lower, upper, false, false, {}});
  return *this;
}

FaceId ComplexBuilder::id(const std::string& name) const {
  for (FaceId f = 0; f < faces_.size(); ++f)
    if (faces_[f].name == name) return f;
  throw IndexOutOfRange("unknown face '" + name + "'");
}

FaceComplex ComplexBuilder::build() const {
  std::vector<Cover> covers;
  std::map<Cover, AlgebraMap> maps;
  for (const auto& pc : covers_) {
    Cover cv{id(pc.lower), id(pc.upper)};
    covers.push_back(cv);
    if (!pc.has_map) continue;
    const auto& src = algebras_[cv.upper];
    const auto& dst = algebras_[cv.lower];
    std::vector<std::optional<AlgebraElement>> images = pc.images;
    if (pc.by_name) {
      images.clear();
      for (const auto& b : src->basis()) {
        auto j = dst->index_of(b.name);
        images.emplace_back(j ? dst->basis_element(*j) : dst->zero());
      }
    }
    maps.insert_or_assign(cv, AlgebraMap(src, dst, std::move(images)));
  }
  return FaceComplex(field_, m_, faces_, covers, algebras_, std::move(maps));
}

// -- builtins -------------------------------------------------------------------

namespace {

GradedAlgebra with_units(Field k, int top, std::vector<BasisElement> basis,
                         std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> extra) {
  StructureTable t;
  const std::size_t n = basis.size();
  auto e = [&](std::size_t i) {
    AlgebraElement v(n);
    v[i] = k.one();
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    t[{0, i}] = e(i);
    t[{i, 0}] = e(i);
  }
  for (auto [i, j, r] : extra) t[{i, j}] = e(r);
  return GradedAlgebra(k, top, std::move(basis), 0, std::move(t));
}

AlgebraElement combo(const GradedAlgebra& a, std::initializer_list<std::size_t> idx) {
  AlgebraElement v = a.zero();
  for (std::size_t i : idx) v[i] = a.field().one();
  return v;
}

void polygon(ComplexBuilder& b, int sides) {
  for (int i = 1; i <= sides; ++i) b.face("F" + std::to_string(i), 1, {i});
  for (int i = 1; i <= sides; ++i) {
    int j = i % sides + 1;
    int lo = std::min(i, j), hi = std::max(i, j);
    std::string v = "v" + std::to_string(lo) + std::to_string(hi);
    b.face(v, 2, {lo, hi});
  }
  for (int i = 1; i <= sides; ++i) b.cover("F" + std::to_string(i), "Q");
  for (int i = 1; i <= sides; ++i) {
    int j = i % sides + 1;
    int lo = std::min(i, j), hi = std::max(i, j);
    std::string v = "v" + std::to_string(lo) + std::to_string(hi);
    b.cover(v, "F" + std::to_string(lo));
    b.cover(v, "F" + std::to_string(hi));
  }
}

TorusData standard_torus(std::vector<std::vector<long>> v, std::size_t h2_rows, const Field& k) {
  TorusData t;
  t.n = 2;
  t.v = std::move(v);
  t.c.assign(h2_rows, std::vector<Scalar>(2, k.zero()));
  return t;
}

CharClassData unit_classes(const FaceComplex& c) {
  AlgebraElement u = c.algebra(c.top()).unit_element();
  return {u, u};
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"bigon", "triangle", "square", "rp2-no-boundary", "connected-sum"};
}

Model build_builtin(std::string_view name, std::optional<Field> field) {
  if (name == "rp2-no-boundary") {
    if (field && field->characteristic() != 2)
      throw InvalidField("rp2-no-boundary is only available over F2");
    Field k = Field::of_characteristic(2);
    GradedAlgebra rp2 = with_units(k, 2, {{"1", 0}, {"a", 1}, {"a2", 2}}, {{1, 1, 2}});
    ComplexBuilder b(k, 0);
    b.face("Q", 0, {}, rp2);
    FaceComplex c = b.build();
    CharClassData chars{combo(rp2, {0, 1, 2}), rp2.unit_element()};
    TorusData t = standard_torus({}, 1, k);
    return Model{std::move(c), std::move(t), std::move(chars)};
  }

  Field k = field.value_or(Field::rationals());
  if (name == "bigon") {
    ComplexBuilder b(k, 2);
    b.face("Q", 0, {}).face("F1", 1, {1}).face("F2", 1, {2});
    b.face("p", 2, {1, 2}).face("q", 2, {1, 2});
    b.cover("F1", "Q").cover("F2", "Q");
    b.cover("p", "F1").cover("p", "F2").cover("q", "F1").cover("q", "F2");
    FaceComplex c = b.build();
    CharClassData chars = unit_classes(c);
    return Model{std::move(c), standard_torus({{1, 0}, {0, 1}}, 0, k), std::move(chars)};
  }
  if (name == "triangle" || name == "square") {
    int sides = name == "triangle" ? 3 : 4;
    ComplexBuilder b(k, sides);
    b.face("Q", 0, {});
    polygon(b, sides);
    FaceComplex c = b.build();
    CharClassData chars = unit_classes(c);
    auto v = sides == 3 ? std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}}
                        : std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 0}, {0, 1}};
    return Model{std::move(c), standard_torus(std::move(v), 0, k), std::move(chars)};
  }
  if (name == "connected-sum") {
    // Genus-one surface minus a disk, boundary cut into three edges. All
    // positive-degree products land above the top degree.
    GradedAlgebra q = with_units(k, 1, {{"1", 0}, {"b1", 1}, {"b2", 1}}, {});
    ComplexBuilder b(k, 3);
    b.face("Q", 0, {}, q);
    polygon(b, 3);
    FaceComplex c = b.build();
    CharClassData chars = unit_classes(c);
    return Model{std::move(c), standard_torus({{1, 0}, {0, 1}, {1, 1}}, 0, k), std::move(chars)};
  }
  throw UnknownModel("unknown builtin model '" + std::string(name) + "'");
}

// -- JSON helpers -----------------------------------------------------------------

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; });
    if (!ok) fail(path, "unexpected field '" + k + "'");
  }
}

long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Scalar as_scalar(const Field& k, const json& j, const std::string& path) {
  if (j.is_number_float()) fail(path, "floating-point literals are not allowed");
  try {
    if (j.is_number_integer()) return k.from_int(j.get<long>());
    if (j.is_string()) return k.parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "expected a scalar (integer or \"p/q\" string)");
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

AlgebraElement as_combination(const GradedAlgebra& a, const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object of basis-name -> scalar");
  AlgebraElement v = a.zero();
  for (const auto& [name, val] : j.items()) {
    auto idx = a.index_of(name);
    if (!idx) fail(path, "unknown basis element '" + name + "'");
    v[*idx] = as_scalar(a.field(), val, path + "/" + name);
  }
  return v;
}

json combination_json(const GradedAlgebra& a, const AlgebraElement& x) {
  json out = json::object();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out[a.basis()[i].name] = x[i].to_string();
  return out;
}

GradedAlgebra parse_algebra(const Field& k, const json& j, const std::string& path) {
  only_keys(j, {"top_degree", "unit", "basis", "products"}, path);
  int top = static_cast<int>(as_int(member(j, "top_degree", path), path + "/top_degree"));
  std::vector<BasisElement> basis;
  const json& bj = array_at(member(j, "basis", path), path + "/basis");
  for (std::size_t i = 0; i < bj.size(); ++i) {
    std::string p = path + "/basis/" + std::to_string(i);
    only_keys(bj[i], {"name", "degree"}, p);
    basis.push_back({as_string(member(bj[i], "name", p), p + "/name"),
                     static_cast<int>(as_int(member(bj[i], "degree", p), p + "/degree"))});
  }
  auto index = [&](const std::string& name, const std::string& p) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == name) return i;
    fail(p, "unknown basis element '" + name + "'");
  };
  std::size_t unit = index(as_string(member(j, "unit", path), path + "/unit"), path + "/unit");
  if (top < 0) fail(path + "/top_degree", "must be nonnegative");
  GradedAlgebra shape(k, top, basis, unit, {});
  StructureTable table;
  const json& pj = array_at(member(j, "products", path), path + "/products");
  for (std::size_t i = 0; i < pj.size(); ++i) {
    std::string p = path + "/products/" + std::to_string(i);
    only_keys(pj[i], {"lhs", "rhs", "value"}, p);
    std::size_t l = index(as_string(member(pj[i], "lhs", p), p + "/lhs"), p + "/lhs");
    std::size_t r = index(as_string(member(pj[i], "rhs", p), p + "/rhs"), p + "/rhs");
    if (table.contains({l, r})) fail(p, "duplicate structure constant");
    table[{l, r}] = as_combination(shape, member(pj[i], "value", p), p + "/value");
  }
  return GradedAlgebra(k, top, std::move(basis), unit, std::move(table));
}

json algebra_json(const GradedAlgebra& a) {
  json basis = json::array();
  for (const auto& b : a.basis()) basis.push_back({{"name", b.name}, {"degree", b.degree}});
  json products = json::array();
  for (const auto& [key, value] : a.products())
    products.push_back({{"lhs", a.basis()[key.first].name},
                        {"rhs", a.basis()[key.second].name},
                        {"value", combination_json(a, value)}});
  return {{"top_degree", a.top_degree()},
          {"unit", a.basis()[a.unit()].name},
          {"basis", basis},
          {"products", products}};
}

}  // namespace

// -- model files ------------------------------------------------------------------

std::string serialize_model(const Model& model) {
  const FaceComplex& c = model.complex;
  json j;
  j["field"] = {{"characteristic", c.field().characteristic()}};
  json faces = json::array();
  for (const auto& f : c.faces()) faces.push_back({{"name", f.name}, {"codim", f.codim}, {"label", f.label}});
  j["faces"] = faces;
  json covers = json::array();
  for (const auto& cv : c.covers()) covers.push_back({c.face(cv.lower).name, c.face(cv.upper).name});
  j["covers"] = covers;
  json algebras = json::object();
  for (FaceId f = 0; f < c.size(); ++f) algebras[c.face(f).name] = algebra_json(c.algebra(f));
  j["algebras"] = algebras;
  json restrictions = json::array();
  for (const auto& cv : c.covers()) {
    auto it = c.restrictions().find(cv);
    if (it == c.restrictions().end()) continue;
    const AlgebraMap& map = it->second;
    json images = json::object();
    for (std::size_t i = 0; i < map.source().dim(); ++i) {
      if (!map.images()[i]) continue;
      images[map.source().basis()[i].name] = combination_json(map.target(), *map.images()[i]);
    }
    restrictions.push_back({{"from", c.face(cv.upper).name},
                            {"to", c.face(cv.lower).name},
                            {"images", images}});
  }
  j["restrictions"] = restrictions;
  if (model.torus) {
    json c_rows = json::array();
    for (const auto& row : model.torus->c) {
      json r = json::array();
      for (const auto& s : row) r.push_back(s.to_string());
      c_rows.push_back(r);
    }
    j["torus_data"] = {{"n", model.torus->n}, {"v", model.torus->v}, {"c", c_rows}};
  }
  if (model.chars) {
    json cd = json::object();
    const GradedAlgebra& hq = c.algebra(c.top());
    if (model.chars->sw) cd["sw"] = combination_json(hq, *model.chars->sw);
    if (model.chars->pont) cd["pont"] = combination_json(hq, *model.chars->pont);
    j["char_data"] = cd;
  }
  return j.dump(2) + "\n";
}

Model parse_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(j, {"field", "faces", "covers", "algebras", "restrictions", "torus_data", "char_data"}, "");

  const json& fj = member(j, "field", "");
  only_keys(fj, {"characteristic"}, "/field");
  long ch = as_int(member(fj, "characteristic", "/field"), "/field/characteristic");
  if (ch < 0) fail("/field/characteristic", "must be nonnegative");
  Field k;
  try {
    k = Field::of_characteristic(static_cast<std::uint64_t>(ch));
  } catch (const Error& e) {
    fail("/field/characteristic", e.what());
  }

  std::vector<Face> faces;
  std::map<std::string, FaceId> ids;
  int m = 0;
  const json& faces_j = array_at(member(j, "faces", ""), "/faces");
  for (std::size_t i = 0; i < faces_j.size(); ++i) {
    std::string p = "/faces/" + std::to_string(i);
    only_keys(faces_j[i], {"name", "codim", "label"}, p);
    Face f;
    f.name = as_string(member(faces_j[i], "name", p), p + "/name");
    f.codim = static_cast<int>(as_int(member(faces_j[i], "codim", p), p + "/codim"));
    const json& lj = array_at(member(faces_j[i], "label", p), p + "/label");
    for (std::size_t t = 0; t < lj.size(); ++t) {
      long idx = as_int(lj[t], p + "/label/" + std::to_string(t));
      if (idx < 1) fail(p + "/label/" + std::to_string(t), "facet indices start at 1");
      f.label.push_back(static_cast<int>(idx));
      m = std::max(m, static_cast<int>(idx));
    }
    if (!ids.emplace(f.name, i).second) fail(p + "/name", "duplicate face name '" + f.name + "'");
    faces.push_back(std::move(f));
  }
  auto face_id = [&](const json& v, const std::string& p) {
    std::string name = as_string(v, p);
    auto it = ids.find(name);
    if (it == ids.end()) fail(p, "unknown face '" + name + "'");
    return it->second;
  };

  std::vector<Cover> covers;
  const json& cj = array_at(member(j, "covers", ""), "/covers");
  for (std::size_t i = 0; i < cj.size(); ++i) {
    std::string p = "/covers/" + std::to_string(i);
    if (!cj[i].is_array() || cj[i].size() != 2) fail(p, "expected [lower, upper]");
    covers.push_back({face_id(cj[i][0], p + "/0"), face_id(cj[i][1], p + "/1")});
  }

  std::vector<std::shared_ptr<const GradedAlgebra>> algebras(faces.size());
  const json& aj = member(j, "algebras", "");
  if (!aj.is_object()) fail("/algebras", "expected an object keyed by face name");
  for (const auto& [name, val] : aj.items()) {
    auto it = ids.find(name);
    if (it == ids.end()) fail("/algebras/" + name, "unknown face");
    try {
      algebras[it->second] = std::make_shared<const GradedAlgebra>(parse_algebra(k, val, "/algebras/" + name));
    } catch (const IndexOutOfRange& e) {
      fail("/algebras/" + name, e.what());
    }
  }
  for (FaceId f = 0; f < faces.size(); ++f)
    if (!algebras[f]) fail("/algebras", "missing algebra for face '" + faces[f].name + "'");

  std::map<Cover, AlgebraMap> maps;
  const json& rj = array_at(member(j, "restrictions", ""), "/restrictions");
  for (std::size_t i = 0; i < rj.size(); ++i) {
    std::string p = "/restrictions/" + std::to_string(i);
    only_keys(rj[i], {"from", "to", "images"}, p);
    Cover cv{face_id(member(rj[i], "to", p), p + "/to"), face_id(member(rj[i], "from", p), p + "/from")};
    if (std::find(covers.begin(), covers.end(), cv) == covers.end())
      fail(p, "restriction for a pair that is not listed in covers");
    if (maps.contains(cv)) fail(p, "duplicate restriction");
    const auto& src = algebras[cv.upper];
    const auto& dst = algebras[cv.lower];
    const json& ij = member(rj[i], "images", p);
    if (!ij.is_object()) fail(p + "/images", "expected an object");
    std::vector<std::optional<AlgebraElement>> images(src->dim());
    for (const auto& [bname, val] : ij.items()) {
      auto idx = src->index_of(bname);
      if (!idx) fail(p + "/images/" + bname, "unknown basis element of the source algebra");
      images[*idx] = as_combination(*dst, val, p + "/images/" + bname);
    }
    for (std::size_t b = 0; b < images.size(); ++b)
      if (!images[b]) fail(p + "/images", "no image for basis element '" + src->basis()[b].name + "'");
    maps.insert_or_assign(cv, AlgebraMap(src, dst, std::move(images)));
  }
  for (std::size_t i = 0; i < covers.size(); ++i)
    if (!maps.contains(covers[i]))
      fail("/covers/" + std::to_string(i), "missing restriction matrix for cover " +
                                                faces[covers[i].lower].name + " < " +
                                                faces[covers[i].upper].name);

  std::optional<FaceComplex> complex;
  try {
    complex.emplace(k, m, std::move(faces), std::move(covers), std::move(algebras), std::move(maps));
  } catch (const IndexOutOfRange& e) {
    throw ParseError(std::string("/: ") + e.what());
  }
  ComplexReport report = validate_complex(*complex);
  if (!report.ok()) throw ValidationError(report, report.to_string(*complex));

  Model model{std::move(*complex), std::nullopt, std::nullopt};
  const FaceComplex& c = model.complex;
  if (auto it = j.find("torus_data"); it != j.end()) {
    only_keys(*it, {"n", "v", "c"}, "/torus_data");
    TorusData t;
    t.n = static_cast<int>(as_int(member(*it, "n", "/torus_data"), "/torus_data/n"));
    const json& vj = array_at(member(*it, "v", "/torus_data"), "/torus_data/v");
    for (std::size_t i = 0; i < vj.size(); ++i) {
      std::string p = "/torus_data/v/" + std::to_string(i);
      std::vector<long> row;
      for (std::size_t q = 0; q < array_at(vj[i], p).size(); ++q)
        row.push_back(as_int(vj[i][q], p + "/" + std::to_string(q)));
      t.v.push_back(std::move(row));
    }
    const json& cmat = array_at(member(*it, "c", "/torus_data"), "/torus_data/c");
    for (std::size_t i = 0; i < cmat.size(); ++i) {
      std::string p = "/torus_data/c/" + std::to_string(i);
      std::vector<Scalar> row;
      for (std::size_t q = 0; q < array_at(cmat[i], p).size(); ++q)
        row.push_back(as_scalar(k, cmat[i][q], p + "/" + std::to_string(q)));
      t.c.push_back(std::move(row));
    }
    try {
      validate_torus_data(c, t);
    } catch (const ShapeMismatch& e) {
      fail("/torus_data", e.what());
    }
    model.torus = std::move(t);
  }
  if (auto it = j.find("char_data"); it != j.end()) {
    only_keys(*it, {"sw", "pont"}, "/char_data");
    CharClassData d;
    const GradedAlgebra& hq = c.algebra(c.top());
    if (auto s = it->find("sw"); s != it->end()) d.sw = as_combination(hq, *s, "/char_data/sw");
    if (auto s = it->find("pont"); s != it->end()) d.pont = as_combination(hq, *s, "/char_data/pont");
    try {
      validate_char_data(c, d);
    } catch (const Error& e) {
      fail("/char_data", e.what());
    }
    model.chars = std::move(d);
  }
  return model;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path.string() + ": cannot write file");
  out << text;
}

}  // namespace

Model load_model(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return parse_model(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_model(const Model& model, const std::filesystem::path& path) {
  write_file(path, serialize_model(model));
}

// -- ring elements ----------------------------------------------------------------

std::string serialize_element(const FaceComplex& c, const RingElement& a) {
  json comps = json::array();
  for (const auto& [f, p] : a.components()) {
    json terms = json::array();
    for (const auto& [m, x] : p) {
      json mono = json::object();
      for (auto [i, e] : m.exponents()) mono[std::to_string(i)] = e;
      terms.push_back({{"monomial", mono}, {"coeff", combination_json(c.algebra(f), x)}});
    }
    comps.push_back({{"face", c.face(f).name}, {"terms", terms}});
  }
  json j = {{"components", comps}};
  return j.dump(2) + "\n";
}

RingElement parse_element(const FaceComplex& c, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(j, {"components"}, "");
  const json& cj = array_at(member(j, "components", ""), "/components");
  std::map<FaceId, Polynomial> comps;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    std::string p = "/components/" + std::to_string(i);
    only_keys(cj[i], {"face", "terms"}, p);
    std::string name = as_string(member(cj[i], "face", p), p + "/face");
    auto f = c.find(name);
    if (!f) fail(p + "/face", "unknown face '" + name + "'");
    const json& tj = array_at(member(cj[i], "terms", p), p + "/terms");
    for (std::size_t t = 0; t < tj.size(); ++t) {
      std::string tp = p + "/terms/" + std::to_string(t);
      only_keys(tj[t], {"monomial", "coeff"}, tp);
      const json& mj = member(tj[t], "monomial", tp);
      if (!mj.is_object()) fail(tp + "/monomial", "expected an object of facet index -> exponent");
      std::map<int, int> exps;
      for (const auto& [key, val] : mj.items()) {
        int idx = 0;
        try {
          std::size_t used = 0;
          idx = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          fail(tp + "/monomial/" + key, "facet index must be an integer");
        }
        long e = as_int(val, tp + "/monomial/" + key);
        if (e < 0) fail(tp + "/monomial/" + key, "negative exponent");
        exps[idx] = static_cast<int>(e);
      }
      Monomial mono(exps);
      AlgebraElement x = as_combination(c.algebra(*f), member(tj[t], "coeff", tp), tp + "/coeff");
      Polynomial term{{mono, x}};
      comps[*f] = poly_add(c, *f, comps[*f], term);
    }
  }
  try {
    return RingElement::from_components(c, std::move(comps));
  } catch (const SupportViolation& e) {
    throw ParseError(std::string("/components: ") + e.what());
  }
}

RingElement load_element(const FaceComplex& c, const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return parse_element(c, text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_element(const FaceComplex& c, const RingElement& a, const std::filesystem::path& path) {
  write_file(path, serialize_element(c, a));
}

}  // namespace facering
