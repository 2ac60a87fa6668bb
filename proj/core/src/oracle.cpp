#include "facering/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace facering {

namespace {

using Slot = std::tuple<FaceId, Monomial, std::size_t>;

std::map<Slot, Scalar> coordinates(const RingElement& a) {
  std::map<Slot, Scalar> out;
  for (const auto& [f, p] : a.components())
    for (const auto& [m, x] : p)
      for (std::size_t b = 0; b < x.size(); ++b)
        if (!x[b].is_zero()) out.emplace(Slot{f, m, b}, x[b]);
  return out;
}

/// Every exponent vector over `vars` with entries in [lo, total] summing to total.
void for_each_composition(const Label& vars, int total, int lo,
                          const std::function<void(const Monomial&)>& fn) {
  std::map<int, int> exps;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == vars.size()) {
      if (left == 0) fn(Monomial(exps));
      return;
    }
    for (int e = lo; e <= left; ++e) {
      exps[vars[idx]] = e;
      rec(idx + 1, left - e);
    }
    exps.erase(vars[idx]);
  };
  rec(0, total);
}

std::size_t rank_mod_p(const Field& k, Matrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    Scalar inv = k.inv(m[rank][col]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      Scalar factor = k.mul(m[i][col], inv);
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = k.sub(m[i][j], k.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_bareiss(const Matrix& in) {
  const std::size_t rows = in.size();
  const std::size_t cols = rows ? in[0].size() : 0;
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (const auto& x : in[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = in[i][j].value() * l;
      m[i][j] = scaled.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const Field& k, const Matrix& rows) {
  return k.is_rational() ? rank_bareiss(rows) : rank_mod_p(k, rows);
}

std::optional<std::vector<Scalar>> solve_linear(const Field& k, const Matrix& columns,
                                                const std::vector<Scalar>& target) {
  const std::size_t n = columns.size();
  const std::size_t rows = target.size();
  // Augmented matrix [columns | target], row-major.
  Matrix m(rows, std::vector<Scalar>(n + 1));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = columns[j].at(i);
  for (std::size_t i = 0; i < rows; ++i) m[i][n] = target[i];

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Scalar inv = k.inv(m[r][col]);
    for (auto& x : m[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      Scalar factor = m[i][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] = k.sub(m[i][j], k.mul(factor, m[r][j]));
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!m[i][n].is_zero()) return std::nullopt;
  std::vector<Scalar> x(n, k.zero());
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = m[i][n];
  return x;
}

std::vector<std::uint64_t> sr_hilbert(const FaceComplex& c, int max_degree) {
  std::set<Label> labels;
  for (FaceId f = 0; f < c.size(); ++f) {
    if (c.algebra(f).dim() != 1)
      throw NotAcyclic("face " + c.face(f).name + " has cohomology beyond degree 0");
    if (!labels.insert(c.label(f)).second)
      throw DuplicateLabelSets("label " + label_to_string(c.label(f)) + " is carried by two faces");
  }
  Label all;
  for (int i = 1; i <= c.m(); ++i) all.push_back(i);
  std::vector<std::uint64_t> dims(static_cast<std::size_t>(std::max(max_degree + 1, 0)), 0);
  for (int j = 0; 2 * j <= max_degree; ++j) {
    std::uint64_t count = 0;
    for_each_composition(all, j, 0, [&](const Monomial& mono) {
      if (labels.contains(mono.support())) ++count;
    });
    dims[static_cast<std::size_t>(2 * j)] = count;
  }
  return dims;
}

std::vector<Generator> generators_of_degree(const FaceComplex& c, int degree) {
  std::vector<Generator> out;
  for (FaceId e = 0; e < c.size(); ++e) {
    const GradedAlgebra& alg = c.algebra(e);
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      int rest = degree - alg.degree_of(b);
      if (rest < 0 || rest % 2 != 0) continue;
      for_each_composition(c.label(e), rest / 2, 1,
                           [&](const Monomial& mono) { out.push_back({e, mono, b}); });
    }
  }
  return out;
}

RingElement embed(const FaceComplex& c, const Generator& g) {
  Polynomial p;
  p[g.monomial] = c.algebra(g.face).basis_element(g.basis);
  return make_face_element(c, g.face, p);
}

BruteHilbert brute_basis_hilbert(const FaceComplex& c, int max_degree) {
  BruteHilbert out;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<std::map<Slot, Scalar>> vecs;
    std::map<Slot, std::size_t> index;
    for (const auto& g : generators_of_degree(c, d)) {
      vecs.push_back(coordinates(embed(c, g)));
      for (const auto& [slot, x] : vecs.back()) index.try_emplace(slot, index.size());
    }
    Matrix rows(vecs.size(), std::vector<Scalar>(index.size()));
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (const auto& [slot, x] : vecs[i]) rows[i][index.at(slot)] = x;
    out.generators.push_back(vecs.size());
    out.dims.push_back(exact_rank(c.field(), rows));
  }
  return out;
}

Membership naive_membership(const FaceComplex& c, const RingElement& a) {
  Membership out;
  out.member = true;
  for (int d : degrees(c, a)) {
    auto target_coords = coordinates(homogeneous_component(c, a, d));
    std::vector<Generator> gens = generators_of_degree(c, d);
    std::vector<std::map<Slot, Scalar>> vecs;
    std::map<Slot, std::size_t> index;
    for (const auto& [slot, x] : target_coords) index.try_emplace(slot, index.size());
    for (const auto& g : gens) {
      vecs.push_back(coordinates(embed(c, g)));
      for (const auto& [slot, x] : vecs.back()) index.try_emplace(slot, index.size());
    }
    Matrix columns(gens.size(), std::vector<Scalar>(index.size()));
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (const auto& [slot, x] : vecs[j]) columns[j][index.at(slot)] = x;
    std::vector<Scalar> target(index.size());
    for (const auto& [slot, x] : target_coords) target[index.at(slot)] = x;

    auto x = solve_linear(c.field(), columns, target);
    if (!x) {
      out.member = false;
      out.solution.clear();
      return out;
    }
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (!(*x)[j].is_zero()) out.solution.emplace_back(gens[j], (*x)[j]);
  }
  return out;
}

FaceDecomposition to_decomposition(const FaceComplex& c, const Membership& m) {
  FaceDecomposition d;
  for (const auto& [g, s] : m.solution) {
    Polynomial term;
    term[g.monomial] = alg_scale(c.algebra(g.face), s, c.algebra(g.face).basis_element(g.basis));
    d.parts[g.face] = poly_add(c, g.face, d.parts[g.face], term);
  }
  std::erase_if(d.parts, [](const auto& kv) { return kv.second.empty(); });
  return d;
}

}  // namespace facering
