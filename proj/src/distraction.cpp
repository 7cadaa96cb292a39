#include "lef/distraction.hpp"

#include "lef/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lef {

DistractionMatrix::DistractionMatrix(std::vector<std::vector<LinearForm>> rows, int ambient_vars)
    : rows_(std::move(rows)), cols_(0), ambient_(ambient_vars) {
  if (rows_.empty()) throw std::invalid_argument("distraction matrix needs at least one row");
  cols_ = static_cast<int>(rows_[0].size());
  if (cols_ < 1) throw std::invalid_argument("distraction matrix needs at least one column");
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("distraction matrix rows have unequal lengths");
    for (const LinearForm& f : row)
      if (f.vars() != ambient_)
        throw std::invalid_argument("distraction matrix entry in wrong ambient ring");
  }
}

const LinearForm& DistractionMatrix::at(int i, int j) const {
  if (i < 1 || i > rows()) throw std::invalid_argument("distraction row out of range");
  if (j < 1) throw std::invalid_argument("distraction column out of range");
  int col = std::min(j, cols_);
  return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(col - 1)];
}

DistractionMatrix DistractionMatrix::take_rows(int r) const {
  if (r < 1 || r > rows()) throw std::invalid_argument("row count out of range");
  std::vector<std::vector<LinearForm>> sub(rows_.begin(), rows_.begin() + r);
  return DistractionMatrix(std::move(sub), ambient_);
}

namespace {

QMatrix selection_matrix(const DistractionMatrix& L, const std::vector<int>& cols) {
  QMatrix m(static_cast<int>(cols.size()), L.ambient());
  for (int r = 0; r < static_cast<int>(cols.size()); ++r) {
    const LinearForm& f = L.at(r + 1, cols[static_cast<size_t>(r)]);
    for (int c = 0; c < L.ambient(); ++c) m.at(r, c) = f.coefficients()[static_cast<size_t>(c)];
  }
  return m;
}

} // namespace

bool is_valid_distraction(const DistractionMatrix& L, long long budget) {
  long long total = 1;
  for (int i = 0; i < L.rows(); ++i) {
    total *= L.stabilization();
    if (total > budget)
      throw std::invalid_argument(
          "distraction validity check exceeds budget; use a smaller N (selection count " +
          std::to_string(total) + "+)");
  }
  std::vector<int> cols(static_cast<size_t>(L.rows()), 1);
  for (;;) {
    if (rank(selection_matrix(L, cols)) != L.rows()) return false;
    int pos = 0;
    while (pos < L.rows() && cols[static_cast<size_t>(pos)] == L.stabilization()) {
      cols[static_cast<size_t>(pos)] = 1;
      ++pos;
    }
    if (pos == L.rows()) break;
    ++cols[static_cast<size_t>(pos)];
  }
  return true;
}

DistractionMatrix make_standard_distraction(int n, int N) {
  if (n < 2) throw std::invalid_argument("standard distraction needs n >= 2");
  if (N < 1) throw std::invalid_argument("standard distraction needs N >= 1");
  std::vector<std::vector<LinearForm>> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<LinearForm> row;
    for (int j = 1; j <= N; ++j) {
      std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
      if (i < n) {
        c[static_cast<size_t>(i - 1)] = 1;
        c[static_cast<size_t>(n - 1)] = Rat(-(j - 1));
      } else {
        c[static_cast<size_t>(n - 1)] = 1;
      }
      row.emplace_back(std::move(c));
    }
    rows.push_back(std::move(row));
  }
  return DistractionMatrix(std::move(rows), n);
}

Polynomial distract_monomial(const DistractionMatrix& L, const Monomial& m) {
  if (m.vars() > L.rows())
    throw std::invalid_argument("monomial uses variables beyond the distraction rows");
  Polynomial out = Polynomial::from_monomial(Monomial(L.ambient()));
  for (int i = 1; i <= m.vars(); ++i)
    for (int j = 1; j <= m.exponent(i); ++j)
      out = out * Polynomial::from_linear_form(L.at(i, j));
  return out;
}

std::vector<Polynomial> distract_ideal(const DistractionMatrix& L, const MonomialIdeal& I) {
  std::vector<Polynomial> out;
  out.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) out.push_back(distract_monomial(L, g));
  return out;
}

std::vector<long long> poly_ideal_hilbert(int n, const std::vector<Polynomial>& gens, int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  for (const Polynomial& g : gens) {
    if (g.vars() != n) throw std::invalid_argument("generator ambient variable count mismatch");
    if (g.is_zero() || !g.is_homogeneous())
      throw std::invalid_argument("poly_ideal_hilbert needs nonzero homogeneous generators");
  }
  std::vector<long long> h;
  h.reserve(static_cast<size_t>(d_max) + 1);
  for (int d = 0; d <= d_max; ++d) {
    std::vector<Monomial> basis = monomials_of_degree(n, d);
    std::map<Monomial, int, RevlexGreater> index;
    for (int c = 0; c < static_cast<int>(basis.size()); ++c) index.emplace(basis[size_t(c)], c);
    // rows: m * g for every generator g and monomial m of complementary degree
    std::vector<std::vector<Rat>> data;
    for (const Polynomial& g : gens) {
      int gd = g.homogeneous_degree();
      if (gd > d) continue;
      for (const Monomial& m : monomials_of_degree(n, d - gd)) {
        std::vector<Rat> row(basis.size(), Rat(0));
        for (const auto& [mono, coeff] : g.terms()) {
          std::vector<int> e(static_cast<size_t>(n));
          for (int i = 0; i < n; ++i)
            e[size_t(i)] = mono.exponents()[size_t(i)] + m.exponents()[size_t(i)];
          row[static_cast<size_t>(index.at(Monomial(std::move(e))))] = coeff;
        }
        data.push_back(std::move(row));
      }
    }
    QMatrix mat(static_cast<int>(data.size()), static_cast<int>(basis.size()));
    for (int r = 0; r < mat.rows(); ++r)
      for (int c = 0; c < mat.cols(); ++c) mat.at(r, c) = data[size_t(r)][size_t(c)];
    h.push_back(static_cast<long long>(basis.size()) - rank(std::move(mat)));
  }
  return h;
}

std::vector<MonomialIdeal> irreducible_components(const MonomialIdeal& I) {
  if (!I.artinian())
    throw std::invalid_argument("irreducible decomposition needs an artinian ideal");
  int n = I.vars();
  std::vector<MonomialIdeal> comps;
  if (I.is_unit()) return comps;
  int socle = I.socle_degree();
  for (int d = 0; d <= socle; ++d)
    for (const Monomial& m : I.standard_monomials(d)) {
      bool maximal = true;
      for (int i = 1; i <= n && maximal; ++i)
        if (!I.contains(m.times_var(i))) maximal = false;
      if (!maximal) continue;
      std::vector<Monomial> gens;
      for (int i = 1; i <= n; ++i) gens.push_back(Monomial::power(n, i, m.exponent(i) + 1));
      comps.push_back(MonomialIdeal::minimalize(n, std::move(gens)));
    }
  // the intersection must reproduce I: check membership agreement on every
  // monomial through socle degree + 1
  for (int d = 0; d <= socle + 1; ++d)
    for (const Monomial& m : monomials_of_degree(n, d)) {
      bool in_all = true;
      for (const MonomialIdeal& c : comps)
        if (!c.contains(m)) {
          in_all = false;
          break;
        }
      if (in_all != I.contains(m))
        throw std::logic_error("irreducible decomposition failed to intersect back");
    }
  return comps;
}

bool is_radical_for(const DistractionMatrix& L, const MonomialIdeal& I) {
  if (I.vars() > L.rows())
    throw std::invalid_argument("ideal uses variables beyond the distraction rows");
  for (const MonomialIdeal& comp : irreducible_components(I)) {
    // a component is (x_{i_1}^{a_1}, ..., x_{i_r}^{a_r}); here r = vars
    std::vector<int> var, bound;
    for (const Monomial& g : comp.gens()) {
      int i = *g.max_index();
      var.push_back(i);
      bound.push_back(g.exponent(i));
    }
    int r = static_cast<int>(var.size());
    std::vector<int> sel(static_cast<size_t>(r), 1);
    std::vector<QMatrix> spans;
    for (;;) {
      QMatrix m(r, L.ambient());
      for (int t = 0; t < r; ++t) {
        const LinearForm& f = L.at(var[size_t(t)], sel[size_t(t)]);
        for (int c = 0; c < L.ambient(); ++c) m.at(t, c) = f.coefficients()[size_t(c)];
      }
      spans.push_back(row_space_basis(std::move(m)));
      int pos = 0;
      while (pos < r && sel[size_t(pos)] == bound[size_t(pos)]) {
        sel[size_t(pos)] = 1;
        ++pos;
      }
      if (pos == r) break;
      ++sel[size_t(pos)];
    }
    for (size_t a = 0; a < spans.size(); ++a)
      for (size_t b = a + 1; b < spans.size(); ++b)
        if (spans[a] == spans[b]) return false;
  }
  return true;
}

RationalPoint::RationalPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
  int last = -1;
  for (int i = 0; i < static_cast<int>(coords_.size()); ++i)
    if (coords_[size_t(i)] != 0) last = i;
  if (last < 0) throw std::invalid_argument("projective point needs a nonzero coordinate");
  Rat scale = coords_[size_t(last)];
  for (Rat& c : coords_) c /= scale;
}

namespace {

bool matches_standard_form(const DistractionMatrix& L) {
  int n = L.rows();
  if (L.ambient() != n) return false;
  try {
    return L == make_standard_distraction(n, L.stabilization());
  } catch (const std::invalid_argument&) {
    return false;
  }
}

} // namespace

PointsResult distraction_points(const MonomialIdeal& I, const DistractionMatrix& L) {
  int n = L.rows();
  if (I.vars() != n - 1)
    throw std::invalid_argument("ideal must live in one variable less than the distraction");
  if (!matches_standard_form(L))
    throw std::invalid_argument("distraction_points needs the standard affine-offset matrix");
  if (!I.artinian() || !is_strongly_stable(I))
    throw std::invalid_argument("distraction_points needs an artinian strongly stable ideal");
  if (L.stabilization() <= I.max_exponent())
    throw std::invalid_argument("stabilization column count must exceed every exponent of I");

  PointsResult res;
  res.distracted_gens = distract_ideal(L, extend_vars(I, n));

  long long expected = 0;
  int socle = I.socle_degree();
  for (int d = 0; d <= socle; ++d)
    for (const Monomial& m : I.standard_monomials(d)) {
      std::vector<Rat> coords;
      coords.reserve(static_cast<size_t>(n));
      for (int i = 1; i < n; ++i) coords.emplace_back(m.exponent(i));
      coords.emplace_back(1);
      res.points.emplace_back(std::move(coords));
      ++expected;
    }

  // exact verification: vanishing, count, distinctness
  for (const Polynomial& g : res.distracted_gens)
    for (const RationalPoint& p : res.points)
      if (g.evaluate(p.coords()) != 0)
        throw std::logic_error("distracted generator does not vanish at a lifted point");
  long long hf_total = 0;
  for (long long v : I.hilbert_function(socle)) hf_total += v;
  if (hf_total != expected) throw std::logic_error("point count disagrees with Hilbert function");
  for (size_t a = 0; a < res.points.size(); ++a)
    for (size_t b = a + 1; b < res.points.size(); ++b)
      if (res.points[a] == res.points[b]) throw std::logic_error("lifted points collide");

  return res;
}

} // namespace lef
