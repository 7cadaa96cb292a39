#ifndef LEF_DISTRACTION_HPP
#define LEF_DISTRACTION_HPP

#include "lef/ideal.hpp"
#include "lef/polynomial.hpp"

#include <vector>

namespace lef {

/// Rows of linear forms, one per distractable variable; column j > N reuses
/// column N. Rows may be fewer than the ambient variable count of the forms
/// (a partial matrix, as used when lifting an ideal into one more variable).
class DistractionMatrix {
public:
  // rows[i][j] is the form L_{i+1, j+1}; every row must have N columns.
  DistractionMatrix(std::vector<std::vector<LinearForm>> rows, int ambient_vars);

  int rows() const { return static_cast<int>(rows_.size()); }
  int stabilization() const { return cols_; } // N
  int ambient() const { return ambient_; }
  const LinearForm& at(int i, int j) const;   // 1-based; j clamps to N

  DistractionMatrix take_rows(int r) const;   // the first r rows

  friend bool operator==(const DistractionMatrix&, const DistractionMatrix&) = default;

private:
  std::vector<std::vector<LinearForm>> rows_;
  int cols_;
  int ambient_;
};

// Checks rank == rows() for every column selection (N^rows of them).
// Throws when the selection count exceeds the budget.
bool is_valid_distraction(const DistractionMatrix& L, long long budget = 1'000'000);

// Rows i < n: x_i - (j-1) x_n; row n: x_n. The affine-offset family.
DistractionMatrix make_standard_distraction(int n, int N);

// D_L(M) = prod_i prod_{j=1..a_i} L_{ij}, fully expanded.
Polynomial distract_monomial(const DistractionMatrix& L, const Monomial& m);

// Distractions of the minimal generators, in generator order.
std::vector<Polynomial> distract_ideal(const DistractionMatrix& L, const MonomialIdeal& I);

// Hilbert function of R/(gens): codimension of the span of all
// monomial-times-generator products, degree by degree, by exact rank.
std::vector<long long> poly_ideal_hilbert(int n, const std::vector<Polynomial>& gens, int d_max);

// The irreducible components (x_1^{a_1+1}, ..., x_n^{a_n+1}) of an artinian
// monomial ideal, one per maximal standard monomial x^a. Their intersection
// is verified to equal I.
std::vector<MonomialIdeal> irreducible_components(const MonomialIdeal& I);

// Def of a radical distraction: for every irreducible component, the spans
// V_s of the selected forms are pairwise distinct over all exponent
// selections s.
bool is_radical_for(const DistractionMatrix& L, const MonomialIdeal& I);

/// A point of projective space with exact rational homogeneous coordinates,
/// normalized so the last nonzero coordinate is 1.
class RationalPoint {
public:
  explicit RationalPoint(std::vector<Rat> coords);
  const std::vector<Rat>& coords() const { return coords_; }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

private:
  std::vector<Rat> coords_;
};

struct PointsResult {
  std::vector<RationalPoint> points;
  std::vector<Polynomial> distracted_gens;
};

// The classical lifting of an artinian strongly stable ideal I in n-1
// variables through the standard distraction in n variables (N strictly
// above every exponent of I): one point (a_1,...,a_{n-1},1) per standard
// monomial x^a. Verifies exact vanishing of every distracted generator at
// every point, the point count against the Hilbert function, and pairwise
// distinctness; any failure throws.
PointsResult distraction_points(const MonomialIdeal& I, const DistractionMatrix& L);

} // namespace lef

#endif
