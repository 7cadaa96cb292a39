#ifndef LEF_POLYNOMIAL_HPP
#define LEF_POLYNOMIAL_HPP

#include "lef/monomial.hpp"
#include "lef/rational.hpp"

#include <map>
#include <vector>

namespace lef {

/// A nonzero linear form c_1 x_1 + ... + c_n x_n with exact rational
/// coefficients (the zero form is rejected).
class LinearForm {
public:
  explicit LinearForm(std::vector<Rat> coefficients);

  int vars() const { return static_cast<int>(coeff_.size()); }
  const Rat& coefficient(int i) const;  // 1-based
  const std::vector<Rat>& coefficients() const { return coeff_; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
  std::vector<Rat> coeff_;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// decreasing (degree, rev-lex) order; no zero coefficients are stored.
class Polynomial {
public:
  explicit Polynomial(int n) : n_(n) {}
  static Polynomial from_monomial(const Monomial& m, Rat c = Rat(1));
  static Polynomial from_linear_form(const LinearForm& f);

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat, RevlexGreater>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c);

  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator+(const Polynomial& rhs) const;

  // -1 when zero; throws when terms have mixed degrees
  int homogeneous_degree() const;
  bool is_homogeneous() const;

  // leading term in decreasing (degree, rev-lex) order
  const Monomial& leading_monomial() const;
  const Rat& leading_coefficient() const;

  Rat evaluate(const std::vector<Rat>& point) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  int n_;
  std::map<Monomial, Rat, RevlexGreater> terms_;
};

} // namespace lef

#endif
