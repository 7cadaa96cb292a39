#include "lef/polynomial.hpp"

#include <stdexcept>

namespace lef {

LinearForm::LinearForm(std::vector<Rat> coefficients) : coeff_(std::move(coefficients)) {
  bool nonzero = false;
  for (const Rat& c : coeff_)
    if (c != 0) nonzero = true;
  if (!nonzero) throw std::invalid_argument("the zero linear form is not allowed");
}

const Rat& LinearForm::coefficient(int i) const {
  if (i < 1 || i > vars()) throw std::invalid_argument("variable index out of range");
  return coeff_[static_cast<size_t>(i - 1)];
}

Polynomial Polynomial::from_monomial(const Monomial& m, Rat c) {
  Polynomial p(m.vars());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::from_linear_form(const LinearForm& f) {
  Polynomial p(f.vars());
  for (int i = 1; i <= f.vars(); ++i)
    p.add_term(Monomial::variable(f.vars(), i), f.coefficient(i));
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (m.vars() != n_) throw std::invalid_argument("term ambient variable count mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("polynomial ambient variable count mismatch");
  Polynomial out(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      std::vector<int> e(static_cast<size_t>(n_));
      for (int i = 0; i < n_; ++i)
        e[static_cast<size_t>(i)] =
            ma.exponents()[static_cast<size_t>(i)] + mb.exponents()[static_cast<size_t>(i)];
      out.add_term(Monomial(std::move(e)), ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("polynomial ambient variable count mismatch");
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

int Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) throw std::invalid_argument("polynomial is not homogeneous");
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rat& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < n_; ++i) {
      int e = m.exponents()[static_cast<size_t>(i)];
      for (int t = 0; t < e; ++t) term *= point[static_cast<size_t>(i)];
    }
    total += term;
  }
  return total;
}

} // namespace lef
