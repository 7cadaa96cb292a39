#include "lef/monomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lef {

int Monomial::check_vars(int n) {
  if (n < 0) throw std::invalid_argument("variable count must be >= 0");
  return n;
}

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::variable(int n, int i) { return power(n, i, 1); }

Monomial Monomial::power(int n, int i, int e) {
  check_vars(n);
  if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
  if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  std::vector<int> exp(static_cast<size_t>(n), 0);
  exp[static_cast<size_t>(i - 1)] = e;
  return Monomial(std::move(exp));
}

int Monomial::degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0);
}

int Monomial::exponent(int i) const {
  if (i < 1 || i > vars()) throw std::invalid_argument("variable index out of range");
  return exp_[static_cast<size_t>(i - 1)];
}

bool Monomial::is_one() const {
  for (int e : exp_)
    if (e > 0) return false;
  return true;
}

std::optional<int> Monomial::max_index() const {
  for (int i = vars(); i >= 1; --i)
    if (exp_[static_cast<size_t>(i - 1)] > 0) return i;
  return std::nullopt;
}

Monomial Monomial::times_var(int i) const {
  if (i < 1 || i > vars()) throw std::invalid_argument("variable index out of range");
  std::vector<int> e = exp_;
  ++e[static_cast<size_t>(i - 1)];
  return Monomial(std::move(e));
}

Monomial Monomial::div_var(int i) const {
  if (i < 1 || i > vars()) throw std::invalid_argument("variable index out of range");
  if (exp_[static_cast<size_t>(i - 1)] == 0)
    throw std::invalid_argument("monomial not divisible by that variable");
  std::vector<int> e = exp_;
  --e[static_cast<size_t>(i - 1)];
  return Monomial(std::move(e));
}

Monomial Monomial::extended(int n) const {
  if (n < vars()) throw std::invalid_argument("cannot shrink ambient variable count");
  std::vector<int> e = exp_;
  e.resize(static_cast<size_t>(n), 0);
  return Monomial(std::move(e));
}

namespace {
void require_same_vars(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("monomials live in different ambient variable counts");
}
} // namespace

bool divides(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  for (int i = 0; i < a.vars(); ++i)
    if (a.exponents()[static_cast<size_t>(i)] > b.exponents()[static_cast<size_t>(i)])
      return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  std::vector<int> e(static_cast<size_t>(a.vars()));
  for (size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

std::strong_ordering cmp_revlex(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.vars() - 1; i >= 0; --i) {
    int d = a.exponents()[static_cast<size_t>(i)] - b.exponents()[static_cast<size_t>(i)];
    if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < a.vars(); ++i) {
    int d = a.exponents()[static_cast<size_t>(i)] - b.exponents()[static_cast<size_t>(i)];
    if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("monomials_of_degree needs n, d >= 0");
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> exp(static_cast<size_t>(n), 0);
  // enumerate compositions of d into n parts
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n - 1) {
      exp[static_cast<size_t>(pos)] = rest;
      out.emplace_back(exp);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      exp[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, rest - e);
    }
    exp[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), RevlexGreater{});
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!r.fits_slong_p())
    throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                              ") exceeds long long");
  return static_cast<long long>(r.get_si());
}

} // namespace lef
