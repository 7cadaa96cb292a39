#ifndef LEF_MONOMIAL_HPP
#define LEF_MONOMIAL_HPP

#include <compare>
#include <optional>
#include <vector>

namespace lef {

/// A monomial in n variables x1..xn, stored as a dense exponent vector.
/// Immutable after construction; comparisons require matching ambient n.
class Monomial {
public:
  // the unit monomial 1 in n variables
  explicit Monomial(int n) : exp_(static_cast<size_t>(check_vars(n)), 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(int n, int i);       // x_i in n variables
  static Monomial power(int n, int i, int e);   // x_i^e in n variables

  int vars() const { return static_cast<int>(exp_.size()); }
  int degree() const;
  int exponent(int i) const;                    // 1-based variable index
  const std::vector<int>& exponents() const { return exp_; }
  bool is_one() const;

  // largest i with positive exponent; nullopt for the unit monomial
  std::optional<int> max_index() const;

  Monomial times_var(int i) const;
  Monomial div_var(int i) const;                // requires exponent(i) > 0

  // same monomial viewed in n >= vars() variables
  Monomial extended(int n) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  static int check_vars(int n);
  std::vector<int> exp_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

// Degree-first orders; within a degree:
//   rev-lex:  a > b iff the last nonzero entry of exp(a)-exp(b) is negative.
//   lex:      a > b iff the first nonzero entry of exp(a)-exp(b) is positive.
std::strong_ordering cmp_revlex(const Monomial& a, const Monomial& b);
std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b);

struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_revlex(a, b) == std::strong_ordering::greater;
  }
};
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_lex(a, b) == std::strong_ordering::greater;
  }
};

// All C(n+d-1,d) monomials of degree d in n variables, decreasing rev-lex.
std::vector<Monomial> monomials_of_degree(int n, int d);

// Exact binomial coefficient; throws std::overflow_error if the value does
// not fit in long long.
long long binomial(long long n, long long k);

} // namespace lef

#endif
