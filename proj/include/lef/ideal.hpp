#ifndef LEF_IDEAL_HPP
#define LEF_IDEAL_HPP

#include "lef/monomial.hpp"
#include "lef/osequence.hpp"

#include <vector>

namespace lef {

/// A monomial ideal held by its minimal generating set, sorted by degree
/// and then decreasing rev-lex. Immutable.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int n);  // zero ideal in n variables

  // Removes duplicates and every monomial divisible by another one.
  static MonomialIdeal minimalize(int n, std::vector<Monomial> raw_gens);

  int vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const;

  // Monomials of degree d not in the ideal, decreasing rev-lex.
  std::vector<Monomial> standard_monomials(int d) const;
  // Monomials of degree d in the ideal, decreasing rev-lex.
  std::vector<Monomial> degree_piece(int d) const;

  std::vector<long long> hilbert_function(int d_max) const;

  // true iff the ideal contains a power of every variable (n >= 1)
  bool artinian() const;
  // last degree with nonzero quotient; requires artinian. -1 for the unit ideal.
  int socle_degree() const;

  int max_gen_degree() const;  // 0 for the zero ideal
  int max_exponent() const;    // largest exponent among generators

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  int n_;
  std::vector<Monomial> gens_;
};

bool is_strongly_stable(const MonomialIdeal& I);
// Stability checks the exchange (x_i/x_max)M only for the largest variable.
bool is_stable(const MonomialIdeal& I);

// Lex-segment ideal with Hilbert function h, in n = h_1 variables; generators
// are emitted through degree s+1 so the quotient is artinian.
MonomialIdeal lex_segment(const OSequence& h);

// Image under x_j -> x_j (j <= i), x_j -> 0 (j > i): keeps the generators
// supported on the first i variables, re-read in i variables.
MonomialIdeal project_rho(const MonomialIdeal& I, int i);

// Subideal generated by the generators of degree <= d.
MonomialIdeal truncate_below(const MonomialIdeal& I, int d);

// The same generators viewed in n >= vars() variables (extension ideal I·R).
MonomialIdeal extend_vars(const MonomialIdeal& I, int n);

struct MaxStats {
  std::vector<long long> m;     // m[i-1]  = #{ M : max(M) = i }
  std::vector<long long> m_le;  // m_le[i-1] = #{ M : max(M) <= i }
};

// Counts by max-index over an explicit monomial set (unit monomials count
// toward no m_i but do appear in every m_<=i).
MaxStats max_stats(const std::vector<Monomial>& monomials, int n);

} // namespace lef

#endif
