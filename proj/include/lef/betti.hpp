#ifndef LEF_BETTI_HPP
#define LEF_BETTI_HPP

#include "lef/ideal.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lef {

/// Graded Betti numbers β_{ij}(R/I) for 1 <= i <= n; β_{0,0} = 1 is implicit.
class BettiTable {
public:
  explicit BettiTable(int n);

  int vars() const { return n_; }
  long long at(int i, int j) const;      // 0 when absent
  void add(int i, int j, long long v);   // v >= 0; zero adds are dropped

  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  std::vector<long long> totals() const; // β_1..β_n

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  int n_;
  std::map<std::pair<int, int>, long long> entries_;
};

// Graded Betti numbers of R/I for a stable monomial ideal via the
// Eliahou-Kervaire formula: a generator u of degree d contributes
// C(max(u)-1, i-1) to β_{i, i+d-1}(R/I). Throws on non-stable input.
BettiTable ek_graded_betti(const MonomialIdeal& I);

// Totals β_i(R/I) = Σ_s m_s(I) C(s-1, i-1), computed independently of the
// graded table from the max-index statistics of Gens(I).
std::vector<long long> ek_total_betti(const MonomialIdeal& I);

// Entrywise A >= B.
bool dominates(const BettiTable& a, const BettiTable& b);

// Diagram text: header "j | 1 2 .. n", one row per offset j with entry
// (j, i) = β_{i, i+j}, zeros as '-'. Row 0 appears only when some β_{i,i} != 0.
std::string render_diagram(const BettiTable& t);

// Machine form: one "i j beta" line per nonzero entry, sorted by (i, j).
std::string render_machine(const BettiTable& t);

} // namespace lef

#endif
