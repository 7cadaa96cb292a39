#ifndef LEF_LEFSCHETZ_HPP
#define LEF_LEFSCHETZ_HPP

#include "lef/betti.hpp"
#include "lef/ideal.hpp"
#include "lef/osequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lef {

/// Verdict of the combinatorial WLP criterion for an artinian monomial
/// ideal: (a) unimodal Hilbert function, (b) every degree-(k+1) monomial in
/// the first n-1 variables lies in I, (c) generators divisible by x_n have
/// degree >= k+1. For strongly stable ideals the conjunction is equivalent
/// to x_n being a weak Lefschetz element; for plain monomial ideals it is
/// sufficient only.
struct WlpReport {
  enum class Failure { none, non_unimodal, missing_power, low_degree_xn_generator };

  bool has_property = false;
  Failure failing = Failure::none;
  std::string witness;            // offending monomial/generator, when any
  int k = 0;                      // peak index of the Hilbert function
  std::vector<long long> hf;      // Hilbert function through the socle
};

// The three conditions on any artinian monomial ideal (throws if not artinian).
WlpReport wlp_criterion(const MonomialIdeal& I);

// Full equivalence; requires strongly stable artinian input (checked).
WlpReport has_wlp_stable(const MonomialIdeal& I);

struct MwlpReport {
  bool ok = false;
  std::vector<WlpReport> levels;  // level i tests rho_{n-i}(I), i = 0..m-1
};

// Iterated WLP via the projection chain; m in 1..n.
MwlpReport has_m_wlp_stable(const MonomialIdeal& I, int m);

// The extremal ideal W_m(h): W_0 = lex segment; level m extends the level
// below by one variable and adjoins, degree by degree past the peak, the
// largest rev-lex standard monomials until the Hilbert function is h.
// Throws unless h is an m-times weak Lefschetz O-sequence.
MonomialIdeal build_w(const std::vector<long long>& h, int m);

// Each degree piece grows as slowly as its lex segment: |R_1 I_d| equals
// |R_1 Lex(I_d)| for all d up to the bound (socle/last generator degree + 1,
// computed internally for the single-argument form).
bool is_gotzmann(const MonomialIdeal& I, int d_max);
bool is_gotzmann(const MonomialIdeal& I);

enum class Cutoff { km_plus_one, literal_km };

struct MaxBettiReport {
  bool maximal = false;           // authoritative: table equality with W_m(h)
  bool gotzmann_criterion = false;
  int cutoff_degree = 0;
  BettiTable table;               // of R/I
  BettiTable extremal;            // of R/W_m(h)
};

// Compares I against the extremal ideal of its own Hilbert function, and
// independently evaluates the projected-truncation Gotzmann criterion.
// Requires strongly stable artinian input with m-times WLP.
MaxBettiReport has_maximal_betti(const MonomialIdeal& I, int m,
                                 Cutoff cutoff = Cutoff::km_plus_one);

struct RigidityReport {
  std::vector<long long> beta;      // β_i(R/I)
  std::vector<long long> beta_w;    // β_i(R/W_m(h))
  std::optional<int> first_equal;   // smallest q with β_q equal, if any
  bool implication_holds = false;   // β_q equal  =>  β_i equal for i >= q
  bool graded_equal_from_q = false; // and β_{ij} equal for i >= q (vacuous if no q)
};

RigidityReport check_rigidity(const MonomialIdeal& I, int m);

// Deterministic-by-seed artinian strongly stable ideal: random monomials,
// Borel closure, variable powers, minimalization. With a target Hilbert
// function, resamples until it matches (throws when attempts run out).
MonomialIdeal random_strongly_stable(std::uint64_t seed, int n, int max_degree,
                                     const std::optional<OSequence>& target = std::nullopt);

} // namespace lef

#endif
