#ifndef LEF_OSEQUENCE_HPP
#define LEF_OSEQUENCE_HPP

#include <string>
#include <vector>

namespace lef {

/// A finite O-sequence h_0..h_s: h_0 = 1, entries positive through the last
/// index s, trailing zeros stripped on construction. Indexing beyond s
/// yields 0. The peak k is the first index with h_k >= h_{k+1} (h_{s+1}=0),
/// so k = s exactly when the sequence increases strictly throughout.
class OSequence {
public:
  explicit OSequence(std::vector<long long> values);

  int length() const { return static_cast<int>(values_.size()) - 1; } // s
  long long at(int d) const;                                          // 0 for d > s
  const std::vector<long long>& values() const { return values_; }

  int peak() const;        // k
  bool unimodal() const;   // strict increase to k, weakly decreasing after

  friend bool operator==(const OSequence&, const OSequence&) = default;

private:
  std::vector<long long> values_;
};

// v^<d>: the Macaulay bound on h_{d+1} given h_d = v, via the unique d-th
// Macaulay binomial representation. Throws for d < 1 or on overflow.
long long macaulay_bound(long long v, int d);

// The d-th Macaulay representation of v: the a_d > a_{d-1} > ... > a_t
// with v = sum C(a_i, i), a_t >= t >= 1. Returned as (a_i, i) pairs, top first.
std::vector<std::pair<long long, int>> macaulay_representation(long long v, int d);

struct SequenceCheck {
  bool ok = false;
  std::string reason; // empty when ok
};

SequenceCheck check_o_sequence(const std::vector<long long>& h);
bool is_o_sequence(const std::vector<long long>& h);

// First difference 1, h_1-h_0, ..., h_k-h_{k-1}; requires unimodality.
OSequence delta(const OSequence& h);

struct LefschetzSeqReport {
  bool ok = false;
  std::string reason;                 // why not, when !ok
  std::vector<OSequence> deltas;      // Δ^1 h .. Δ^m h (as far as computable)
  std::vector<int> k;                 // k_i = length of Δ^i h
};

// m = 0 reduces to the plain O-sequence test; m >= 1 adds unimodality and
// recurses on the difference sequence.
LefschetzSeqReport is_m_times_wl(const std::vector<long long>& h, int m);

} // namespace lef

#endif
