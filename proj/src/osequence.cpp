#include "lef/osequence.hpp"

#include <gmpxx.h>

#include <limits>
#include <stdexcept>

namespace lef {

OSequence::OSequence(std::vector<long long> values) : values_(std::move(values)) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
  if (values_.empty()) throw std::invalid_argument("O-sequence is empty");
  if (values_[0] != 1) throw std::invalid_argument("O-sequence must start with h_0 = 1");
  for (long long v : values_)
    if (v <= 0) throw std::invalid_argument("O-sequence has a nonpositive entry before its end");
}

long long OSequence::at(int d) const {
  if (d < 0) throw std::invalid_argument("negative degree");
  return d <= length() ? values_[static_cast<size_t>(d)] : 0;
}

int OSequence::peak() const {
  for (int d = 0; d < length(); ++d)
    if (values_[static_cast<size_t>(d)] >= values_[static_cast<size_t>(d + 1)]) return d;
  return length(); // strictly increasing throughout (h_s >= h_{s+1} = 0 anyway)
}

bool OSequence::unimodal() const {
  int k = peak(); // strict increase before k holds by definition of peak
  for (int d = k; d < length(); ++d)
    if (values_[static_cast<size_t>(d)] < values_[static_cast<size_t>(d + 1)]) return false;
  return true;
}

std::vector<std::pair<long long, int>> macaulay_representation(long long v, int d) {
  if (d < 1) throw std::invalid_argument("Macaulay representation needs degree d >= 1");
  if (v < 0) throw std::invalid_argument("Macaulay representation needs v >= 0");
  auto binom = [](long long a, int j) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(j));
    return c;
  };
  std::vector<std::pair<long long, int>> rep;
  mpz_class rest(static_cast<long>(v));
  int j = d;
  while (rest > 0 && j >= 1) {
    // largest a with C(a, j) <= rest, by binary search (C(j+rest, j) > rest)
    long long lo = j, hi = j;
    mpz_class r_ll(static_cast<long>(j));
    r_ll += rest;
    hi = r_ll.fits_slong_p() ? static_cast<long long>(r_ll.get_si())
                             : std::numeric_limits<long long>::max();
    while (lo < hi) {
      long long mid = lo + (hi - lo + 1) / 2;
      if (binom(mid, j) <= rest)
        lo = mid;
      else
        hi = mid - 1;
    }
    rep.emplace_back(lo, j);
    rest -= binom(lo, j);
    --j;
  }
  if (rest != 0)
    throw std::logic_error("Macaulay representation did not terminate"); // unreachable
  return rep;
}

long long macaulay_bound(long long v, int d) {
  if (d < 1) throw std::invalid_argument("macaulay_bound needs degree d >= 1");
  if (v < 0) throw std::invalid_argument("macaulay_bound needs v >= 0");
  if (v == 0) return 0;
  mpz_class total = 0, c;
  for (auto [a, j] : macaulay_representation(v, d)) {
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a + 1),
                 static_cast<unsigned long>(j + 1));
    total += c;
  }
  if (!total.fits_slong_p()) throw std::overflow_error("macaulay_bound exceeds long long");
  return static_cast<long long>(total.get_si());
}

SequenceCheck check_o_sequence(const std::vector<long long>& h) {
  if (h.empty()) return {false, "sequence is empty"};
  if (h[0] != 1) return {false, "h_0 must be 1"};
  int s = -1; // last nonzero index
  for (int d = 0; d < static_cast<int>(h.size()); ++d) {
    if (h[static_cast<size_t>(d)] < 0)
      return {false, "negative entry at degree " + std::to_string(d)};
    if (h[static_cast<size_t>(d)] > 0) {
      if (s != d - 1)
        return {false, "nonzero entry at degree " + std::to_string(d) + " follows a zero"};
      s = d;
    }
  }
  for (int d = 1; d < s; ++d) {
    long long bound = macaulay_bound(h[static_cast<size_t>(d)], d);
    if (h[static_cast<size_t>(d + 1)] > bound)
      return {false, "h_" + std::to_string(d + 1) + " = " + std::to_string(h[size_t(d + 1)]) +
                         " exceeds Macaulay bound " + std::to_string(bound) + " from h_" +
                         std::to_string(d) + " = " + std::to_string(h[size_t(d)])};
  }
  return {true, ""};
}

bool is_o_sequence(const std::vector<long long>& h) { return check_o_sequence(h).ok; }

OSequence delta(const OSequence& h) {
  if (!h.unimodal()) throw std::invalid_argument("delta requires a unimodal sequence");
  int k = h.peak();
  std::vector<long long> d;
  d.reserve(static_cast<size_t>(k) + 1);
  d.push_back(1);
  for (int i = 1; i <= k; ++i) d.push_back(h.at(i) - h.at(i - 1));
  return OSequence(std::move(d));
}

LefschetzSeqReport is_m_times_wl(const std::vector<long long>& h, int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  LefschetzSeqReport rep;
  auto base = check_o_sequence(h);
  if (!base.ok) {
    rep.reason = base.reason;
    return rep;
  }
  OSequence cur{h};
  for (int level = 1; level <= m; ++level) {
    if (!cur.unimodal()) {
      rep.reason = "Δ^" + std::to_string(level - 1) + " h is not unimodal";
      return rep;
    }
    OSequence next = delta(cur);
    auto chk = check_o_sequence(next.values());
    if (!chk.ok) {
      rep.reason = "Δ^" + std::to_string(level) + " h is not an O-sequence: " + chk.reason;
      return rep;
    }
    rep.deltas.push_back(next);
    rep.k.push_back(next.length());
    cur = std::move(next);
  }
  rep.ok = true;
  return rep;
}

} // namespace lef
