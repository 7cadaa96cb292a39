#include "lef/betti.hpp"

#include <sstream>
#include <stdexcept>

namespace lef {

BettiTable::BettiTable(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("variable count must be >= 0");
}

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long v) {
  if (i < 1 || i > n_) throw std::invalid_argument("homological index out of range");
  if (v < 0) throw std::invalid_argument("negative Betti number");
  if (v == 0) return;
  entries_[{i, j}] += v;
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> t(static_cast<size_t>(n_), 0);
  for (const auto& [key, v] : entries_) t[static_cast<size_t>(key.first - 1)] += v;
  return t;
}

BettiTable ek_graded_betti(const MonomialIdeal& I) {
  if (!is_stable(I)) throw std::invalid_argument("Eliahou-Kervaire requires stable ideal");
  BettiTable t(I.vars());
  for (const Monomial& u : I.gens()) {
    if (u.is_one()) throw std::invalid_argument("Betti table of the unit ideal is not defined");
    int mx = *u.max_index();
    int d = u.degree();
    for (int i = 1; i <= mx; ++i) t.add(i, i + d - 1, binomial(mx - 1, i - 1));
  }
  return t;
}

std::vector<long long> ek_total_betti(const MonomialIdeal& I) {
  if (!is_stable(I)) throw std::invalid_argument("Eliahou-Kervaire requires stable ideal");
  MaxStats st = max_stats(I.gens(), I.vars());
  int n = I.vars();
  std::vector<long long> beta(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int s = i; s <= n; ++s)
      beta[static_cast<size_t>(i - 1)] += st.m[static_cast<size_t>(s - 1)] * binomial(s - 1, i - 1);
  return beta;
}

bool dominates(const BettiTable& a, const BettiTable& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("Betti tables over different ambient variable counts");
  for (const auto& [key, v] : b.entries())
    if (a.at(key.first, key.second) < v) return false;
  return true;
}

namespace {
std::pair<int, int> row_range(const BettiTable& t) {
  int lo = 1, hi = 0;
  for (const auto& [key, v] : t.entries()) {
    int off = key.second - key.first;
    if (off == 0) lo = 0;
    if (off > hi) hi = off;
  }
  return {lo, hi};
}
} // namespace

std::string render_diagram(const BettiTable& t) {
  std::ostringstream os;
  os << "j |";
  for (int i = 1; i <= t.vars(); ++i) os << ' ' << i;
  os << '\n';
  if (t.entries().empty()) return os.str();
  auto [lo, hi] = row_range(t);
  for (int j = lo; j <= hi; ++j) {
    os << j << " |";
    for (int i = 1; i <= t.vars(); ++i) {
      long long v = t.at(i, i + j);
      if (v == 0)
        os << " -";
      else
        os << ' ' << v;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_machine(const BettiTable& t) {
  std::ostringstream os;
  for (const auto& [key, v] : t.entries())
    os << key.first << ' ' << key.second << ' ' << v << '\n';
  return os.str();
}

} // namespace lef
