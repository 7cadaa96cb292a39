#include "lef/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace lef {

namespace {
// degree, then decreasing rev-lex: the canonical generator ordering
bool gen_order(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return cmp_revlex(a, b) == std::strong_ordering::greater;
}
} // namespace

MonomialIdeal::MonomialIdeal(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("variable count must be >= 0");
}

MonomialIdeal MonomialIdeal::minimalize(int n, std::vector<Monomial> raw_gens) {
  MonomialIdeal I(n);
  for (const Monomial& m : raw_gens)
    if (m.vars() != n)
      throw std::invalid_argument("generator ambient variable count mismatch");
  std::sort(raw_gens.begin(), raw_gens.end(), gen_order);
  raw_gens.erase(std::unique(raw_gens.begin(), raw_gens.end()), raw_gens.end());
  for (const Monomial& m : raw_gens) {
    bool redundant = false;
    for (const Monomial& g : I.gens_)
      if (divides(g, m)) {
        redundant = true;
        break;
      }
    if (!redundant) I.gens_.push_back(m);
  }
  return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.vars() != n_)
    throw std::invalid_argument("monomial ambient variable count mismatch");
  for (const Monomial& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

std::vector<Monomial> MonomialIdeal::standard_monomials(int d) const {
  std::vector<Monomial> out;
  for (Monomial& m : monomials_of_degree(n_, d))
    if (!contains(m)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> MonomialIdeal::degree_piece(int d) const {
  std::vector<Monomial> out;
  for (Monomial& m : monomials_of_degree(n_, d))
    if (contains(m)) out.push_back(std::move(m));
  return out;
}

std::vector<long long> MonomialIdeal::hilbert_function(int d_max) const {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  std::vector<long long> h;
  h.reserve(static_cast<size_t>(d_max) + 1);
  for (int d = 0; d <= d_max; ++d)
    h.push_back(static_cast<long long>(standard_monomials(d).size()));
  return h;
}

bool MonomialIdeal::artinian() const {
  for (int i = 1; i <= n_; ++i) {
    bool has_power = false;
    for (const Monomial& g : gens_)
      if (g.max_index() == i && g.exponent(i) == g.degree()) { // pure power of x_i
        has_power = true;
        break;
      }
    if (!has_power && !is_unit()) return false;
  }
  return true;
}

int MonomialIdeal::socle_degree() const {
  if (!artinian()) throw std::invalid_argument("socle degree needs an artinian ideal");
  if (is_unit()) return -1;
  int bound = 1;
  for (const Monomial& g : gens_)
    if (g.max_index() && g.exponent(*g.max_index()) == g.degree())
      bound += g.degree() - 1;
  int socle = -1;
  for (int d = 0; d <= bound; ++d)
    if (!standard_monomials(d).empty()) socle = d;
  return socle;
}

int MonomialIdeal::max_gen_degree() const {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

int MonomialIdeal::max_exponent() const {
  int e = 0;
  for (const Monomial& g : gens_)
    for (int x : g.exponents()) e = std::max(e, x);
  return e;
}

bool is_strongly_stable(const MonomialIdeal& I) {
  // checking the minimal generators suffices
  for (const Monomial& g : I.gens())
    for (int k = 2; k <= I.vars(); ++k) {
      if (g.exponent(k) == 0) continue;
      for (int i = 1; i < k; ++i)
        if (!I.contains(g.div_var(k).times_var(i))) return false;
    }
  return true;
}

bool is_stable(const MonomialIdeal& I) {
  for (const Monomial& g : I.gens()) {
    auto mx = g.max_index();
    if (!mx || *mx == 1) continue;
    for (int i = 1; i < *mx; ++i)
      if (!I.contains(g.div_var(*mx).times_var(i))) return false;
  }
  return true;
}

MonomialIdeal lex_segment(const OSequence& h) {
  auto chk = check_o_sequence(h.values());
  if (!chk.ok) throw std::invalid_argument("lex_segment: " + chk.reason);
  int n = static_cast<int>(h.at(1));
  int s = h.length();
  std::vector<Monomial> gens;
  MonomialIdeal I(n);
  for (int d = 1; d <= s + 1; ++d) {
    std::vector<Monomial> all = monomials_of_degree(n, d);
    std::sort(all.begin(), all.end(), LexGreater{});
    long long keep = static_cast<long long>(all.size()) - h.at(d);
    if (keep < 0)
      throw std::invalid_argument("lex_segment: h_" + std::to_string(d) +
                                  " exceeds the dimension of degree " + std::to_string(d));
    for (long long t = 0; t < keep; ++t)
      if (!I.contains(all[static_cast<size_t>(t)])) gens.push_back(all[static_cast<size_t>(t)]);
    I = MonomialIdeal::minimalize(n, gens);
  }
  return I;
}

MonomialIdeal project_rho(const MonomialIdeal& I, int i) {
  if (i < 0 || i > I.vars()) throw std::invalid_argument("projection index out of range");
  std::vector<Monomial> kept;
  for (const Monomial& g : I.gens()) {
    auto mx = g.max_index();
    if (!mx || *mx <= i) {
      std::vector<int> e(g.exponents().begin(), g.exponents().begin() + i);
      kept.emplace_back(std::move(e));
    }
  }
  return MonomialIdeal::minimalize(i, std::move(kept));
}

MonomialIdeal truncate_below(const MonomialIdeal& I, int d) {
  if (d < 0) throw std::invalid_argument("truncation degree must be >= 0");
  std::vector<Monomial> kept;
  for (const Monomial& g : I.gens())
    if (g.degree() <= d) kept.push_back(g);
  return MonomialIdeal::minimalize(I.vars(), std::move(kept));
}

MonomialIdeal extend_vars(const MonomialIdeal& I, int n) {
  if (n < I.vars()) throw std::invalid_argument("cannot shrink ambient variable count");
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) gens.push_back(g.extended(n));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

MaxStats max_stats(const std::vector<Monomial>& monomials, int n) {
  MaxStats st;
  st.m.assign(static_cast<size_t>(n), 0);
  st.m_le.assign(static_cast<size_t>(n), 0);
  for (const Monomial& m : monomials) {
    if (m.vars() != n) throw std::invalid_argument("max_stats ambient mismatch");
    if (auto mx = m.max_index()) ++st.m[static_cast<size_t>(*mx - 1)];
  }
  long long acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += st.m[static_cast<size_t>(i)];
    st.m_le[static_cast<size_t>(i)] = acc;
  }
  // unit monomials have empty support: they land in every m_<=i
  long long units = 0;
  for (const Monomial& m : monomials)
    if (m.is_one()) ++units;
  if (units > 0)
    for (auto& v : st.m_le) v += units;
  return st;
}

} // namespace lef
