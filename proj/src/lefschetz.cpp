#include "lef/lefschetz.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace lef {

namespace {

std::string describe(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 1; i <= m.vars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<long long> hf_through_socle(const MonomialIdeal& I) {
  return I.hilbert_function(std::max(I.socle_degree(), 0));
}

} // namespace

WlpReport wlp_criterion(const MonomialIdeal& I) {
  if (!I.artinian()) throw std::invalid_argument("WLP criterion needs an artinian ideal");
  if (I.is_unit()) throw std::invalid_argument("WLP criterion is about algebras, not the zero ring");
  WlpReport rep;
  rep.hf = hf_through_socle(I);
  int n = I.vars();
  if (n == 0) { // quotient is the ground field
    rep.has_property = true;
    return rep;
  }
  OSequence h(rep.hf);
  rep.k = h.peak();
  if (!h.unimodal()) {
    rep.failing = WlpReport::Failure::non_unimodal;
    return rep;
  }
  // (b) (x_1..x_{n-1})^{k+1} contained in I; for strongly stable ideals this
  // is the single test x_{n-1}^{k+1}, spelled out in full for plain monomial
  // input.
  for (const Monomial& m : monomials_of_degree(n - 1, rep.k + 1)) {
    Monomial lifted = m.extended(n);
    if (!I.contains(lifted)) {
      rep.failing = WlpReport::Failure::missing_power;
      rep.witness = describe(lifted);
      return rep;
    }
  }
  // (c) generators divisible by x_n sit in degree >= k+1
  for (const Monomial& g : I.gens())
    if (g.exponent(n) > 0 && g.degree() < rep.k + 1) {
      rep.failing = WlpReport::Failure::low_degree_xn_generator;
      rep.witness = describe(g);
      return rep;
    }
  rep.has_property = true;
  return rep;
}

WlpReport has_wlp_stable(const MonomialIdeal& I) {
  if (!is_strongly_stable(I))
    throw std::invalid_argument("has_wlp_stable needs a strongly stable ideal");
  return wlp_criterion(I);
}

MwlpReport has_m_wlp_stable(const MonomialIdeal& I, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (m > I.vars()) throw std::invalid_argument("m exceeds the number of variables");
  if (!is_strongly_stable(I))
    throw std::invalid_argument("has_m_wlp_stable needs a strongly stable ideal");
  if (!I.artinian()) throw std::invalid_argument("has_m_wlp_stable needs an artinian ideal");
  MwlpReport rep;
  rep.ok = true;
  for (int i = 0; i < m; ++i) {
    MonomialIdeal level = project_rho(I, I.vars() - i);
    rep.levels.push_back(wlp_criterion(level));
    if (!rep.levels.back().has_property) rep.ok = false;
  }
  return rep;
}

namespace {

MonomialIdeal build_w_impl(const OSequence& h, int m) {
  if (h.length() == 0) return MonomialIdeal(0); // h = (1): the field itself
  int n = static_cast<int>(h.at(1));
  if (m == 0) return lex_segment(h);

  MonomialIdeal base = build_w_impl(delta(h), m - 1);
  MonomialIdeal I = extend_vars(base, n);

  int k = h.peak();
  int s = h.length();
  std::vector<Monomial> gens = I.gens();
  for (int d = k + 1; d <= s + 1; ++d) {
    std::vector<Monomial> std_d = I.standard_monomials(d); // decreasing rev-lex
    long long excess = static_cast<long long>(std_d.size()) - h.at(d);
    if (excess < 0)
      throw std::logic_error("Hilbert function dropped below target while extending");
    for (long long t = 0; t < excess; ++t) gens.push_back(std_d[static_cast<size_t>(t)]);
    I = MonomialIdeal::minimalize(n, gens);
  }
  return I;
}

} // namespace

MonomialIdeal build_w(const std::vector<long long>& h, int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  LefschetzSeqReport rep = is_m_times_wl(h, m);
  if (!rep.ok)
    throw std::invalid_argument("not an m-times weak Lefschetz O-sequence: " + rep.reason);
  return build_w_impl(OSequence(h), m);
}

namespace {

// |R_1 V| for a set of degree-d monomials
long long growth(const std::vector<Monomial>& piece, int n) {
  std::set<Monomial, RevlexGreater> products;
  for (const Monomial& m : piece)
    for (int i = 1; i <= n; ++i) products.insert(m.times_var(i));
  return static_cast<long long>(products.size());
}

} // namespace

bool is_gotzmann(const MonomialIdeal& I, int d_max) {
  int n = I.vars();
  for (int d = 0; d <= d_max; ++d) {
    std::vector<Monomial> piece = I.degree_piece(d);
    std::vector<Monomial> all = monomials_of_degree(n, d);
    std::sort(all.begin(), all.end(), LexGreater{});
    std::vector<Monomial> lex_piece(all.begin(), all.begin() + static_cast<long>(piece.size()));
    if (growth(piece, n) != growth(lex_piece, n)) return false;
  }
  return true;
}

bool is_gotzmann(const MonomialIdeal& I) {
  int bound = I.max_gen_degree();
  if (I.artinian()) bound = std::max(bound, I.socle_degree());
  return is_gotzmann(I, bound + 1);
}

MaxBettiReport has_maximal_betti(const MonomialIdeal& I, int m, Cutoff cutoff) {
  if (!is_strongly_stable(I) || !I.artinian())
    throw std::invalid_argument("has_maximal_betti needs a strongly stable artinian ideal");
  MwlpReport wlp = has_m_wlp_stable(I, m);
  if (!wlp.ok) throw std::invalid_argument("has_maximal_betti needs m-times WLP");

  std::vector<long long> h = hf_through_socle(I);
  LefschetzSeqReport seq = is_m_times_wl(h, m);
  if (!seq.ok) throw std::logic_error("m-times WLP ideal with invalid sequence: " + seq.reason);
  int km = seq.k.back();
  int cut = cutoff == Cutoff::km_plus_one ? km + 1 : km;

  MonomialIdeal projected = project_rho(truncate_below(I, cut), I.vars() - m);
  MonomialIdeal extremal = build_w(h, m);
  BettiTable mine = ek_graded_betti(I);
  BettiTable best = ek_graded_betti(extremal);
  return MaxBettiReport{mine == best, is_gotzmann(projected), cut, std::move(mine),
                        std::move(best)};
}

RigidityReport check_rigidity(const MonomialIdeal& I, int m) {
  if (!is_strongly_stable(I) || !I.artinian())
    throw std::invalid_argument("check_rigidity needs a strongly stable artinian ideal");
  if (!has_m_wlp_stable(I, m).ok)
    throw std::invalid_argument("check_rigidity needs m-times WLP");

  std::vector<long long> h = hf_through_socle(I);
  MonomialIdeal W = build_w(h, m);
  RigidityReport rep;
  rep.beta = ek_total_betti(I);
  rep.beta_w = ek_total_betti(W);
  int n = I.vars();
  rep.implication_holds = true;
  bool seen_equal = false;
  for (int q = 1; q <= n; ++q) {
    bool eq = rep.beta[static_cast<size_t>(q - 1)] == rep.beta_w[static_cast<size_t>(q - 1)];
    if (eq && !rep.first_equal) rep.first_equal = q;
    if (seen_equal && !eq) rep.implication_holds = false;
    seen_equal = seen_equal || eq;
  }
  rep.graded_equal_from_q = true;
  if (rep.first_equal && rep.implication_holds) {
    BettiTable a = ek_graded_betti(I);
    BettiTable b = ek_graded_betti(W);
    int maxj = 0;
    for (const auto& [key, v] : a.entries()) maxj = std::max(maxj, key.second);
    for (const auto& [key, v] : b.entries()) maxj = std::max(maxj, key.second);
    for (int i = *rep.first_equal; i <= n && rep.graded_equal_from_q; ++i)
      for (int j = 0; j <= maxj; ++j)
        if (a.at(i, j) != b.at(i, j)) rep.graded_equal_from_q = false;
  }
  return rep;
}

namespace {

std::vector<Monomial> borel_closure(std::vector<Monomial> seed) {
  std::set<Monomial, RevlexGreater> closed(seed.begin(), seed.end());
  std::deque<Monomial> queue(seed.begin(), seed.end());
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    for (int k = 2; k <= m.vars(); ++k) {
      if (m.exponent(k) == 0) continue;
      for (int i = 1; i < k; ++i) {
        Monomial moved = m.div_var(k).times_var(i);
        if (closed.insert(moved).second) queue.push_back(moved);
      }
    }
  }
  return {closed.begin(), closed.end()};
}

} // namespace

MonomialIdeal random_strongly_stable(std::uint64_t seed, int n, int max_degree,
                                     const std::optional<OSequence>& target) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  std::mt19937_64 rng(seed);
  auto below = [&rng](int m) { return static_cast<int>(rng() % static_cast<std::uint64_t>(m)); };

  const int attempts = target ? 512 : 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Monomial> sample;
    int count = 1 + below(2 * n);
    for (int c = 0; c < count; ++c) {
      int d = 1 + below(max_degree);
      std::vector<int> exp(static_cast<size_t>(n), 0);
      for (int t = 0; t < d; ++t) ++exp[static_cast<size_t>(below(n))];
      sample.emplace_back(std::move(exp));
    }
    for (int i = 1; i <= n; ++i) sample.push_back(Monomial::power(n, i, 1 + below(max_degree + 1)));
    MonomialIdeal I = MonomialIdeal::minimalize(n, borel_closure(std::move(sample)));
    if (!target) return I;
    int socle = I.socle_degree();
    if (socle == target->length() && I.hilbert_function(socle) == target->values()) return I;
  }
  throw std::runtime_error("no sample found matching the target Hilbert function");
}

} // namespace lef
