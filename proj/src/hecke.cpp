#include "bsdist/hecke.hpp"

#include <sstream>
#include <stdexcept>

#include "bsdist/demazure.hpp"

namespace bsdist {

HeckeElt HeckeElt::basis(const Perm& x) {
  HeckeElt h(x.n());
  h.terms_.emplace(x, Laurent::one());
  return h;
}

Laurent HeckeElt::coeff(const Perm& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Laurent() : it->second;
}

void HeckeElt::add_term(const Perm& x, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt HeckeElt::times_gen(int i) const {
  if (i < 1 || i > n_ - 1) throw std::invalid_argument("HeckeElt::times_gen: index out of range");
  Laurent q = Laurent::q_power(1);
  Laurent q_minus_1 = q - Laurent::one();
  HeckeElt out(n_);
  for (const auto& [x, c] : terms_) {
    Perm y = x.right_mul(i);
    if (x.right_ascent(i)) {
      out.add_term(y, q * c);
    } else {
      out.add_term(x, q_minus_1 * c);
      out.add_term(y, c);
    }
  }
  return out;
}

HeckeElt HeckeElt::times_one_plus_gen(int i) const {
  if (i < 1 || i > n_ - 1)
    throw std::invalid_argument("HeckeElt::times_one_plus_gen: index out of range");
  HeckeElt out(n_);
  for (const auto& [x, c] : terms_) {
    Perm y = x.right_mul(i);
    Laurent qc = c.shifted(2);  // q * c
    if (x.right_ascent(i)) {
      out.add_term(x, c);
      out.add_term(y, qc);
    } else {
      out.add_term(x, qc);
      out.add_term(y, c);
    }
  }
  return out;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  if (n_ != o.n_) throw std::invalid_argument("HeckeElt: mismatched n");
  HeckeElt out(*this);
  for (const auto& [x, c] : o.terms_) out.add_term(x, c);
  return out;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  if (n_ != o.n_) throw std::invalid_argument("HeckeElt: mismatched n");
  HeckeElt out(*this);
  for (const auto& [x, c] : o.terms_) out.add_term(x, -c);
  return out;
}

HeckeElt HeckeElt::scaled(const Laurent& s) const {
  HeckeElt out(n_);
  if (s.is_zero()) return out;
  for (const auto& [x, c] : terms_) out.add_term(x, s * c);
  return out;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [x, c] : terms_) {
    auto it = o.terms_.find(x);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::string HeckeElt::canonical_key() const {
  std::map<Perm, const Laurent*> sorted;
  for (const auto& [x, c] : terms_) sorted.emplace(x, &c);
  std::ostringstream os;
  for (const auto& [x, c] : sorted) os << x.str() << ":" << c->key() << ";";
  return os.str();
}

HeckeElt f_of_word(const Word& r) {
  HeckeElt h = HeckeElt::unit(r.n());
  for (int x : r.letters()) h = h.times_one_plus_gen(x);
  return h;
}

Distribution wt_table(const Word& r) {
  HeckeElt f = f_of_word(r);
  Distribution d;
  d.n = r.n();
  d.L = r.size();
  Laurent total;
  for (const auto& [x, c] : f.terms()) {
    if (!c.is_q_polynomial() || !c.nonnegative())
      throw std::logic_error("wt_table: weight is not a nonnegative polynomial in q");
    total += c;
    d.numerators.emplace(x, c);
  }
  if (total != Laurent::one_plus_q().pow(static_cast<unsigned>(d.L)))
    throw std::logic_error("wt_table: weights do not sum to (1+q)^L");
  return d;
}

bool distributions_equal(const Word& r1, const Word& r2) {
  return !distribution_witness(r1, r2).has_value();
}

std::optional<Perm> distribution_witness(const Word& r1, const Word& r2) {
  if (r1.n() != r2.n()) throw std::invalid_argument("distribution_witness: mismatched n");
  Distribution d1 = wt_table(r1), d2 = wt_table(r2);
  std::map<Perm, std::pair<Laurent, Laurent>> merged;
  for (const auto& [x, c] : d1.numerators) merged[x].first = c;
  for (const auto& [x, c] : d2.numerators) merged[x].second = c;
  for (const auto& [x, pair] : merged) {
    if (d1.L == d2.L) {
      if (pair.first != pair.second) return x;
    } else if (!rational_equal(pair.first, d1.L, pair.second, d2.L)) {
      return x;
    }
  }
  return std::nullopt;
}

std::set<Perm> support(const Word& r) {
  std::set<Perm> out;
  HeckeElt f = f_of_word(r);
  for (const auto& [x, c] : f.terms()) out.insert(x);
  return out;
}

namespace {

void require_red_w0(const Word& r, const char* who) {
  int big_n = r.n() * (r.n() - 1) / 2;
  if (r.size() != big_n || !is_reduced(r))
    throw std::invalid_argument(std::string(who) + ": word is not a reduced word of w0");
}

long to_long(const Int& v) { return v.convert_to<long>(); }

}  // namespace

long d_coeff(const Word& r, const Perm& x) {
  require_red_w0(r, "d_coeff");
  int big_n = r.n() * (r.n() - 1) / 2;
  return to_long(f_of_word(r).coeff(x).coeff_q(big_n - 1));
}

std::map<Perm, long> d_table_from(const HeckeElt& f) {
  int big_n = f.n() * (f.n() - 1) / 2;
  std::map<Perm, long> out;
  for (const auto& [x, c] : f.terms()) {
    long d = to_long(c.coeff_q(big_n - 1));
    if (d != 0) out.emplace(x, d);
  }
  return out;
}

std::map<Perm, long> d_table(const Word& r) {
  require_red_w0(r, "d_table");
  return d_table_from(f_of_word(r));
}

std::map<std::array<int, 3>, long> theta_from(const HeckeElt& f) {
  std::map<std::array<int, 3>, long> out;
  for (const auto& tr : triple_order(f.n())) out.emplace(tr, 0);
  for (const auto& [x, d] : d_table_from(f)) {
    FwdBwd fb = fwd_bwd(x);
    if (fb.supp.empty()) continue;
    int a = *fb.supp.begin(), c = *fb.supp.rbegin();
    if (!fb.supp_is_interval(a, c)) continue;
    for (int b = a + 1; b <= c - 1; ++b) out[{a, b, c}] += d * fb.sigma(b);
  }
  return out;
}

std::map<std::array<int, 3>, long> theta_all(const Word& r) {
  require_red_w0(r, "theta_all");
  return theta_from(f_of_word(r));
}

long theta(const Word& r, int a, int b, int c) {
  if (!(1 <= a && a < b && b < c && c <= r.n()))
    throw std::invalid_argument("theta: need 1 <= a < b < c <= n");
  return theta_all(r).at({a, b, c});
}

}  // namespace bsdist
