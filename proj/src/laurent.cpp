#include "bsdist/laurent.hpp"

#include <sstream>

namespace bsdist {

void Laurent::normalize() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  size_t trail = coeffs_.size();
  while (coeffs_[trail - 1] == 0) --trail;
  if (lead > 0 || trail < coeffs_.size()) {
    coeffs_ = std::vector<Int>(coeffs_.begin() + lead, coeffs_.begin() + trail);
    low_ += static_cast<int>(lead);
  }
}

Laurent Laurent::from_int(long long c) {
  Laurent p;
  if (c != 0) {
    p.low_ = 0;
    p.coeffs_ = {Int(c)};
  }
  return p;
}

Laurent Laurent::v_power(int e) {
  Laurent p;
  p.low_ = e;
  p.coeffs_ = {Int(1)};
  return p;
}

Laurent Laurent::q_power(int k) { return v_power(2 * k); }

Laurent Laurent::one_plus_q() {
  Laurent p;
  p.low_ = 0;
  p.coeffs_ = {Int(1), Int(0), Int(1)};
  return p;
}

Laurent Laurent::from_q_coeffs(const std::vector<Int>& asc) {
  Laurent p;
  p.low_ = 0;
  p.coeffs_.assign(asc.empty() ? 0 : 2 * asc.size() - 1, Int(0));
  for (size_t k = 0; k < asc.size(); ++k) p.coeffs_[2 * k] = asc[k];
  p.normalize();
  return p;
}

Int Laurent::coeff_v(int e) const {
  if (is_zero() || e < low_ || e > high()) return Int(0);
  return coeffs_[static_cast<size_t>(e - low_)];
}

bool Laurent::is_q_polynomial() const {
  if (is_zero()) return true;
  if (low_ < 0) return false;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0 && (low_ + static_cast<int>(k)) % 2 != 0) return false;
  }
  return true;
}

Int Laurent::coeff_q(int k) const {
  if (!is_q_polynomial())
    throw std::domain_error("coeff_q: polynomial has odd v-exponents, not a polynomial in q");
  return coeff_v(2 * k);
}

std::vector<Int> Laurent::q_coeffs() const {
  if (!is_q_polynomial())
    throw std::domain_error("q_coeffs: polynomial has odd v-exponents, not a polynomial in q");
  std::vector<Int> out;
  if (is_zero()) return out;
  out.resize(static_cast<size_t>(high() / 2) + 1, Int(0));
  for (size_t k = 0; k < out.size(); ++k) out[k] = coeff_v(2 * static_cast<int>(k));
  return out;
}

int Laurent::q_degree() const {
  if (!is_q_polynomial())
    throw std::domain_error("q_degree: not a polynomial in q");
  return is_zero() ? 0 : high() / 2;
}

bool Laurent::nonnegative() const {
  for (const Int& c : coeffs_)
    if (c < 0) return false;
  return true;
}

Laurent Laurent::operator-() const {
  Laurent p(*this);
  for (Int& c : p.coeffs_) c = -c;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int new_low = std::min(low_, o.low_);
  int new_high = std::max(high(), o.high());
  std::vector<Int> out(static_cast<size_t>(new_high - new_low + 1), Int(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) out[static_cast<size_t>(low_ - new_low) + k] = coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k)
    out[static_cast<size_t>(o.low_ - new_low) + k] += o.coeffs_[k];
  low_ = new_low;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.normalize();
  return p;
}

Laurent Laurent::shifted(int e) const {
  Laurent p(*this);
  if (!p.is_zero()) p.low_ += e;
  return p;
}

Laurent Laurent::pow(unsigned k) const {
  Laurent out = one();
  Laurent base = *this;
  while (k > 0) {
    if (k & 1u) out *= base;
    base = base * base;
    k >>= 1u;
  }
  return out;
}

Rational Laurent::eval_q(const Rational& q) const {
  std::vector<Int> qc = q_coeffs();
  Rational r = 0;
  for (size_t k = qc.size(); k > 0; --k) r = r * q + Rational(qc[k - 1]);
  return r;
}

Int Laurent::eval_q_int(const Int& q) const {
  std::vector<Int> qc = q_coeffs();
  Int r = 0;
  for (size_t k = qc.size(); k > 0; --k) r = r * q + qc[k - 1];
  return r;
}

namespace {

std::string term_str(const Int& c, int e, const std::string& var, int stride, bool first) {
  Int a = c < 0 ? Int(-c) : c;
  std::ostringstream os;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  int ve = e / stride;  // exponent in the chosen variable
  if (ve == 0) {
    os << a.str();
    return os.str();
  }
  if (a != 1) os << a.str() << "*";
  os << var;
  if (ve != 1) os << "^" << ve;
  return os.str();
}

}  // namespace

std::string Laurent::str_v() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = low(); e <= high(); ++e) {
    Int c = coeff_v(e);
    if (c == 0) continue;
    out += term_str(c, e, "v", 1, first);
    first = false;
  }
  return out;
}

std::string Laurent::str_q() const {
  std::vector<Int> qc = q_coeffs();
  if (qc.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < qc.size(); ++k) {
    if (qc[k] == 0) continue;
    out += term_str(qc[k], 2 * static_cast<int>(k), "q", 2, first);
    first = false;
  }
  return out;
}

std::string Laurent::key() const {
  std::ostringstream os;
  os << low_;
  for (const Int& c : coeffs_) os << "," << c.str();
  return os.str();
}

bool rational_equal(const Laurent& num1, int l1, const Laurent& num2, int l2) {
  if (l1 < 0 || l2 < 0) throw std::invalid_argument("rational_equal: negative length");
  Laurent d = Laurent::one_plus_q();
  return num1 * d.pow(static_cast<unsigned>(l2)) == num2 * d.pow(static_cast<unsigned>(l1));
}

Int q_coefficient(const Laurent& p, int k) { return p.coeff_q(k); }

}  // namespace bsdist
