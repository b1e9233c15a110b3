#include "cpaths/poly.hpp"

#include <algorithm>
#include <limits>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <vector>

namespace cpaths {

namespace {

std::string coeff_str(const BigInt& c) { return c.str(); }

// Monomial text like "q^3 t^2", "q t", "q^2", "1".
std::string monom_text(int qe, int te) {
  std::string s;
  if (qe != 0) {
    s += "q";
    if (qe != 1) s += "^" + std::to_string(qe);
  }
  if (te != 0) {
    if (!s.empty()) s += " ";
    s += "t";
    if (te != 1) s += "^" + std::to_string(te);
  }
  if (s.empty()) s = "1";
  return s;
}

std::string term_text(const BigInt& c, int qe, int te, bool first) {
  BigInt a = c < 0 ? BigInt(-c) : c;
  std::string s;
  if (first) {
    if (c < 0) s += "-";
  } else {
    s += c < 0 ? " - " : " + ";
  }
  std::string m = monom_text(qe, te);
  if (a != 1 || m == "1") {
    s += coeff_str(a);
    if (m != "1") s += " ";
  }
  if (m != "1") s += m;
  return s;
}

void json_put(nlohmann::json& j, const std::string& key, const BigInt& c) {
  // exact integers only; big coefficients fall back to strings
  if (c >= std::numeric_limits<long long>::min() &&
      c <= std::numeric_limits<long long>::max()) {
    j[key] = (long long)c;
  } else {
    j[key] = c.str();
  }
}

}  // namespace

QPoly QPoly::constant(long long c) {
  QPoly p;
  p.add_term(0, c);
  return p;
}

QPoly QPoly::monomial(int qexp, BigInt coeff) {
  QPoly p;
  p.add_term(qexp, coeff);
  return p;
}

void QPoly::add_term(int qexp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto it = c_.find(qexp);
  if (it == c_.end()) {
    c_.emplace(qexp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  r += o;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  r -= o;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  for (auto& [e1, c1] : c_)
    for (auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

QPoly QPoly::operator*(const BigInt& k) const {
  QPoly r;
  if (k == 0) return r;
  for (auto& [e, c] : c_) r.add_term(e, c * k);
  return r;
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero");
  QPoly rem = *this;
  QPoly quot;
  if (rem.is_zero()) return quot;
  int dtop = divisor.max_degree();
  // any exact quotient has all exponents at or above this bound
  int elow = min_degree() - divisor.min_degree();
  const BigInt& dlead = divisor.terms().rbegin()->second;
  while (!rem.is_zero()) {
    int rtop = rem.max_degree();
    const BigInt& rlead = rem.terms().rbegin()->second;
    if (rlead % dlead != 0) throw std::runtime_error("inexact division");
    BigInt q = rlead / dlead;
    int e = rtop - dtop;
    if (e < elow) throw std::runtime_error("inexact division");
    quot.add_term(e, q);
    rem -= divisor * QPoly::monomial(e, q);
    if (!rem.is_zero() && rem.max_degree() >= rtop)
      throw std::runtime_error("inexact division");
  }
  return quot;
}

BigInt QPoly::eval_one() const {
  BigInt s = 0;
  for (auto& [e, c] : c_) s += c;
  return s;
}

QPoly QPoly::reversed() const {
  QPoly r;
  for (auto& [e, c] : c_) r.add_term(-e, c);
  return r;
}

QPoly QPoly::shifted(int d) const {
  QPoly r;
  for (auto& [e, c] : c_) r.add_term(e + d, c);
  return r;
}

int QPoly::min_degree() const {
  if (c_.empty()) throw std::logic_error("degree of zero polynomial");
  return c_.begin()->first;
}

int QPoly::max_degree() const {
  if (c_.empty()) throw std::logic_error("degree of zero polynomial");
  return c_.rbegin()->first;
}

std::string QPoly::to_text() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    s += term_text(it->second, it->first, 0, first);
    first = false;
  }
  return s;
}

nlohmann::json QPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [e, c] : c_) json_put(j, "q^" + std::to_string(e), c);
  return j;
}

QTPoly QTPoly::monomial(int qexp, int texp, BigInt coeff) {
  QTPoly p;
  p.add_term(qexp, texp, coeff);
  return p;
}

void QTPoly::add_term(int qexp, int texp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(qexp, texp);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
  for (auto& [k, c] : o.c_) add_term(k.first, k.second, c);
  return *this;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
  QTPoly r = *this;
  r += o;
  return r;
}

QTPoly QTPoly::operator*(const BigInt& k) const {
  QTPoly r;
  if (k == 0) return r;
  for (auto& [key, c] : c_) r.add_term(key.first, key.second, c * k);
  return r;
}

QPoly QTPoly::at_t_one() const {
  QPoly r;
  for (auto& [k, c] : c_) r.add_term(k.first, c);
  return r;
}

QPoly QTPoly::at_q_one() const {
  QPoly r;
  for (auto& [k, c] : c_) r.add_term(k.second, c);
  return r;
}

QPoly QTPoly::at_q_zero() const {
  QPoly r;
  for (auto& [k, c] : c_)
    if (k.first == 0) r.add_term(k.second, c);
  return r;
}

std::string QTPoly::to_text() const {
  if (c_.empty()) return "0";
  // sort by (t asc, q asc)
  std::vector<std::pair<std::pair<int, int>, BigInt>> v(c_.begin(), c_.end());
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
    if (a.first.second != b.first.second)
      return a.first.second < b.first.second;
    return a.first.first < b.first.first;
  });
  std::string s;
  bool first = true;
  for (auto& [k, c] : v) {
    s += term_text(c, k.first, k.second, first);
    first = false;
  }
  return s;
}

nlohmann::json QTPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [k, c] : c_)
    json_put(j, "q^" + std::to_string(k.first) + " t^" +
                    std::to_string(k.second),
             c);
  return j;
}

}  // namespace cpaths
