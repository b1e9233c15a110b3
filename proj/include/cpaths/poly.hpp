#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

namespace cpaths {

using BigInt = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in q over the integers. Zero coefficients are
// never stored.
class QPoly {
 public:
  QPoly() = default;
  static QPoly constant(long long c);
  static QPoly monomial(int qexp, BigInt coeff = 1);

  void add_term(int qexp, const BigInt& coeff);
  const std::map<int, BigInt>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const BigInt& k) const;

  // Exact division; throws if the remainder is nonzero.
  QPoly divide_exact(const QPoly& divisor) const;

  BigInt eval_one() const;       // value at q = 1
  QPoly reversed() const;        // q -> q^{-1}
  QPoly shifted(int d) const;    // multiply by q^d
  int min_degree() const;        // throws on zero polynomial
  int max_degree() const;

  std::string to_text() const;   // "q^5 + 4 q^4 + ... + 4", descending powers
  nlohmann::json to_json() const;

 private:
  std::map<int, BigInt> c_;
};

// Sparse polynomial in (q, t) with integer (possibly Laurent) exponents.
class QTPoly {
 public:
  QTPoly() = default;
  static QTPoly monomial(int qexp, int texp, BigInt coeff = 1);

  void add_term(int qexp, int texp, const BigInt& coeff);
  const std::map<std::pair<int, int>, BigInt>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool operator==(const QTPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QTPoly& o) const { return !(*this == o); }

  QTPoly& operator+=(const QTPoly& o);
  QTPoly operator+(const QTPoly& o) const;
  QTPoly operator*(const BigInt& k) const;

  QPoly at_t_one() const;
  QPoly at_q_one() const;   // set q = 1; result is a polynomial in t
  QPoly at_q_zero() const;  // coefficient slice q^0, as polynomial in t

  std::string to_text() const;  // terms sorted by (t asc, q asc)
  nlohmann::json to_json() const;

 private:
  std::map<std::pair<int, int>, BigInt> c_;
};

}  // namespace cpaths
