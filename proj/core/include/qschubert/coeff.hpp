#pragma once

// Exact scalars in Z[v, v^-1] and its fraction field, where v = q^(1/2).

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qschubert/errors.hpp"

namespace qschubert {

using Int = mpz_class;

// Laurent polynomial in v with integer coefficients. Stored densely from the
// lowest exponent; both ends are nonzero, the zero polynomial has no terms.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  explicit Laurent(const Int& c);

  static Laurent monomial(int exp, const Int& c = 1);
  static Laurent from_terms(const std::vector<std::pair<int, Int>>& terms);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return lo_ == 0 && c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.empty() || (lo_ == 0 && c_.size() == 1); }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  Int coeff(int exp) const;
  const Int& leading() const { return c_.back(); }
  const Int& trailing() const { return c_.front(); }

  // (exponent, coefficient) pairs with nonzero coefficient, ascending.
  std::vector<std::pair<int, Int>> terms() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const Int& c);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // this += sign * v^shift * a, without temporaries.
  void add_shifted(const Laurent& a, int shift, int sign = 1);
  void add_scaled(const Laurent& a, const Int& c, int shift = 0);

  Laurent shifted(int k) const;
  Laurent bar() const;
  // f(v) -> f(v^d), d >= 1.
  Laurent substitute(int d) const;
  Laurent pow(int n) const;

  Int content() const;
  // Divides out a nonzero integer; all coefficients must be divisible.
  void divide_integer(const Int& c);
  // Quotient when d divides *this in Z[v, v^-1], nullopt otherwise.
  std::optional<Laurent> divide_exact(const Laurent& d) const;

  std::size_t hash() const;
  std::string str(const std::string& var = "v") const;

 private:
  void trim();

  int lo_ = 0;
  std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& a);

// gcd in Z[v, v^-1], normalized to lowest exponent 0 and positive leading
// coefficient.
Laurent gcd(const Laurent& a, const Laurent& b);

// Reduced fraction num/den. den is normalized: lowest exponent 0 and positive
// leading coefficient; common factors, integer content included, are removed.
class Rat {
 public:
  Rat() : den_(1) {}
  Rat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(const Laurent& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(const Laurent& n, const Laurent& d);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  Rat bar() const;
  Rat shifted(int k) const;

  std::string str(const std::string& var = "v") const;

 private:
  void normalize();

  Laurent num_;
  Laurent den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& a);

enum class ArithOp { Add, Sub, Mul, Div, Neg };
Rat arith(const Rat& a, const Rat& b, ArithOp op);
inline Rat bar_conj(const Rat& a) { return a.bar(); }

// Numerator of a, which must have denominator 1.
Laurent as_laurent(const Rat& a);

// A0 = Z[q, q^-1]; A = Z[v, v^-1]; Kminus = q^-1 Z[q^-1].
enum class ScalarSet { A0, A, Kminus, OnePlusKminus };
bool membership(const Rat& a, ScalarSet set);
bool membership(const Laurent& a, ScalarSet set);

// q-combinatorics. `scale` = d evaluates at v^d, so quantities usually
// written with subscript q_i use scale 2*d_i.
Laurent q_angle(int n, int scale = 1);            // v^n - v^-n
Laurent q_round(int n, int scale = 1);            // <n>/<1>
Laurent q_angle_factorial(int n, int scale = 1);  // prod <t>
Laurent q_round_factorial(int n, int scale = 1);  // prod (t)
Laurent q_binomial(int n, int k, int scale = 1);  // any integer n, k >= 0
Laurent q_bracket(int k, int scale = 1);          // [k] = sum_{l<k} v^l
Laurent gauss_binomial(int m, int n, int scale = 1);

enum class QKind { AngleInt, RoundInt, AngleFact, RoundFact, Binom, GaussBinom };
Laurent q_combinatorics(QKind kind, const std::vector<int>& args, int scale);

}  // namespace qschubert
