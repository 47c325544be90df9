#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skel {

using Integer = boost::multiprecision::cpp_int;

/// Exponents of one term over the variable families x, y, p, q. The x and y
/// vectors always have the arity of the polynomial holding the term.
struct Monomial {
  std::vector<int> x;
  std::vector<int> y;
  int p = 0;
  int q = 0;

  auto operator<=>(const Monomial&) const = default;
};

Monomial x_monomial(std::vector<int> exponents);

/// Sparse polynomial with exact integer coefficients in x_1..x_a, y_1..y_b,
/// p and q. Zero coefficients are never stored; the zero polynomial has no
/// terms. Arithmetic between different arities pads with zero exponents, and
/// equality ignores arity.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  MultiPoly() = default;
  explicit MultiPoly(int x_arity, int y_arity = 0);
  static MultiPoly constant(const Integer& c);
  static MultiPoly monomial(const Monomial& m, const Integer& c = 1);

  int x_arity() const { return x_arity_; }
  int y_arity() const { return y_arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * m; m's exponent vectors may be shorter than the arity.
  void add_term(Monomial m, const Integer& c);
  Integer coefficient(const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Integer& c) const;

  bool operator==(const MultiPoly& other) const;

  MultiPoly with_arity(int x_arity, int y_arity) const;

  /// g*(x_1, ..., x_a) = g(x_a, ..., x_1) for the fixed arity a.
  MultiPoly reverse_x() const;

  /// x_j -> 1 for j <= ones, x_j -> 0 otherwise; the result has x arity 0.
  MultiPoly specialize_x(int ones) const;
  MultiPoly specialize_y(int ones) const;
  MultiPoly set_p_one() const;
  MultiPoly set_q_one() const;

  /// Grading substitution x_i -> q^{i-1} x_i (into p when `into_p`).
  MultiPoly grade_x(bool into_p = false) const;
  MultiPoly grade_y() const;

  /// Sum of all coefficients.
  Integer evaluate_ones() const;

  /// True iff every term has total x degree d.
  bool is_x_homogeneous(int d) const;

  /// Terms sorted for display: x and y by effective length, then exponent
  /// vectors in decreasing order; then p, then q.
  std::vector<std::pair<Monomial, Integer>> display_order() const;

 private:
  void pad(Monomial& m) const;

  int x_arity_ = 0;
  int y_arity_ = 0;
  Terms terms_;
};

/// Dense univariate polynomial; trailing zero coefficients are trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coefficients);
  static UniPoly monomial(int degree, const Integer& c = 1);

  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int low_degree() const;  // -1 for zero
  Integer coefficient(int k) const;
  Integer evaluate_one() const;

  UniPoly& operator+=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  bool operator==(const UniPoly& other) const = default;

  void add_term(int degree, const Integer& c);

 private:
  void trim();
  std::vector<Integer> c_;
};

struct InternalZeros {
  std::vector<int> positions;
  int count() const { return static_cast<int>(positions.size()); }
};

/// Degrees strictly between the lowest and highest nonzero degree whose
/// coefficient vanishes.
InternalZeros internal_zeros(const UniPoly& g);

/// x-free, y-free coefficient extraction: [q^k] g as a polynomial in p.
UniPoly coefficient_of_q(const MultiPoly& g, int k);
/// Collapses an x,y-free polynomial in q alone (p exponent ignored only when zero).
UniPoly as_q_poly(const MultiPoly& g);

std::string to_string(const Integer& v);

}  // namespace skel
