#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glp/digraph.hpp"

namespace glp {

// Dense exponent vector, one slot per vertex.  Slots at or beyond the
// polynomial's universe size are always zero.
using Exponents = std::array<std::int16_t, kMaxVertices>;

// A monomial of L = Z[A_v][X_v^{±1}]: X-exponents (any sign) and A-exponents
// (nonnegative).  Ordered lexicographically on X, then on A.
struct Monomial {
  Exponents x{};
  Exponents a{};

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Element of the coefficient ring R = Z[A_v : v ∈ V].
class CoefPoly {
 public:
  using Term = std::pair<Exponents, std::int64_t>;

  explicit CoefPoly(std::size_t universe = 0) : n_(universe) {}
  static CoefPoly constant(std::size_t universe, std::int64_t c);
  static CoefPoly a(std::size_t universe, VertexId v, int exponent = 1);
  // ∏_{v ∈ m} A_v.
  static CoefPoly a_product(std::size_t universe, const VertexMultiset& m);

  std::size_t universe() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  // Coefficient of the constant monomial.
  std::int64_t constant_term() const;
  bool is_integer() const;
  bool is_coefficientwise_nonnegative() const;

  CoefPoly operator-() const;
  friend CoefPoly operator+(const CoefPoly& a, const CoefPoly& b);
  friend CoefPoly operator-(const CoefPoly& a, const CoefPoly& b);
  friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
  CoefPoly& operator+=(const CoefPoly& b) { return *this = *this + b; }
  CoefPoly scaled(std::int64_t c) const;

  // Ascending exponent order: "-1 + A_2 + 2·A_1·A_3^2"; "0" for zero.
  std::string to_string(std::span<const std::string> labels) const;

  friend bool operator==(const CoefPoly& a, const CoefPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  friend class LaurentPoly;
  std::size_t n_;
  std::vector<Term> terms_;
};

// Laurent monomial ∏_{v∈U} X_v / ∏_{v∈T} X_v with U, T disjoint.
class LaurentMonomialIndex {
 public:
  // Throws PreconditionError when U and T overlap.
  LaurentMonomialIndex(VertexMultiset numerator, VertexMultiset denominator);
  static LaurentMonomialIndex from_exponents(std::size_t universe, const Exponents& x);

  const VertexMultiset& numerator() const { return u_; }
  const VertexMultiset& denominator() const { return t_; }
  Exponents exponents() const;

  friend bool operator==(const LaurentMonomialIndex&, const LaurentMonomialIndex&) = default;

 private:
  VertexMultiset u_;
  VertexMultiset t_;
};

// Exact Laurent polynomial in X_v with coefficients in Z[A_v].  Stored as a
// sorted list of (Monomial, integer) pairs, which is the canonical form: one
// entry per distinct monomial, no zero coefficients, ascending monomial order.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, std::int64_t>;

  explicit LaurentPoly(std::size_t universe = 0) : n_(universe) {}
  static LaurentPoly constant(std::size_t universe, std::int64_t c);
  static LaurentPoly constant(const CoefPoly& c);
  static LaurentPoly x(std::size_t universe, VertexId v, int exponent = 1);
  static LaurentPoly a(std::size_t universe, VertexId v, int exponent = 1);
  static LaurentPoly monomial(std::size_t universe, const Monomial& m, std::int64_t c = 1);
  // ∏_{v∈U} X_v / ∏_{v∈T} X_v.
  static LaurentPoly laurent_monomial(std::size_t universe, const LaurentMonomialIndex& m);
  // Builds the canonical form from arbitrary (possibly repeated, zero) terms.
  static LaurentPoly from_terms(std::size_t universe, std::vector<Term> terms);

  std::size_t universe() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Terms grouped by X-exponent vector, in canonical order.
  std::vector<std::pair<Exponents, CoefPoly>> x_terms() const;
  CoefPoly coefficient_of(const Exponents& x) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly scaled(std::int64_t c) const;
  LaurentPoly times(const CoefPoly& c) const;
  // Multiplication by a single monomial; keeps the term order.
  LaurentPoly shifted(const Monomial& m) const;
  // Exact division by ∏_{v∈T} X_v.
  LaurentPoly divided_by_x(const VertexMultiset& t) const;

  // Sum of all integer coefficients.
  std::int64_t coefficient_sum() const;
  // True when every X-exponent is nonnegative.
  bool is_polynomial() const;

  // Value in Z/p with X_v -> x[v], A_v -> a[v].  Requires x[v] invertible mod p
  // for every v with a negative exponent; p must be prime and below 2^62.
  std::uint64_t evaluate_mod(std::span<const std::uint64_t> x, std::span<const std::uint64_t> a,
                             std::uint64_t p) const;

  // Canonical rendering, e.g. "A_1·X_1^-1 + X_2^-1·X_3 - 2"; "0" for zero.
  std::string to_string(std::span<const std::string> labels) const;
  // Numerator/denominator form N/(∏ X_v) with the smallest monomial
  // denominator making N a polynomial, e.g. "(A_1·X_1 + X_2)/(X_1·X_2)".
  std::string to_fraction_string(std::span<const std::string> labels) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  std::size_t n_;
  std::vector<Term> terms_;
};

CoefPoly coefficient_of(const LaurentPoly& p, const LaurentMonomialIndex& m);
bool is_coefficientwise_nonnegative(const LaurentPoly& p);
LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

// Default labels "1".."n" for rendering without a graph.
std::vector<std::string> default_labels(std::size_t n);

}  // namespace glp
