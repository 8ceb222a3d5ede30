#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace borel {

using Exponent = std::int32_t;

/// A monomial x1^a1 * ... * xn^an stored as its exponent vector.
///
/// Variables are addressed 1-based in the public API (x1..xn) to match the
/// text form; operator[] is the raw 0-based exponent access.
///
/// Ordering is the canonical serialization order: lexicographic with
/// x1 > x2 > ... > xn, larger monomials first. So x1^2 < x1*x2 < x2^2 in
/// the sense of std::sort.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial unit(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  Exponent degree() const noexcept;
  bool is_unit() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    return b.exps_ <=> a.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, const Monomial& b);
// b / a; requires divides(a, b).
Monomial divide(const Monomial& b, const Monomial& a);

// (sqrt(u), w(u)): the squarefree part of u and the least 1-based index of a
// variable dividing u. Throws InvalidArgument on the unit monomial.
std::pair<Monomial, std::size_t> radical_and_min_support(const Monomial& u);

// Text form: `x1^2*x2`, with `1` for the unit monomial.
std::string to_string(const Monomial& m);
// Throws InvalidArgument on malformed text or a variable beyond nvars.
Monomial parse_monomial(std::string_view text, std::size_t nvars);

/// A monomial ideal, held as its minimal generating set.
///
/// The generator list is always an antichain under divisibility, sorted in
/// canonical order. The zero ideal has no generators; the unit ideal has
/// exactly the unit monomial.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal zero(std::size_t nvars);
  static MonomialIdeal unit(std::size_t nvars);
  static MonomialIdeal principal(const Monomial& m);
  // Ideal generated by the listed 1-based variables.
  static MonomialIdeal variables(std::size_t nvars,
                                 std::span<const std::size_t> vars);
  // (x_first, ..., x_last); empty range gives the zero ideal.
  static MonomialIdeal variable_range(std::size_t nvars, std::size_t first,
                                      std::size_t last);

  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  // Componentwise max of generator exponents (zero vector for the zero ideal).
  std::vector<Exponent> exponent_bounds() const;
  Exponent max_generator_degree() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& g);
// (I : J); rejects J = 0.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
// (I : J^inf) by colon iteration to a fixpoint; rejects J = 0.
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);

// All monomials of total degree d in n variables, canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, Exponent d);

// One generator per line, `1` for the unit ideal, nothing for zero.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace borel
