#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "exactlab/rational.hpp"

namespace exactlab {

BigInt factorial(std::int64_t n);

/// n choose k via Pascal's recurrence; 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Row n of Pascal's triangle.
std::vector<BigInt> pascal_row(std::int64_t n);

/// Finite sums with a known closed form.
///   Gauss        sum_{k=1}^n k
///   Squares      sum_{k=1}^n k^2
///   Cubes        sum_{k=1}^n k^3
///   Odds         sum_{k=1}^n (2k-1)
///   Geometric    sum_{k=0}^n x^k, x != 1
///   Telescoping  sum_{k=1}^n 1/(k(k+1))
///   Christmas    sum_{k=1}^n k(k+1)/2   (gifts over n days of Christmas)
struct SumKind {
  enum class Tag { Gauss, Squares, Cubes, Odds, Geometric, Telescoping, Christmas };

  Tag tag = Tag::Gauss;
  Rational ratio;  // Geometric only

  static SumKind gauss() { return {Tag::Gauss, {}}; }
  static SumKind squares() { return {Tag::Squares, {}}; }
  static SumKind cubes() { return {Tag::Cubes, {}}; }
  static SumKind odds() { return {Tag::Odds, {}}; }
  static SumKind geometric(Rational x) { return {Tag::Geometric, std::move(x)}; }
  static SumKind telescoping() { return {Tag::Telescoping, {}}; }
  static SumKind christmas() { return {Tag::Christmas, {}}; }
};

/// Throws DomainError for n < 0 or a geometric ratio of 1.
Rational closed_form_sum(const SumKind& kind, std::int64_t n);

/// Accepts gauss, squares, cubes, odds, geometric, telescoping, christmas.
SumKind::Tag parse_sum_tag(std::string_view name);

/// k with p^n - q^n = d*k. Requires d | (p - q).
BigInt divisibility_witness(const BigInt& p, const BigInt& q, const BigInt& d, std::int64_t n);

/// Bijection N -> Z: even n -> n/2, odd n -> -(n+1)/2.
BigInt nat_to_int(std::uint64_t n);
std::uint64_t int_to_nat(const BigInt& z);

/// n-th cell visited by the zig-zag walk over N x N:
/// (0,0), (0,1), (1,0), (2,0), (1,1), (0,2), (0,3), ...
std::pair<std::uint64_t, std::uint64_t> diagonal_pair(std::uint64_t n);
std::uint64_t diagonal_index(std::uint64_t i, std::uint64_t j);

/// First `count` distinct rationals met by walking Q = U_i (1/(i+1)) Z along
/// the zig-zag diagonals, with row i listing nat_to_int(j) / (i+1).
std::vector<Rational> enumerate_rationals(std::size_t count);

}  // namespace exactlab
