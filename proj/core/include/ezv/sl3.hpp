#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ezv/numerics_types.hpp"

namespace ezv {

/// 3x3 integer matrix of determinant 1.
class IntegerMatrix3 {
 public:
  using Rows = std::array<std::array<std::int64_t, 3>, 3>;

  /// Throws DomainError if det(rows) != 1.
  explicit IntegerMatrix3(const Rows& rows);

  static IntegerMatrix3 identity();
  /// e_ij^exponent: identity plus `exponent` at (i, j), 1-based, i != j.
  static IntegerMatrix3 elementary(int i, int j, int exponent = 1);

  std::int64_t operator()(int row, int col) const { return rows_[row][col]; }
  const Rows& rows() const noexcept { return rows_; }

  IntegerMatrix3 operator*(const IntegerMatrix3& other) const;
  IntegerMatrix3 inverse() const;
  std::array<cplx, 3> apply(const std::array<cplx, 3>& x) const;

  friend bool operator==(const IntegerMatrix3&, const IntegerMatrix3&) = default;

  static std::int64_t determinant(const Rows& rows);

 private:
  struct Unchecked {};
  IntegerMatrix3(const Rows& rows, Unchecked) : rows_(rows) {}

  Rows rows_;
};

/// One letter e_ij^(+-1) of a word in the elementary generators.
struct GeneratorLetter {
  int i;
  int j;
  int exponent;  // +1 or -1

  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

using GeneratorWord = std::vector<GeneratorLetter>;

/// Validates i, j in {1,2,3}, i != j and exponent = +-1.
void validate_word(const GeneratorWord& word);

/// Parses whitespace- or comma-separated letters such as
/// "e12 e23 e12^-1 e23^-1". Throws DomainError on malformed input.
GeneratorWord parse_word(std::string_view text);

std::string format_word(const GeneratorWord& word);

/// Product of the letters, left to right.
IntegerMatrix3 word_to_matrix(const GeneratorWord& word);

/// Commutator word [a, b] = a b a^-1 b^-1.
GeneratorWord commutator(const GeneratorLetter& a, const GeneratorLetter& b);

}  // namespace ezv
