#include "ezv/sl3.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ezv/errors.hpp"

namespace ezv {

std::int64_t IntegerMatrix3::determinant(const Rows& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

IntegerMatrix3::IntegerMatrix3(const Rows& rows) : rows_(rows) {
  if (determinant(rows) != 1) {
    throw DomainError("IntegerMatrix3: determinant must be 1");
  }
}

IntegerMatrix3 IntegerMatrix3::identity() {
  return IntegerMatrix3(Rows{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, Unchecked{});
}

IntegerMatrix3 IntegerMatrix3::elementary(int i, int j, int exponent) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) {
    throw DomainError("elementary matrix e_ij needs i != j in {1, 2, 3}");
  }
  Rows rows = identity().rows_;
  rows[i - 1][j - 1] = exponent;
  return IntegerMatrix3(rows, Unchecked{});
}

IntegerMatrix3 IntegerMatrix3::operator*(const IntegerMatrix3& other) const {
  Rows out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      std::int64_t acc = 0;
      for (int k = 0; k < 3; ++k) acc += rows_[r][k] * other.rows_[k][c];
      out[r][c] = acc;
    }
  }
  return IntegerMatrix3(out, Unchecked{});
}

IntegerMatrix3 IntegerMatrix3::inverse() const {
  // det = 1, so the inverse is the adjugate.
  const auto& m = rows_;
  Rows adj{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r1 = (c + 1) % 3, r2 = (c + 2) % 3;
      const int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      adj[r][c] = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    }
  }
  return IntegerMatrix3(adj, Unchecked{});
}

std::array<cplx, 3> IntegerMatrix3::apply(const std::array<cplx, 3>& x) const {
  std::array<cplx, 3> out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out[r] += static_cast<double>(rows_[r][c]) * x[c];
    }
  }
  return out;
}

void validate_word(const GeneratorWord& word) {
  for (const auto& letter : word) {
    if (letter.i < 1 || letter.i > 3 || letter.j < 1 || letter.j > 3 ||
        letter.i == letter.j) {
      throw DomainError("generator word: letter indices must satisfy i != j in {1,2,3}");
    }
    if (letter.exponent != 1 && letter.exponent != -1) {
      throw DomainError("generator word: exponents must be +1 or -1");
    }
  }
}

GeneratorWord parse_word(std::string_view text) {
  GeneratorWord word;
  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',' ||
            text[pos] == '*')) {
      ++pos;
    }
  };
  skip_separators();
  while (pos < text.size()) {
    if (text[pos] != 'e' || pos + 2 >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos + 1])) ||
        !std::isdigit(static_cast<unsigned char>(text[pos + 2]))) {
      throw DomainError("generator word: expected a letter like e12 at position " +
                        std::to_string(pos));
    }
    GeneratorLetter letter{text[pos + 1] - '0', text[pos + 2] - '0', 1};
    pos += 3;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      int exponent = 0;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      if (first != last && *first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc{}) {
        throw DomainError("generator word: malformed exponent");
      }
      letter.exponent = exponent;
      pos = static_cast<std::size_t>(ptr - text.data());
    }
    word.push_back(letter);
    skip_separators();
  }
  validate_word(word);
  return word;
}

std::string format_word(const GeneratorWord& word) {
  std::ostringstream out;
  for (std::size_t n = 0; n < word.size(); ++n) {
    if (n) out << ' ';
    out << 'e' << word[n].i << word[n].j;
    if (word[n].exponent == -1) out << "^-1";
  }
  return out.str();
}

IntegerMatrix3 word_to_matrix(const GeneratorWord& word) {
  validate_word(word);
  IntegerMatrix3 g = IntegerMatrix3::identity();
  for (const auto& letter : word) {
    g = g * IntegerMatrix3::elementary(letter.i, letter.j, letter.exponent);
  }
  return g;
}

GeneratorWord commutator(const GeneratorLetter& a, const GeneratorLetter& b) {
  return {a, b, {a.i, a.j, -a.exponent}, {b.i, b.j, -b.exponent}};
}

}  // namespace ezv
