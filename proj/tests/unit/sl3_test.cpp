#include <gtest/gtest.h>

#include "ezv/errors.hpp"
#include "ezv/sl3.hpp"
#include "random_points.hpp"

namespace {

using ezv::GeneratorWord;
using ezv::IntegerMatrix3;

TEST(WordToMatrix, EmptyWordIsIdentity) {
  EXPECT_EQ(ezv::word_to_matrix({}), IntegerMatrix3::identity());
}

TEST(WordToMatrix, LetterTimesInverse) {
  EXPECT_EQ(ezv::word_to_matrix({{1, 2, 1}, {1, 2, -1}}), IntegerMatrix3::identity());
  EXPECT_EQ(ezv::word_to_matrix({{3, 1, -1}, {3, 1, 1}}), IntegerMatrix3::identity());
}

TEST(WordToMatrix, CommutatorGivesE13) {
  const GeneratorWord word = ezv::commutator({1, 2, 1}, {2, 3, 1});
  EXPECT_EQ(ezv::format_word(word), "e12 e23 e12^-1 e23^-1");
  EXPECT_EQ(ezv::word_to_matrix(word), IntegerMatrix3::elementary(1, 3));
}

TEST(WordToMatrix, SteinbergRelations) {
  // [e_ij, e_jk] = e_ik for distinct i, j, k, and e_ij commutes with e_ik.
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const int k = 6 - i - j;
      if (i == j || k == i || k == j) continue;
      EXPECT_EQ(ezv::word_to_matrix(ezv::commutator({i, j, 1}, {j, k, 1})),
                IntegerMatrix3::elementary(i, k))
          << i << j << k;
      EXPECT_EQ(ezv::word_to_matrix(ezv::commutator({i, j, 1}, {i, k, 1})),
                IntegerMatrix3::identity());
    }
  }
}

TEST(IntegerMatrix3, RejectsDeterminantOtherThanOne) {
  EXPECT_THROW(IntegerMatrix3(IntegerMatrix3::Rows{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}),
               ezv::DomainError);
  EXPECT_THROW(IntegerMatrix3(IntegerMatrix3::Rows{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}),
               ezv::DomainError);
  EXPECT_NO_THROW(IntegerMatrix3(IntegerMatrix3::Rows{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}));
}

TEST(IntegerMatrix3, InverseOfRandomWords) {
  testing_points::PointSource src(601);
  for (int n = 0; n < 30; ++n) {
    GeneratorWord word;
    const int length = src.integer(1, 8);
    for (int m = 0; m < length; ++m) {
      const int i = src.integer(1, 3);
      int j = src.integer(1, 2);
      if (j >= i) ++j;
      word.push_back({i, j, src.integer(0, 1) ? 1 : -1});
    }
    const IntegerMatrix3 g = ezv::word_to_matrix(word);
    EXPECT_EQ(g * g.inverse(), IntegerMatrix3::identity()) << ezv::format_word(word);
    EXPECT_EQ(IntegerMatrix3::determinant(g.rows()), 1);
  }
}

TEST(IntegerMatrix3, ApplyActsOnColumns) {
  const auto y = IntegerMatrix3::elementary(1, 2).apply({1.0, 2.0, 3.0});
  EXPECT_EQ(y[0], ezv::cplx(3.0));
  EXPECT_EQ(y[1], ezv::cplx(2.0));
  EXPECT_EQ(y[2], ezv::cplx(3.0));
}

TEST(ParseWord, AcceptsSeparatorsAndExponents) {
  const GeneratorWord word = ezv::parse_word("e12 e23,e12^-1 * e23^-1");
  ASSERT_EQ(word.size(), 4u);
  EXPECT_EQ(word[2], (ezv::GeneratorLetter{1, 2, -1}));
  EXPECT_EQ(ezv::parse_word("e31^+1"), (GeneratorWord{{3, 1, 1}}));
  EXPECT_TRUE(ezv::parse_word("  ").empty());
}

TEST(ParseWord, RoundTripsThroughFormat) {
  const GeneratorWord word{{2, 1, -1}, {3, 2, 1}, {1, 3, 1}};
  EXPECT_EQ(ezv::parse_word(ezv::format_word(word)), word);
}

TEST(ParseWord, RejectsMalformedInput) {
  EXPECT_THROW(ezv::parse_word("e1"), ezv::DomainError);
  EXPECT_THROW(ezv::parse_word("f12"), ezv::DomainError);
  EXPECT_THROW(ezv::parse_word("e11"), ezv::DomainError);
  EXPECT_THROW(ezv::parse_word("e14"), ezv::DomainError);
  EXPECT_THROW(ezv::parse_word("e12^2"), ezv::DomainError);
  EXPECT_THROW(ezv::parse_word("e12^x"), ezv::DomainError);
}

TEST(Elementary, RejectsDiagonalIndex) {
  EXPECT_THROW(IntegerMatrix3::elementary(2, 2), ezv::DomainError);
  EXPECT_THROW(ezv::word_to_matrix({{1, 2, 0}}), ezv::DomainError);
}

}  // namespace
