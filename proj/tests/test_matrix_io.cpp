#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "qbound/errors.hpp"
#include "qbound/matrix_io.hpp"

using namespace qbound;

namespace {

std::string error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_alist(in);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Alist, ParsesHammingCode) {
  // [7,4] Hamming checks
  const std::string text =
      "7 3\n"
      "3 4\n"
      "1 1 1 2 2 2 3\n"
      "4 4 4\n"
      "1 0 0\n2 0 0\n3 0 0\n1 2 0\n1 3 0\n2 3 0\n1 2 3\n"
      "1 4 5 7\n2 4 6 7\n3 5 6 7\n";
  std::istringstream in(text);
  const BitMatrix h = parse_alist(in);
  EXPECT_EQ(h, BitMatrix::from_strings({"1001101", "0101011", "0010111"}));
  std::ostringstream out;
  write_alist(out, h);
  EXPECT_EQ(out.str(), text);
}

TEST(Alist, RoundTripRandom) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    BitMatrix m(1 + rng() % 6, 1 + rng() % 9);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rng() % 3 == 0);
    }
    std::stringstream s;
    write_alist(s, m);
    EXPECT_EQ(parse_alist(s), m);
    std::stringstream d;
    write_dense(d, m);
    EXPECT_EQ(parse_dense(d), m);
  }
}

TEST(Alist, ErrorsCarryLineNumbers) {
  EXPECT_NE(error_of("3\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("3 2\n2 2\n1 1 1\n").find("line 4"), std::string::npos);
  EXPECT_NE(error_of("2 1\n1 2\n1 1\n2\n1\n3\n1 2\n").find("line 6"), std::string::npos);
  EXPECT_NE(error_of("2 1\n1 2\n1 1\n2\n1\n1\n1 x\n").find("line 7"), std::string::npos);
  EXPECT_NE(error_of("2 1\n1 2\n1 1\n2\n1\n1\n1 2\n5\n").find("line 8"), std::string::npos);
  // row list disagrees with the column lists
  EXPECT_NE(error_of("2 1\n1 2\n1 1\n2\n1\n1\n1\n").find("line 7"), std::string::npos);
}

TEST(Dense, CommentsAndSeparators) {
  std::istringstream in("# a comment\n1 0 1\n\n0,1,1\n");
  EXPECT_EQ(parse_dense(in), BitMatrix::from_strings({"101", "011"}));
  std::istringstream ragged("101\n01\n");
  try {
    parse_dense(ragged);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}
