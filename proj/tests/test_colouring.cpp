#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "graham/colouring.hpp"

using namespace graham;

namespace {

std::string to_text(const Colouring& c) {
  std::ostringstream os;
  write_colouring(os, c);
  return os.str();
}

Colouring from_text(const std::string& s) {
  std::istringstream in(s);
  return read_colouring(in);
}

Colouring random_colouring(int n, std::mt19937_64& rng) {
  Colouring c(n);
  for (auto& b : c.bits) b = rng() & 1U;
  return c;
}

}  // namespace

TEST(Verify, AllBlueSquare) {
  const Colouring c(2);
  const auto r = verify(c);
  EXPECT_EQ(r.violated, 1U);
  ASSERT_EQ(r.examples.size(), 1U);
  EXPECT_EQ(r.examples[0].vertices, (std::array<vertex_t, 4>{0, 1, 2, 3}));
}

TEST(Verify, AllBlueCubeHasTwelve) {
  EXPECT_EQ(verify(Colouring(3)).violated, 12U);
  EXPECT_EQ(verify(Colouring(3), 5).examples.size(), 5U);
}

TEST(Verify, OneRedEdgeFixesSquare) {
  Colouring c(2);
  c.bits[edge_index(1, 2, 2)] = 1;
  EXPECT_TRUE(verify(c).valid());
}

TEST(Verify, MatchesPerQuadCheck) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Colouring c = random_colouring(4, rng);
    std::uint64_t want = 0;
    for (const auto& q : enumerate_planar_quads(4)) {
      bool mono = true;
      for (edge_t e : q.edges) mono = mono && c.bits[e] == c.bits[q.edges[0]];
      want += mono;
    }
    EXPECT_EQ(verify(c).violated, want);
  }
}

TEST(Verify, ReportFormat) {
  std::ostringstream bad, good;
  write_report(bad, verify(Colouring(2)));
  EXPECT_EQ(bad.str(), "INVALID 1\n0 1 2 3\n");
  Colouring c(2);
  c.bits[0] = 1;
  write_report(good, verify(c));
  EXPECT_EQ(good.str(), "VALID\n");
}

TEST(Symmetry, Detects) {
  const GroupSpec swap = make_group("swap", 2, {"(1 2)"});
  Colouring c(2);
  EXPECT_TRUE(is_symmetric(c, swap));
  // The edge {00,01} maps to {00,10} under swapping the coordinates.
  c.bits[edge_index(0b00, 0b01, 2)] = 1;
  EXPECT_FALSE(is_symmetric(c, swap));
  c.bits[edge_index(0b00, 0b10, 2)] = 1;
  EXPECT_TRUE(is_symmetric(c, swap));
  EXPECT_THROW(is_symmetric(Colouring(3), swap), std::invalid_argument);
}

TEST(Count, TinyDimensions) {
  EXPECT_EQ(count_solutions(0), 1U);
  EXPECT_EQ(count_solutions(1), 2U);
  EXPECT_EQ(count_solutions(2), 62U);
  EXPECT_THROW(count_solutions(4), std::invalid_argument);
}

TEST(Count, SquareAgreesWithBruteForce) {
  std::uint64_t valid = 0;
  for (unsigned m = 0; m < 64; ++m) {
    Colouring c(2);
    for (unsigned e = 0; e < 6; ++e) c.bits[e] = (m >> e) & 1U;
    valid += verify(c).valid();
  }
  EXPECT_EQ(valid, count_solutions(2));
}

TEST(Count, CubeKnownValue) {
  EXPECT_EQ(count_solutions(3), 182596118U);
}

TEST(FileFormat, AllBlueSquare) {
  const std::string s = to_text(Colouring(2));
  EXPECT_EQ(s, "graham-colouring v1\nn=2\nsymmetry=I\n00\ncrc32=" +
                   detail::hex8(detail::crc32_of("00")) + "\n");
}

TEST(FileFormat, BitOrder) {
  Colouring c(2);
  c.bits[0] = 1;
  c.bits[5] = 1;
  // Edge k sits at bit k % 4 of hex digit k / 4.
  EXPECT_NE(to_text(c).find("\n12\n"), std::string::npos);
}

TEST(FileFormat, RoundTrip) {
  std::mt19937_64 rng(99);
  for (int n : {2, 3, 9}) {
    const int trials = n == 9 ? 20 : 490;
    for (int t = 0; t < trials; ++t) {
      Colouring c = random_colouring(n, rng);
      c.symmetry = t % 2 ? "S_9" : "I";
      if (t % 3 == 0) c.comment = "seed " + std::to_string(t);
      ASSERT_EQ(from_text(to_text(c)), c);
    }
  }
}

TEST(FileFormat, RoundTripThroughPath) {
  const auto path = std::filesystem::temp_directory_path() / "graham_colouring_test.txt";
  std::mt19937_64 rng(1);
  const Colouring c = random_colouring(5, rng);
  write_colouring(path.string(), c);
  EXPECT_EQ(read_colouring(path.string()), c);
  std::filesystem::remove(path);
}

TEST(FileFormat, DetectsCorruption) {
  std::mt19937_64 rng(5);
  const Colouring c = random_colouring(3, rng);
  const std::string good = to_text(c);
  const std::size_t body = good.find("\n", good.find("symmetry=")) + 1;

  std::string flipped = good;
  flipped[body] = flipped[body] == '0' ? '1' : '0';
  EXPECT_THROW(from_text(flipped), FormatError);

  std::string short_body = good;
  short_body.erase(body, 1);
  EXPECT_THROW(from_text(short_body), FormatError);

  EXPECT_THROW(from_text("graham-colouring v2" + good.substr(good.find('\n'))), FormatError);
  EXPECT_THROW(from_text(good + "extra\n"), FormatError);
  EXPECT_THROW(from_text(good.substr(0, good.find("crc32="))), FormatError);

  std::string upper = good;
  for (std::size_t i = body; upper[i] != '\n'; ++i)
    if (upper[i] >= 'a') upper[i] = static_cast<char>(upper[i] - 32);
  if (upper != good) {
    EXPECT_THROW(from_text(upper), FormatError);
  }
}

TEST(FileFormat, NonzeroPaddingRejected) {
  // n=2 has 6 edges: bits 2 and 3 of the second digit are padding.
  const std::string body = "0c";
  const std::string text = "graham-colouring v1\nn=2\nsymmetry=I\n" + body + "\ncrc32=" +
                           detail::hex8(detail::crc32_of(body)) + "\n";
  try {
    from_text(text);
    FAIL() << "padding accepted";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
}

TEST(FileFormat, ErrorsNameTheLine) {
  try {
    from_text("graham-colouring v1\nn=x\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(std::string(e.what()).rfind("line 2: ", 0), 0U);
  }
}

TEST(FileFormat, AssignmentRoundTrip) {
  std::mt19937_64 rng(3);
  for (std::size_t vars : {0U, 1U, 5U, 111U, 5432U}) {
    AssignmentFile a{10, "S_5@10", "partial", Assignment(vars)};
    for (auto& x : a.values) x = rng() & 1U;
    std::ostringstream os;
    write_assignment(os, a);
    EXPECT_NE(os.str().find("\nvars=" + std::to_string(vars) + "\n"), std::string::npos);
    std::istringstream in(os.str());
    const AssignmentFile b = read_assignment(in);
    EXPECT_EQ(b.n, a.n);
    EXPECT_EQ(b.symmetry, a.symmetry);
    EXPECT_EQ(b.comment, a.comment);
    EXPECT_EQ(b.values, a.values);
  }
}

TEST(FileFormat, WrongLengthRefused) {
  Colouring c(2);
  c.bits.pop_back();
  std::ostringstream os;
  EXPECT_THROW(write_colouring(os, c), std::invalid_argument);
  EXPECT_THROW(verify(c), std::invalid_argument);
}
