#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bratteli/paths.hpp>

using namespace bratteli;

// The enumeration oracle is the ground truth for every closed form in this
// module, so its own sanity cases come first and are frozen by hand.
TEST_CASE("enumeration oracle, hand-checked sequences") {
  CHECK(enumerate_paths({0, 0}, {2, 0}, StepSet::Ballot) ==
        std::vector<std::string>{"UD"});
  CHECK(enumerate_paths({0, 0}, {2, 0}, StepSet::Motzkin) ==
        std::vector<std::string>{"LL", "UD"});
  CHECK(enumerate_paths({0, 0}, {1, 0}, StepSet::Ballot).empty());
  // DDUU would dip below the axis starting from height 1; the oracle must
  // drop it and keep the other five arrangements.
  auto seqs = enumerate_paths({1, 1}, {5, 1}, StepSet::Ballot);
  CHECK(seqs == std::vector<std::string>{"DUDU", "DUUD", "UDDU", "UDUD",
                                         "UUDD"});

  // lexicographic contract: D < L < U at every branch
  auto m3 = enumerate_paths({0, 0}, {3, 1}, StepSet::Motzkin);
  for (size_t i = 1; i < m3.size(); ++i) CHECK(m3[i - 1] < m3[i]);

  CHECK_THROWS_AS(enumerate_paths({0, 0}, {17, 1}, StepSet::Ballot, 16),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_count({3, 0}, {2, 0}, StepSet::Ballot),
                  std::invalid_argument);
}

TEST_CASE("ballot closed form equals the oracle") {
  CHECK(count_ballot({0, 0}, {4, 0}) == 2);
  CHECK(count_ballot({0, 0}, {3, 0}) == 0);  // parity mismatch
  CHECK(count_ballot({1, 1}, {5, 1}) == 5);
  for (long n = 0; n <= 12; ++n) CHECK(count_ballot({0, 0}, {n, n}) == 1);

  for (long span = 0; span <= 10; ++span)
    for (long b = 0; b <= 8; ++b)
      for (long d = 0; d <= 8; ++d)
        CHECK(count_ballot({2, b}, {2 + span, d}) ==
              enumerate_count({2, b}, {2 + span, d}, StepSet::Ballot));
}

TEST_CASE("motzkin closed form equals the oracle") {
  CHECK(count_motzkin({0, 0}, {4, 0}) == 9);
  CHECK(count_motzkin({0, 0}, {2, 1}) == 2);  // UL and LU
  for (long n = 0; n <= 12; ++n) CHECK(count_motzkin({0, 0}, {n, n}) == 1);

  for (long span = 0; span <= 9; ++span)
    for (long b = 0; b <= 6; ++b)
      for (long d = 0; d <= 6; ++d)
        CHECK(count_motzkin({1, b}, {1 + span, d}) ==
              enumerate_count({1, b}, {1 + span, d}, StepSet::Motzkin));
}

TEST_CASE("pascal-style recurrences") {
  for (long n = 1; n <= 12; ++n)
    for (long k = 0; k <= n; ++k) {
      CountInt up = k + 1 <= n - 1 ? count_ballot({0, 0}, {n - 1, k + 1}) : 0;
      CountInt down = k >= 1 ? count_ballot({0, 0}, {n - 1, k - 1}) : 0;
      CHECK(count_ballot({0, 0}, {n, k}) == up + down);

      CountInt m = 0;
      for (long j = k - 1; j <= k + 1; ++j)
        if (j >= 0 && j <= n - 1) m += count_motzkin({0, 0}, {n - 1, j});
      CHECK(count_motzkin({0, 0}, {n, k}) == m);
    }
}

TEST_CASE("motzkin numbers") {
  const long want[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
  for (long n = 0; n <= 10; ++n) {
    CHECK(motzkin_number(n) == want[n]);
    CHECK(motzkin_number(n) == count_motzkin({0, 0}, {n, 0}));
  }
  // Catalan decomposition: choose positions of the 2k up/down steps
  for (long n = 0; n <= 30; ++n) {
    CountInt s = 0;
    for (long k = 0; 2 * k <= n; ++k) s += binom(n, 2 * k) * catalan(k);
    CHECK(motzkin_number(n) == s);
  }
}

TEST_CASE("catalan basics") {
  const long want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (long n = 0; n <= 8; ++n) CHECK(catalan(n) == want[n]);
}

TEST_CASE("prob values and argument parsing") {
  Prob a = parse_real("3/4");
  CHECK(a.is_exact());
  CHECK(a.rat() == Rat(3, 4));
  Prob b = parse_real("0.75");
  CHECK_FALSE(b.is_exact());
  CHECK(b.value() == doctest::Approx(0.75));
  CHECK(parse_real("1").is_exact());
  CHECK((a * Prob(Rat(1, 3))).rat() == Rat(1, 4));
  CHECK_FALSE((a * b).is_exact());
  CHECK(parse_real("4/27").str() == "4/27");
  CHECK_THROWS_AS(parse_real("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real("3/0"), std::invalid_argument);
}
