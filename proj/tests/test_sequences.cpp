#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "balancing/sequences.hpp"

using namespace balancing;

namespace {

const std::vector<SeqParams>& grid() {
  static const std::vector<SeqParams> params{{6, -1}, {1, 1}, {2, 1}, {1, 2}, {3, 2}};
  return params;
}

}  // namespace

TEST(Sequences, UExamples) {
  EXPECT_EQ(u({6, -1}, 0), 0);
  EXPECT_EQ(u({6, -1}, 5), 1189);
  EXPECT_EQ(u({1, 1}, 10), 55);
}

TEST(Sequences, VExamples) {
  EXPECT_EQ(v({1, 1}, 0), 2);
  EXPECT_EQ(v({6, -1}, 2), 34);
  EXPECT_EQ(v({1, 1}, 3), 4);
}

TEST(Sequences, LucasBalancingExamples) {
  EXPECT_EQ(lucas_balancing(0), 1);
  EXPECT_EQ(lucas_balancing(1), 3);
  EXPECT_EQ(lucas_balancing(4), 577);
}

TEST(Sequences, NegativeIndexRejected) {
  EXPECT_THROW(u({6, -1}, -1), std::domain_error);
  EXPECT_THROW(v({1, 1}, -3), std::domain_error);
  EXPECT_THROW(lucas_balancing(-1), std::domain_error);
}

TEST(Sequences, RepeatedRootRejected) {
  EXPECT_THROW(SeqParams(2, -1), std::domain_error);
  EXPECT_THROW(SeqParams(0, 0), std::domain_error);
  EXPECT_EQ(SeqParams(6, -1).discriminant(), 32);
}

TEST(Sequences, CrossRecurrence) {
  EXPECT_TRUE(check_cross_recurrence(0));
  EXPECT_TRUE(check_cross_recurrence(4));
  EXPECT_TRUE(check_cross_recurrence(200));
}

TEST(Sequences, NamedKindsAreSpecializations) {
  const auto b = sequence_prefix(SequenceKind::kBalancing, SeqParams(1, 1), 6);
  EXPECT_EQ(b, (std::vector<ArbInt>{0, 1, 6, 35, 204, 1189, 6930}));
  const auto c = sequence_prefix(SequenceKind::kLucasBalancing, SeqParams(1, 1), 4);
  EXPECT_EQ(c, (std::vector<ArbInt>{1, 3, 17, 99, 577}));
  EXPECT_EQ(sequence_value(SequenceKind::kLucas, SeqParams(6, -1), 10), 123);
  EXPECT_EQ(sequence_value(SequenceKind::kFibonacci, SeqParams(6, -1), 20), 6765);
  EXPECT_EQ(sequence_value(SequenceKind::kU, SeqParams(2, 1), 5), 29);  // Pell
  EXPECT_EQ(parse_sequence_kind("lucas-balancing"), SequenceKind::kLucasBalancing);
  EXPECT_FALSE(parse_sequence_kind("pell").has_value());
}

TEST(Sequences, RecurrenceAndBinetNormOnGrid) {
  for (const auto& p : grid()) {
    SeqCache cache(p);
    for (std::int64_t n = 0; n <= 300; ++n) {
      const ArbInt un = cache.u(n), vn = cache.v(n);
      if (n >= 2) {
        ASSERT_EQ(un, p.a() * cache.u(n - 1) + p.b() * cache.u(n - 2));
        ASSERT_EQ(vn, p.a() * cache.v(n - 1) + p.b() * cache.v(n - 2));
      }
      const ArbInt norm = 4 * int_pow(ArbInt(-p.b()), static_cast<std::uint64_t>(n));
      ASSERT_EQ(vn * vn - p.discriminant() * un * un, norm) << "a=" << p.a() << " b=" << p.b() << " n=" << n;
    }
  }
}

TEST(Sequences, BalancingPellNormAndParity) {
  SeqCache cache(SeqParams::balancing());
  for (std::int64_t n = 0; n <= 300; ++n) {
    const ArbInt vn = cache.v(n);
    ASSERT_TRUE(mpz_even_p(vn.get_mpz_t()));
    const ArbInt c = vn / 2, b = cache.u(n);
    ASSERT_EQ(c * c - 8 * b * b, 1);
  }
}

TEST(SeqCache, GrowingNeverChangesEarlierEntries) {
  SeqCache cache(SeqParams::balancing());
  const auto before = cache.u_prefix(20);
  EXPECT_EQ(cache.u(20), cache.u(20));
  cache.reserve(500);
  EXPECT_EQ(cache.u_prefix(20), before);
}

TEST(SeqCache, ConcurrentReadersSeeIdenticalValues) {
  SeqCache cache(SeqParams::fibonacci());
  const ArbInt expected = u(SeqParams::fibonacci(), 400);
  std::vector<std::thread> workers;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      bool good = true;
      for (std::int64_t n = 400; n >= 0; n -= 1 + t) good = good && cache.u(n) == u(SeqParams::fibonacci(), n);
      ok[static_cast<std::size_t>(t)] = good && cache.u(400) == expected;
    });
  }
  for (auto& w : workers) w.join();
  for (int flag : ok) EXPECT_TRUE(flag);
}
