#include <gtest/gtest.h>

#include "balancing/identities.hpp"

using namespace balancing;

// Expected values marked "brute force" were produced by the independent
// enumerator in tests/oracle/brute_force.py and frozen here.

namespace {

Workspace balancing_ws() { return Workspace(SeqParams::balancing()); }

}  // namespace

TEST(ConvPower, Examples) {
  EXPECT_EQ(conv_power(SeqParams::balancing(), 2, 4), 106);
  EXPECT_EQ(conv_power(SeqParams::balancing(), 3, 3), 1);
  EXPECT_EQ(conv_power(SeqParams::balancing(), 3, 4), 18);
  EXPECT_EQ(conv_power(SeqParams::balancing(), 4, 6), 356);               // brute force
  EXPECT_EQ(conv_power(SeqParams::balancing(), 5, 12), 82851600);         // brute force
  EXPECT_EQ(conv_power(SeqParams::balancing(), 8, 20), ArbInt("89942356290228"));  // brute force
}

TEST(ConvPower, BelowRIsZero) {
  auto ws = balancing_ws();
  EXPECT_EQ(ws.conv_power(5, 4), 0);
  EXPECT_EQ(ws.conv_power(2, -3), 0);
  EXPECT_THROW(ws.conv_power(0, 3), std::domain_error);
}

TEST(ConvPower, TableGrowthKeepsValues) {
  auto ws = balancing_ws();
  const ArbInt small = ws.conv_power(3, 10);
  const ArbInt large = ws.conv_power(3, 150);
  EXPECT_EQ(ws.conv_power(3, 10), small);
  EXPECT_EQ(conv_power(SeqParams::balancing(), 3, 150), large);
}

TEST(AltWeightedConv, Examples) {
  EXPECT_EQ(alt_weighted_conv(2, 4), 105);
  EXPECT_EQ(alt_weighted_conv(3, 4), 18);
  EXPECT_EQ(alt_weighted_conv(3, 3), 1);
  EXPECT_EQ(alt_weighted_conv(5, 10), 868896);  // brute force
  EXPECT_EQ(alt_weighted_conv(4, 8), 41440);    // brute force
  EXPECT_EQ(alt_weighted_conv(4, 7), 4080);     // brute force
}

TEST(RhsGeneralAlt, Examples) {
  EXPECT_EQ(rhs_general_alt(2, 4), 105);
  EXPECT_EQ(rhs_general_alt(3, 4), 18);
  EXPECT_EQ(rhs_general_alt(5, 10), alt_weighted_conv(5, 10));
}

TEST(RhsGeneralAlt, ReducesToPairAndTripleForms) {
  auto ws = balancing_ws();
  for (std::int64_t n = 1; n <= 60; ++n) ASSERT_EQ(rhs_general_alt(ws, 2, n), (n - 1) * ws.u(n - 1));
  for (std::int64_t n = 4; n <= 60; ++n) ASSERT_EQ(rhs_general_alt(ws, 3, n), rhs_triple_alt(ws, n));
}

TEST(RhsGeneralAlt, DomainEdges) {
  auto ws = balancing_ws();
  for (std::int64_t r = 2; r <= 8; ++r) {
    const std::int64_t lo = std::max<std::int64_t>(0, 3 * r - 5);
    for (std::int64_t n = lo; n <= lo + 4; ++n) ASSERT_EQ(rhs_general_alt(ws, r, n), alt_weighted_conv(ws, r, n));
    if (lo > 0) EXPECT_THROW(rhs_general_alt(ws, r, lo - 1), std::domain_error);
  }
  EXPECT_THROW(rhs_general_alt(ws, 1, 5), std::domain_error);
}

TEST(PrintedCorollaries, R4AndR6AgreeWithGeneralForm) {
  auto ws = balancing_ws();
  EXPECT_EQ(rhs_printed_corollary(ws, 4, 7), rhs_general_alt(ws, 4, 7));
  EXPECT_EQ(rhs_printed_corollary(ws, 4, 8), alt_weighted_conv(ws, 4, 8));
  for (std::int64_t n = 13; n <= 60; ++n) ASSERT_EQ(rhs_printed_corollary(ws, 6, n), rhs_general_alt(ws, 6, n));
}

TEST(PrintedCorollaries, R5DivergesAndReindexingRepairsIt) {
  auto ws = balancing_ws();
  // Third term vanishes at n = 10, 11 so the printed form is still correct there.
  EXPECT_EQ(rhs_printed_corollary(ws, 5, 10), rhs_general_alt(ws, 5, 10));
  EXPECT_EQ(rhs_printed_corollary(ws, 5, 11), rhs_general_alt(ws, 5, 11));
  EXPECT_EQ(rhs_printed_corollary(ws, 5, 12), 76613130);
  EXPECT_NE(rhs_printed_corollary(ws, 5, 12), rhs_general_alt(ws, 5, 12));
  for (std::int64_t n = 10; n <= 60; ++n) {
    ASSERT_EQ(rhs_printed_corollary(ws, 5, n, CorollaryForm::kReindexed), rhs_general_alt(ws, 5, n));
  }
}

TEST(PrintedCorollaries, Errors) {
  auto ws = balancing_ws();
  EXPECT_THROW(rhs_printed_corollary(ws, 4, 6), std::domain_error);
  EXPECT_THROW(rhs_printed_corollary(ws, 5, 9), std::domain_error);
  EXPECT_THROW(rhs_printed_corollary(ws, 6, 12), std::domain_error);
  EXPECT_THROW(rhs_printed_corollary(ws, 7, 30), std::domain_error);
}

TEST(PlainConvolution, PairExamples) {
  auto ws = balancing_ws();
  EXPECT_EQ(rhs_pair_plain(ws, 3), 12);
  EXPECT_EQ(rhs_pair_plain(ws, 4), 106);
  EXPECT_EQ(rhs_pair_plain(ws, 2), 1);
  EXPECT_THROW(rhs_pair_plain(ws, 1), std::domain_error);
}

TEST(PlainConvolution, GeneralExamples) {
  EXPECT_EQ(rhs_general_plain(2, 4), 106);
  EXPECT_EQ(rhs_general_plain(3, 3), 1);
  EXPECT_EQ(rhs_general_plain(4, 6), 356);
  EXPECT_THROW(rhs_general_plain(4, 3), std::domain_error);
  auto ws = balancing_ws();
  for (std::int64_t n = 2; n <= 80; ++n) ASSERT_EQ(rhs_general_plain(ws, 2, n), rhs_pair_plain(ws, n));
}

TEST(TelescopingIdentity, MatchesNBn) {
  auto ws = balancing_ws();
  EXPECT_EQ(telescoping_sum(ws, 10), 79972140);
  EXPECT_EQ(rhs_telescope(ws, 10), 79972140);
  EXPECT_THROW(rhs_telescope(ws, 0), std::domain_error);
}

TEST(BinomialConvolution, Examples) {
  EXPECT_EQ(binom_conv_u(SeqParams::balancing(), 2, 2), 2);
  EXPECT_EQ(binom_conv_u(SeqParams::fibonacci(), 3, 3), 6);
  EXPECT_EQ(binom_conv_v(SeqParams::fibonacci(), 2, 1), 4);
  EXPECT_EQ(binom_conv_v(SeqParams::fibonacci(), 2, 3), 34);  // brute force
}

TEST(BinomialConvolution, IteratedEgfMatchesTupleEnumeration) {
  for (const SeqParams p : {SeqParams(6, -1), SeqParams(1, 2), SeqParams(3, 2)}) {
    SeqCache cache(p);
    const auto us = cache.u_prefix(9), vs = cache.v_prefix(9);
    Workspace ws(p);
    for (std::int64_t r = 1; r <= 5; ++r) {
      for (std::int64_t n = 0; n <= 9; ++n) {
        ASSERT_EQ(ws.binom_conv_u(r, n), enumerate_convolution(us, r, n, 1, true));
        ASSERT_EQ(ws.binom_conv_v(r, n), enumerate_convolution(vs, r, n, 0, true));
      }
    }
  }
}

TEST(BinomialConvolution, FrozenGridValues) {
  // brute force
  EXPECT_EQ(binom_conv_u({3, 2}, 4, 6), 15000);
  EXPECT_EQ(binom_conv_v({3, 2}, 4, 6), 12944744);
  EXPECT_EQ(binom_conv_u({1, 2}, 5, 5), 120);
  EXPECT_EQ(binom_conv_v({1, 2}, 5, 5), 191000);
  EXPECT_EQ(binom_conv_u({2, 1}, 7, 9), 9737280);
  EXPECT_EQ(binom_conv_v({2, 1}, 7, 9), ArbInt("331641226112"));
}

TEST(MultinomialClosedForms, GeneralExamples) {
  EXPECT_EQ(rhs_multinom_u(SeqParams::fibonacci(), 3, 3), 6);
  EXPECT_EQ(rhs_multinom_u(SeqParams::balancing(), 3, 3), 6);
  EXPECT_EQ(rhs_multinom_v(SeqParams::fibonacci(), 2, 1), 4);
  EXPECT_EQ(rhs_multinom_v(SeqParams::fibonacci(), 2, 3), 34);
  for (const SeqParams p : {SeqParams(6, -1), SeqParams(2, 1), SeqParams(3, 2)}) {
    EXPECT_EQ(rhs_multinom_u(p, 1, 5), u(p, 5));
    EXPECT_EQ(rhs_multinom_v(p, 1, 4), v(p, 4));
  }
  EXPECT_EQ(rhs_multinom_u({3, 2}, 4, 6), 15000);
  EXPECT_EQ(rhs_multinom_v({2, 1}, 7, 9), ArbInt("331641226112"));
}

TEST(MultinomialClosedForms, NegativeDiscriminant) {
  // (1,-1): D = -3, roots are complex; the rationalized forms still hold.
  const SeqParams p(1, -1);
  Workspace ws(p);
  for (std::int64_t r = 1; r <= 6; ++r) {
    for (std::int64_t n = 0; n <= 20; ++n) {
      ASSERT_EQ(rhs_multinom_u(ws, r, n), ws.binom_conv_u(r, n)) << "r=" << r << " n=" << n;
      ASSERT_EQ(rhs_multinom_v(ws, r, n), ws.binom_conv_v(r, n));
    }
  }
}

TEST(BalancingBinomialForms, PairExamples) {
  EXPECT_EQ(rhs_binom_pair_B(2), 2);
  EXPECT_EQ(rhs_binom_pair_B(0), 0);
  EXPECT_EQ(rhs_binom_pair_C(1), 6);
}

TEST(BalancingBinomialForms, TripleAndGeneralMatchOracleAndGeneralBranch) {
  auto ws = balancing_ws();
  EXPECT_EQ(rhs_multinom_triple_C(ws, 4), 19569);  // brute force
  EXPECT_EQ(rhs_balancing_multinom_B(ws, 4, 6), 55680);  // brute force
  EXPECT_EQ(rhs_balancing_multinom_C(ws, 4, 5), 955392);  // brute force
  for (std::int64_t n = 0; n <= 40; ++n) {
    ASSERT_EQ(rhs_multinom_triple_B(ws, n), rhs_multinom_u(ws, 3, n));
    ASSERT_EQ(rhs_multinom_triple_C(ws, n), ws.binom_conv_c(3, n));
    for (std::int64_t r = 1; r <= 6; ++r) {
      ASSERT_EQ(rhs_balancing_multinom_B(ws, r, n), rhs_multinom_u(ws, r, n));
      // v = 2C so the v-product is 2^r times the C-product.
      ASSERT_EQ(rhs_balancing_multinom_C(ws, r, n) * int_pow(2, static_cast<std::uint64_t>(r)),
                rhs_multinom_v(ws, r, n));
    }
  }
}

TEST(BalancingBinomialForms, PrintedEvenRFormDisagrees) {
  auto ws = balancing_ws();
  // n = 0 hides the misprint since (r/2)^0 = (3r)^0.
  EXPECT_EQ(rhs_printed_balancing_even_u(ws, 2, 0), Rat(ws.binom_conv_u(2, 0)));
  for (std::int64_t r = 2; r <= 6; r += 2) {
    for (std::int64_t n = 1; n <= 20; ++n) {
      ASSERT_NE(rhs_printed_balancing_even_u(ws, r, n), Rat(ws.binom_conv_u(r, n))) << "r=" << r << " n=" << n;
    }
  }
  EXPECT_THROW(rhs_printed_balancing_even_u(ws, 3, 2), std::domain_error);
}

TEST(FibonacciForms, MatchGeneralBranch) {
  Workspace ws(SeqParams::fibonacci());
  for (std::int64_t n = 0; n <= 60; ++n) {
    ASSERT_EQ(rhs_fib_pair_F(ws, n), rhs_multinom_u(ws, 2, n));
    ASSERT_EQ(rhs_fib_pair_L(ws, n), rhs_multinom_v(ws, 2, n));
  }
  EXPECT_EQ(rhs_fib_pair_L(ws, 1), 4);
}

TEST(ParamsGuards, BalancingOnlyFormsRejectOtherParams) {
  Workspace fib(SeqParams::fibonacci());
  EXPECT_THROW(rhs_general_alt(fib, 3, 10), std::invalid_argument);
  EXPECT_THROW(alt_weighted_conv(fib, 3, 10), std::invalid_argument);
  EXPECT_THROW(fib.c(3), std::invalid_argument);
  auto bal = balancing_ws();
  EXPECT_THROW(rhs_fib_pair_F(bal, 3), std::invalid_argument);
}

TEST(Catalog, NamesRoundTripAndDomains) {
  for (const auto& info : all_identities()) {
    EXPECT_EQ(parse_identity_id(info.name), info.id);
    EXPECT_EQ(identity_info(info.id).name, info.name);
  }
  EXPECT_FALSE(parse_identity_id("general").has_value());
  EXPECT_EQ(identity_info(IdentityId::kGeneralAlt).min_n(4), 7);
  EXPECT_EQ(identity_info(IdentityId::kGeneralAlt).min_n(2), 1);
  EXPECT_EQ(resolve_r(IdentityId::kCorPrintedR5, std::nullopt), 5);
  EXPECT_THROW(resolve_r(IdentityId::kCorPrintedR5, 4), std::invalid_argument);
  EXPECT_THROW(resolve_r(IdentityId::kGeneralAlt, std::nullopt), std::invalid_argument);
  EXPECT_THROW(resolve_r(IdentityId::kGeneralPlain, 1), std::invalid_argument);
}

TEST(VerifyIdentity, Examples) {
  const auto tele = verify_identity(IdentityId::kPairTelescope, SeqParams::balancing(), std::nullopt, {1, 100});
  EXPECT_TRUE(tele.passed());
  EXPECT_EQ(tele.checked, 100);

  const auto alt = verify_identity(IdentityId::kGeneralAlt, SeqParams::balancing(), 4, {7, 100});
  EXPECT_TRUE(alt.passed());
  EXPECT_EQ(alt.checked, 94);

  const auto r5 = verify_identity(IdentityId::kCorPrintedR5, SeqParams::balancing(), 5, {10, 50});
  EXPECT_FALSE(r5.passed());
  EXPECT_EQ(r5.checked, 41);
  ASSERT_EQ(r5.failures.size(), 39u);
  EXPECT_EQ(r5.failures.front().n, 12);
  // Every witness re-evaluates to the recorded values.
  auto ws = balancing_ws();
  for (const auto& f : r5.failures) {
    const auto e = evaluate(IdentityId::kCorPrintedR5, ws, 5, f.n);
    ASSERT_EQ(e.lhs, f.lhs);
    ASSERT_EQ(e.rhs, f.rhs);
  }
}

TEST(VerifyIdentity, RangeIsClippedToDomain) {
  const auto report = verify_identity(IdentityId::kGeneralAlt, SeqParams::balancing(), 4, {0, 20});
  EXPECT_EQ(report.range, (NRange{7, 20}));
  EXPECT_EQ(report.checked, 14);
  EXPECT_THROW(verify_identity(IdentityId::kGeneralAlt, SeqParams::balancing(), 8, {0, 10}), std::invalid_argument);
  EXPECT_THROW(verify_identity(IdentityId::kGeneralAlt, SeqParams::balancing(), 4, {20, 10}), std::invalid_argument);
}

TEST(VerifyIdentity, ParamsMismatchIsUsageError) {
  EXPECT_THROW(verify_identity(IdentityId::kGeneralAlt, SeqParams::fibonacci(), 4, {0, 20}), std::invalid_argument);
  EXPECT_THROW(verify_identity(IdentityId::kFibPairF, SeqParams::balancing(), std::nullopt, {0, 20}),
               std::invalid_argument);
  EXPECT_TRUE(verify_identity(IdentityId::kGeneralU, SeqParams(2, 1), 4, {0, 30}).passed());
}
