#include <gtest/gtest.h>

#include <cmath>

#include "branchworlds/error.hpp"
#include "branchworlds/literal_io.hpp"
#include "branchworlds/rational.hpp"
#include "branchworlds/rng.hpp"
#include "oracles.hpp"

namespace bw = branchworlds;
using oracle::q;

namespace {

bw::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const bw::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return bw::ErrorCode::ParseError;
}

}  // namespace

TEST(RationalParse, AcceptsFractionsIntegersAndDecimals) {
  EXPECT_EQ(bw::parse_rational("3/4"), q(3, 4));
  EXPECT_EQ(bw::parse_rational("-6/8"), q(-3, 4));
  EXPECT_EQ(bw::parse_rational("17"), q(17));
  EXPECT_EQ(bw::parse_rational("0.125"), q(1, 8));
  EXPECT_EQ(bw::parse_rational("-1.5e-3"), q(-3, 2000));
  EXPECT_EQ(bw::parse_rational("2E2"), q(200));
}

TEST(RationalParse, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.2.3", "--1", "0x10", "1e"}) {
    EXPECT_EQ(code_of([&] { (void)bw::parse_rational(bad); }), bw::ErrorCode::ParseError) << bad;
  }
}

TEST(RationalText, RoundTripsCanonically) {
  bw::SplitMix64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const bw::Rational x = q(rng.between(-1000, 1000), rng.between(1, 1000));
    const std::string text = bw::to_string(x);
    EXPECT_EQ(bw::parse_rational(text), x);
  }
  EXPECT_EQ(bw::to_string(q(4, 2)), "2");
  EXPECT_EQ(bw::to_string(q(-2, 6)), "-1/3");
}

TEST(RationalApproximate, FindsBestBoundedFractions) {
  EXPECT_EQ(bw::approximate(M_PI, 1000), q(355, 113));
  EXPECT_EQ(bw::approximate(0.5, 10), q(1, 2));
  EXPECT_EQ(bw::approximate(-0.3333333333, 100), q(-1, 3));
  EXPECT_EQ(bw::approximate(std::sqrt(2.0), 100), q(140, 99));
}

TEST(RationalHelpers, WrapUnitAndPow) {
  EXPECT_EQ(bw::wrap_unit(q(5, 4)), q(1, 4));
  EXPECT_EQ(bw::wrap_unit(q(-1, 4)), q(3, 4));
  EXPECT_EQ(bw::wrap_unit(q(1)), q(0));
  EXPECT_EQ(bw::pow(q(2, 3), 3), q(8, 27));
  EXPECT_EQ(bw::from_double(0.375), q(3, 8));
}

TEST(Rng, SplitMixMatchesPublishedSequence) {
  // First outputs of SplitMix64 seeded with 1234567, as published with the
  // reference implementation.
  bw::SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  auto a = bw::SplitMix64::stream(42, 3);
  auto b = bw::SplitMix64::stream(42, 3);
  auto c = bw::SplitMix64::stream(42, 4);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  for (int i = 0; i < 1000; ++i) {
    const auto v = a.between(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
    const double u = a.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(GameLiteral, ParsesAndRoundTrips) {
  const auto j = bw::parse_json(R"({"p": "2", "rows": [
      {"magp": "1", "reward": "3/2"},
      {"magp": "4", "phase": "1/3", "reward": "-1"}]})");
  const bw::Game g = bw::game_from_json(j);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[1].coefficient.phase(), q(1, 3));
  EXPECT_EQ(g.exponent(), bw::Exponent::finite(2));
  EXPECT_EQ(bw::game_from_json(bw::to_json(g)), g);
}

TEST(GameLiteral, RejectsFloatsUnlessApproximate) {
  const auto j = bw::parse_json(R"({"p": "1", "rows": [{"magp": 0.5, "reward": "1"}]})");
  EXPECT_EQ(code_of([&] { (void)bw::game_from_json(j); }), bw::ErrorCode::ParseError);
  const bw::Game g = bw::game_from_json(j, std::nullopt, {true, 1000});
  EXPECT_EQ(g[0].coefficient.mag_p(), q(1, 2));
}

TEST(GameLiteral, ApproximateAmplitudeIsRaisedToP) {
  const auto j = bw::parse_json(
      R"({"p": "2", "rows": [{"amp": 0.7071067811865476, "reward": "1"}, {"magp": "1/2", "reward": "0"}]})");
  const bw::Game g = bw::game_from_json(j, std::nullopt, {true, 1'000'000});
  EXPECT_NEAR(bw::to_double(g[0].coefficient.mag_p()), 0.5, 1e-6);
}

TEST(GameLiteral, ExponentOverrideAndErrors) {
  const auto j = bw::parse_json(R"({"rows": [{"magp": "1", "reward": "1"}]})");
  EXPECT_EQ(code_of([&] { (void)bw::game_from_json(j); }), bw::ErrorCode::ParseError);
  EXPECT_TRUE(bw::game_from_json(j, bw::Exponent::max()).exponent().is_max());
  EXPECT_EQ(code_of([] { (void)bw::parse_json("{"); }), bw::ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { (void)bw::exponent_from_string("1/2"); }), bw::ErrorCode::InvalidExponent);
  EXPECT_TRUE(bw::exponent_from_string("max").is_max());
}

TEST(SequentialLiteral, RoundTrips) {
  const auto j = bw::parse_json(R"({"rows": [
      {"coeff": {"magp": "1"}, "terminal": "6"},
      {"coeff": {"magp": "1"}, "subgame": {"rows": [
          {"coeff": {"magp": "1"}, "terminal": "0"},
          {"coeff": {"magp": "1"}, "terminal": "0"}]}}]})");
  const bw::SequentialGame g = bw::sequential_from_json(j);
  EXPECT_EQ(g.depth(), 2u);
  EXPECT_EQ(bw::to_json(bw::sequential_from_json(bw::to_json(g))), bw::to_json(g));
  const auto both = bw::parse_json(
      R"({"rows": [{"coeff": {"magp": "1"}, "terminal": "1", "subgame": {"rows": []}}]})");
  EXPECT_EQ(code_of([&] { (void)bw::sequential_from_json(both); }), bw::ErrorCode::ParseError);
}

TEST(BranchSpecLiteral, DefaultsToPNorm) {
  const auto spec = bw::branch_spec_from_json(bw::parse_json(R"({"measures": ["1", "2"], "N": 3})"));
  EXPECT_EQ(spec.universe.kind(), bw::UniverseKind::Kind::PNorm);
  EXPECT_EQ(spec.trials, 3u);
  const auto round = bw::branch_spec_from_json(bw::to_json(spec));
  EXPECT_EQ(round.trial_measures, spec.trial_measures);
}

TEST(ErrorTaxonomy, CategoriesMapToExitClasses) {
  EXPECT_EQ(bw::error_category(bw::ErrorCode::ParseError), bw::ErrorCategory::Parse);
  EXPECT_EQ(bw::error_category(bw::ErrorCode::EnumerationTooLarge), bw::ErrorCategory::Resource);
  EXPECT_EQ(bw::error_category(bw::ErrorCode::SizeOverflow), bw::ErrorCategory::Resource);
  EXPECT_EQ(bw::error_category(bw::ErrorCode::EmptyGame), bw::ErrorCategory::Domain);
  EXPECT_EQ(bw::error_name(bw::ErrorCode::DegenerateNorm), "DegenerateNorm");
}
