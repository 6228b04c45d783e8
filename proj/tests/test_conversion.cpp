// Weight conversion between normalized families. The oracle: a weighted
// basis determines the rational function sum w_i u_i(t) p_i for control
// values p_i; converted weights must reproduce the identical weight function
// sum w_i u_i(t), checked by exact evaluation at many rational points.

#include <vector>

#include "doctest.h"
#include "tpbasis/bases.hpp"
#include "tpbasis/conversion.hpp"
#include "tpbasis/matrix.hpp"

using tpb::BasisSystem;
using tpb::ConversionTarget;
using tpb::Rational;
using tpb::rat;

namespace {

// sum w_i u_i(t) evaluated directly
Rational weight_function(const BasisSystem& basis, const std::vector<Rational>& w,
                         const Rational& t) {
  auto u = tpb::evaluate(basis, t);
  REQUIRE(u.size() == w.size());
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += w[i] * u[i];
  return s;
}

const std::vector<Rational> kProbePoints = {rat(0),     rat(1, 7),  rat(1, 3), rat(1, 2),
                                            rat(5, 8),  rat(13, 17), rat(9, 10), rat(1)};

}  // namespace

TEST_CASE("conversion preserves the weight function exactly") {
  std::vector<Rational> w = {rat(3), rat(1, 2), rat(7, 4), rat(2)};
  for (ConversionTarget target : {ConversionTarget::SaidBall, ConversionTarget::DP}) {
    auto v = tpb::convert_weights(target, w);
    REQUIRE(v.size() == w.size());
    BasisSystem bern = BasisSystem::bernstein(3);
    BasisSystem tgt = target == ConversionTarget::SaidBall ? BasisSystem::said_ball(3)
                                                           : BasisSystem::dp(3);
    for (const auto& t : kProbePoints)
      CHECK(weight_function(bern, w, t) == weight_function(tgt, v, t));
  }
}

TEST_CASE("uniform weights are a fixed point") {
  // every family here is normalized, so constant weights give the constant
  // weight function and convert to the same constants
  for (int n = 1; n <= 6; ++n) {
    std::vector<Rational> ones(static_cast<std::size_t>(n + 1), rat(5, 3));
    for (ConversionTarget target : {ConversionTarget::SaidBall, ConversionTarget::DP}) {
      auto v = tpb::convert_weights(target, ones);
      for (const auto& x : v) CHECK(x == rat(5, 3));
    }
  }
}

TEST_CASE("round trip through convert_to_bernstein is the identity") {
  std::vector<Rational> w = {rat(1), rat(4), rat(2, 3), rat(5), rat(1, 9)};
  for (ConversionTarget target : {ConversionTarget::SaidBall, ConversionTarget::DP}) {
    auto there = tpb::convert_weights(target, w);
    auto back = tpb::convert_to_bernstein(target, there);
    REQUIRE(back.size() == w.size());
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(back[i] == w[i]);
  }
}

TEST_CASE("WeightConverter matches the one-shot conversion") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Rational> w;
    for (int i = 0; i <= n; ++i) w.push_back(rat(2 * i + 1, i + 2));
    for (ConversionTarget target : {ConversionTarget::SaidBall, ConversionTarget::DP}) {
      tpb::WeightConverter conv(target, n);
      CHECK(conv.n() == n);
      auto a = conv(w);
      auto b = tpb::convert_weights(target, w);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
  }
  tpb::WeightConverter conv(ConversionTarget::DP, 3);
  CHECK_THROWS(conv({rat(1), rat(1)}));  // wrong length
}

TEST_CASE("converted weights can leave the positive cone") {
  // lopsided bernstein weights push DP coefficients negative; conversion
  // stays exact either way
  std::vector<Rational> w = {rat(1000), rat(1), rat(1000), rat(1), rat(1000)};
  auto v = tpb::convert_weights(ConversionTarget::DP, w);
  CHECK_FALSE(tpb::all_positive(v));
  BasisSystem bern = BasisSystem::bernstein(4);
  BasisSystem dp = BasisSystem::dp(4);
  for (const auto& t : kProbePoints)
    CHECK(weight_function(bern, w, t) == weight_function(dp, v, t));
}

TEST_CASE("all_positive is strict") {
  CHECK(tpb::all_positive({rat(1), rat(1, 1000000)}));
  CHECK_FALSE(tpb::all_positive({rat(1), rat(0)}));
  CHECK_FALSE(tpb::all_positive({rat(1), rat(-1, 5)}));
  CHECK(tpb::all_positive({}));
}

TEST_CASE("weighted_value evaluates the rational combination") {
  // with the weighted basis attached, sum v_i r_i(t) for control values is
  // handled by weighted_value; constant controls give the constant
  BasisSystem bern = BasisSystem::bernstein(2);
  std::vector<Rational> w = {rat(1), rat(3), rat(2)};
  Rational t = rat(1, 4);
  Rational direct = weight_function(bern, w, t);
  CHECK(tpb::weighted_value(bern, w, t) == direct);
}

TEST_CASE("target names round trip") {
  CHECK(tpb::target_from_name("said-ball") == ConversionTarget::SaidBall);
  CHECK(tpb::target_from_name("dp") == ConversionTarget::DP);
  CHECK(tpb::target_name(ConversionTarget::SaidBall) == "said-ball");
  CHECK(tpb::target_name(ConversionTarget::DP) == "dp");
  CHECK_THROWS(tpb::target_from_name("unknown"));
}
