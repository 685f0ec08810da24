#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "hapsris/channel.hpp"
#include "hapsris/scenario.hpp"
#include "hapsris/units.hpp"

using hapsris::ChannelParams;

namespace {

ChannelParams urban() {
  ChannelParams p;
  hapsris::load_urban_s_band_tables(p);
  return p;
}

}  // namespace

TEST(LosProbability, Examples) {
  const ChannelParams p;
  EXPECT_NEAR(hapsris::los_probability(10.0, p), 0.2349, 1e-3);
  EXPECT_DOUBLE_EQ(hapsris::los_probability(90.0, p), 1.0);
  ChannelParams flat;
  flat.c1 = 0.0;
  flat.c3 = 50.0;
  for (double e : {10.0, 37.0, 90.0}) EXPECT_DOUBLE_EQ(hapsris::los_probability(e, flat), 0.5);
}

TEST(LosProbability, OutsideFitDomain) {
  EXPECT_THROW(hapsris::los_probability(5.0, {}), std::domain_error);
  EXPECT_THROW(hapsris::los_probability(91.0, {}), std::domain_error);
}

TEST(LosProbability, BoundedAndNonDecreasing) {
  const ChannelParams p;
  double prev = 0.0;
  for (double e = 10.0; e <= 90.0; e += 0.25) {
    const double v = hapsris::los_probability(e, p);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(Fspl, Examples) {
  EXPECT_NEAR(hapsris::fspl_db(2.0, 20000.0), 124.49, 0.01);
  EXPECT_NEAR(hapsris::fspl_db(1.0, 1.0), 32.45, 1e-12);
  EXPECT_NEAR(hapsris::fspl_db(2.0, 40000.0), hapsris::fspl_db(2.0, 20000.0) + 20.0 * std::log10(2.0), 1e-12);
}

TEST(Scintillation, Examples) {
  const ChannelParams p;
  EXPECT_NEAR(hapsris::scintillation_loss_db(90.0, p), 0.0886, 1e-3);
  EXPECT_DOUBLE_EQ(hapsris::scintillation_loss_db(1.0, p), 14.7);
  ChannelParams zero;
  zero.scint_coeff = 0.0;
  EXPECT_EQ(hapsris::scintillation_loss_db(45.0, zero), 0.0);
}

TEST(Tables, NearestBucketAndMissingEntry) {
  const ChannelParams p = urban();
  EXPECT_DOUBLE_EQ(hapsris::lookup_bucket(p.clutter_loss_nlos_db, 83.9), 25.5);
  EXPECT_DOUBLE_EQ(hapsris::lookup_bucket(p.clutter_loss_nlos_db, 14.0), 34.3);
  EXPECT_DOUBLE_EQ(hapsris::lookup_bucket(p.clutter_loss_nlos_db, 16.0), 30.9);
  EXPECT_DOUBLE_EQ(hapsris::lookup_bucket(p.clutter_loss_nlos_db, 3.0), 34.3);
  hapsris::ElevationTable holes{{10, 1.0}, {30, 3.0}};
  EXPECT_THROW(hapsris::lookup_bucket(holes, 21.0), std::out_of_range);
}

TEST(PathLoss, PureLosAndPureNlosCollapse) {
  ChannelParams p = urban();
  p.c1 = 0.0;
  p.c3 = 100.0;
  auto lb = hapsris::path_loss(40.0, p, {});
  EXPECT_DOUBLE_EQ(lb.pl_total_db, lb.pl_los_db);
  p.c3 = 0.0;
  lb = hapsris::path_loss(40.0, p, {});
  EXPECT_DOUBLE_EQ(lb.pl_total_db, lb.pl_nlos_db);
  p.blend = hapsris::BlendDomain::Linear;
  lb = hapsris::path_loss(40.0, p, {});
  EXPECT_NEAR(lb.pl_total_db, lb.pl_nlos_db, 1e-12);
}

// Term by term at 90 degrees: FSPL(20 km) 124.4912 + SF_LoS 4 + gas 10
// + entry 10 + scintillation 0.08857, with p_LoS clamped to one.
TEST(PathLoss, ZenithRegression) {
  const auto lb = hapsris::path_loss(90.0, urban(), {});
  EXPECT_DOUBLE_EQ(lb.p_los, 1.0);
  EXPECT_NEAR(lb.fspl_db, 124.49119982655925, 1e-9);
  EXPECT_NEAR(lb.pl_los_db, 148.57977211058316, 1e-9);
  EXPECT_NEAR(lb.pl_nlos_db, 176.07977211058316, 1e-9);
  EXPECT_NEAR(lb.pl_total_db, 148.57977211058316, 1e-9);
}

TEST(PathLoss, BlendsBracketedByConditionalLosses) {
  ChannelParams p = urban();
  for (double e = 10.0; e <= 90.0; e += 1.0) {
    for (auto mode : {hapsris::BlendDomain::Decibel, hapsris::BlendDomain::Linear}) {
      p.blend = mode;
      const auto lb = hapsris::path_loss(e, p, {});
      EXPECT_GE(lb.pl_total_db, std::min(lb.pl_los_db, lb.pl_nlos_db) - 1e-9);
      EXPECT_LE(lb.pl_total_db, std::max(lb.pl_los_db, lb.pl_nlos_db) + 1e-9);
    }
  }
}

TEST(ElementGains, Examples) {
  hapsris::LinkBudget unity;
  auto g = hapsris::element_channel_gains(unity, unity);
  EXPECT_DOUBLE_EQ(g.h_gain2, 1.0);
  EXPECT_DOUBLE_EQ(g.g_gain2, 1.0);

  hapsris::LinkBudget feeder;
  feeder.antenna_gain_tx_db = 43.2;
  feeder.pl_total_db = 124.49;
  g = hapsris::element_channel_gains(feeder, unity);
  EXPECT_NEAR(g.h_gain2 / std::pow(10.0, -8.129), 1.0, 1e-12);

  hapsris::LinkBudget plus3 = feeder;
  plus3.pl_total_db += 3.0;
  EXPECT_NEAR(hapsris::element_channel_gains(plus3, unity).h_gain2 / g.h_gain2, 0.5, 0.01);
}

TEST(Units, DecibelRoundTrip) {
  for (double x = -200.0; x <= 200.0; x += 0.37) {
    EXPECT_NEAR(hapsris::linear_to_db(hapsris::db_to_linear(x)), x, 1e-10);
    EXPECT_NEAR(hapsris::watts_to_dbm(hapsris::dbm_to_watts(x)), x, 1e-10);
  }
}
