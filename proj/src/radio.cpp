#include "hudn/radio.hpp"

#include <cmath>

namespace hudn {

double distance_m(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double pathloss_db(const RadioParams& params, double distance) {
  double d = std::max(distance, 1.0);
  return params.reference_loss_db + 10.0 * params.pathloss_exponent * std::log10(d);
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double received_power_dbm(const RadioParams& params, double tx_power_dbm, double distance) {
  return tx_power_dbm - pathloss_db(params, distance);
}

double sinr_linear(double signal_dbm, std::span<const double> interference_dbm,
                   double noise_dbm) {
  double denom = dbm_to_mw(noise_dbm);
  for (double i : interference_dbm) denom += dbm_to_mw(i);
  return dbm_to_mw(signal_dbm) / denom;
}

double sinr_linear(const RadioParams& params, Point rx, const Transmitter& signal,
                   std::span<const Transmitter> interferers) {
  double s = received_power_dbm(params, signal.power_dbm, distance_m(signal.pos, rx));
  double denom = dbm_to_mw(params.noise_dbm);
  for (const auto& t : interferers) {
    denom += dbm_to_mw(received_power_dbm(params, t.power_dbm, distance_m(t.pos, rx)));
  }
  return dbm_to_mw(s) / denom;
}

double rate_bps(double sinr, double bandwidth_hz) {
  return bandwidth_hz * std::log2(1.0 + sinr);
}

}  // namespace hudn
