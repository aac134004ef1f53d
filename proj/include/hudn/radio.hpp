#pragma once

#include <span>
#include <vector>

namespace hudn {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

double distance_m(Point a, Point b);

/// Propagation and admission parameters. The log-distance defaults are
/// typical small-cell magnitudes and live in the experiment config.
struct RadioParams {
  double pathloss_exponent = 3.5;
  double reference_loss_db = 38.0;  // at 1 m
  double macro_power_dbm = 43.0;
  double sap_power_dbm = 24.0;  // RRH / small-cell access point
  double d2d_power_dbm = 20.0;
  double noise_dbm = -104.0;
  double bandwidth_hz = 10e6;  // per channel
  double min_rate_bps = 5e7;   // admission threshold for user-RRH-channel triples
  double interference_threshold_dbm = -95.0;  // interference hyperedge trigger
  double default_sinr_min_db = 5.0;           // fallback content requirement
  int cumulative_set_max = 3;                 // max interferers per cumulative hyperedge

  bool operator==(const RadioParams&) const = default;
};

/// Log-distance pathloss, clamped below 1 m: ref + 10*alpha*log10(max(d,1)).
double pathloss_db(const RadioParams& params, double distance);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);
double db_to_linear(double db);

double received_power_dbm(const RadioParams& params, double tx_power_dbm, double distance);

struct Transmitter {
  Point pos;
  double power_dbm = 0.0;
};

/// Signal over noise plus summed co-channel interference, all in linear mW.
double sinr_linear(double signal_dbm, std::span<const double> interference_dbm,
                   double noise_dbm);

/// Geometry overload: powers derived from pathloss at the receiver.
double sinr_linear(const RadioParams& params, Point rx, const Transmitter& signal,
                   std::span<const Transmitter> interferers);

/// Shannon rate B*log2(1 + SINR).
double rate_bps(double sinr, double bandwidth_hz);

}  // namespace hudn
