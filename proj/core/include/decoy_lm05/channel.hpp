#pragma once

namespace decoy_lm05 {

/// Physical description of the honest (no-eavesdropper) two-way fiber link.
/// Qubits travel Bob -> Alice -> Bob, so every photon sees the fiber twice.
struct ChannelParams {
  double alpha = 0.21;       ///< fiber loss coefficient [dB/km]
  double eta_ab = 0.045;     ///< lumped apparatus/detector efficiency, in (0,1]
  double y0 = 1.7e-6;        ///< dark-count yield (background click probability)
  double e_det = 0.033;      ///< detector misalignment error probability
  double e0 = 0.5;           ///< error rate of background events (1/2: random)
  double distance_km = 0.0;  ///< one-way fiber length l [km]

  /// Throws std::invalid_argument if any field is out of its physical range.
  void validate() const;
};

/// Signal and decoy mean photon numbers. nu2 == 0 selects a vacuum decoy.
struct IntensitySet {
  double mu = 0.45;   ///< signal intensity
  double nu1 = 0.05;  ///< first (brighter) decoy intensity
  double nu2 = 0.0;   ///< second (weaker) decoy intensity

  /// Enforces mu > nu1 > nu2 >= 0, nu1 + nu2 < mu and nu1 + nu2 < 1.
  /// Throws std::invalid_argument on violation.
  void validate() const;
};

/// The six quantities an experiment measures directly: overall gain and
/// QBER for the signal and each decoy intensity.
struct Observables {
  double q_mu = 0.0;
  double e_mu = 0.0;
  double q_nu1 = 0.0;
  double e_nu1 = 0.0;
  double q_nu2 = 0.0;
  double e_nu2 = 0.0;
};

/// Overall gain Q and QBER E for one intensity (see total_gain_and_qber).
struct GainQber {
  double gain = 0.0;
  double qber = 0.0;
};

/// Round-trip transmittance eta = t * eta_ab with t = 10^(-alpha * 2l / 10).
/// The doubled length is the defining feature of the two-way protocol.
double transmittance(const ChannelParams& params);

/// Yield of an i-photon pulse: Y_i = y0 + eta_i - y0 * eta_i with
/// eta_i = 1 - (1 - eta)^i.  Returns y0 for i = 0.
double yield_i(const ChannelParams& params, int i);

/// Error rate of an i-photon pulse: e_i = (e0 * y0 + e_det * eta_i) / Y_i.
/// Throws std::domain_error when Y_i = 0 (degenerate channel: y0 = 0 and
/// zero transmittance).
double error_i(const ChannelParams& params, int i);

/// Gain of the i-photon fraction of a Poisson source:
/// Q_i = Y_i * e^(-intensity) * intensity^i / i!.
double gain_i(const ChannelParams& params, double intensity, int i);

/// Closed form of the Poisson-summed gain and QBER for one intensity:
///   Q = y0 + (1 - y0)(1 - e^(-eta*mu))
///   E = (e0*y0 + e_det(1 - e^(-eta*mu))) / Q
/// Both equal the infinite photon-number series sum(Y_i P_i) and
/// sum(e_i Y_i P_i)/Q exactly.  intensity = 0 gives the vacuum limit
/// (Q = y0, E = e0).
GainQber total_gain_and_qber(const ChannelParams& params, double intensity);

/// Bundles total_gain_and_qber for all three intensities.  Validates both
/// inputs; a vacuum decoy (nu2 = 0) yields exactly q_nu2 = y0, e_nu2 = e0.
Observables observe(const ChannelParams& params, const IntensitySet& intensities);

}  // namespace decoy_lm05
