#include "sicopt/channel.hpp"

#include <stdexcept>
#include <string>

namespace sicopt {
namespace {

void RequireSnr(const ChannelGains& gains, User u, double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > gains.GammaMax(u)) {
    throw std::domain_error("SNR of user " + std::to_string(static_cast<int>(u)) +
                            " must lie in [0, gamma_max], got " + std::to_string(gamma));
  }
}

}  // namespace

void ChannelGains::Validate() const {
  for (double g : {g11, g12, g21, g22}) {
    if (!std::isfinite(g) || g <= 0.0) {
      throw std::domain_error("path gains must be positive and finite");
    }
  }
  for (double g : {gamma1_max, gamma2_max}) {
    if (!std::isfinite(g) || g < 0.0) {
      throw std::domain_error("peak SNRs must be finite and non-negative");
    }
  }
}

double ChannelGains::Gain(User from, User to) const {
  if (from == User::kOne) return to == User::kOne ? g11 : g12;
  return to == User::kOne ? g21 : g22;
}

void SymmetricChannel::Validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("epsilon must lie in (0, 1)");
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("mu must lie in (0, 1)");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::domain_error("gamma must be positive");
}

ChannelGains SymmetricChannel::ToGains() const {
  return {1.0, 1.0 - mu, 1.0 - epsilon, 1.0, gamma, gamma};
}

double Phi(double x) {
  if (!std::isfinite(x) || x < 0.0) throw std::domain_error("phi: argument must be >= 0");
  return std::log2(1.0 + x);
}

double CapacityWithInterference(const ChannelGains& gains, User tx, User rx, double gamma1,
                                double gamma2) {
  RequireSnr(gains, User::kOne, gamma1);
  RequireSnr(gains, User::kTwo, gamma2);
  const User other = Other(tx);
  const double signal = gains.Gain(tx, rx) * (tx == User::kOne ? gamma1 : gamma2);
  const double interference = gains.Gain(other, rx) * (other == User::kOne ? gamma1 : gamma2);
  return Phi(signal / (interference + 1.0));
}

double CapacitySic(const ChannelGains& gains, User u, double gamma) {
  RequireSnr(gains, u, gamma);
  return Phi(gains.Gain(u, u) * gamma);
}

}  // namespace sicopt
