#pragma once

#include "sicopt/centralized.hpp"
#include "sicopt/channel.hpp"

namespace sicopt {

/// Reference rates of the symmetric channel, all in bits/s/Hz.
///
///   mv   phi(gamma)                       single-user maximum
///   ws1  phi(gamma/((1-eps)gamma+1))      T1 decodable at R1 without SIC
///   ws2  phi(gamma/((1-mu)gamma+1))       T2 decodable at R2 without SIC
///   op1  phi((1-mu)gamma/(gamma+1))       T1 cancellable at R2
///   op2  phi((1-eps)gamma/(gamma+1))      T2 cancellable at R1
///   th   phi(gamma/(gamma+1))             no interference above th is cancellable
struct Landmarks {
  double mv = 0.0;
  double ws1 = 0.0;
  double ws2 = 0.0;
  double op1 = 0.0;
  double op2 = 0.0;
  double th = 0.0;
};

Landmarks ComputeLandmarks(const SymmetricChannel& sym);

// Closed-form optimal sum-rates at full power.
//
//   SumRateNoSic      ws1 + ws2
//   SumRatePartialI   op1 + mv   (R2 cancels, Strategy::kPartialSicR2)
//   SumRatePartialII  mv + op2   (R1 cancels, Strategy::kPartialSicR1)
double SumRateNoSic(const SymmetricChannel& sym);
double SumRatePartialI(const SymmetricChannel& sym);
double SumRatePartialII(const SymmetricChannel& sym);

/// max of the three closed forms.
double OptimalSumRate(const SymmetricChannel& sym);

/// The mu at which SumRateNoSic equals SumRatePartialII for a given epsilon:
/// mu = 1 - eps / (gamma (1 - eps)). Values <= 0 (eps >= gamma/(gamma+1)) mean
/// no crossing in (0, 1): No-SIC wins for every mu.
double SwitchingCurveMu(double epsilon, double gamma);

/// Where the switching curve meets the diagonal eps = mu:
/// q = (1 + 2 gamma - sqrt(1 + 4 gamma)) / (2 gamma).
double DiagonalIntersectionQ(double gamma);

/// Argmax of the three closed forms; ties prefer NoSic, then PartialSicR1
/// (R1 cancels, the PartialII form), then PartialSicR2.
Strategy ClassifyRegion(const SymmetricChannel& sym);

}  // namespace sicopt
