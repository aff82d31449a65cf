#include "sicopt/sim.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace sicopt {
namespace {

// Full-power capacities that decide every decode flag.
struct Capacities {
  double c11, c12, c21, c22, s1, s2;

  explicit Capacities(const SymmetricChannel& sym) {
    const ChannelGains g = sym.ToGains();
    const double y = sym.gamma;
    c11 = CapacityWithInterference(g, User::kOne, User::kOne, y, y);
    c12 = CapacityWithInterference(g, User::kOne, User::kTwo, y, y);
    c21 = CapacityWithInterference(g, User::kTwo, User::kOne, y, y);
    c22 = CapacityWithInterference(g, User::kTwo, User::kTwo, y, y);
    s1 = CapacitySic(g, User::kOne, y);
    s2 = CapacitySic(g, User::kTwo, y);
  }
};

Sample MakeSample(const Capacities& cap, double t, double r1, double r2, Phase phase) {
  Sample s;
  s.t = t;
  s.r1 = r1;
  s.r2 = r2;
  s.phase = phase;
  s.sic_at_r1 = CanDecode(r2, cap.c21);
  s.sic_at_r2 = CanDecode(r1, cap.c12);
  s.r1_decoded = CanDecode(r1, s.sic_at_r1 ? cap.s1 : cap.c11);
  s.r2_decoded = CanDecode(r2, s.sic_at_r2 ? cap.s2 : cap.c22);
  return s;
}

// Steady-state rates with T1 greedy, at step j of a period of n steps.
std::pair<double, double> SteadyRates(const Landmarks& l, long j, long n) {
  const double ramp = l.ws2 * static_cast<double>(j) / static_cast<double>(n);
  const double r2 = ramp <= l.th ? ramp : l.ws2;
  const double r1 = r2 <= l.op2 ? l.mv : l.ws1;
  return {r1, r2};
}

double Interpolate(const Trajectory& traj, std::size_t k, double before, double after,
                   double threshold) {
  const double t1 = traj.samples[k].t;
  if (before == after || (before - threshold) * (after - threshold) > 0.0) return t1;
  return t1 - traj.dt + traj.dt * (before - threshold) / (before - after);
}

// First index k with pred(k-1) false and pred(k) true, restricted to
// samples in `phase`.
std::optional<std::size_t> RisingEdge(const Trajectory& traj, Phase phase,
                                      const std::function<bool(const Sample&)>& pred) {
  for (std::size_t k = 1; k < traj.samples.size(); ++k) {
    const Sample& cur = traj.samples[k];
    if (cur.phase != phase) continue;
    if (!pred(traj.samples[k - 1]) && pred(cur)) return k;
  }
  return std::nullopt;
}

}  // namespace

void SimConfig::Validate() const {
  sym.Validate();
  if (!(period > 0.0) || !std::isfinite(period)) throw std::domain_error("period must be > 0");
  if (!(dt > 0.0)) throw std::domain_error("dt must be > 0");
  if (dt > period / 100.0 * (1.0 + 1e-12)) throw std::domain_error("dt must be <= T/100");
  if (n_periods < 1) throw std::domain_error("n_periods must be >= 1");
  const double steps = period / dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * steps) {
    throw std::domain_error("T/dt must be an integer");
  }
}

int SimConfig::StepsPerPeriod() const { return static_cast<int>(std::lround(period / dt)); }

std::size_t Trajectory::SteadyBegin() const {
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (samples[k].phase == Phase::kSteady) return k;
  }
  return samples.size();
}

double SawtoothR2(double t, const SymmetricChannel& sym, double period) {
  if (!(t >= 0.0)) throw std::domain_error("t must be >= 0");
  const Landmarks l = ComputeLandmarks(sym);
  const double ramp = l.ws2 / period * std::fmod(t, period);
  return ramp <= l.th ? ramp : l.ws2;
}

double GreedyR1(double r2_now, const SymmetricChannel& sym) {
  if (!(r2_now >= 0.0)) throw std::domain_error("rate must be >= 0");
  const Landmarks l = ComputeLandmarks(sym);
  return CanDecode(r2_now, l.op2) ? l.mv : l.ws1;
}

InitPhase RunInitPhase(const SimConfig& cfg) {
  cfg.Validate();
  const Capacities cap(cfg.sym);
  const double mv = ComputeLandmarks(cfg.sym).mv;
  const long n = cfg.StepsPerPeriod();

  InitPhase out;
  out.samples.reserve(n);
  std::optional<User> switched;
  for (long k = 0; k < n; ++k) {
    const double descent = mv * (1.0 - static_cast<double>(k) / static_cast<double>(n));
    double r1 = switched == User::kOne ? mv : descent;
    double r2 = switched == User::kTwo ? mv : descent;
    if (!switched) {
      // Simultaneous eligibility goes to T1.
      if (CanDecode(r2, cap.c21)) {
        switched = User::kOne;
        r1 = mv;
      } else if (CanDecode(r1, cap.c12)) {
        switched = User::kTwo;
        r2 = mv;
      }
    }
    out.samples.push_back(MakeSample(cap, static_cast<double>(k) * cfg.dt, r1, r2, Phase::kInit));
  }
  out.greedy = switched.value_or(cfg.sym.mu >= cfg.sym.epsilon ? User::kOne : User::kTwo);
  return out;
}

std::vector<Sample> RunSteadyState(const SimConfig& cfg, User greedy, long first_step) {
  cfg.Validate();
  const Capacities cap(cfg.sym);
  const SymmetricChannel oriented = greedy == User::kOne ? cfg.sym : cfg.sym.Swapped();
  const Landmarks l = ComputeLandmarks(oriented);
  const long n = cfg.StepsPerPeriod();
  const long total = n * cfg.n_periods;

  std::vector<Sample> out;
  out.reserve(total + 1);
  for (long k = 0; k <= total; ++k) {
    const long step = first_step + k;
    auto [rg, rs] = SteadyRates(l, step % n, n);
    const double r1 = greedy == User::kOne ? rg : rs;
    const double r2 = greedy == User::kOne ? rs : rg;
    out.push_back(MakeSample(cap, static_cast<double>(step) * cfg.dt, r1, r2, Phase::kSteady));
  }
  return out;
}

Trajectory Simulate(const SimConfig& cfg) {
  cfg.Validate();
  Trajectory traj;
  traj.dt = cfg.dt;
  traj.period = cfg.period;
  traj.steps_per_period = cfg.StepsPerPeriod();

  long first_step = 0;
  if (cfg.include_init) {
    InitPhase init = RunInitPhase(cfg);
    traj.samples = std::move(init.samples);
    traj.greedy = init.greedy;
    first_step = traj.steps_per_period;
  } else {
    traj.greedy = cfg.sym.mu >= cfg.sym.epsilon ? User::kOne : User::kTwo;
  }
  std::vector<Sample> steady = RunSteadyState(cfg, traj.greedy, first_step);
  traj.samples.insert(traj.samples.end(), steady.begin(), steady.end());

  const SymmetricChannel oriented = traj.greedy == User::kOne ? cfg.sym : cfg.sym.Swapped();
  traj.sawtooth_speed = ComputeLandmarks(oriented).ws2 / cfg.period;
  return traj;
}

Events DetectEvents(const Trajectory& traj, const SymmetricChannel& sym) {
  const Capacities cap(sym);
  const bool t1_greedy = traj.greedy == User::kOne;
  const auto sawtooth_rate = [t1_greedy](const Sample& s) { return t1_greedy ? s.r2 : s.r1; };
  const auto greedy_sic = [t1_greedy](const Sample& s) {
    return t1_greedy ? s.sic_at_r1 : s.sic_at_r2;
  };
  // Capacity at which the greedy receiver can cancel the sawtooth signal.
  const double cancel_cap = t1_greedy ? cap.c21 : cap.c12;
  const double th = ComputeLandmarks(sym).th;

  Events ev;
  if (auto k = RisingEdge(traj, Phase::kInit, [](const Sample& s) { return s.r2_decoded; })) {
    ev.first_r2_decode =
        Interpolate(traj, *k, traj.samples[*k - 1].r2, traj.samples[*k].r2, cap.c22);
  }
  if (auto k = RisingEdge(traj, Phase::kInit, [](const Sample& s) { return s.r1_decoded; })) {
    ev.first_r1_decode =
        Interpolate(traj, *k, traj.samples[*k - 1].r1, traj.samples[*k].r1, cap.c11);
  }
  if (auto k = RisingEdge(traj, Phase::kInit, greedy_sic)) {
    ev.greedy_switch = Interpolate(traj, *k, sawtooth_rate(traj.samples[*k - 1]),
                                   sawtooth_rate(traj.samples[*k]), cancel_cap);
  }
  if (auto k = RisingEdge(traj, Phase::kSteady, [&](const Sample& s) { return !greedy_sic(s); })) {
    ev.sic_loss = Interpolate(traj, *k, sawtooth_rate(traj.samples[*k - 1]),
                              sawtooth_rate(traj.samples[*k]), cancel_cap);
  }
  if (auto k = RisingEdge(traj, Phase::kSteady,
                          [&](const Sample& s) { return sawtooth_rate(s) > th; })) {
    ev.ramp_jump = Interpolate(traj, *k, sawtooth_rate(traj.samples[*k - 1]),
                               sawtooth_rate(traj.samples[*k]), th);
  }
  return ev;
}

}  // namespace sicopt
