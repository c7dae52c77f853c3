#pragma once

#include <array>

#include "evomerge/env.hpp"

namespace evomerge {

// Planar quadruped: a rigid torso and four massless two-segment legs with
// torque-driven hip and knee joints (8 actuators). Ground contact is a
// penalty spring with regularized Coulomb friction; integration is
// semi-implicit Euler at dt = 0.01 s. The morphology variant scales each
// leg's lower-segment length (standard length 0.4).
//
// Observation (28): body height/pitch/vx/omega (4), joint angles (8),
// joint velocities (8), per-leg contact flag and foot clearance (8).
// Action (8): joint torques in [-1, 1], order FL hip, FL knee, FR hip,
// FR knee, BL hip, BL knee, BR hip, BR knee.
class SegWalker2D final : public Environment {
 public:
  explicit SegWalker2D(int episode_steps = 1000,
                       RewardMode mode = RewardMode::Full);

  const EnvSpec& spec() const override { return spec_; }
  std::vector<double> reset(const MorphologyVariant& variant,
                            std::uint64_t seed) override;
  StepResult step(std::span<const double> action) override;

  // net displacement along the target axis since reset
  double distance() const { return x_ - start_x_; }
  double body_height() const { return z_; }
  double body_pitch() const { return pitch_; }

 private:
  struct Leg {
    double attach_x = 0.0;  // body-frame offset of the hip
    double lower_len = 0.4;
    double hip = 0.0;
    double knee = 0.0;
    double hip_vel = 0.0;
    double knee_vel = 0.0;
  };

  std::vector<double> observe() const;
  bool unstable() const;

  EnvSpec spec_;
  std::array<Leg, 4> legs_;
  double x_ = 0.0, z_ = 0.0, pitch_ = 0.0;
  double vx_ = 0.0, vz_ = 0.0, omega_ = 0.0;
  double start_x_ = 0.0;
  int steps_ = 0;
  bool done_ = true;
  bool active_ = false;
};

}  // namespace evomerge
