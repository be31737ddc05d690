#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "herbench/rng.hpp"

namespace herbench::envs {

// Goal-space vector. For BitFlip the components are bits encoded as 0.0/1.0.
using GoalVector = std::vector<double>;

// Discrete action index or continuous action vector.
using Action = std::variant<int, std::vector<double>>;

int discrete_action(const Action& a);
const std::vector<double>& continuous_action(const Action& a);

enum class ActionKind { discrete, continuous };
enum class GoalMetric { hamming, euclidean };

struct EnvSpec {
    std::string id;
    int state_dim = 0;
    int goal_dim = 0;
    int action_dim = 0;    // components of a continuous action
    int action_count = 0;  // number of discrete actions
    int horizon = 0;       // steps per episode, no early termination
    double distance_threshold = 0.0;
    double action_bound = 0.0;  // per-component bound of a continuous action
    ActionKind action_kind = ActionKind::discrete;
    GoalMetric metric = GoalMetric::euclidean;
};

struct Observation {
    std::vector<double> state;
    GoalVector achieved_goal;  // goal-space projection of state
    GoalVector desired_goal;
};

struct StepResult {
    Observation observation;
    double reward = -1.0;  // in {-1, 0}
    bool is_success = false;
    bool is_terminal = false;  // true exactly at step horizon
};

// Goal distance under the spec's metric.
double goal_distance(const GoalVector& a, const GoalVector& b, const EnvSpec& spec);

// Sparse binary reward: 0 on success (distance <= threshold), -1 otherwise.
// Pure function of the two goals; this is what makes hindsight relabeling possible.
double compute_reward(const GoalVector& achieved, const GoalVector& desired, const EnvSpec& spec);

class Env {
public:
    virtual ~Env() = default;
    virtual const EnvSpec& spec() const = 0;
    // Samples a fresh initial state and desired goal from the given stream.
    virtual Observation reset(Rng& rng) = 0;
    // Advances one step. Throws if called past the horizon.
    virtual StepResult step(const Action& action) = 0;
};

// n-bit flipping task: state and goal are bit vectors, action i flips bit i,
// horizon n, success means exact match (Hamming threshold 0).
class BitFlipEnv final : public Env {
public:
    explicit BitFlipEnv(int n);
    const EnvSpec& spec() const override { return spec_; }
    Observation reset(Rng& rng) override;
    StepResult step(const Action& action) override;

private:
    EnvSpec spec_;
    std::vector<double> state_;
    GoalVector goal_;
    int step_count_ = 0;
    bool live_ = false;
    Observation observe() const;
};

// Point agent in [0,1]^2 reaching a goal position; action is a position delta
// clipped to +/-0.05 per axis; achieved goal is the agent position.
class PointReachEnv final : public Env {
public:
    PointReachEnv();
    const EnvSpec& spec() const override { return spec_; }
    Observation reset(Rng& rng) override;
    StepResult step(const Action& action) override;

private:
    EnvSpec spec_;
    std::vector<double> pos_;
    GoalVector goal_;
    int step_count_ = 0;
    bool live_ = false;
    Observation observe() const;
};

// Point agent pushing a box in [0,1]^2. The box moves only while the agent is
// within contact range after its own move, so achieved goals (box positions)
// follow a nonuniform, contact-driven distribution.
class PointPushEnv final : public Env {
public:
    PointPushEnv();
    const EnvSpec& spec() const override { return spec_; }
    Observation reset(Rng& rng) override;
    StepResult step(const Action& action) override;

    static constexpr double kContactRange = 0.06;

private:
    EnvSpec spec_;
    std::vector<double> agent_;
    std::vector<double> box_;
    GoalVector goal_;
    int step_count_ = 0;
    bool live_ = false;
    Observation observe() const;
};

// Environment ids: "bitflip:<n>", "reach2d", "push2d".
std::unique_ptr<Env> make_env(const std::string& id);

}  // namespace herbench::envs
