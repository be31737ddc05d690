#include "herbench/envs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace herbench::envs {

namespace {

void check_goal_dims(const GoalVector& a, const GoalVector& b, const EnvSpec& spec) {
    if (static_cast<int>(a.size()) != spec.goal_dim || static_cast<int>(b.size()) != spec.goal_dim) {
        throw std::invalid_argument("goal dimension mismatch with env spec");
    }
}

double clip(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

void clip_unit_square(std::vector<double>& p) {
    p[0] = clip(p[0], 0.0, 1.0);
    p[1] = clip(p[1], 0.0, 1.0);
}

std::vector<double> clipped_delta(const Action& action, const EnvSpec& spec) {
    const auto& raw = continuous_action(action);
    if (static_cast<int>(raw.size()) != spec.action_dim) {
        throw std::invalid_argument("action dimension mismatch with env spec");
    }
    std::vector<double> d(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        d[i] = clip(raw[i], -spec.action_bound, spec.action_bound);
    }
    return d;
}

}  // namespace

int discrete_action(const Action& a) {
    if (const int* idx = std::get_if<int>(&a)) return *idx;
    throw std::invalid_argument("expected a discrete action");
}

const std::vector<double>& continuous_action(const Action& a) {
    if (const auto* v = std::get_if<std::vector<double>>(&a)) return *v;
    throw std::invalid_argument("expected a continuous action");
}

double goal_distance(const GoalVector& a, const GoalVector& b, const EnvSpec& spec) {
    check_goal_dims(a, b, spec);
    if (spec.metric == GoalMetric::hamming) {
        int mismatches = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) ++mismatches;
        }
        return static_cast<double>(mismatches);
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

double compute_reward(const GoalVector& achieved, const GoalVector& desired, const EnvSpec& spec) {
    return goal_distance(achieved, desired, spec) <= spec.distance_threshold ? 0.0 : -1.0;
}

// ---------------------------------------------------------------- BitFlip

BitFlipEnv::BitFlipEnv(int n) {
    if (n < 1) throw std::invalid_argument("bitflip size must be >= 1");
    spec_.id = "bitflip:" + std::to_string(n);
    spec_.state_dim = n;
    spec_.goal_dim = n;
    spec_.action_count = n;
    spec_.horizon = n;
    spec_.distance_threshold = 0.0;
    spec_.action_kind = ActionKind::discrete;
    spec_.metric = GoalMetric::hamming;
}

Observation BitFlipEnv::observe() const { return Observation{state_, state_, goal_}; }

Observation BitFlipEnv::reset(Rng& rng) {
    const int n = spec_.state_dim;
    state_.resize(n);
    goal_.resize(n);
    for (int i = 0; i < n; ++i) state_[i] = rng.uniform_int(0, 1) ? 1.0 : 0.0;
    for (int i = 0; i < n; ++i) goal_[i] = rng.uniform_int(0, 1) ? 1.0 : 0.0;
    step_count_ = 0;
    live_ = true;
    return observe();
}

StepResult BitFlipEnv::step(const Action& action) {
    if (!live_ || step_count_ >= spec_.horizon) {
        throw std::logic_error("step called on a terminal episode");
    }
    const int idx = discrete_action(action);
    if (idx < 0 || idx >= spec_.action_count) {
        throw std::invalid_argument("discrete action index out of range");
    }
    state_[idx] = state_[idx] == 0.0 ? 1.0 : 0.0;
    ++step_count_;

    StepResult r;
    r.observation = observe();
    r.reward = compute_reward(state_, goal_, spec_);
    r.is_success = r.reward == 0.0;
    r.is_terminal = step_count_ == spec_.horizon;
    return r;
}

// ------------------------------------------------------------- PointReach

PointReachEnv::PointReachEnv() {
    spec_.id = "reach2d";
    spec_.state_dim = 2;
    spec_.goal_dim = 2;
    spec_.action_dim = 2;
    spec_.horizon = 50;
    spec_.distance_threshold = 0.05;
    spec_.action_bound = 0.05;
    spec_.action_kind = ActionKind::continuous;
    spec_.metric = GoalMetric::euclidean;
}

Observation PointReachEnv::observe() const { return Observation{pos_, pos_, goal_}; }

Observation PointReachEnv::reset(Rng& rng) {
    pos_ = {rng.uniform(), rng.uniform()};
    goal_ = {rng.uniform(), rng.uniform()};
    step_count_ = 0;
    live_ = true;
    return observe();
}

StepResult PointReachEnv::step(const Action& action) {
    if (!live_ || step_count_ >= spec_.horizon) {
        throw std::logic_error("step called on a terminal episode");
    }
    const auto d = clipped_delta(action, spec_);
    pos_[0] += d[0];
    pos_[1] += d[1];
    clip_unit_square(pos_);
    ++step_count_;

    StepResult r;
    r.observation = observe();
    r.reward = compute_reward(pos_, goal_, spec_);
    r.is_success = r.reward == 0.0;
    r.is_terminal = step_count_ == spec_.horizon;
    return r;
}

// -------------------------------------------------------------- PointPush

PointPushEnv::PointPushEnv() {
    spec_.id = "push2d";
    spec_.state_dim = 4;  // agent x,y then box x,y
    spec_.goal_dim = 2;
    spec_.action_dim = 2;
    spec_.horizon = 60;
    spec_.distance_threshold = 0.05;
    spec_.action_bound = 0.05;
    spec_.action_kind = ActionKind::continuous;
    spec_.metric = GoalMetric::euclidean;
}

Observation PointPushEnv::observe() const {
    return Observation{{agent_[0], agent_[1], box_[0], box_[1]}, box_, goal_};
}

Observation PointPushEnv::reset(Rng& rng) {
    agent_ = {rng.uniform(), rng.uniform()};
    // Resample until the box does not already sit on the goal.
    do {
        box_ = {rng.uniform(), rng.uniform()};
        goal_ = {rng.uniform(), rng.uniform()};
    } while (goal_distance(box_, goal_, spec_) <= spec_.distance_threshold);
    step_count_ = 0;
    live_ = true;
    return observe();
}

StepResult PointPushEnv::step(const Action& action) {
    if (!live_ || step_count_ >= spec_.horizon) {
        throw std::logic_error("step called on a terminal episode");
    }
    const auto d = clipped_delta(action, spec_);
    const std::vector<double> prev = agent_;
    agent_[0] += d[0];
    agent_[1] += d[1];
    clip_unit_square(agent_);
    const double disp_x = agent_[0] - prev[0];
    const double disp_y = agent_[1] - prev[1];

    const double to_box_x = box_[0] - agent_[0];
    const double to_box_y = box_[1] - agent_[1];
    const double dist = std::sqrt(to_box_x * to_box_x + to_box_y * to_box_y);
    if (dist <= kContactRange && dist > 0.0) {
        const double ux = to_box_x / dist;
        const double uy = to_box_y / dist;
        // Push only: a displacement component away from the box does not drag it.
        const double push = std::max(0.0, disp_x * ux + disp_y * uy);
        box_[0] += push * ux;
        box_[1] += push * uy;
        clip_unit_square(box_);
    }
    ++step_count_;

    StepResult r;
    r.observation = observe();
    r.reward = compute_reward(box_, goal_, spec_);
    r.is_success = r.reward == 0.0;
    r.is_terminal = step_count_ == spec_.horizon;
    return r;
}

// ----------------------------------------------------------------- factory

std::unique_ptr<Env> make_env(const std::string& id) {
    if (id.rfind("bitflip:", 0) == 0) {
        const std::string num = id.substr(8);
        std::size_t pos = 0;
        int n = 0;
        try {
            n = std::stoi(num, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad bitflip size in env id '" + id + "'");
        }
        if (pos != num.size() || n < 1) {
            throw std::invalid_argument("bad bitflip size in env id '" + id + "'");
        }
        return std::make_unique<BitFlipEnv>(n);
    }
    if (id == "reach2d") return std::make_unique<PointReachEnv>();
    if (id == "push2d") return std::make_unique<PointPushEnv>();
    throw std::invalid_argument("unknown env id '" + id + "'");
}

}  // namespace herbench::envs
