#include "annlab/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace annlab {

Schedule Schedule::sa_log(double c, int n, double total_time) {
    if (n < 1 || total_time < 0.0 || c < 0.0) throw schema_error("sa_log schedule: bad parameters");
    Schedule s;
    s.kind_ = Kind::sa_log;
    s.c_ = c;
    s.n_ = n;
    s.total_time_ = total_time;
    return s;
}

Schedule Schedule::eqa_power(double gamma0, double chi, int n, double total_time) {
    if (!(gamma0 > chi) || !(chi > 0.0) || n < 1 || total_time <= 0.0)
        throw schema_error("eqa_power schedule: need gamma0 > chi > 0, T > 0");
    Schedule s;
    s.kind_ = Kind::eqa_power;
    s.n_ = n;
    s.total_time_ = total_time;
    s.exponent_ = 1.0 / (2.0 * n - 1.0);
    s.t0_ = total_time / (std::pow(gamma0 / chi, 2.0 * n - 1.0) - 1.0);
    s.c_ = gamma0 * std::pow(s.t0_, s.exponent_);
    return s;
}

Schedule Schedule::linear(double from, double to, double total_time) {
    if (total_time < 0.0) throw schema_error("linear schedule: negative total time");
    Schedule s;
    s.kind_ = Kind::linear;
    s.from_ = from;
    s.to_ = to;
    s.total_time_ = total_time;
    return s;
}

Schedule Schedule::custom(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2) throw schema_error("custom schedule: need at least two samples");
    if (!std::is_sorted(samples.begin(), samples.end(),
                        [](auto& a, auto& b) { return a.first < b.first; }))
        throw schema_error("custom schedule: sample times must ascend");
    Schedule s;
    s.kind_ = Kind::custom;
    s.samples_ = std::move(samples);
    s.total_time_ = s.samples_.back().first;
    return s;
}

double Schedule::value(double t) const {
    if (t < -1e-12 || t > total_time_ * (1.0 + 1e-12) + 1e-12)
        throw schema_error("Schedule::value: t outside [0, T]");
    t = std::clamp(t, 0.0, total_time_);
    switch (kind_) {
        case Kind::sa_log: return c_ * std::log1p(t) / n_;
        case Kind::eqa_power: return c_ * std::pow(t + t0_, -exponent_);
        case Kind::linear:
            return total_time_ == 0.0 ? to_ : from_ + (to_ - from_) * (t / total_time_);
        case Kind::custom: {
            auto it = std::lower_bound(samples_.begin(), samples_.end(), t,
                                       [](auto& a, double v) { return a.first < v; });
            if (it == samples_.begin()) return it->second;
            if (it == samples_.end()) return samples_.back().second;
            auto prev = std::prev(it);
            const double span = it->first - prev->first;
            if (span <= 0.0) return it->second;
            const double u = (t - prev->first) / span;
            return prev->second + u * (it->second - prev->second);
        }
    }
    return 0.0;
}

std::string Schedule::kind_name() const {
    switch (kind_) {
        case Kind::sa_log: return "sa_log";
        case Kind::eqa_power: return "eqa_power";
        case Kind::linear: return "linear";
        case Kind::custom: return "custom";
    }
    return "?";
}

bool Schedule::nondecreasing() const {
    switch (kind_) {
        case Kind::sa_log: return true;
        case Kind::eqa_power: return false;
        case Kind::linear: return to_ >= from_;
        case Kind::custom: {
            for (std::size_t i = 1; i < samples_.size(); ++i)
                if (samples_[i].second < samples_[i - 1].second) return false;
            return true;
        }
    }
    return false;
}

} // namespace annlab
