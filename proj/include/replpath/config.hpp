#pragma once

#include <replpath/types.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

namespace replpath {

struct AlgoConfig {
    std::uint64_t seed = 1;
    double c_sample = 4.0;
    double near_multiplier = 2.0;
    /// Multiplier of the per-priority span 2^k * X in the multi-source graphs.
    double aux_span = 2.0;
    /// Explicit near/far boundary. When set, it replaces both the scale X and
    /// the near threshold, and the sampling rates follow the smaller scale.
    std::optional<double> threshold_override;
    /// Worker threads for per-source / per-center stages (0 = hardware).
    unsigned parallel = 1;

    void validate() const {
        if (!(c_sample >= 1.0)) throw ValidationError("c_sample must be >= 1");
        if (!(near_multiplier >= 1.0)) throw ValidationError("near_multiplier must be >= 1");
        if (!(aux_span >= 2.0)) throw ValidationError("aux_span must be >= 2");
        if (threshold_override && !(*threshold_override >= 1.0)) {
            throw ValidationError("near threshold override must be >= 1");
        }
    }
};

/// ceil(log2 x), at least 1.
inline std::uint32_t log2_ceil(double x) {
    if (x <= 2.0) return 1;
    return static_cast<std::uint32_t>(std::ceil(std::log2(x) - 1e-12));
}

/**
 * Derived scales for one (n, sigma, config):
 *   X    = sqrt(n / sigma) * log n         base length unit
 *   T    = near_multiplier * X             near threshold
 *   K    = ceil(log2 sqrt(n * sigma))      top bucket / priority
 */
struct Scales {
    std::size_t n = 0;
    std::size_t sigma = 1;
    std::uint32_t log_n = 1;
    double unit = 1.0;      // X
    double near_limit = 2;  // T
    std::uint32_t top = 0;  // K
    double c_sample = 4.0;
    double aux_span = 2.0;

    static Scales make(std::size_t n, std::size_t sigma, const AlgoConfig &cfg) {
        Scales s;
        s.n = n;
        s.sigma = std::max<std::size_t>(sigma, 1);
        s.log_n = log2_ceil(static_cast<double>(n));
        const double ratio = static_cast<double>(n) / static_cast<double>(s.sigma);
        if (cfg.threshold_override) {
            s.unit = *cfg.threshold_override;
            s.near_limit = *cfg.threshold_override;
        } else {
            s.unit = std::max(1.0, std::sqrt(ratio) * s.log_n);
            s.near_limit = cfg.near_multiplier * s.unit;
        }
        const double root = std::sqrt(static_cast<double>(n) * static_cast<double>(s.sigma));
        s.top = root <= 1.0 ? 0 : static_cast<std::uint32_t>(std::ceil(std::log2(root) - 1e-12));
        s.c_sample = cfg.c_sample;
        s.aux_span = cfg.aux_span;
        return s;
    }

    /// Sampling rate of level k: min(1, c * 2^-k * sqrt(sigma/n)), written
    /// through X so that an overridden scale densifies the sample.
    double probability(std::uint32_t k) const {
        return std::min(1.0, c_sample * log_n / (std::ldexp(1.0, static_cast<int>(k)) * unit));
    }

    /// Number of near positions counted back from the target: ceil(T).
    std::uint32_t near_count() const { return static_cast<std::uint32_t>(std::ceil(near_limit - 1e-9)); }

    /// 2^k * X
    double band(std::uint32_t k) const { return std::ldexp(unit, static_cast<int>(k)); }

    /// Edges covered from a priority-k center: ceil(aux_span * 2^k * X).
    std::uint32_t span(std::uint32_t k) const {
        const double v = std::ceil(aux_span * band(k) - 1e-9);
        return v >= static_cast<double>(kUnreachable) ? kUnreachable - 1 : static_cast<std::uint32_t>(v);
    }
};

/// Near, or Far(bucket).
struct EdgeClass {
    bool near = true;
    std::uint32_t bucket = 0;

    static EdgeClass near_edge() { return {true, 0}; }
    static EdgeClass far_edge(std::uint32_t k) { return {false, k}; }
    friend bool operator==(const EdgeClass &, const EdgeClass &) = default;

    std::string to_string() const { return near ? "near" : "far(" + std::to_string(bucket) + ")"; }
};

/// Classifies by D, the hop distance from the edge's deeper endpoint to the target.
inline EdgeClass classify_distance(Dist d, const Scales &sc) {
    if (static_cast<double>(d) < sc.near_limit) return EdgeClass::near_edge();
    std::uint32_t k = 0;
    while (k < sc.top && static_cast<double>(d) >= sc.band(k + 2)) ++k;
    return EdgeClass::far_edge(k);
}

} // namespace replpath
