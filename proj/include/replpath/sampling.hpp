#pragma once

#include <replpath/config.hpp>
#include <replpath/graph.hpp>

#include <algorithm>
#include <span>
#include <vector>

namespace replpath {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform [0,1) draw that depends only on (seed, stream, level, vertex).
inline double unit_draw(std::uint64_t seed, std::uint64_t stream, std::uint32_t level, Vertex v) noexcept {
    std::uint64_t h = mix64(seed ^ mix64(stream + 0x51ed2701ULL));
    h = mix64(h ^ (static_cast<std::uint64_t>(level) << 32 | v));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline constexpr std::uint64_t kLandmarkStream = 0;
inline constexpr std::uint64_t kCenterStream = 1;

} // namespace detail

/// Per-level membership of a sampled vertex family; levels are independent draws.
class LevelSets {
public:
    LevelSets() = default;
    LevelSets(std::size_t n, std::uint32_t top) : member_(top + 1, std::vector<bool>(n, false)) {}

    std::uint32_t top() const { return static_cast<std::uint32_t>(member_.size()) - 1; }
    std::size_t levels() const { return member_.size(); }
    bool contains(std::uint32_t k, Vertex v) const { return member_[k][v]; }
    void set(std::uint32_t k, Vertex v) { member_[k][v] = true; }

    /// Members of level k, ascending.
    std::vector<Vertex> level(std::uint32_t k) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < member_[k].size(); ++v)
            if (member_[k][v]) out.push_back(v);
        return out;
    }

    /// Union over all levels, ascending.
    std::vector<Vertex> all() const {
        std::vector<Vertex> out;
        const auto n = member_.empty() ? 0 : member_[0].size();
        for (Vertex v = 0; v < n; ++v)
            if (in_any(v)) out.push_back(v);
        return out;
    }

    bool in_any(Vertex v) const {
        return std::any_of(member_.begin(), member_.end(), [v](const auto &row) { return row[v]; });
    }

private:
    std::vector<std::vector<bool>> member_;
};

struct LandmarkSets {
    LevelSets sets;
    std::vector<Vertex> all; // L, ascending
};

struct CenterSets {
    LevelSets sets;
    std::vector<Vertex> all;          // ascending
    std::vector<std::int32_t> priority; // -1 for non-centers
    bool is_center(Vertex v) const { return priority[v] >= 0; }
};

namespace detail {

inline LevelSets draw_levels(std::size_t n, const Scales &sc, std::uint64_t seed, std::uint64_t stream) {
    LevelSets ls(n, sc.top);
    for (std::uint32_t k = 0; k <= sc.top; ++k) {
        const double p = sc.probability(k);
        for (Vertex v = 0; v < n; ++v)
            if (p >= 1.0 || unit_draw(seed, stream, k, v) < p) ls.set(k, v);
    }
    return ls;
}

inline void check_sources(const Graph &g, std::span<const Vertex> sources) {
    if (sources.empty()) throw ValidationError("source set is empty");
    for (Vertex s : sources)
        if (s >= g.num_vertices()) throw ValidationError("source " + std::to_string(s) + " out of range");
}

} // namespace detail

/// Every vertex joins L_k with probability min(1, c 2^-k sqrt(sigma/n)); sources join every level.
inline LandmarkSets sample_landmarks(const Graph &g, std::span<const Vertex> sources, const Scales &sc,
                                     std::uint64_t seed) {
    detail::check_sources(g, sources);
    LandmarkSets out{detail::draw_levels(g.num_vertices(), sc, seed, detail::kLandmarkStream), {}};
    for (Vertex s : sources)
        for (std::uint32_t k = 0; k <= sc.top; ++k) out.sets.set(k, s);
    out.all = out.sets.all();
    return out;
}

inline LandmarkSets sample_landmarks(const Graph &g, std::span<const Vertex> sources, const AlgoConfig &cfg) {
    return sample_landmarks(g, sources, Scales::make(g.num_vertices(), sources.size(), cfg), cfg.seed);
}

/// Same rates as landmarks on an independent stream; sources are forced into C_0 only.
inline CenterSets sample_centers(const Graph &g, std::span<const Vertex> sources, const Scales &sc,
                                 std::uint64_t seed) {
    detail::check_sources(g, sources);
    CenterSets out{detail::draw_levels(g.num_vertices(), sc, seed, detail::kCenterStream), {}, {}};
    for (Vertex s : sources) out.sets.set(0, s);
    out.priority.assign(g.num_vertices(), -1);
    for (std::uint32_t k = 0; k <= sc.top; ++k)
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (out.sets.contains(k, v)) out.priority[v] = static_cast<std::int32_t>(k);
    out.all = out.sets.all();
    return out;
}

inline CenterSets sample_centers(const Graph &g, std::span<const Vertex> sources, const AlgoConfig &cfg) {
    return sample_centers(g, sources, Scales::make(g.num_vertices(), sources.size(), cfg), cfg.seed);
}

} // namespace replpath
