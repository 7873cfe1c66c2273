#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace replpath {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
/// Hop distance. kUnreachable orders above every finite value.
using Dist = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

/// Saturating sum: unreachable is absorbing.
constexpr Dist add_dist(Dist a, Dist b) noexcept {
    if (a == kUnreachable || b == kUnreachable) return kUnreachable;
    return a + b;
}

constexpr bool reachable(Dist d) noexcept { return d != kUnreachable; }

struct Edge {
    Vertex u = kNoVertex;
    Vertex v = kNoVertex;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Malformed edge-list or matrix text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a structural rule (self-loop, duplicate, range, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace replpath
