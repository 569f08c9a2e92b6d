#pragma once
// Triangular lattice of hexagon centres in axial coordinates.
//
// A point (a,b) sits at a*u + b*v with u = sqrt3*(cos 30, sin 30) and
// v = sqrt3*(0, 1), so nearest centres are sqrt3 apart and the hexagons have
// edge length 1 with corners pointing left and right.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

namespace hexa {

struct Point {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr Point() = default;
    constexpr Point(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    constexpr Point operator+(Point o) const { return {a + o.a, b + o.b}; }
    constexpr Point operator-(Point o) const { return {a - o.a, b - o.b}; }
    constexpr Point operator-() const { return {-a, -b}; }
    constexpr Point& operator+=(Point o) { a += o.a; b += o.b; return *this; }
    constexpr Point& operator-=(Point o) { a -= o.a; b -= o.b; return *this; }
    friend constexpr Point operator*(std::int64_t k, Point p) { return {k * p.a, k * p.b}; }
    constexpr auto operator<=>(const Point&) const = default;
};

struct PointHash {
    std::size_t operator()(Point p) const noexcept {
        auto x = static_cast<std::uint64_t>(p.a) * 0x9E3779B97F4A7C15ull;
        x ^= static_cast<std::uint64_t>(p.b) + 0x7F4A7C159E3779B9ull + (x << 6) + (x >> 2);
        return static_cast<std::size_t>(x);
    }
};

// rotation by 60 degrees counter-clockwise
constexpr Point rot60(Point p) { return {-p.b, p.a + p.b}; }
constexpr Point rot(Point p, int k) {
    k = ((k % 6) + 6) % 6;
    for (int i = 0; i < k; ++i) p = rot60(p);
    return p;
}
// mirror in the line through the origin at 60 degrees (swaps u and v)
constexpr Point mirror(Point p) { return {p.b, p.a}; }

// neighbour k is at angle 30 + 60k; edge k of a hexagon faces neighbour k
inline constexpr std::array<Point, 6> kNeighbour = {
    Point{1, 0}, Point{0, 1}, Point{-1, 1}, Point{-1, 0}, Point{0, -1}, Point{1, -1}};

// next-nearest vector k is at angle 60k and passes through corner k
inline constexpr std::array<Point, 6> kDiagonal = {
    Point{2, -1}, Point{1, 1}, Point{-1, 2}, Point{-2, 1}, Point{-1, -1}, Point{1, -2}};

// child offsets of the pseudo inflation; the first four form the sector rule
inline constexpr std::array<Point, 7> kChild = {
    Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, -1}, Point{0, -1}, Point{-1, 0}, Point{-1, 1}};
inline constexpr int kSectorSize = 4;

constexpr int child_index(Point s) {
    for (int i = 0; i < 7; ++i)
        if (kChild[i] == s) return i;
    return -1;
}

inline constexpr int kBasisLength2 = 3;  // |u|^2 = |v|^2

// hexagon graph distance
constexpr std::int64_t hex_norm(Point p) {
    auto abs = [](std::int64_t x) { return x < 0 ? -x : x; };
    return (abs(p.a) + abs(p.b) + abs(p.a + p.b)) / 2;
}

inline std::vector<Point> hex_ball(std::int64_t r, Point centre = {}) {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(1 + 3 * r * (r + 1)));
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b)
            if (hex_norm({a, b}) <= r) out.push_back(centre + Point{a, b});
    return out;
}

inline std::int64_t hex_ball_size(std::int64_t r) { return 1 + 3 * r * (r + 1); }

// Exact planar coordinates: x is rational, y is a rational multiple of sqrt3.
using Rational = boost::rational<std::int64_t>;

struct Cartesian {
    Rational x;
    Rational y_over_sqrt3;
    bool operator==(const Cartesian&) const = default;
    Rational norm2() const { return x * x + 3 * y_over_sqrt3 * y_over_sqrt3; }
};

inline Cartesian to_cartesian(Point p) {
    return {Rational(3 * p.a, 2), Rational(p.a + 2 * p.b, 2)};
}

// centre density of the packing, times sqrt3: 2/9 * sqrt3
inline const Rational kDensityOverSqrt3{2, 9};

inline std::int64_t sublattice_index(std::int64_t scale) {
    if (scale == 0) throw std::invalid_argument("sublattice_index: scale must be nonzero");
    return scale * scale;
}

// D6 element acting as rot^rotation after an optional mirror
struct D6 {
    int rotation = 0;
    bool reflected = false;

    constexpr D6() = default;
    constexpr D6(int r, bool s) : rotation(((r % 6) + 6) % 6), reflected(s) {}

    constexpr D6 operator*(D6 h) const {
        // mirror * rot^k = rot^-k * mirror
        int r = reflected ? rotation - h.rotation : rotation + h.rotation;
        return {r, reflected != h.reflected};
    }
    constexpr D6 inverse() const {
        return reflected ? D6{rotation, true} : D6{-rotation, false};
    }
    constexpr bool operator==(const D6&) const = default;

    static std::vector<D6> all() {
        std::vector<D6> g;
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r < 6; ++r) g.emplace_back(r, s == 1);
        return g;
    }
};

constexpr Point act(D6 g, Point p) {
    if (g.reflected) p = mirror(p);
    return rot(p, g.rotation);
}

// planar isometry of g on exact coordinates, for cross-checking act
inline Cartesian act(D6 g, Cartesian c) {
    // work with (x, y/sqrt3); rotation by 60: x' = x/2 - 3y'/2, y' = x/2 + y'/2
    if (g.reflected) {
        // mirror in the 60 degree line: (x,y) -> (-x/2 + sqrt3 y/2, sqrt3 x/2 + y/2)
        Rational nx = -c.x / 2 + 3 * c.y_over_sqrt3 / 2;
        Rational ny = c.x / 2 + c.y_over_sqrt3 / 2;
        c = {nx, ny};
    }
    for (int i = 0; i < g.rotation; ++i) {
        Rational nx = c.x / 2 - 3 * c.y_over_sqrt3 / 2;
        Rational ny = c.x / 2 + c.y_over_sqrt3 / 2;
        c = {nx, ny};
    }
    return c;
}

inline void to_json(nlohmann::json& j, const Point& p) { j = nlohmann::json::array({p.a, p.b}); }
inline void from_json(const nlohmann::json& j, Point& p) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be [a, b]");
    p = {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace hexa
