#pragma once
// 2-adic coding of the hexagon hulls and the table generator built on it.
//
// Points of the 2-adic completion of the lattice are approximated by uint64
// pairs (arithmetic mod 2^64). A tile type is read from the lowest
// nonvanishing digit of y; the decorations are further digits read in frames
// rotated to the tile's diagonal.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hexa/lattice.hpp"

namespace hexa::coding {

struct Z2 {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    Z2 operator+(Z2 o) const { return {a + o.a, b + o.b}; }
    bool operator==(const Z2&) const = default;
};

inline Z2 lift(Point p) {
    return {static_cast<std::uint64_t>(p.a), static_cast<std::uint64_t>(p.b)};
}

inline int v2(std::uint64_t x) { return x == 0 ? 64 : __builtin_ctzll(x); }
inline int digit(std::uint64_t x, int k) { return k >= 64 ? 0 : static_cast<int>((x >> k) & 1u); }

inline Z2 rot60(Z2 p) { return {0 - p.b, p.a + p.b}; }
inline Z2 rot(Z2 p, int k) {
    k = ((k % 6) + 6) % 6;
    for (int i = 0; i < k; ++i) p = rot60(p);
    return p;
}
inline Z2 mirror(Z2 p) { return {p.b, p.a}; }

// coset of y / 2^v: (0,1) -> 0, (1,1) -> 1, (1,0) -> 2; 0 has no type
int type_of(Z2 y);

// mirror-bit coding that separates the two covers
enum class RedCoding { none, taylor, penrose };

// blue (arrow) bit and red bit in the frame rotated by -l
int blue_bit(Z2 y, int l);
int red_bit(Z2 y, int l, RedCoding rc);

struct Spec {
    std::string name;
    bool blue = false;       // arrowed half-hex and both covers
    RedCoding red = RedCoding::none;
};

Spec spec_for(const std::string& system);

// 12-valued decoration (l, beta, rho) as output of the coding
struct Deco {
    int l = 0, beta = 0, rho = 0;
    bool operator==(const Deco&) const = default;
    auto operator<=>(const Deco&) const = default;
};

// Minimal automaton of the coding: classes of lattice points that have the
// same decoration and the same decorations on every iterated child.
struct Automaton {
    std::vector<Deco> output;                 // per class
    std::vector<std::array<int, 7>> child;    // per class, indexed like kChild
    std::vector<int> rotate;                  // class of rot60(y)
    std::vector<int> reflect;                 // class of mirror(y)
};

Automaton build_automaton(const Spec& spec, std::uint64_t seed = 1, int samples = 20000);

}  // namespace hexa::coding
