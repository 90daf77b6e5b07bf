#ifndef CLAW_BITS_HPP
#define CLAW_BITS_HPP

#include <bit>
#include <cstdint>

namespace claw {

// A set of points/atoms, bit i <=> point i is a member.  Frames and algebras
// are capped at 64 points, far above anything the exhaustive procedures here
// can chew through anyway.
using Bits = std::uint64_t;

constexpr int kMaxPoints = 64;

constexpr Bits bit(int i) { return Bits{1} << i; }
constexpr bool has_bit(Bits s, int i) { return (s >> i) & 1; }
constexpr Bits full_mask(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }
constexpr int popcount(Bits s) { return std::popcount(s); }
constexpr int lowest_bit(Bits s) { return std::countr_zero(s); } // undefined on 0

// for (int i : BitRange(s)) iterates members in ascending order.
struct BitRange {
    Bits s;
    explicit BitRange(Bits v) : s(v) {}
    struct iterator {
        Bits rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {s}; }
    iterator end() const { return {0}; }
};

} // namespace claw

#endif
