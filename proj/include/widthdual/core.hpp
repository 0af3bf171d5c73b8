#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdk {

using Mask = std::uint32_t;

// Thrown for caller mistakes: bad arguments, violated preconditions.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input files.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration caps exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal assertion failed (e.g. a family that does not survive shifting).
struct EngineError : std::logic_error {
    using std::logic_error::logic_error;
};

inline int popcount(Mask m) { return std::popcount(m); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

std::vector<int> members_of(Mask m);
Mask mask_from(const std::vector<int>& elems);

// One oriented separation (A,B) of a ground set, as two bitmasks.
struct Sep {
    Mask a = 0;
    Mask b = 0;

    Sep inverse() const { return {b, a}; }
    friend bool operator==(const Sep&, const Sep&) = default;
    friend auto operator<=>(const Sep&, const Sep&) = default;
};

inline bool sep_leq(Sep r, Sep s) { return is_subset(r.a, s.a) && is_subset(s.b, r.b); }
inline Sep sep_join(Sep r, Sep s) { return {r.a | s.a, r.b & s.b}; }
inline Sep sep_meet(Sep r, Sep s) { return {r.a & s.a, r.b | s.b}; }
inline std::uint64_t sep_key(Sep s) { return (std::uint64_t{s.a} << 32) | s.b; }

struct SepHash {
    std::size_t operator()(const Sep& s) const noexcept { return std::hash<std::uint64_t>{}(sep_key(s)); }
};

std::string to_string(Sep s);

// Upper bound on graph vertices for universe enumeration; WDK_CAP_VERTICES overrides.
int vertex_cap();
constexpr int kBipartitionCap = 16;

}  // namespace wdk
