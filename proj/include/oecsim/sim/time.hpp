#pragma once

#include <cmath>
#include <cstdint>

namespace oecsim {

// Simulated time in integer microseconds since run start. Events are ordered
// on this value, so durations are rounded to whole microseconds exactly once,
// at sampling time; everything downstream is integer arithmetic.
using SimTime = std::int64_t;

constexpr SimTime kUsPerMs = 1'000;
constexpr SimTime kUsPerSecond = 1'000'000;

// Half-up rounding of a non-negative duration in ms to whole microseconds.
inline SimTime ms_to_us(double ms) {
    return static_cast<SimTime>(std::floor(ms * 1000.0 + 0.5));
}

inline SimTime seconds_to_us(double s) {
    return static_cast<SimTime>(std::floor(s * 1e6 + 0.5));
}

inline double us_to_ms(SimTime t) { return static_cast<double>(t) / 1000.0; }
inline double us_to_seconds(SimTime t) { return static_cast<double>(t) / 1e6; }

}  // namespace oecsim
