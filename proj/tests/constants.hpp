#pragma once

// Reference constants shared by the unit and acceptance tests.
namespace constants {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

}  // namespace constants
