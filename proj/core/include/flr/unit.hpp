#pragma once

#include <stdexcept>
#include <string>

namespace flr {

/// Construction slack: values outside [0,1] by at most this much are clamped,
/// anything further out is rejected.
inline constexpr double kUnitSlack = 1e-12;

/// A truth value in [0, 1]. Validates on construction and converts back to
/// double implicitly, so arithmetic code can treat it as a checked double.
class UnitValue {
public:
    UnitValue() = default;

    UnitValue(double v) : v_(checked(v)) {}  // NOLINT(google-explicit-constructor)

    operator double() const { return v_; }  // NOLINT(google-explicit-constructor)

    double value() const { return v_; }

    static double checked(double v) {
        if (v < 0.0) {
            if (v < -kUnitSlack) throw std::invalid_argument("truth value out of [0,1]: " + std::to_string(v));
            return 0.0;
        }
        if (v > 1.0) {
            if (v > 1.0 + kUnitSlack) throw std::invalid_argument("truth value out of [0,1]: " + std::to_string(v));
            return 1.0;
        }
        return v;
    }

private:
    double v_ = 0.0;
};

}  // namespace flr
