#pragma once

#include "moyal/coefficient.hpp"

namespace moyal {

/// Ordering parameter of an s-parametrized construction: either one of the
/// registered formal symbols (s, sp) or an exact numeric value. Internally a
/// Coefficient so that derived quantities (-s, s+/-) stay in the ring.
class OrderParameter {
public:
    static OrderParameter formal(RegistryPtr reg, const std::string& name = "s") {
        return OrderParameter(Coefficient::parameter(std::move(reg), name));
    }
    static OrderParameter numeric(RegistryPtr reg, const GaussianRational& value) {
        return OrderParameter(Coefficient::constant(std::move(reg), value));
    }
    static OrderParameter of(Coefficient value) { return OrderParameter(std::move(value)); }

    const Coefficient& coeff() const { return value_; }
    const RegistryPtr& registry() const { return value_.registry(); }

    bool is_numeric() const { return value_.is_constant(); }
    GaussianRational numeric_value() const { return value_.constant_value(); }

    OrderParameter negated() const { return OrderParameter(-value_); }
    /// Complex conjugate; flips i on numeric values, fixes formal symbols.
    OrderParameter conjugated() const { return OrderParameter(value_.conjugate()); }

    /// s+ = hbar(1+s)/2.
    Coefficient splus() const { return half_hbar_times(true); }
    /// s- = hbar(1-s)/2.
    Coefficient sminus() const { return half_hbar_times(false); }

    friend bool operator==(const OrderParameter& a, const OrderParameter& b) {
        return a.value_ == b.value_;
    }

private:
    explicit OrderParameter(Coefficient value) : value_(std::move(value)) {}

    Coefficient half_hbar_times(bool plus) const {
        const auto& reg = value_.registry();
        Coefficient one = Coefficient::one(reg);
        Coefficient hbar = Coefficient::parameter(reg, "hbar");
        Coefficient inner = plus ? one + value_ : one - value_;
        return (hbar * inner).scaled(GaussianRational(1, 2));
    }

    Coefficient value_;
};

}  // namespace moyal
