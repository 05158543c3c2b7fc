#pragma once

#include "im4/rational.hpp"

namespace im4 {

/// Dual number a + b*eps with eps^2 = 0; forward-mode derivative carrier.
template <typename T = Rational>
struct Dual {
    T value{};
    T derivative{};

    Dual() = default;
    Dual(T v) : value(std::move(v)) {}
    Dual(T v, T d) : value(std::move(v)), derivative(std::move(d)) {}

    Dual operator-() const { return {-value, -derivative}; }

    friend Dual operator+(const Dual& a, const Dual& b) {
        return {a.value + b.value, a.derivative + b.derivative};
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        return {a.value - b.value, a.derivative - b.derivative};
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return {a.value * b.value, a.value * b.derivative + a.derivative * b.value};
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        T inv = T(1) / b.value;
        T v = a.value * inv;
        return {v, (a.derivative - v * b.derivative) * inv};
    }

    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    Dual& operator/=(const Dual& o) { return *this = *this / o; }

    friend bool operator==(const Dual& a, const Dual& b) {
        return a.value == b.value && a.derivative == b.derivative;
    }
};

template <typename T>
Dual<T> dual_lift(T x, T seed) {
    return Dual<T>(std::move(x), std::move(seed));
}

inline Dual<Rational> dual_lift(const Rational& x, const Rational& seed) {
    return Dual<Rational>(x, seed);
}

} // namespace im4
