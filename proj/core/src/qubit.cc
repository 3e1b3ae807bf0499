// Copyright 2026 The qperc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperc/qubit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qperc {

namespace {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

QubitState::QubitState(Complex c0, Complex c1) : c0_(c0), c1_(c1) {
    if (!is_finite(c0) || !is_finite(c1)) {
        throw std::invalid_argument("QubitState: amplitudes must be finite");
    }
    double norm = std::norm(c0) + std::norm(c1);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument("QubitState: squared norm " + std::to_string(norm) + " is not 1");
    }
}

QubitState QubitState::normalized(Complex c0, Complex c1) {
    double norm = std::sqrt(std::norm(c0) + std::norm(c1));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("QubitState::normalized: zero or non-finite vector");
    }
    return QubitState(c0 / norm, c1 / norm);
}

QubitState QubitState::one() {
    return QubitState(Complex{0.0}, Complex{1.0});
}

QubitState QubitState::plus() {
    const double h = std::numbers::sqrt2 / 2.0;
    return QubitState(Complex{h}, Complex{h});
}

double QubitState::prob_one() const {
    return std::clamp(std::norm(c1_), 0.0, 1.0);
}

QubitState QubitState::canonical() const {
    double a0 = std::abs(c0_);
    Complex phase;
    if (a0 > 0.0) {
        phase = std::conj(c0_) / a0;
    } else {
        double a1 = std::abs(c1_);
        phase = std::conj(c1_) / a1;
    }
    QubitState out = *this;
    out.c0_ = c0_ * phase;
    out.c1_ = c1_ * phase;
    // Pin the reference amplitude exactly onto the real axis.
    if (a0 > 0.0) {
        out.c0_ = Complex{std::abs(out.c0_), 0.0};
    } else {
        out.c1_ = Complex{std::abs(out.c1_), 0.0};
    }
    return out;
}

double phase_distance(const QubitState &a, const QubitState &b) {
    Complex overlap = std::conj(b.c0()) * a.c0() + std::conj(b.c1()) * a.c1();
    double mag = std::abs(overlap);
    Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0);
    return std::max(std::abs(a.c0() - phase * b.c0()), std::abs(a.c1() - phase * b.c1()));
}

Unitary2 Unitary2::operator*(const Unitary2 &rhs) const {
    const auto &a = m_;
    const auto &b = rhs.m_;
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

Unitary2 Unitary2::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

double Unitary2::unitarity_residual() const {
    for (const auto &z : m_) {
        if (!is_finite(z)) {
            return std::numeric_limits<double>::infinity();
        }
    }
    return (*this * adjoint()).distance(Unitary2::identity());
}

double Unitary2::distance(const Unitary2 &other) const {
    double d = 0.0;
    for (size_t k = 0; k < 4; k++) {
        d = std::max(d, std::abs(m_[k] - other.m_[k]));
    }
    return d;
}

Unitary2 pauli(PauliAxis axis) {
    const Complex i{0.0, 1.0};
    switch (axis) {
        case PauliAxis::kX:
            return {0.0, 1.0, 1.0, 0.0};
        case PauliAxis::kY:
            return {0.0, -i, i, 0.0};
        case PauliAxis::kZ:
            return {1.0, 0.0, 0.0, -1.0};
    }
    throw std::invalid_argument("pauli: unknown axis");
}

Unitary2 rotation_y(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation_y: angle must be finite");
    }
    double c = std::cos(theta / 2.0);
    double s = std::sin(theta / 2.0);
    return {c, -s, s, c};
}

Unitary2 hadamard() {
    const double h = std::numbers::sqrt2 / 2.0;
    return {h, h, h, -h};
}

QubitState apply(const Unitary2 &u, const QubitState &s) {
    if (!(u.unitarity_residual() <= kUnitaryTolerance)) {
        throw std::invalid_argument("apply: operator is not unitary");
    }
    return QubitState(u(0, 0) * s.c0() + u(0, 1) * s.c1(), u(1, 0) * s.c0() + u(1, 1) * s.c1());
}

Unitary2 compose(std::span<const Unitary2> ops) {
    Unitary2 total;
    for (const auto &op : ops) {
        if (!(op.unitarity_residual() <= kUnitaryTolerance)) {
            throw std::invalid_argument("compose: operator is not unitary");
        }
        total = op * total;
    }
    return total;
}

namespace {

// Amplitudes at or below this magnitude count as a pole (azimuth 0).
constexpr double kPoleTolerance = 1e-15;

}  // namespace

BlochAngles bloch_from_state(const QubitState &s) {
    QubitState c = s.canonical();
    double r0 = c.c0().real();
    double r1 = std::abs(c.c1());
    BlochAngles b;
    b.theta = 2.0 * std::atan2(r1, r0);
    if (r0 <= kPoleTolerance || r1 <= kPoleTolerance) {
        b.phi = 0.0;
        return b;
    }
    double phi = std::arg(c.c1());
    if (phi < 0.0) {
        phi += 2.0 * std::numbers::pi;
    }
    if (phi >= 2.0 * std::numbers::pi) {
        phi = 0.0;
    }
    b.phi = phi;
    return b;
}

QubitState state_from_bloch(const BlochAngles &b) {
    if (!(b.theta >= 0.0 && b.theta <= std::numbers::pi) || !(b.phi >= 0.0 && b.phi < 2.0 * std::numbers::pi)) {
        throw std::invalid_argument("state_from_bloch: angles out of range");
    }
    double half = b.theta / 2.0;
    return QubitState::normalized(Complex{std::cos(half)}, std::polar(std::sin(half), b.phi));
}

}  // namespace qperc
