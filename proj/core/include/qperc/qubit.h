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

#ifndef QPERC_QUBIT_H
#define QPERC_QUBIT_H

#include <array>
#include <complex>
#include <span>

namespace qperc {

using Complex = std::complex<double>;

/// Residual above which an operator handed to the public API is rejected.
inline constexpr double kUnitaryTolerance = 1e-9;
/// Normalization slack accepted when a state is constructed from amplitudes.
inline constexpr double kNormTolerance = 1e-9;

/// Pure single-qubit state c0|0> + c1|1>.
///
/// Always normalized. No global phase is fixed on construction; use
/// `canonical()` when a representative is needed for comparison.
class QubitState {
   public:
    /// |0>.
    constexpr QubitState() = default;

    /// Throws std::invalid_argument if the amplitudes are not finite or their
    /// squared norm differs from 1 by more than kNormTolerance.
    QubitState(Complex c0, Complex c1);

    /// Scales (c0, c1) onto the unit sphere. Throws if both are zero.
    static QubitState normalized(Complex c0, Complex c1);

    static QubitState zero() { return {}; }
    static QubitState one();
    static QubitState plus();

    Complex c0() const { return c0_; }
    Complex c1() const { return c1_; }

    /// Born probability of measuring |1>, clamped to [0, 1].
    double prob_one() const;

    /// Global phase representative with c0 real and >= 0 (c1 real and >= 0
    /// when c0 vanishes).
    QubitState canonical() const;

    bool operator==(const QubitState &) const = default;

   private:
    Complex c0_{1.0, 0.0};
    Complex c1_{0.0, 0.0};
};

/// Max entrywise distance between `a` and `b` after aligning the global phase
/// of `b` to `a`.
double phase_distance(const QubitState &a, const QubitState &b);

/// Polar angle theta in [0, pi] and azimuth phi in [0, 2 pi).
struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
};

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
class Unitary2 {
   public:
    constexpr Unitary2() : m_{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}} {}
    constexpr Unitary2(Complex m00, Complex m01, Complex m10, Complex m11) : m_{m00, m01, m10, m11} {}

    static constexpr Unitary2 identity() { return {}; }

    Complex operator()(size_t row, size_t col) const { return m_[2 * row + col]; }
    const std::array<Complex, 4> &entries() const { return m_; }

    Unitary2 operator*(const Unitary2 &rhs) const;
    Unitary2 adjoint() const;

    /// Max entrywise |U U^dagger - I|.
    double unitarity_residual() const;

    /// Max entrywise |A - B|.
    double distance(const Unitary2 &other) const;

    bool operator==(const Unitary2 &) const = default;

   private:
    std::array<Complex, 4> m_;
};

enum class PauliAxis { kX, kY, kZ };

Unitary2 pauli(PauliAxis axis);

/// Closed form of exp(-i theta sigma_y / 2):
/// [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
Unitary2 rotation_y(double theta);

Unitary2 hadamard();

/// Returns u * s. Throws std::invalid_argument if u's unitarity residual
/// exceeds kUnitaryTolerance.
QubitState apply(const Unitary2 &u, const QubitState &s);

/// Product of `ops` applied in list order: ops.back() * ... * ops.front().
/// An empty list yields the identity.
Unitary2 compose(std::span<const Unitary2> ops);

BlochAngles bloch_from_state(const QubitState &s);
QubitState state_from_bloch(const BlochAngles &b);

}  // namespace qperc

#endif
