// Copyright 2026 The Stabforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace stabforge {

// Exact root of unity zeta^k with zeta = exp(i*pi/N), stored as the
// exponent k modulo 2N. Every phase produced by characters, quadratic
// characters and stabilizer cocycles of a group of order N lies in this
// cyclic group, so all phase algebra is integer arithmetic; floats only
// appear when a phase is finally evaluated.
class PhaseExp {
  public:
    PhaseExp() = default;

    PhaseExp(std::int64_t exponent, std::int64_t modulus) : mod_(modulus) {
        if (modulus <= 0 || modulus % 2 != 0)
            throw std::logic_error("PhaseExp modulus must be a positive even integer");
        k_ = ((exponent % mod_) + mod_) % mod_;
    }

    static PhaseExp one(std::int64_t modulus) { return PhaseExp(0, modulus); }
    static PhaseExp minus_one(std::int64_t modulus) { return PhaseExp(modulus / 2, modulus); }

    std::int64_t exponent() const { return k_; }
    std::int64_t modulus() const { return mod_; }
    bool is_one() const { return k_ == 0; }

    PhaseExp operator*(const PhaseExp& o) const {
        check_same(o);
        return PhaseExp(k_ + o.k_, mod_);
    }
    PhaseExp& operator*=(const PhaseExp& o) { return *this = *this * o; }

    PhaseExp conj() const { return PhaseExp(-k_, mod_); }
    PhaseExp inverse() const { return conj(); }

    PhaseExp pow(std::int64_t m) const {
        const std::int64_t r = ((m % mod_) + mod_) % mod_;
        return PhaseExp(k_ * r, mod_);
    }

    std::complex<double> value() const {
        // Quarter turns are exact; everything else goes through polar.
        if ((4 * k_) % mod_ == 0) {
            switch ((4 * k_ / mod_) % 4) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                default: return {0.0, -1.0};
            }
        }
        static constexpr double pi = 3.14159265358979323846264338327950288;
        return std::polar(1.0, 2.0 * pi * static_cast<double>(k_) / static_cast<double>(mod_));
    }

    friend bool operator==(const PhaseExp& a, const PhaseExp& b) {
        return a.mod_ == b.mod_ && a.k_ == b.k_;
    }
    friend bool operator!=(const PhaseExp& a, const PhaseExp& b) { return !(a == b); }

  private:
    void check_same(const PhaseExp& o) const {
        if (mod_ != o.mod_)
            throw std::logic_error("PhaseExp arithmetic requires a common root-of-unity order");
    }

    std::int64_t k_ = 0;
    std::int64_t mod_ = 2;  // 2N of the ambient group
};

}  // namespace stabforge
