// Copyright 2026 The cliffmap Authors
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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cliffmap {

/// A phase-tracked Pauli string on n qubits in symplectic form.
///
/// Qubit q carries the bit pair (x_q, z_q) with (0,0)=I, (1,0)=X, (0,1)=Z,
/// (1,1)=Y. The represented operator is i^phase_exp times the tensor product
/// of those factors. Qubit 0 is the leftmost character of the text form.
class PauliString {
   public:
    PauliString() = default;

    /// Identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits)
        : num_qubits_(num_qubits), xs_(word_count(num_qubits), 0), zs_(word_count(num_qubits), 0) {
    }

    /// Parses text like "XIZY", "-XX", "+iZ" or "-iY". The characters '_' and
    /// 'I' both denote identity.
    static PauliString from_str(std::string_view text) {
        uint8_t phase = 0;
        if (text.starts_with("+i")) {
            phase = 1;
            text.remove_prefix(2);
        } else if (text.starts_with("-i")) {
            phase = 3;
            text.remove_prefix(2);
        } else if (text.starts_with('+')) {
            text.remove_prefix(1);
        } else if (text.starts_with('-')) {
            phase = 2;
            text.remove_prefix(1);
        }
        PauliString result(text.size());
        result.phase_exp_ = phase;
        for (size_t q = 0; q < text.size(); ++q) {
            switch (text[q]) {
                case 'I':
                case '_':
                    break;
                case 'X':
                    result.set(q, true, false);
                    break;
                case 'Y':
                    result.set(q, true, true);
                    break;
                case 'Z':
                    result.set(q, false, true);
                    break;
                default:
                    throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[q]) + "'");
            }
        }
        return result;
    }

    /// Single-qubit Pauli `letter` on qubit `q`, identity elsewhere.
    static PauliString single(size_t num_qubits, size_t q, char letter) {
        if (letter != 'X' && letter != 'Y' && letter != 'Z') {
            throw std::invalid_argument("single-qubit Pauli must be X, Y or Z");
        }
        PauliString result(num_qubits);
        result.check_index(q);
        result.set(q, letter == 'X' || letter == 'Y', letter == 'Z' || letter == 'Y');
        return result;
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t num_words() const {
        return xs_.size();
    }
    uint8_t phase_exp() const {
        return phase_exp_;
    }
    void set_phase_exp(int k) {
        phase_exp_ = static_cast<uint8_t>(((k % 4) + 4) % 4);
    }
    void add_phase_exp(int k) {
        set_phase_exp(phase_exp_ + k);
    }

    bool x(size_t q) const {
        return (xs_[q / 64] >> (q % 64)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q / 64] >> (q % 64)) & 1;
    }
    void set(size_t q, bool x_bit, bool z_bit) {
        uint64_t mask = uint64_t{1} << (q % 64);
        xs_[q / 64] = x_bit ? (xs_[q / 64] | mask) : (xs_[q / 64] & ~mask);
        zs_[q / 64] = z_bit ? (zs_[q / 64] | mask) : (zs_[q / 64] & ~mask);
    }

    /// 'I', 'X', 'Y' or 'Z' at qubit q.
    char letter(size_t q) const {
        static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
        return kLetters[x(q) | (z(q) << 1)];
    }

    std::vector<uint64_t> &x_words() {
        return xs_;
    }
    std::vector<uint64_t> &z_words() {
        return zs_;
    }
    const std::vector<uint64_t> &x_words() const {
        return xs_;
    }
    const std::vector<uint64_t> &z_words() const {
        return zs_;
    }

    bool is_identity() const {
        for (size_t w = 0; w < xs_.size(); ++w) {
            if (xs_[w] | zs_[w]) {
                return false;
            }
        }
        return true;
    }

    /// Hermitian strings have a real global phase (+1 or -1).
    bool is_hermitian() const {
        return (phase_exp_ & 1) == 0;
    }

    /// Copy with the global phase reset to +1.
    PauliString stripped() const {
        PauliString result = *this;
        result.phase_exp_ = 0;
        return result;
    }

    /// Text form; the phase prefix is "", "+i", "-" or "-i" when included.
    std::string str(bool with_phase = true) const {
        static constexpr const char *kPrefix[4] = {"", "+i", "-", "-i"};
        std::string out = with_phase ? kPrefix[phase_exp_] : "";
        out.reserve(out.size() + num_qubits_);
        for (size_t q = 0; q < num_qubits_; ++q) {
            out.push_back(letter(q));
        }
        return out;
    }

    /// Equality of the bit pattern, ignoring phase.
    bool same_paulis(const PauliString &other) const {
        return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
    }

    bool operator==(const PauliString &other) const {
        return phase_exp_ == other.phase_exp_ && same_paulis(other);
    }

    /// Orders by qubit count, then bit pattern, then phase.
    bool operator<(const PauliString &other) const {
        if (num_qubits_ != other.num_qubits_) {
            return num_qubits_ < other.num_qubits_;
        }
        if (xs_ != other.xs_) {
            return xs_ < other.xs_;
        }
        if (zs_ != other.zs_) {
            return zs_ < other.zs_;
        }
        return phase_exp_ < other.phase_exp_;
    }

    size_t hash() const {
        uint64_t h = 0x9E3779B97F4A7C15ull ^ num_qubits_;
        for (size_t w = 0; w < xs_.size(); ++w) {
            h ^= xs_[w] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h ^= zs_[w] * 0xC2B2AE3D27D4EB4Full + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h ^ phase_exp_);
    }

    void check_index(size_t q) const {
        if (q >= num_qubits_) {
            throw std::out_of_range(
                "qubit index " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                " qubits");
        }
    }

   private:
    static size_t word_count(size_t n) {
        return (n + 63) / 64;
    }

    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    uint8_t phase_exp_ = 0;
};

struct PauliStringHash {
    size_t operator()(const PauliString &p) const {
        return p.hash();
    }
};

/// Number of non-identity factors.
inline size_t weight(const PauliString &p) {
    size_t total = 0;
    const auto &xs = p.x_words();
    const auto &zs = p.z_words();
    for (size_t w = 0; w < xs.size(); ++w) {
        total += std::popcount(xs[w] | zs[w]);
    }
    return total;
}

inline void check_same_size(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(
            "Pauli string length mismatch: " + std::to_string(p.num_qubits()) + " vs " +
            std::to_string(q.num_qubits()));
    }
}

/// Operator product p * q with exact phase.
inline PauliString multiply(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    PauliString r(p.num_qubits());
    int plus = 0;
    int minus = 0;
    for (size_t w = 0; w < p.num_words(); ++w) {
        uint64_t x1 = p.x_words()[w], z1 = p.z_words()[w];
        uint64_t x2 = q.x_words()[w], z2 = q.z_words()[w];
        uint64_t px = x1 & ~z1, py = x1 & z1, pz = ~x1 & z1;
        uint64_t qx = x2 & ~z2, qy = x2 & z2, qz = ~x2 & z2;
        // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
        plus += std::popcount((px & qy) | (py & qz) | (pz & qx));
        minus += std::popcount((py & qx) | (pz & qy) | (px & qz));
        r.x_words()[w] = x1 ^ x2;
        r.z_words()[w] = z1 ^ z2;
    }
    r.set_phase_exp(p.phase_exp() + q.phase_exp() + plus - minus);
    return r;
}

/// Qubits on which the single-qubit factors of p and q anticommute.
inline std::vector<size_t> anticommute_support(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    std::vector<size_t> out;
    for (size_t w = 0; w < p.num_words(); ++w) {
        uint64_t bits = (p.x_words()[w] & q.z_words()[w]) ^ (p.z_words()[w] & q.x_words()[w]);
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

/// Size of anticommute_support without materializing it.
inline size_t anticommute_count(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    size_t count = 0;
    for (size_t w = 0; w < p.num_words(); ++w) {
        count += std::popcount((p.x_words()[w] & q.z_words()[w]) ^ (p.z_words()[w] & q.x_words()[w]));
    }
    return count;
}

inline bool anticommutes(const PauliString &p, const PauliString &q) {
    return anticommute_count(p, q) % 2 == 1;
}

}  // namespace cliffmap

template <>
struct std::hash<cliffmap::PauliString> {
    size_t operator()(const cliffmap::PauliString &p) const {
        return p.hash();
    }
};
