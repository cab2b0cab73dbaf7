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
#include <stdexcept>
#include <vector>

#include "cliffmap/clifford.hpp"
#include "cliffmap/qubit_hamiltonian.hpp"

namespace cliffmap {

/// Phase-free working copy of a Hamiltonian's strings for the search loops,
/// stored qubit-major: for each qubit, one bit per term in an x plane and a
/// z plane. A gate unit only touches the planes of its two qubits, so a
/// proposal costs O(terms / 64).
class WeightTableau {
   public:
    explicit WeightTableau(const QubitHamiltonian &h)
        : n_(h.num_qubits()), terms_(h.size()), words_((h.size() + 63) / 64) {
        xs_.assign(n_ * words_, 0);
        zs_.assign(n_ * words_, 0);
        for (size_t i = 0; i < terms_; ++i) {
            const auto &p = h.terms()[i].pauli;
            for (size_t q = 0; q < n_; ++q) {
                uint64_t bit = uint64_t{1} << (i % 64);
                if (p.x(q)) {
                    xs_[q * words_ + i / 64] |= bit;
                }
                if (p.z(q)) {
                    zs_[q * words_ + i / 64] |= bit;
                }
            }
        }
        qubit_weight_.resize(n_);
        total_ = 0;
        for (size_t q = 0; q < n_; ++q) {
            qubit_weight_[q] = plane_weight(&xs_[q * words_], &zs_[q * words_]);
            total_ += qubit_weight_[q];
        }
        for (auto *buf : {&scratch_xc_, &scratch_zc_, &scratch_xt_, &scratch_zt_}) {
            buf->resize(words_);
        }
    }

    size_t num_qubits() const {
        return n_;
    }
    size_t num_terms() const {
        return terms_;
    }
    int64_t total_weight() const {
        return total_;
    }

    /// Total weight the Hamiltonian would have after conjugating by `unit`.
    /// The proposal is kept until the next propose() so accept() can commit it.
    int64_t propose(const GateUnit &unit) {
        uint32_t c = unit.control, t = unit.target;
        if (c >= n_ || t >= n_ || c == t) {
            throw std::out_of_range("gate unit qubits out of range");
        }
        uint64_t *xc = scratch_xc_.data(), *zc = scratch_zc_.data();
        uint64_t *xt = scratch_xt_.data(), *zt = scratch_zt_.data();
        const uint64_t *sxc = &xs_[c * words_], *szc = &zs_[c * words_];
        const uint64_t *sxt = &xs_[t * words_], *szt = &zs_[t * words_];
        int64_t wc = 0, wt = 0;
        for (size_t w = 0; w < words_; ++w) {
            uint64_t x0 = sxc[w], z0 = szc[w];
            if (unit.kind == GateUnit::Kind::CNOT_H) {
                std::swap(x0, z0);
            } else if (unit.kind == GateUnit::Kind::CNOT_S) {
                z0 ^= x0;
            }
            uint64_t x1 = sxt[w] ^ x0;
            uint64_t z1 = szt[w];
            z0 ^= z1;
            xc[w] = x0;
            zc[w] = z0;
            xt[w] = x1;
            zt[w] = z1;
            wc += std::popcount(x0 | z0);
            wt += std::popcount(x1 | z1);
        }
        pending_ = unit;
        pending_wc_ = wc;
        pending_wt_ = wt;
        has_pending_ = true;
        return total_ - qubit_weight_[c] - qubit_weight_[t] + wc + wt;
    }

    void accept() {
        if (!has_pending_) {
            throw std::logic_error("accept() without a pending proposal");
        }
        uint32_t c = pending_.control, t = pending_.target;
        std::copy(scratch_xc_.begin(), scratch_xc_.end(), xs_.begin() + c * words_);
        std::copy(scratch_zc_.begin(), scratch_zc_.end(), zs_.begin() + c * words_);
        std::copy(scratch_xt_.begin(), scratch_xt_.end(), xs_.begin() + t * words_);
        std::copy(scratch_zt_.begin(), scratch_zt_.end(), zs_.begin() + t * words_);
        total_ += pending_wc_ + pending_wt_ - qubit_weight_[c] - qubit_weight_[t];
        qubit_weight_[c] = pending_wc_;
        qubit_weight_[t] = pending_wt_;
        has_pending_ = false;
    }

    void apply(const GateUnit &unit) {
        propose(unit);
        accept();
    }

    /// Letter of term i on qubit q, for tests and debugging.
    char letter(size_t term, size_t q) const {
        bool x = (xs_[q * words_ + term / 64] >> (term % 64)) & 1;
        bool z = (zs_[q * words_ + term / 64] >> (term % 64)) & 1;
        static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
        return kLetters[x | (z << 1)];
    }

   private:
    int64_t plane_weight(const uint64_t *x, const uint64_t *z) const {
        int64_t w = 0;
        for (size_t i = 0; i < words_; ++i) {
            w += std::popcount(x[i] | z[i]);
        }
        return w;
    }

    size_t n_;
    size_t terms_;
    size_t words_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<int64_t> qubit_weight_;
    int64_t total_ = 0;

    std::vector<uint64_t> scratch_xc_, scratch_zc_, scratch_xt_, scratch_zt_;
    GateUnit pending_;
    int64_t pending_wc_ = 0;
    int64_t pending_wt_ = 0;
    bool has_pending_ = false;
};

}  // namespace cliffmap
