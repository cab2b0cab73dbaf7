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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cliffmap/clifford.hpp"
#include "cliffmap/pauli_string.hpp"

// Dense-matrix reference for small qubit counts. It shares no code path with
// the symplectic conjugation rules and is used to check them.
namespace cliffmap::dense {

using Complex = std::complex<double>;

struct Matrix {
    size_t dim = 0;
    std::vector<Complex> data;

    explicit Matrix(size_t d = 0) : dim(d), data(d * d) {
    }

    static Matrix identity(size_t d) {
        Matrix m(d);
        for (size_t i = 0; i < d; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    Complex &operator()(size_t r, size_t c) {
        return data[r * dim + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data[r * dim + c];
    }
};

inline Matrix operator*(const Matrix &a, const Matrix &b) {
    Matrix out(a.dim);
    for (size_t i = 0; i < a.dim; ++i) {
        for (size_t k = 0; k < a.dim; ++k) {
            Complex v = a(i, k);
            if (v == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < a.dim; ++j) {
                out(i, j) += v * b(k, j);
            }
        }
    }
    return out;
}

inline Matrix operator*(Complex s, Matrix m) {
    for (auto &v : m.data) {
        v *= s;
    }
    return m;
}

inline Matrix operator+(Matrix a, const Matrix &b) {
    for (size_t i = 0; i < a.data.size(); ++i) {
        a.data[i] += b.data[i];
    }
    return a;
}

inline Matrix adjoint(const Matrix &m) {
    Matrix out(m.dim);
    for (size_t i = 0; i < m.dim; ++i) {
        for (size_t j = 0; j < m.dim; ++j) {
            out(j, i) = std::conj(m(i, j));
        }
    }
    return out;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.dim * b.dim);
    for (size_t i = 0; i < a.dim; ++i) {
        for (size_t j = 0; j < a.dim; ++j) {
            for (size_t k = 0; k < b.dim; ++k) {
                for (size_t l = 0; l < b.dim; ++l) {
                    out(i * b.dim + k, j * b.dim + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

inline double max_abs_diff(const Matrix &a, const Matrix &b) {
    double worst = 0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
    }
    return worst;
}

inline Matrix single_qubit(char name) {
    const Complex i{0, 1};
    const double r = 1 / std::sqrt(2.0);
    Matrix m(2);
    switch (name) {
        case 'I':
            return Matrix::identity(2);
        case 'X':
            m(0, 1) = m(1, 0) = 1;
            return m;
        case 'Y':
            m(0, 1) = -i;
            m(1, 0) = i;
            return m;
        case 'Z':
            m(0, 0) = 1;
            m(1, 1) = -1;
            return m;
        case 'H':
            m(0, 0) = m(0, 1) = m(1, 0) = r;
            m(1, 1) = -r;
            return m;
        case 'S':
            m(0, 0) = 1;
            m(1, 1) = i;
            return m;
        case 'D':  // S^dagger
            m(0, 0) = 1;
            m(1, 1) = -i;
            return m;
    }
    throw std::invalid_argument("unknown single-qubit matrix");
}

/// Full matrix of a Pauli string; qubit 0 is the most significant tensor factor.
inline Matrix pauli_matrix(const PauliString &p) {
    Matrix m = Matrix::identity(1);
    for (size_t q = 0; q < p.num_qubits(); ++q) {
        m = kron(m, single_qubit(p.letter(q)));
    }
    static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPhases[p.phase_exp()] * m;
}

/// Full matrix of a gate acting on n qubits, built from basis-state action.
inline Matrix gate_matrix(const CliffordGate &g, size_t n) {
    size_t dim = size_t{1} << n;
    if (!g.is_two_qubit()) {
        char name = g.kind == GateKind::H ? 'H' : g.kind == GateKind::S ? 'S' : 'D';
        Matrix m = Matrix::identity(1);
        for (size_t q = 0; q < n; ++q) {
            m = kron(m, q == g.q0 ? single_qubit(name) : Matrix::identity(2));
        }
        return m;
    }
    Matrix m(dim);
    size_t cbit = size_t{1} << (n - 1 - g.q0);
    size_t tbit = size_t{1} << (n - 1 - g.q1);
    for (size_t basis = 0; basis < dim; ++basis) {
        size_t image = (basis & cbit) ? basis ^ tbit : basis;
        m(image, basis) = 1;
    }
    return m;
}

/// Finds the Pauli string (with phase) equal to `m`, if any.
inline bool decompose_pauli(const Matrix &m, size_t n, PauliString &out, double tol = 1e-9) {
    size_t total = size_t{1} << (2 * n);
    for (size_t code = 0; code < total; ++code) {
        PauliString p(n);
        for (size_t q = 0; q < n; ++q) {
            size_t two = (code >> (2 * q)) & 3;
            p.set(q, two & 1, two & 2);
        }
        Matrix base = pauli_matrix(p);
        // Overlap tr(P^dagger M) / 2^n is the coefficient if m is proportional to P.
        Complex overlap = 0;
        for (size_t i = 0; i < m.dim; ++i) {
            for (size_t k = 0; k < m.dim; ++k) {
                overlap += std::conj(base(k, i)) * m(k, i);
            }
        }
        overlap /= static_cast<double>(m.dim);
        if (std::abs(std::abs(overlap) - 1) > tol) {
            continue;
        }
        for (int k = 0; k < 4; ++k) {
            p.set_phase_exp(k);
            if (max_abs_diff(pauli_matrix(p), m) < tol) {
                out = p;
                return true;
            }
        }
    }
    return false;
}

/// g P g^dagger computed with dense matrices; the result is decomposed back
/// into a Pauli string.
inline PauliString conjugate_dense(const PauliString &p, std::span<const CliffordGate> gates) {
    size_t n = p.num_qubits();
    Matrix u = Matrix::identity(size_t{1} << n);
    for (const auto &g : gates) {
        u = gate_matrix(g, n) * u;
    }
    Matrix result = u * pauli_matrix(p) * adjoint(u);
    PauliString out(n);
    if (!decompose_pauli(result, n, out)) {
        throw std::runtime_error("conjugated matrix is not a Pauli string");
    }
    return out;
}

}  // namespace cliffmap::dense
