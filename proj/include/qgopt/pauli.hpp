// Copyright 2026 The qgopt Authors
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

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qgopt/state_vector.hpp"

namespace qgopt {

enum class PauliOp { I, X, Y, Z };

/// One weighted Pauli string, stored as X/Z bitmasks: qubit q carries X iff
/// x_mask bit q is set, Z iff z_mask bit q is set, Y iff both. Empty masks
/// are a scaled identity. Coefficients are real; sums stay Hermitian.
struct PauliString {
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    double coefficient = 1.0;

    static PauliString from_ops(
        std::initializer_list<std::pair<int, PauliOp>> ops, double coefficient);

    static PauliString x(int q, double c = 1.0);
    static PauliString y(int q, double c = 1.0);
    static PauliString z(int q, double c = 1.0);
    static PauliString xx(int a, int b, double c = 1.0);
    static PauliString yy(int a, int b, double c = 1.0);
    static PauliString zz(int a, int b, double c = 1.0);
    static PauliString identity(double c = 1.0);

    PauliOp op_at(int q) const;
    bool same_ops(const PauliString& other) const {
        return x_mask == other.x_mask && z_mask == other.z_mask;
    }
    /// Highest qubit touched, or -1 for the identity.
    int max_qubit() const;
};

/// True iff the strings commute: the number of qubits where both act with
/// different non-identity operators is even.
bool commutes(const PauliString& a, const PauliString& b);

/// Weighted Pauli sum plus a real constant. Terms with identical operator
/// content are merged on insertion; a merge that cancels to zero keeps the
/// (zero-coefficient) term so the operator structure stays visible.
struct Observable {
    std::vector<PauliString> terms;
    double constant = 0.0;

    void add_term(const PauliString& term);
    int max_qubit() const;
    /// Finds the term with the same operator content, or nullptr.
    const PauliString* find(const PauliString& like) const;
};

Observable make_observable(std::vector<PauliString> terms,
                           double constant = 0.0);

/// out := coefficient * (P|in>), overwriting out. in and out must be distinct.
void apply_pauli(const PauliString& term, const StateVector& in,
                 StateVector& out);

/// M|psi>, including the constant term.
StateVector apply_observable(const Observable& obs, const StateVector& psi);

/// <psi|M|psi> + constant. The imaginary residue must stay below 1e-10
/// (Hermiticity self-check); larger residues throw.
double expectation(const StateVector& psi, const Observable& obs);

}  // namespace qgopt
