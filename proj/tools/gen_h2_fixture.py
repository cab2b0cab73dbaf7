#!/usr/bin/env python3
# Copyright 2026 The cliffmap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the H2 / STO-3G electronic-structure Hamiltonian as fermionic JSON.

Spin orbitals use block ordering (all alpha orbitals, then all beta), and
the two-body part is 1/2 sum (pq|rs) a+_p a+_r a_s a_q over spin-conserving
index quadruples. Nuclear repulsion is not included.
"""
import argparse
import json

import numpy as np
from pyscf import ao2mo, gto, scf


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--bond", type=float, default=0.735, help="H-H distance in angstrom")
    parser.add_argument("--out", default="h2_sto3g.json")
    args = parser.parse_args()

    mol = gto.M(atom=f"H 0 0 0; H 0 0 {args.bond}", basis="sto-3g", unit="Angstrom")
    mf = scf.RHF(mol)
    mf.verbose = 0
    mf.kernel()
    c = mf.mo_coeff
    h1 = c.T @ mf.get_hcore() @ c
    n = h1.shape[0]
    eri = ao2mo.restore(1, ao2mo.kernel(mol, c), n)
    # Symmetrize so hermitian-conjugate pairs carry bit-identical coefficients.
    h1 = 0.5 * (h1 + h1.T)
    eri = 0.5 * (eri + eri.transpose(1, 0, 3, 2))

    nso = 2 * n
    terms = []

    def spatial(p):
        return p % n, p // n

    for p in range(nso):
        for q in range(nso):
            (ip, sp), (iq, sq) = spatial(p), spatial(q)
            if sp != sq:
                continue
            v = h1[ip, iq]
            if abs(v) > 1e-12:
                terms.append({"coeff": [float(v), 0.0], "ops": [["c", p], ["a", q]]})
    for p in range(nso):
        for q in range(nso):
            for r in range(nso):
                for s in range(nso):
                    if p == r or q == s:
                        continue
                    (ip, sp), (iq, sq) = spatial(p), spatial(q)
                    (ir, sr), (is_, ss) = spatial(r), spatial(s)
                    if sp != sq or sr != ss:
                        continue
                    v = 0.5 * eri[ip, iq, ir, is_]
                    if abs(v) > 1e-12:
                        terms.append({"coeff": [float(v), 0.0],
                                      "ops": [["c", p], ["c", r], ["a", s], ["a", q]]})
    doc = {"n_modes": nso, "hermitian": True, "terms": terms,
           "metadata": {"system": "H2", "basis": "sto-3g", "bond_angstrom": args.bond,
                        "mode_order": "block-spin", "hf_energy": float(mf.e_tot)}}
    with open(args.out, "w") as f:
        json.dump(doc, f, indent=1)
    print(f"wrote {len(terms)} terms on {nso} modes to {args.out}")


if __name__ == "__main__":
    main()
