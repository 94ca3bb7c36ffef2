#!/usr/bin/env python3
"""Generates qubit Hamiltonian files for molecular hydrogen.

Minimal-basis (STO-3G) integrals are evaluated in closed form for s-type
Gaussians, the restricted Hartree-Fock orbitals follow from symmetry, and the
second-quantized Hamiltonian is mapped to four qubits with the Jordan-Wigner
transform (spin orbitals ordered g-up, g-down, u-up, u-down, so the reference
determinant is |1100>). The resulting Pauli coefficients are written one term
per line as `<coefficient> <pauli-string>`.

Self-checks: the Hartree-Fock energy at R = 1.4 bohr must reproduce the
textbook value (about -1.1167 hartree) and the reference-state expectation of
the assembled matrix must equal the SCF energy.

Usage: python3 scripts/gen_h2_hamiltonians.py [outdir]
"""

import math
import sys
from pathlib import Path

import numpy as np

BOHR_PER_ANGSTROM = 1.0 / 0.529177210903

# STO-3G hydrogen 1s contraction (zeta = 1.24)
ALPHAS = (3.42525091, 0.62391373, 0.16885540)
COEFFS = (0.15432897, 0.53532814, 0.44463454)


def boys0(t):
    if t < 1e-12:
        return 1.0 - t / 3.0
    return 0.5 * math.sqrt(math.pi / t) * math.erf(math.sqrt(t))


def prim_norm(a):
    return (2.0 * a / math.pi) ** 0.75


def overlap_prim(a, b, r2):
    return (math.pi / (a + b)) ** 1.5 * math.exp(-a * b / (a + b) * r2)


def kinetic_prim(a, b, r2):
    p = a * b / (a + b)
    return p * (3.0 - 2.0 * p * r2) * (math.pi / (a + b)) ** 1.5 * math.exp(-p * r2)


def nuclear_prim(a, b, ra, rb, rc):
    p = a + b
    r2 = np.dot(ra - rb, ra - rb)
    rp = (a * ra + b * rb) / p
    pc2 = np.dot(rp - rc, rp - rc)
    return -2.0 * math.pi / p * math.exp(-a * b / p * r2) * boys0(p * pc2)


def eri_prim(a, ra, b, rb, c, rc, d, rd):
    p = a + b
    q = c + d
    ab2 = np.dot(ra - rb, ra - rb)
    cd2 = np.dot(rc - rd, rc - rd)
    rp = (a * ra + b * rb) / p
    rq = (c * rc + d * rd) / q
    pq2 = np.dot(rp - rq, rp - rq)
    pref = 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))
    return pref * math.exp(-a * b / p * ab2 - c * d / q * cd2) * boys0(p * q / (p + q) * pq2)


def contracted(fn, centers, *extra):
    """Contracts a primitive integral over the STO-3G expansion."""
    total = 0.0
    idx = [range(3)] * len(centers)
    import itertools
    for combo in itertools.product(*idx):
        alphas = [ALPHAS[i] for i in combo]
        weight = 1.0
        for i, a in zip(combo, alphas):
            weight *= COEFFS[i] * prim_norm(a)
        args = []
        for a, r in zip(alphas, centers):
            args.extend([a, r])
        total += weight * fn(*args, *extra)
    return total


def ao_integrals(r_bohr):
    r1 = np.array([0.0, 0.0, 0.0])
    r2 = np.array([0.0, 0.0, r_bohr])
    centers = [r1, r2]

    s = np.zeros((2, 2))
    t = np.zeros((2, 2))
    v = np.zeros((2, 2))
    for i in range(2):
        for j in range(2):
            r2_ij = float(np.dot(centers[i] - centers[j], centers[i] - centers[j]))
            s[i, j] = contracted(lambda a, ra, b, rb: overlap_prim(a, b, float(np.dot(ra - rb, ra - rb))),
                                 [centers[i], centers[j]])
            t[i, j] = contracted(lambda a, ra, b, rb: kinetic_prim(a, b, float(np.dot(ra - rb, ra - rb))),
                                 [centers[i], centers[j]])
            for rc in centers:
                v[i, j] += contracted(lambda a, ra, b, rb, rcc=rc: nuclear_prim(a, b, ra, rb, rcc),
                                      [centers[i], centers[j]])
            del r2_ij

    eri = np.zeros((2, 2, 2, 2))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    eri[i, j, k, l] = contracted(
                        lambda a, ra, b, rb, c, rc, d, rd: eri_prim(a, ra, b, rb, c, rc, d, rd),
                        [centers[i], centers[j], centers[k], centers[l]])
    return s, t + v, eri


def mo_integrals(r_bohr):
    s, h_core, eri = ao_integrals(r_bohr)
    s12 = s[0, 1]
    # Symmetry-determined molecular orbitals: gerade and ungerade combinations.
    cg = 1.0 / math.sqrt(2.0 * (1.0 + s12))
    cu = 1.0 / math.sqrt(2.0 * (1.0 - s12))
    c = np.array([[cg, cu], [cg, -cu]])  # columns: g, u

    h_mo = c.T @ h_core @ c
    eri_mo = np.einsum("ip,jq,kr,ls,ijkl->pqrs", c, c, c, c, eri, optimize=True)

    e_nuc = 1.0 / r_bohr
    e_hf = 2.0 * h_mo[0, 0] + eri_mo[0, 0, 0, 0] + e_nuc
    return h_mo, eri_mo, e_nuc, e_hf


def jordan_wigner_matrices():
    """Annihilation operators for four spin orbitals, qubit 0 leftmost."""
    lower = np.array([[0.0, 1.0], [0.0, 0.0]])  # |1> -> |0>
    z = np.diag([1.0, -1.0])
    eye = np.eye(2)
    ops = []
    for p in range(4):
        factors = [z] * p + [lower] + [eye] * (3 - p)
        m = factors[0]
        for f in factors[1:]:
            m = np.kron(m, f)
        ops.append(m)
    return ops


def qubit_hamiltonian(r_angstrom):
    r_bohr = r_angstrom * BOHR_PER_ANGSTROM
    h_mo, eri_mo, e_nuc, e_hf = mo_integrals(r_bohr)

    a = jordan_wigner_matrices()
    adag = [m.conj().T for m in a]
    dim = 16
    h = e_nuc * np.eye(dim, dtype=complex)

    # spin orbital p -> (spatial p//2, spin p%2)
    for p in range(4):
        for q in range(4):
            if p % 2 != q % 2:
                continue
            h += h_mo[p // 2, q // 2] * (adag[p] @ a[q])
    for p in range(4):
        for q in range(4):
            for r in range(4):
                for s_ in range(4):
                    if p % 2 != q % 2 or r % 2 != s_ % 2:
                        continue
                    coeff = 0.5 * eri_mo[p // 2, q // 2, r // 2, s_ // 2]
                    h += coeff * (adag[p] @ adag[r] @ a[s_] @ a[q])

    assert np.allclose(h, h.conj().T), "hamiltonian must be hermitian"

    # Reference determinant |1100> sits at index 12.
    ref = np.zeros(dim)
    ref[12] = 1.0
    e_ref = float(np.real(ref @ h @ ref))
    assert abs(e_ref - e_hf) < 1e-10, f"reference energy {e_ref} != SCF {e_hf}"

    ground = float(np.min(np.linalg.eigvalsh(h)))
    return h, e_hf, ground


def pauli_decompose(h):
    paulis = {
        "I": np.eye(2, dtype=complex),
        "X": np.array([[0, 1], [1, 0]], dtype=complex),
        "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
        "Z": np.diag([1.0, -1.0]).astype(complex),
    }
    import itertools
    terms = []
    for combo in itertools.product("IXYZ", repeat=4):
        m = paulis[combo[0]]
        for ch in combo[1:]:
            m = np.kron(m, paulis[ch])
        coeff = np.trace(m @ h) / 16.0
        assert abs(coeff.imag) < 1e-10
        if abs(coeff.real) > 1e-10:
            terms.append((coeff.real, "".join(combo)))
    return terms


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data")
    outdir.mkdir(parents=True, exist_ok=True)

    # Pipeline self-check at the textbook geometry (1.4 bohr).
    _, _, _, e_hf_14 = mo_integrals(1.4)
    assert abs(e_hf_14 - (-1.1167)) < 5e-4, f"SCF check failed: {e_hf_14}"

    lengths = [0.5, 0.7, 0.7414, 0.9, 1.1, 1.3, 1.5, 1.7, 1.9, 2.1]
    for r in lengths:
        h, e_hf, ground = qubit_hamiltonian(r)
        terms = pauli_decompose(h)
        name = outdir / f"h2_sto3g_{r:.4f}.txt"
        with open(name, "w") as out:
            out.write(f"# H2, STO-3G, bond length {r:.4f} angstrom, Jordan-Wigner\n")
            out.write("# spin orbitals (g up, g down, u up, u down); reference |1100>\n")
            out.write(f"# generated by scripts/gen_h2_hamiltonians.py; "
                      f"E_HF = {e_hf:.10f} Ha, exact ground = {ground:.10f} Ha\n")
            for coeff, pauli in terms:
                out.write(f"{coeff:.16f} {pauli}\n")
        print(f"{name}: {len(terms)} terms, E_HF {e_hf:.6f}, ground {ground:.6f}")


if __name__ == "__main__":
    main()
