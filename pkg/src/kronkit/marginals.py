"""Witness vectors of membership and their exact verifier.

A membership certificate is a nonzero vector with Gaussian-rational entries
on the m×m×m index grid.  Its three reduced density matrices are computed
exactly (including the normalization), and the certificate is accepted iff
the squared Frobenius distance to the target diagonal triple is at most the
squared acceptance threshold — an exact comparison of two rationals.

Floating point appears here only in diagnostics (spectra, PSD sanity check)
and in the truncation helper that converts numerically found vectors into
exact certificates.  The accept/reject decision itself never touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .diagrams import KronInstance
from .errors import (
    IndexOutOfRange,
    NotHermitian,
    ShapeMismatch,
    TruncatedToZero,
    ZeroVector,
)
from .ressayre import Decision, Reason, Verdict
from .scalars import GR_ZERO, GaussianRational
from .weights import weights

Entry = tuple[int, int, int]
Matrix = tuple[tuple[GaussianRational, ...], ...]

PSD_TOLERANCE = 1e-12


@dataclass(frozen=True)
class MembershipCertificate:
    """Sparse nonzero vector over the m×m×m grid; absent entries are zero."""

    m: int
    entries: dict[Entry, GaussianRational]

    def __post_init__(self) -> None:
        cleaned = {}
        for idx, value in self.entries.items():
            a, b, c = idx
            for component in (a, b, c):
                if not 1 <= component <= self.m:
                    raise IndexOutOfRange(f"index {idx} outside 1..{self.m}")
            if not value.is_zero():
                cleaned[(a, b, c)] = value
        if not cleaned:
            raise ZeroVector("certificate has no nonzero entry")
        object.__setattr__(self, "entries", cleaned)

    def scaled(self, factor: GaussianRational) -> "MembershipCertificate":
        return MembershipCertificate(
            self.m, {idx: v * factor for idx, v in self.entries.items()}
        )

    def norm2(self) -> Fraction:
        return sum((v.abs2() for v in self.entries.values()), Fraction(0))

    def to_complex_array(self) -> np.ndarray:
        vec = np.zeros(self.m**3, dtype=complex)
        for (a, b, c), v in self.entries.items():
            vec[(a - 1) * self.m * self.m + (b - 1) * self.m + (c - 1)] = (
                v.to_complex()
            )
        return vec

    def to_json(self) -> dict:
        ordered = sorted(self.entries.items())
        return {
            "m": self.m,
            "entries": [
                {"idx": list(idx), **value.to_json()} for idx, value in ordered
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MembershipCertificate":
        entries = {
            tuple(int(v) for v in item["idx"]): GaussianRational.from_json(item)
            for item in obj["entries"]
        }
        return cls(int(obj["m"]), entries)


@dataclass(frozen=True)
class DensityTriple:
    """Exact reduced density matrices; Hermitian with unit trace by construction."""

    rho_a: Matrix
    rho_b: Matrix
    rho_c: Matrix

    @property
    def m(self) -> int:
        return len(self.rho_a)

    @property
    def matrices(self) -> tuple[Matrix, Matrix, Matrix]:
        return (self.rho_a, self.rho_b, self.rho_c)

    def to_numpy(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return tuple(
            np.array([[v.to_complex() for v in row] for row in mat])
            for mat in self.matrices
        )


def _gram(
    cert: MembershipCertificate, axis: int, norm2: Fraction
) -> Matrix:
    """One reduced density matrix: the Gram matrix along one tensor leg."""
    m = cert.m
    inv = Fraction(1) / norm2
    # group entries by the two traced-out indices
    buckets: dict[tuple[int, int], list[tuple[int, GaussianRational]]] = {}
    for idx, value in cert.entries.items():
        kept = idx[axis]
        traced = tuple(v for pos, v in enumerate(idx) if pos != axis)
        buckets.setdefault(traced, []).append((kept, value))
    rows = [[GR_ZERO for _ in range(m)] for _ in range(m)]
    for group in buckets.values():
        for a, va in group:
            for ap, vap in group:
                rows[a - 1][ap - 1] = rows[a - 1][ap - 1] + va * vap.conjugate()
    return tuple(
        tuple(entry.scale(inv) for entry in row) for row in rows
    )


def reduced_densities(
    cert: MembershipCertificate, check_psd: bool = True
) -> DensityTriple:
    """Exact normalized reduced density matrices of the certificate vector."""
    norm2 = cert.norm2()
    if norm2 == 0:
        raise ZeroVector("certificate vector has zero norm")
    triple = DensityTriple(*(_gram(cert, axis, norm2) for axis in range(3)))
    if check_psd:
        for rho in triple.to_numpy():
            eigs = np.linalg.eigvalsh(rho)
            if eigs.min() < -PSD_TOLERANCE:
                raise AssertionError(
                    "reduced density lost positive semidefiniteness "
                    f"(min eigenvalue {eigs.min():.3e})"
                )
    return triple


def accept_threshold2(m: int, k: int) -> Fraction:
    """Exact squared acceptance threshold (1/(2k(4m)^{4m}))²."""
    denom = 2 * k * (4 * m) ** (4 * m)
    return Fraction(1, denom * denom)


def frobenius_gap2(rho: DensityTriple, inst: KronInstance) -> Fraction:
    """Exact squared Frobenius distance to the padded diagonal targets."""
    if rho.m != inst.m:
        raise ShapeMismatch(f"density rank {rho.m} vs instance m={inst.m}")
    total = Fraction(0)
    for mat, lam in zip(rho.matrices, inst.padded_rows()):
        for r in range(inst.m):
            for s in range(inst.m):
                entry = mat[r][s]
                re = entry.re - Fraction(lam[r], inst.k) if r == s else entry.re
                total += re * re + entry.im * entry.im
    return total


def verify_membership(inst: KronInstance, cert: MembershipCertificate) -> Verdict:
    """Exact accept/reject: squared gap against squared threshold."""
    if cert.m != inst.m:
        raise ShapeMismatch(
            f"certificate rank {cert.m} does not match instance m={inst.m}"
        )
    gap2 = frobenius_gap2(reduced_densities(cert), inst)
    if gap2 <= accept_threshold2(inst.m, inst.k):
        return Verdict(Decision.ACCEPT, Reason.IN_THRESHOLD)
    return Verdict(Decision.REJECT, Reason.OUT_OF_THRESHOLD)


def required_bits(m: int, k: int) -> int:
    """Bits of truncation precision that guarantee acceptance of exact points.

    Smallest even b with 5·√3·m^{3/4}·2^{−b/2} ≤ 1/(2k(4m)^{4m}); evenness
    keeps b/2 integral.  The comparison is done exactly by raising both sides
    to the fourth power: 16^{b/2} ≥ 5625·m³·(2k)⁴·(4m)^{16m}.
    """
    target = 5625 * m**3 * (2 * k) ** 4 * (4 * m) ** (16 * m)
    bits = (target - 1).bit_length()  # smallest e with 2^e ≥ target
    half = -(-bits // 4)  # smallest t with 16^t ≥ target
    return 2 * half


def truncate(v, b: int) -> MembershipCertificate:
    """Exact b-bit truncation (toward zero) of a float complex vector.

    ``v`` is indexed in the canonical lexicographic order of (a,b,c); its
    length determines m.  Resulting entries are rationals with denominator
    dividing 2^b.
    """
    vec = np.asarray(v, dtype=complex).ravel()
    m = round(len(vec) ** (1 / 3))
    if m**3 != len(vec):
        raise ShapeMismatch(f"vector length {len(vec)} is not a cube")
    scale = 1 << b
    entries: dict[Entry, GaussianRational] = {}
    for w, value in zip(weights(m), vec):
        re = Fraction(math.trunc(value.real * scale), scale)
        im = Fraction(math.trunc(value.imag * scale), scale)
        if re or im:
            entries[w.as_tuple()] = GaussianRational(re, im)
    if not entries:
        raise TruncatedToZero(f"no entry survived truncation at {b} bits")
    return MembershipCertificate(m, entries)


def sorted_spectrum(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues of a float Hermitian matrix in non-increasing order."""
    rho = np.asarray(rho, dtype=complex)
    if np.abs(rho - rho.conj().T).max() > 1e-10:
        raise NotHermitian("matrix is not Hermitian within 1e-10")
    return np.linalg.eigvalsh(rho)[::-1]
