"""Desk-scale certificate generation.

Four generators live here:

* ``enumerate_ressayre`` — complete hyperplane-certificate discovery for
  small m, by iterating over affinely independent weight subsets and solving
  the accompanying integer linear system exactly;
* ``reduce_irredundant`` — removal of implied inequalities by exact rational
  linear programming;
* ``search_witness`` — numerically guided construction of membership
  witnesses, gated by the exact verifier (only verified certificates are
  ever returned);
* ``sample_spectra`` — seeded Monte-Carlo spectra for containment checks.

Floats appear only in the witness search and the sampler; everything feeding
a verifier decision is exact.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, isqrt

import numpy as np

from .diagrams import KronInstance
from .errors import BudgetExceeded, TruncatedToZero
from .exactlp import solve_lp
from .intlinalg import kernel_vector_if_unique
from .marginals import (
    MembershipCertificate,
    required_bits,
    truncate,
    verify_membership,
)
from .ressayre import (
    RessayreCertificate,
    build_det_matrix,
    check_admissible,
    check_trace,
    eval_determinant,
    siegel_bound,
)
from .scalars import GaussianRational
from .weights import SUBSYSTEMS, HyperplaneCandidate, weights

DEFAULT_SUBSET_BUDGET = 400_000
DEFAULT_ENUM_CAP_M = 3
_BATCH = 8192


def find_point(
    h: HyperplaneCandidate, m: int, seed: int = 0, trials: int = 32
) -> tuple[int, ...] | None:
    """Seeded search for an evaluation point with nonvanishing determinant.

    Points are drawn uniformly from {0,…,m³} per coordinate; the zero-set
    density bound makes each trial succeed with probability ≥ 1 − n/(m³+1).
    Returns None (NotFound) after ``trials`` failures.
    """
    matrix = build_det_matrix(h, m)  # NotSquare if the count condition fails
    if matrix.n == 0:
        return (0,) * matrix.n_slots  # determinant is identically 1
    rng = random.Random(seed)
    hi = m**3
    for _ in range(trials):
        p = tuple(rng.randint(0, hi) for _ in range(matrix.n_slots))
        if eval_determinant(matrix, p) != 0:
            return p
    return None


@dataclass(frozen=True)
class RessayreElement:
    """A verified hyperplane certificate with a working evaluation point."""

    h: HyperplaneCandidate
    witness_point: tuple[int, ...]
    primitive: bool

    def __post_init__(self) -> None:
        bound = siegel_bound(self.h.m)
        coords = [v for block in self.h.blocks for v in block] + [self.h.z]
        if max(abs(v) for v in coords) > bound:
            raise AssertionError("element exceeds the search-space bound")

    def certificate(self) -> RessayreCertificate:
        return RessayreCertificate(self.h, self.witness_point)

    def to_json(self) -> dict:
        return self.certificate().to_json()

    @classmethod
    def from_json(cls, obj: dict) -> "RessayreElement":
        cert = RessayreCertificate.from_json(obj)
        return cls(cert.h, cert.p, _is_primitive(cert.h))


def _is_primitive(h: HyperplaneCandidate) -> bool:
    from math import gcd

    g = 0
    for block in h.blocks:
        for v in block:
            g = gcd(g, v)
    g = gcd(g, h.z)
    return g == 1


def chamber_inequalities(m: int) -> tuple[HyperplaneCandidate, ...]:
    """The trivial inequalities r_{X,i} ≥ r_{X,i+1}, as r·H ≥ 0 candidates."""
    out = []
    for block_idx in range(3):
        for i in range(m - 1):
            vec = [0] * m
            vec[i] = 1
            vec[i + 1] = -1
            blocks = [(0,) * m, (0,) * m, (0,) * m]
            blocks[block_idx] = tuple(vec)
            out.append(HyperplaneCandidate(*blocks, 0))
    return tuple(out)


@dataclass(frozen=True)
class FacetSystem:
    m: int
    nontrivial: tuple[RessayreElement, ...]
    chamber: tuple[HyperplaneCandidate, ...]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "nontrivial": [e.to_json() for e in self.nontrivial],
            "chamber": {
                "inequalities": [
                    {"H": [list(b) for b in h.blocks], "z": h.z}
                    for h in self.chamber
                ],
                "equalities": [
                    {"block": tag, "sum": 1} for tag in SUBSYSTEMS
                ],
            },
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FacetSystem":
        m = int(obj["m"])
        elements = tuple(
            RessayreElement.from_json(e) for e in obj["nontrivial"]
        )
        return cls(m, elements, chamber_inequalities(m))


def _canonical_sign(vec: list[int]) -> tuple[int, ...]:
    for v in vec:
        if v != 0:
            return tuple(vec) if v > 0 else tuple(-x for x in vec)
    return tuple(vec)


def _solve_batch(
    subsets: list[tuple[int, ...]],
    weight_rows: list[list[int]],
    trace_rows: list[list[int]],
) -> list[tuple[int, ...]]:
    """Kernel-solve a batch of weight subsets; unique candidates in order."""
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    for subset in subsets:
        mat = [weight_rows[i] for i in subset] + trace_rows
        v = kernel_vector_if_unique(mat)
        if v is None:
            continue
        key = _canonical_sign(v)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def _resolve_threads(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("KRONKIT_THREADS", "").strip()
    return max(1, int(env)) if env else 1


def enumerate_ressayre(
    m: int,
    budget: int = DEFAULT_SUBSET_BUDGET,
    seed: int = 0,
    trials: int = 64,
    threads: int | None = None,
) -> FacetSystem:
    """Complete enumeration of hyperplane certificates at rank m.

    Every admissible level hyperplane is affinely spanned by 3(m−1) of the
    m³ weights, so iterating over affinely independent subsets and solving
    the exact linear system (weight incidences plus blockwise tracelessness)
    finds every candidate (H,z) up to scale.  Both orientations then run the
    full verification pipeline; survivors are returned with their evaluation
    points.  Output order is deterministic regardless of thread count.
    """
    chamber = chamber_inequalities(m)
    if m == 1:
        return FacetSystem(1, (), chamber)
    subset_size = 3 * (m - 1)
    total = comb(m**3, subset_size)
    if total > budget:
        raise BudgetExceeded(
            f"{total} subsets at m={m} exceed the budget of {budget}"
        )
    all_weights = weights(m)
    weight_rows = [list(w.vector(m)) + [-1] for w in all_weights]
    trace_rows = []
    for block_idx in range(3):
        row = [0] * (3 * m + 1)
        for i in range(m):
            row[block_idx * m + i] = 1
        trace_rows.append(row)

    subset_iter = combinations(range(m**3), subset_size)
    batches: list[list[tuple[int, ...]]] = []
    while True:
        batch = []
        for _ in range(_BATCH):
            nxt = next(subset_iter, None)
            if nxt is None:
                break
            batch.append(nxt)
        if not batch:
            break
        batches.append(batch)

    n_threads = _resolve_threads(threads)
    if n_threads > 1 and len(batches) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            results = list(
                pool.map(
                    lambda b: _solve_batch(b, weight_rows, trace_rows), batches
                )
            )
    else:
        results = [_solve_batch(b, weight_rows, trace_rows) for b in batches]

    seen: set[tuple[int, ...]] = set()
    elements: list[RessayreElement] = []
    for batch_result in results:
        for key in batch_result:
            if key in seen:
                continue
            seen.add(key)
            blocks = (key[:m], key[m : 2 * m], key[2 * m : 3 * m])
            base = HyperplaneCandidate(*blocks, key[3 * m])
            for h in (base, base.negated()):
                if not check_admissible(h, m):
                    continue
                if not check_trace(h, m):
                    continue
                p = find_point(h, m, seed=seed, trials=trials)
                if p is None:
                    continue
                elements.append(RessayreElement(h, p, True))
    return FacetSystem(m, tuple(elements), chamber)


def _lp_rows(system: list[HyperplaneCandidate], m: int):
    """Constraints r·H ≥ z rewritten as −H·r ≤ −z for the LP solver."""
    a_ub, b_ub = [], []
    for h in system:
        flat = [v for block in h.blocks for v in block]
        a_ub.append([Fraction(-v) for v in flat])
        b_ub.append(Fraction(-h.z))
    return a_ub, b_ub


def reduce_irredundant(fs: FacetSystem, m: int | None = None) -> FacetSystem:
    """Drop every inequality implied by the rest plus the chamber.

    An element is kept iff some rational point satisfies all the other
    constraints while strictly violating it — decided by exact LP
    (minimize r·H over the others; redundant iff the minimum exists
    and is ≥ z).
    """
    m = fs.m if m is None else m
    a_eq, b_eq = [], []
    for block_idx in range(3):
        row = [Fraction(0)] * (3 * m)
        for i in range(m):
            row[block_idx * m + i] = Fraction(1)
        a_eq.append(row)
        b_eq.append(Fraction(1))

    active = list(fs.nontrivial)
    for element in list(active):
        others = [e for e in active if e is not element]
        system = [e.h for e in others] + list(fs.chamber)
        a_ub, b_ub = _lp_rows(system, m)
        objective = [
            Fraction(v) for block in element.h.blocks for v in block
        ]
        result = solve_lp(objective, a_ub, b_ub, a_eq, b_eq)
        if result.status == "optimal" and result.value >= element.h.z:
            active.remove(element)
    return FacetSystem(fs.m, tuple(active), fs.chamber)


# ---------------------------------------------------------------------------
# membership witnesses


def _dyadic_sqrt(q: Fraction, bits: int) -> Fraction:
    """Largest multiple of 2^−bits whose square is ≤ q (exact when possible)."""
    if q == 0:
        return Fraction(0)
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    scale = 1 << bits
    return Fraction(isqrt(num * scale * scale // den), scale)


def _diagonal_ansatz(inst: KronInstance, bits: int) -> MembershipCertificate | None:
    """Exact rank-2 construction with identically diagonal marginals.

    Four amplitudes on the parity-even positions give marginals
    diag(x+y, z+w), diag(x+z, y+w), diag(x+w, y+z) for squared magnitudes
    x,y,z,w — solvable whenever the target spectra satisfy the triangle-type
    inequalities, i.e. on the whole polytope at rank 2.
    """
    (a1, _), (b1, _), (c1, _) = (
        (Fraction(vec[0], inst.k), Fraction(vec[1], inst.k))
        for vec in inst.padded_rows()
    )
    x = (a1 + b1 + c1 - 1) / 2
    squares = {
        (1, 1, 1): x,
        (1, 2, 2): a1 - x,
        (2, 1, 2): b1 - x,
        (2, 2, 1): c1 - x,
    }
    if any(q < 0 for q in squares.values()):
        return None
    entries = {}
    for idx, q in squares.items():
        amp = _dyadic_sqrt(q, bits)
        if amp:
            entries[idx] = GaussianRational(amp, Fraction(0))
    return MembershipCertificate(inst.m, entries)


def _marginal(psi: np.ndarray, axis: int) -> np.ndarray:
    specs = [("abc,dbc->ad"), ("abc,adc->bd"), ("abc,abd->cd")]
    return np.einsum(specs[axis], psi, psi.conj())


def _apply_leg(psi: np.ndarray, mat: np.ndarray, axis: int) -> np.ndarray:
    return np.moveaxis(
        np.tensordot(mat, psi, axes=([1], [axis])), 0, axis
    )


def _scaling_pass(psi: np.ndarray, targets: list[np.ndarray]) -> np.ndarray:
    """One alternating pass steering each marginal toward its target."""
    for axis in range(3):
        rho = _marginal(psi, axis)
        vals, vecs = np.linalg.eigh(rho)
        vals, vecs = vals[::-1], vecs[:, ::-1]  # non-increasing, aligned
        factors = np.sqrt(targets[axis] / np.maximum(vals, 1e-30))
        # rotate the eigenbasis onto the standard basis, then rescale there
        mat = np.diag(factors) @ vecs.conj().T
        psi = _apply_leg(psi, mat, axis)
        psi = psi / np.linalg.norm(psi)
    return psi


def search_witness(
    inst: KronInstance, seed: int = 0, max_iters: int = 400
) -> MembershipCertificate | None:
    """Find a certificate that passes the exact membership verifier.

    Heuristic with an exact gate: candidate vectors come from an analytic
    construction (rank ≤ 2) or alternating marginal-steering iterations from
    seeded random starts; a candidate is returned only after truncation to
    required_bits and acceptance by verify_membership.
    """
    bits = required_bits(inst.m, inst.k)
    if inst.m == 1:
        cert = MembershipCertificate(
            1, {(1, 1, 1): GaussianRational(Fraction(1), Fraction(0))}
        )
        return cert if verify_membership(inst, cert).accepted else None
    if inst.m == 2:
        cert = _diagonal_ansatz(inst, bits)
        if cert is not None and verify_membership(inst, cert).accepted:
            return cert
    # seeded numeric route for general rank (and as fallback)
    rng = np.random.default_rng(seed)
    m = inst.m
    targets = [
        np.array([float(Fraction(v, inst.k)) for v in vec])
        for vec in inst.padded_rows()
    ]
    for _ in range(8):
        psi = rng.standard_normal((m, m, m)) + 1j * rng.standard_normal((m, m, m))
        psi = psi / np.linalg.norm(psi)
        for _ in range(max_iters):
            psi = _scaling_pass(psi, targets)
            gap2 = sum(
                float(
                    (np.abs(_marginal(psi, axis) - np.diag(targets[axis])) ** 2).sum()
                )
                for axis in range(3)
            )
            if gap2 < 1e-28:
                break
        try:
            cert = truncate(psi.ravel(), bits)
        except TruncatedToZero:
            continue
        if verify_membership(inst, cert).accepted:
            return cert
    return None


def sample_spectra(
    m: int, n: int, seed: int = 0
) -> list[tuple[tuple[float, ...], ...]]:
    """n spectra triples of seeded Gaussian random vectors, non-increasing."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        psi = rng.standard_normal((m, m, m)) + 1j * rng.standard_normal((m, m, m))
        psi = psi / np.linalg.norm(psi)
        triple = tuple(
            tuple(np.linalg.eigvalsh(_marginal(psi, axis))[::-1].tolist())
            for axis in range(3)
        )
        out.append(triple)
    return out


def spectra_csv(samples: list[tuple[tuple[float, ...], ...]]) -> str:
    """CSV serialization: one row of 3m floats per sample."""
    lines = []
    for triple in samples:
        flat = [x for spectrum in triple for x in spectrum]
        lines.append(",".join(repr(x) for x in flat))
    return "\n".join(lines) + "\n"
