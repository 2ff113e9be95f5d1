"""Independent ground truth: symmetric-group characters and tensor-product
multiplicities.

This module is deliberately self-contained — it shares no combinatorics with
the verifier modules, so agreement between the two routes is meaningful
evidence rather than a tautology.

Characters are computed by the border-strip recursion on beta-numbers (first
column hook lengths): removing a strip of length t from the diagram means
lowering one beta-number by t, with a sign given by the number of
beta-numbers jumped over.  The multiplicity of interest is then the exact
class-weighted triple product of characters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagrams import KronInstance, YoungDiagram, parse_young
from .errors import BoxCountMismatch, CapExceeded, InternalNonInteger

# Brute-force stretching beyond 12 boxes explodes; raise deliberately.
DEFAULT_ORACLE_CAP = 12


def partitions(n: int, max_part: int | None = None):
    """Yield all partitions of n as weakly decreasing tuples."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions(n - first, first):
            yield (first, *rest)


@dataclass(frozen=True)
class ConjugacyClass:
    """A cycle type with its centralizer order and class size."""

    cycle_type: YoungDiagram
    centralizer_order: int
    class_size: int


def centralizer_order(mu: tuple[int, ...]) -> int:
    """z_μ = Π_i i^{m_i} · m_i! over the part multiplicities m_i."""
    z = 1
    mult: dict[int, int] = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    for part, m_i in mult.items():
        z *= part**m_i * math.factorial(m_i)
    return z


def conjugacy_classes(k: int) -> list[ConjugacyClass]:
    factorial_k = math.factorial(k)
    out = []
    for mu in partitions(k):
        z = centralizer_order(mu)
        out.append(ConjugacyClass(YoungDiagram(mu), z, factorial_k // z))
    return out


def _beta(lam: tuple[int, ...]) -> tuple[int, ...]:
    r = len(lam)
    return tuple(lam[i] + r - 1 - i for i in range(r))


def _beta_to_partition(beta: tuple[int, ...]) -> tuple[int, ...]:
    r = len(beta)
    lam = [beta[i] - (r - 1 - i) for i in range(r)]
    return tuple(x for x in lam if x > 0)


@lru_cache(maxsize=None)
def _char_rec(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    strip, rest = mu[0], mu[1:]
    beta = _beta(lam)
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - strip
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = tuple(sorted((x for x in beta if x != b), reverse=True))
        new_beta = tuple(sorted((*new_beta, nb), reverse=True))
        value = _char_rec(_beta_to_partition(new_beta), rest)
        total += -value if height % 2 else value
    return total


def mn_character(lam: YoungDiagram, mu: YoungDiagram) -> int:
    """Irreducible character value χ_λ(μ) in S_k."""
    if lam.boxes != mu.boxes:
        raise BoxCountMismatch(
            f"{lam} has {lam.boxes} boxes but cycle type {mu} has {mu.boxes}"
        )
    return _char_rec(lam.rows, mu.rows)


def kron_coeff(
    lam_a: YoungDiagram, lam_b: YoungDiagram, lam_c: YoungDiagram
) -> int:
    """Exact multiplicity Σ_μ χ_{λA}(μ)·χ_{λB}(μ)·χ_{λC}(μ)/z_μ."""
    k = lam_a.boxes
    if lam_b.boxes != k or lam_c.boxes != k:
        raise BoxCountMismatch("the three diagrams must have equal box counts")
    total = Fraction(0)
    for cls in conjugacy_classes(k):
        mu = cls.cycle_type
        product = (
            mn_character(lam_a, mu)
            * mn_character(lam_b, mu)
            * mn_character(lam_c, mu)
        )
        total += Fraction(product, cls.centralizer_order)
    if total.denominator != 1 or total < 0:
        raise InternalNonInteger(f"multiplicity came out as {total}")
    return int(total)


def _stretched(lam: YoungDiagram, l: int) -> YoungDiagram:
    return parse_young([row * l for row in lam.rows])


def semigroup_member(
    inst: KronInstance, l_max: int, cap: int = DEFAULT_ORACLE_CAP
) -> int | None:
    """Smallest stretching factor l ≤ l_max with positive stretched
    multiplicity, or None (Unknown — absence of a small stretching proves
    nothing)."""
    if l_max * inst.k > cap:
        raise CapExceeded(
            f"stretching up to l={l_max} needs {l_max * inst.k} boxes, cap is {cap}"
        )
    for l in range(1, l_max + 1):
        g = kron_coeff(*(_stretched(lam, l) for lam in inst.diagrams))
        if g > 0:
            return l
    return None
