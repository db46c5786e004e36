"""Chern-class algebra of formal bundles via the splitting principle.

A :class:`FormalBundle` is a rank together with Chern classes ``c_1..c_t``
living in a truncated graded coefficient ring (see :mod:`fanocalc.rings`).
Whitney sums, duals and line twists follow the usual closed formulas.
Symmetric and exterior powers go through universal integer polynomials:
apply the functor to formal Chern roots ``x_1..x_r``, rewrite the resulting
symmetric functions in the elementary symmetric polynomials ``e_1..e_r``
(Gauss's algorithm), and substitute ``e_i -> c_i``.  Every coefficient is an
exact integer; no division ever occurs.  The universal polynomials are
memoized per (functor, rank, power, truncation degree), which is safe under
concurrent use because the computation is pure and idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

from .rings import GradedRing


@dataclass(frozen=True)
class FormalBundle:
    """A rank and a list of Chern classes ``c_1..c_t`` over a graded ring.

    Missing entries (``t < rank``) are zero; trailing zero classes are
    stripped so equal bundles compare equal.
    """

    ring: GradedRing
    rank: int
    chern: tuple

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        cs = list(self.chern)
        while cs and not cs[-1]:
            cs.pop()
        if len(cs) > min(self.rank, self.ring.truncation):
            raise ValueError("more Chern classes than rank or truncation allows")
        for i, c in enumerate(cs):
            if c and self.ring.degree(c) != i + 1:
                raise ValueError(f"c_{i + 1} is not homogeneous of degree {i + 1}")
        object.__setattr__(self, "chern", tuple(cs))

    def chern_class(self, i: int):
        return chern_class(self, i)


def trivial_bundle(ring: GradedRing, rank: int = 1) -> FormalBundle:
    return FormalBundle(ring, rank, ())


def line_bundle(ring: GradedRing, c1) -> FormalBundle:
    return FormalBundle(ring, 1, (c1,))


def chern_class(b: FormalBundle, i: int):
    """``c_i`` of the bundle, with ``c_0 = 1``; zero beyond the stored list."""
    if i < 0 or i > b.ring.truncation:
        raise ValueError(f"Chern index {i} outside 0..{b.ring.truncation}")
    if i == 0:
        return b.ring.one()
    if i <= len(b.chern):
        return b.chern[i - 1]
    return b.ring.zero()


def top_chern(b: FormalBundle):
    """The Chern class in degree ``min(rank, truncation)``."""
    return chern_class(b, min(b.rank, b.ring.truncation))


def whitney_sum(a: FormalBundle, b: FormalBundle) -> FormalBundle:
    """Direct sum: ranks add, total Chern classes multiply (truncated)."""
    if a.ring != b.ring:
        raise ValueError("bundles live over different rings")
    rank = a.rank + b.rank
    t = min(rank, a.ring.truncation)
    cs = []
    for i in range(1, t + 1):
        acc = a.ring.zero()
        for p in range(0, i + 1):
            acc = acc + chern_class(a, p) * chern_class(b, i - p)
        cs.append(acc)
    return FormalBundle(a.ring, rank, tuple(cs))


def dual(b: FormalBundle) -> FormalBundle:
    """Dual bundle: ``c_i -> (-1)^i c_i``."""
    cs = tuple(c if (i + 1) % 2 == 0 else -c for i, c in enumerate(b.chern))
    return FormalBundle(b.ring, b.rank, cs)


def twist_line(b: FormalBundle, t) -> FormalBundle:
    """Tensor with a line bundle whose first Chern class is ``t``.

    Chern roots shift by ``t``:
    ``c_i(E@L) = sum_j C(rank-j, i-j) c_j(E) t^(i-j)``.
    """
    ring = b.ring
    if t and ring.degree(t) != 1:
        raise ValueError("twist class must be homogeneous of degree 1")
    r = b.rank
    cs = []
    for i in range(1, min(r, ring.truncation) + 1):
        acc = ring.zero()
        for j in range(0, i + 1):
            coeff = comb(r - j, i - j)
            if coeff == 0:
                continue
            acc = acc + coeff * (chern_class(b, j) * t ** (i - j))
        cs.append(acc)
    return FormalBundle(ring, r, tuple(cs))


def sym_power(b: FormalBundle, k: int) -> FormalBundle:
    """k-th symmetric power; rank ``C(rank+k-1, k)``."""
    if b.rank < 1:
        raise ValueError("symmetric power needs positive rank")
    if k < 1:
        raise ValueError("power must be a positive integer")
    rank = comb(b.rank + k - 1, k)
    epolys = _power_epolys("sym", b.rank, k, b.ring.truncation)
    return FormalBundle(b.ring, rank, _substitute_all(epolys, b))


def ext_power(b: FormalBundle, k: int) -> FormalBundle:
    """k-th exterior power; rank ``C(rank, k)``."""
    if k < 1:
        raise ValueError("power must be a positive integer")
    if k > b.rank:
        raise ValueError(f"exterior power {k} exceeds rank {b.rank}")
    rank = comb(b.rank, k)
    epolys = _power_epolys("ext", b.rank, k, b.ring.truncation)
    return FormalBundle(b.ring, rank, _substitute_all(epolys, b))


# -- universal polynomials -------------------------------------------------

def _substitute_all(epolys, b: FormalBundle) -> tuple:
    cs = [chern_class(b, j) for j in range(0, b.rank + 1)]
    return tuple(_substitute(ep, cs, b.ring) for ep in epolys)


def _substitute(epoly, cs, ring):
    total = ring.zero()
    for emon, coeff in epoly:
        term = ring.one()
        for j, mult in enumerate(emon):
            if mult == 0:
                continue
            cj = cs[j + 1]
            if not cj:
                term = ring.zero()
                break
            term = term * cj ** mult
        if term:
            total = total + coeff * term
    return total


@lru_cache(maxsize=None)
def _power_epolys(op: str, rank: int, k: int, dmax: int) -> tuple:
    """Chern classes of S^k/Lambda^k of a rank-``rank`` bundle, as
    polynomials in the elementary symmetric functions of the Chern roots.

    Returns one frozen e-polynomial per degree ``1..min(new rank, dmax)``,
    each a tuple of ``(e-exponent tuple, integer coefficient)`` pairs.
    """
    if op == "ext":
        groups = list(combinations(range(rank), k))
    else:
        groups = list(combinations_with_replacement(range(rank), k))
    poly = {(0,) * rank: 1}
    for g in groups:
        counts = [0] * rank
        for i in g:
            counts[i] += 1
        factor = {(0,) * rank: 1}
        for i, c in enumerate(counts):
            if c:
                unit = tuple(1 if j == i else 0 for j in range(rank))
                factor[unit] = c
        poly = _poly_mul(poly, factor, dmax)
    top = min(len(groups), dmax)
    out = []
    for d in range(1, top + 1):
        component = {e: c for e, c in poly.items() if sum(e) == d}
        epoly = _symmetric_to_elementary(component, rank)
        out.append(tuple(sorted(epoly.items())))
    return tuple(out)


def _poly_mul(a: dict, b: dict, dmax: int) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        d1 = sum(e1)
        for e2, c2 in b.items():
            if d1 + sum(e2) > dmax:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return out


@lru_cache(maxsize=None)
def _elementary_monomials(j: int, nvars: int) -> tuple:
    """Monomial support of ``e_j`` in ``nvars`` variables."""
    monos = []
    for subset in combinations(range(nvars), j):
        exps = tuple(1 if i in subset else 0 for i in range(nvars))
        monos.append(exps)
    return tuple(monos)


@lru_cache(maxsize=None)
def _emonomial_expansion(emon: tuple, nvars: int) -> tuple:
    """Expansion of ``prod e_j**m_j`` into plain monomials."""
    poly = {(0,) * nvars: 1}
    for j, mult in enumerate(emon, start=1):
        factor = {m: 1 for m in _elementary_monomials(j, nvars)}
        for _ in range(mult):
            poly = _poly_mul(poly, factor, 10**9)
    return tuple(sorted(poly.items()))


def _symmetric_to_elementary(poly: dict, nvars: int) -> dict:
    """Rewrite a symmetric integer polynomial in ``e_1..e_nvars``.

    Gauss's algorithm: kill the lex-leading monomial ``x^alpha`` (``alpha``
    is weakly decreasing by symmetry) with the elementary product
    ``e_1^(a1-a2) e_2^(a2-a3) ... e_n^(an)``.
    """
    residue = {e: c for e, c in poly.items() if c}
    out: dict = {}
    while residue:
        alpha = max(residue)
        if any(alpha[i] < alpha[i + 1] for i in range(nvars - 1)):
            raise ValueError("input polynomial is not symmetric")
        c = residue[alpha]
        emon = tuple(alpha[i] - alpha[i + 1] for i in range(nvars - 1)) + (alpha[-1],)
        out[emon] = out.get(emon, 0) + c
        for mono, coeff in _emonomial_expansion(emon, nvars):
            val = residue.get(mono, 0) - c * coeff
            if val:
                residue[mono] = val
            else:
                residue.pop(mono, None)
    return out
