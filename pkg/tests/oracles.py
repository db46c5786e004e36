"""Independent brute-force oracles for the test suite.

These deliberately avoid the code paths they check: Schubert products are
recomputed through monomial expansions of Schur polynomials (semistandard
tableaux), power bundles through direct enumeration of root multisets over
actual split bundles, and base-point freeness on weighted projective spaces
through explicit monomial lists.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations, combinations_with_replacement
from math import gcd


# -- Schur polynomials from semistandard tableaux ---------------------------

def _rows(length: int, mins: tuple[int, ...], nvars: int):
    row = [0] * length

    def rec(i: int, lo: int):
        if i == length:
            yield tuple(row)
            return
        for v in range(max(lo, mins[i]), nvars + 1):
            row[i] = v
            yield from rec(i + 1, v)

    yield from rec(0, 1)


@cache
def schur_monomials(shape: tuple[int, ...], nvars: int) -> dict:
    """Monomial expansion of the Schur polynomial s_shape(x_1..x_nvars)."""
    result: dict = {}
    exps = [0] * nvars

    def rec(r: int, above: tuple[int, ...]):
        if r == len(shape):
            key = tuple(exps)
            result[key] = result.get(key, 0) + 1
            return
        length = shape[r]
        mins = tuple(above[i] + 1 if i < len(above) else 1 for i in range(length))
        for row in _rows(length, mins, nvars):
            for v in row:
                exps[v - 1] += 1
            rec(r + 1, row)
            for v in row:
                exps[v - 1] -= 1

    if len(shape) > nvars:
        return {}
    rec(0, ())
    return result


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return out


def schur_expand(poly: dict, nvars: int) -> dict:
    """Expand a symmetric polynomial in the Schur basis (greedy on the
    lex-leading monomial, whose exponent is the leading partition)."""
    residue = {e: c for e, c in poly.items() if c}
    out: dict = {}
    while residue:
        alpha = max(residue)
        lam = tuple(x for x in alpha if x)
        assert all(alpha[i] >= alpha[i + 1] for i in range(nvars - 1)), alpha
        c = residue[alpha]
        out[lam] = c
        for mono, mult in schur_monomials(lam, nvars).items():
            val = residue.get(mono, 0) - c * mult
            if val:
                residue[mono] = val
            else:
                residue.pop(mono, None)
    return out


def schubert_product(k: int, cols: int, lam: tuple[int, ...], mu: tuple[int, ...]) -> dict:
    """Product of two Schubert classes of G(k, k+cols) via Schur polynomials
    in k variables, discarding partitions that leave the box."""
    product = _poly_mul(schur_monomials(tuple(lam), k), schur_monomials(tuple(mu), k))
    expansion = schur_expand(product, k)
    return {nu: c for nu, c in expansion.items() if not nu or nu[0] <= cols}


# -- power bundles of split bundles -----------------------------------------

def graded_component(elem, degree: int):
    """Degree-d part of a truncated-polynomial ring element."""
    ring = elem.ring
    terms = {
        exps: c
        for exps, c in elem.terms.items()
        if sum(e * d for e, d in zip(exps, ring.degrees)) == degree
    }
    return type(elem)(ring, terms)


def split_power_chern(ring, roots, k: int, op: str) -> list:
    """Chern classes of S^k or Lambda^k of a split bundle with the given
    degree-1 roots, by direct enumeration of multisets / subsets."""
    picker = combinations if op == "ext" else combinations_with_replacement
    total = ring.one()
    for group in picker(range(len(roots)), k):
        s = ring.zero()
        for i in group:
            s = s + roots[i]
        total = total * (ring.one() + s)
    return [graded_component(total, d) for d in range(1, ring.truncation + 1)]


# -- weighted projective spaces ----------------------------------------------

def degree_m_exponents(weights: tuple[int, ...], m: int):
    """All exponent vectors of weighted degree m."""
    out = []
    exps = [0] * len(weights)

    def rec(i: int, rem: int):
        if i == len(weights):
            if rem == 0:
                out.append(tuple(exps))
            return
        w = weights[i]
        for e in range(0, rem // w + 1):
            exps[i] = e
            rec(i + 1, rem - e * w)
        exps[i] = 0

    rec(0, m)
    return out


def generated_on_smooth_locus(weights: tuple[int, ...], m: int) -> bool:
    """Monomial base-point check: every coordinate stratum meeting the
    smooth locus (supported weights coprime) must carry a monomial."""
    supports = {
        frozenset(i for i, e in enumerate(exps) if e)
        for exps in degree_m_exponents(weights, m)
    }
    indices = range(len(weights))
    for size in range(1, len(weights) + 1):
        for subset in combinations(indices, size):
            if gcd(*(weights[i] for i in subset)) != 1:
                continue
            if not any(s <= set(subset) for s in supports):
                return False
    return True


def cotangent_twist_brute(weights: tuple[int, ...], lmax: int = 20):
    """Least twist making all Euler-sequence pair summands generated,
    searched directly up to lmax (None when the search fails)."""
    pair_sums = {a + b for a, b in combinations(weights, 2)}
    for twist in range(0, lmax + 1):
        if all(
            twist - s >= 0 and generated_on_smooth_locus(weights, twist - s)
            for s in pair_sums
        ):
            return twist
    return None
