"""Combinatorics of weighted projective spaces.

``P(a_0, ..., a_n)`` is the quotient of affine (n+1)-space minus the origin
by the scaling ``t.(x_0, ..., x_n) = (t^a_0 x_0, ..., t^a_n x_n)``.  Well
forming, the singular stratification, the canonical degree, base points of
``O(m)`` on the smooth locus and the minimal twist making the (restricted)
cotangent sheaf globally generated are all elementary arithmetic in the
weights; this module keeps it exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd


@dataclass(frozen=True)
class WeightVector:
    """The weights ``(a_0, ..., a_n)`` of a weighted projective space."""

    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        if len(w) < 2:
            raise ValueError("need at least two weights")
        if any(a < 1 for a in w):
            raise ValueError(f"weights must be positive, got {w}")
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        """Dimension of the space (one less than the number of weights)."""
        return len(self.weights) - 1

    def is_well_formed(self) -> bool:
        w = self.weights
        if gcd(*w) != 1:
            return False
        for i in range(len(w)):
            others = w[:i] + w[i + 1 :]
            if gcd(*others) != 1:
                return False
        return True

    def __str__(self) -> str:
        return "P(" + ",".join(str(a) for a in self.weights) + ")"


def _as_weights(w) -> WeightVector:
    return w if isinstance(w, WeightVector) else WeightVector(tuple(w))


def normalize(w) -> WeightVector:
    """Reduce to the unique well-formed weight vector.

    Divides by the global gcd; while some n of the weights share a factor d,
    divides those n weights by d (the space is unchanged, the polarization
    rescaled).  The loop strictly decreases the weight sum, so it terminates.
    """
    ws = list(_as_weights(w).weights)
    while True:
        g = gcd(*ws)
        if g > 1:
            ws = [a // g for a in ws]
            continue
        for i in range(len(ws)):
            others = ws[:i] + ws[i + 1 :]
            d = gcd(*others)
            if d > 1:
                ws = [a if j == i else a // d for j, a in enumerate(ws)]
                break
        else:
            return WeightVector(tuple(ws))


def _require_well_formed(w) -> WeightVector:
    wv = _as_weights(w)
    if not wv.is_well_formed():
        raise ValueError(f"{wv} is not well-formed; normalize first")
    return wv


@dataclass(frozen=True)
class SingularStratum:
    """A maximal coordinate stratum of the singular locus.

    ``coords`` are the indices allowed to be nonzero; ``k`` is the order of
    the generic stabilizer along the stratum (the gcd of the supported
    weights); ``dimension = len(coords) - 1``.
    """

    k: int
    coords: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.coords) - 1

    def __post_init__(self):
        if self.k <= 1:
            raise ValueError("stratum order must exceed 1")
        if not self.coords:
            raise ValueError("stratum must support at least one coordinate")


def singular_strata(w) -> list[SingularStratum]:
    """Maximal singular strata, one per maximal divisibility pattern.

    The singular locus is the union over k > 1 of the loci where all
    coordinates with weight not divisible by k vanish; primes suffice, and
    strata contained in bigger ones are pruned.
    """
    wv = _require_well_formed(w)
    weights = wv.weights
    primes = set()
    for a in weights:
        m, p = a, 2
        while p * p <= m:
            if m % p == 0:
                primes.add(p)
                while m % p == 0:
                    m //= p
            p += 1
        if m > 1:
            primes.add(m)
    supports: set[tuple[int, ...]] = set()
    for p in sorted(primes):
        coords = tuple(i for i, a in enumerate(weights) if a % p == 0)
        if coords:
            supports.add(coords)
    maximal = [
        s
        for s in supports
        if not any(s != t and set(s) <= set(t) for t in supports)
    ]
    strata = [
        SingularStratum(k=gcd(*(weights[i] for i in s)), coords=s)
        for s in sorted(maximal)
    ]
    return strata


def canonical_degree(w) -> int:
    """Degree of the canonical sheaf on the smooth locus: ``-(sum of weights)``."""
    wv = _require_well_formed(w)
    return -sum(wv.weights)


def _semigroup_contains(gens: tuple[int, ...], m: int) -> bool:
    reachable = [False] * (m + 1)
    reachable[0] = True
    for value in range(1, m + 1):
        reachable[value] = any(reachable[value - g] for g in gens if g <= value)
    return reachable[m]


def _minimal_unit_supports(weights: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Inclusion-minimal index sets whose weights have gcd 1.

    These index the coordinate strata meeting the smooth locus; supersets
    only enlarge the value semigroup, so minimal sets carry the binding
    base-point conditions.
    """
    found: list[tuple[int, ...]] = []
    for size in range(1, len(weights) + 1):
        for subset in combinations(range(len(weights)), size):
            if any(set(f) <= set(subset) for f in found):
                continue
            if gcd(*(weights[i] for i in subset)) == 1:
                found.append(subset)
    return found


def is_generated(w, m: int) -> bool:
    """Whether ``O(m)`` is base-point free on the smooth locus.

    At a point whose nonzero coordinates form the index set T there is a
    nonvanishing degree-m monomial iff m lies in the numerical semigroup
    generated by the weights supported on T; the point lies in the smooth
    locus iff those weights have gcd 1.
    """
    wv = _require_well_formed(w)
    if m < 0:
        raise ValueError("twist must be nonnegative")
    for support in _minimal_unit_supports(wv.weights):
        gens = tuple(wv.weights[i] for i in support)
        if not _semigroup_contains(gens, m):
            return False
    return True


def cotangent_twist_lmin(w) -> int:
    """Smallest twist l making the cotangent sheaf on the smooth locus a
    quotient of a globally generated split bundle.

    Via the Euler sequence, ``Omega(l)`` is a quotient of the sum over pairs
    j < k of ``O(l - a_j - a_k)``; the returned l is the least one with every
    such summand of nonnegative degree and base-point free on the smooth
    locus.  This is an upper bound for the true minimal twist.
    """
    wv = _require_well_formed(w)
    if wv.n < 2:
        raise ValueError("need at least three weights")
    pair_sums = sorted({a + b for a, b in combinations(wv.weights, 2)})
    limit = sum(wv.weights) + 2 * max(wv.weights)
    for twist in range(0, limit + 1):
        if all(twist - s >= 0 and is_generated(wv, twist - s) for s in pair_sums):
            return twist
    raise RuntimeError(f"no generating twist up to {limit} for {wv}")


@dataclass(frozen=True)
class HypersurfaceModel:
    """A (complete-intersection) hypersurface model in a weighted space."""

    ambient: WeightVector
    degree: int
    description: str


def double_cover_model(base: str, k: int) -> HypersurfaceModel:
    """Weighted hypersurface model of a double cover.

    ``base`` is one of ``P<n>`` / ``projective-space-<n>`` (double cover of
    projective n-space branched in degree 2k), ``veronese-cone`` (double
    cover of the cone over the Veronese surface) or ``quadric-4`` (double
    cover of the quadric threefold branched in a degree-2k section).
    """
    if k < 1:
        raise ValueError("branch half-degree k must be positive")
    name = base.strip().lower()
    if name.startswith("projective-space-"):
        name = "p" + name[len("projective-space-") :]
    if name.startswith("p") and name[1:].isdigit():
        n = int(name[1:])
        if n < 1:
            raise ValueError("projective base must have positive dimension")
        ambient = WeightVector((1,) * (n + 1) + (k,))
        return HypersurfaceModel(
            ambient=ambient,
            degree=2 * k,
            description=(
                f"y^2 = f(x_0..x_{n}) of weighted degree {2 * k} in {ambient}: "
                f"double cover of P^{n} branched along a degree-{2 * k} hypersurface"
            ),
        )
    if name == "veronese-cone":
        ambient = WeightVector((1, 1, 1, 2, k))
        return HypersurfaceModel(
            ambient=ambient,
            degree=2 * k,
            description=(
                f"z^2 = g(x_0,x_1,x_2,y) of weighted degree {2 * k} in {ambient}: "
                "double cover of the cone over the Veronese surface"
            ),
        )
    if name == "quadric-4":
        ambient = WeightVector((1, 1, 1, 1, 1, k))
        return HypersurfaceModel(
            ambient=ambient,
            degree=2 * k,
            description=(
                f"complete intersection of type (2,{2 * k}) in {ambient}: "
                "a quadric through the singular point and y^2 = a degree-"
                f"{2 * k} section missing it"
            ),
        )
    raise ValueError(f"unknown double-cover base {base!r}")
