"""Exact Schubert calculus on a Grassmannian.

The Chow ring of the Grassmannian of k-dimensional subspaces of an
n-dimensional vector space is free over the integers on Schubert classes
``sigma_lambda``, indexed by partitions inside a k x (n-k) box and graded by
the weight of the partition.  Multiplication is realized by a small trusted
kernel: the Pieri rule handles products with single-row classes, and the
Giambelli determinant reduces an arbitrary class to an alternating sum of
single-row products.  Out-of-box partitions are the zero class, which gives
exactly the quotient-ring semantics.

Two indexing conventions are around.  Internally everything is *linear*:
``G(k, n)`` parametrizes k-dimensional linear subspaces of an n-dimensional
space.  The classical *projective* notation ``G(a, b)`` for a-planes in
projective b-space converts by ``(k, n) = (a + 1, b + 1)``; the lines of
projective 4-space form G(1,4) = linear G(2,5).

Coefficients are arbitrary-precision integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Mapping

from .chern import FormalBundle
from .rings import GradedRing

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize to a weakly decreasing tuple of positive parts."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in partition {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing, got {p}")
    return p


@dataclass(frozen=True)
class GrassmannContext:
    """Grassmannian of ``k``-dimensional subspaces of an ``n``-dimensional space."""

    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")

    @classmethod
    def from_projective(cls, a: int, b: int) -> "GrassmannContext":
        """The Grassmannian of projective a-planes in projective b-space."""
        return cls(a + 1, b + 1)

    def to_projective(self) -> tuple[int, int]:
        return (self.k - 1, self.n - 1)

    @property
    def rows(self) -> int:
        return self.k

    @property
    def cols(self) -> int:
        return self.n - self.k

    @property
    def top_degree(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def point_class(self) -> Partition:
        return (self.cols,) * self.rows

    def fits(self, parts: Partition) -> bool:
        return len(parts) <= self.rows and (not parts or parts[0] <= self.cols)

    def complement(self, parts: Partition) -> Partition:
        """The partition pairing with ``parts`` to the point class."""
        if not self.fits(parts):
            raise ValueError(f"{parts} does not fit the {self.rows}x{self.cols} box")
        padded = tuple(parts) + (0,) * (self.rows - len(parts))
        return as_partition(self.cols - padded[i] for i in range(self.rows - 1, -1, -1))

    def partitions(self, weight: int | None = None) -> Iterator[Partition]:
        """All in-box partitions, optionally restricted to one weight."""

        def rec(maxpart: int, rows_left: int, acc: list) -> Iterator[Partition]:
            yield tuple(acc)
            if rows_left == 0:
                return
            for part in range(1, maxpart + 1):
                acc.append(part)
                yield from rec(part, rows_left - 1, acc)
                acc.pop()

        for p in rec(self.cols, self.rows, []):
            if weight is None or sum(p) == weight:
                yield p

    def __str__(self) -> str:
        a, b = self.to_projective()
        return f"G({a},{b})"


class ChowElement:
    """Integer combination of Schubert classes of a fixed Grassmannian."""

    __slots__ = ("context", "terms")

    def __init__(self, context: GrassmannContext, terms: Mapping[Partition, int]):
        clean: dict[Partition, int] = {}
        for parts, coeff in terms.items():
            p = as_partition(parts)
            if not context.fits(p):
                raise ValueError(f"{p} does not fit the box of {context}")
            if coeff:
                clean[p] = int(coeff)
        self.context = context
        self.terms = clean

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowElement)
            and self.context == other.context
            and self.terms == other.terms
        )

    __hash__ = None

    def _check(self, other: "ChowElement") -> None:
        if self.context != other.context:
            raise ValueError("elements belong to different Grassmannians")

    def __neg__(self) -> "ChowElement":
        return ChowElement(self.context, {p: -c for p, c in self.terms.items()})

    def __add__(self, other: "ChowElement") -> "ChowElement":
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return ChowElement(self.context, out)

    def __sub__(self, other: "ChowElement") -> "ChowElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowElement(self.context, {p: c * other for p, c in self.terms.items()})
        if not isinstance(other, ChowElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "ChowElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = unit(self.context)
        for _ in range(exponent):
            result = result * self
        return result

    def weight(self) -> int | None:
        """Common weight of a homogeneous element; ``None`` for zero."""
        if not self.terms:
            return None
        weights = {sum(p) for p in self.terms}
        if len(weights) > 1:
            raise ValueError(f"element is not homogeneous: {self}")
        return weights.pop()

    def is_homogeneous(self) -> bool:
        return len({sum(p) for p in self.terms}) <= 1

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for parts, coeff in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0])):
            name = "s[" + ",".join(str(x) for x in parts) + "]" if parts else "1"
            if name == "1":
                chunks.append(str(coeff))
            elif coeff == 1:
                chunks.append(name)
            elif coeff == -1:
                chunks.append(f"-{name}")
            else:
                chunks.append(f"{coeff}*{name}")
        return " + ".join(chunks).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ChowElement({self.context}, {self})"


def zero(ctx: GrassmannContext) -> ChowElement:
    return ChowElement(ctx, {})


def unit(ctx: GrassmannContext) -> ChowElement:
    return ChowElement(ctx, {(): 1})


def sigma(ctx: GrassmannContext, *parts: int) -> ChowElement:
    """The Schubert class ``sigma_parts``; out-of-box partitions give zero."""
    p = as_partition(parts)
    if not ctx.fits(p):
        return zero(ctx)
    return ChowElement(ctx, {p: 1})


def _horizontal_strips(lam: Partition, a: int, rows: int, cols: int) -> Iterator[Partition]:
    """Partitions ``mu`` in the box with ``mu/lam`` a horizontal strip of size ``a``."""
    length = len(lam)
    maxlen = min(rows, length + 1)
    mu = [0] * maxlen

    def rec(i: int, remaining: int) -> Iterator[Partition]:
        if i == maxlen:
            if remaining == 0:
                yield as_partition(mu)
            return
        lo = lam[i] if i < length else 0
        hi = cols if i == 0 else lam[i - 1]
        hi = min(hi, lo + remaining)
        for v in range(lo, hi + 1):
            mu[i] = v
            yield from rec(i + 1, remaining - (v - lo))
        mu[i] = 0

    yield from rec(0, a)


def pieri(x: ChowElement, a: int) -> ChowElement:
    """Multiply by the single-row class ``sigma_a`` (horizontal strips)."""
    if a < 1:
        raise ValueError("Pieri index must be a positive integer")
    ctx = x.context
    out: dict[Partition, int] = {}
    for lam, coeff in x.terms.items():
        for mu in _horizontal_strips(lam, a, ctx.rows, ctx.cols):
            out[mu] = out.get(mu, 0) + coeff
    return ChowElement(ctx, out)


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _times_schubert(x: ChowElement, lam: Partition) -> ChowElement:
    """``x * sigma_lam`` through the Giambelli determinant and iterated Pieri.

    The determinant ``det(sigma_(lam_i + j - i))`` is expanded by the Leibniz
    rule; single-row classes outside the box kill the whole permutation term.
    """
    if not lam:
        return x
    ctx = x.context
    size = len(lam)
    acc = zero(ctx)
    for perm in permutations(range(size)):
        degs = [lam[i] + perm[i] - i for i in range(size)]
        if any(d < 0 or d > ctx.cols for d in degs):
            continue
        term = x
        for d in degs:
            if d == 0:
                continue
            term = pieri(term, d)
            if not term:
                break
        if term:
            acc = acc + _perm_sign(perm) * term
    return acc


def giambelli(ctx: GrassmannContext, parts: Iterable[int]) -> ChowElement:
    """Evaluate the Giambelli determinant for ``sigma_parts``.

    Rejects partitions outside the box (unlike :func:`sigma`, which treats
    them as zero) so the determinant identity is tested on genuine classes.
    """
    lam = as_partition(parts)
    if not ctx.fits(lam):
        raise ValueError(f"{lam} does not fit the box of {ctx}")
    return _times_schubert(unit(ctx), lam)


def multiply(x: ChowElement, y: ChowElement) -> ChowElement:
    """Product in the Schubert basis; bilinear, commutative, associative."""
    x._check(y)
    if len(x.terms) < len(y.terms):
        x, y = y, x
    acc = zero(x.context)
    for lam, coeff in y.terms.items():
        acc = acc + coeff * _times_schubert(x, lam)
    return acc


def integrate(x: ChowElement) -> int:
    """Degree of a top-degree class: the coefficient of the point class."""
    if not x.terms:
        return 0
    ctx = x.context
    if any(sum(p) != ctx.top_degree for p in x.terms):
        raise ValueError("integrate needs a class purely of top degree")
    return x.terms.get(ctx.point_class, 0)


@dataclass(frozen=True)
class SchubertRing(GradedRing):
    """The Chow ring of a Grassmannian viewed as a coefficient ring."""

    context: GrassmannContext

    @property
    def truncation(self) -> int:
        return self.context.top_degree

    def zero(self) -> ChowElement:
        return zero(self.context)

    def one(self) -> ChowElement:
        return unit(self.context)

    def degree(self, x: ChowElement):
        if not isinstance(x, ChowElement) or x.context != self.context:
            raise ValueError("element does not belong to this ring")
        return x.weight()

    def integral(self, x: ChowElement) -> int:
        return integrate(x)


def tautological_dual(ctx: GrassmannContext) -> FormalBundle:
    """The dual ``U*`` of the rank-k tautological subbundle.

    Its Chern classes are the column classes: ``c_i(U*) = sigma_(1^i)``.
    """
    ring = SchubertRing(ctx)
    cs = tuple(sigma(ctx, *([1] * i)) for i in range(1, ctx.k + 1))
    return FormalBundle(ring, ctx.k, cs)
