"""Certified enclosures of the spectral radius of a nonnegative integer matrix.

The radius of ``A`` is the maximum of the radii of the diagonal blocks of its
block-triangular (SCC) form, so each strongly connected component is
enclosed separately:

* trivial component: exactly 0
* circle component: exactly 1
* 1x1 block ``[[k]]``: exactly k
* otherwise Collatz-Wielandt bounds ``min (Bx)_i/x_i <= rho(B) <= max (Bx)_i/x_i``
  along the power iteration ``x <- B x``.  For a component of period ``p > 1``
  the iteration runs on ``B**p`` (block diagonal with primitive blocks, all of
  radius ``rho(B)**p``) and the bounds are pulled back with exact integer
  ``p``-th roots.

All bounds are ``fractions.Fraction``; no floating point is involved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .digraph import (
    ComponentKind,
    _kind_unchecked,
    component_period,
    is_irreducible,
    restrict,
    scc_decompose,
)
from .errors import Acyclic, GapNotReached, NonPositiveWitness, NotIrreducible
from .intmatrix import ConeVector, NonNegIntMatrix, format_rational, mat_pow, parse_rational

__all__ = [
    "SpectralInterval",
    "ComponentEnclosure",
    "DominantComponent",
    "DEFAULT_GAP",
    "DEFAULT_MAX_ITER",
    "collatz_wielandt",
    "spectral_radius",
    "component_enclosures",
    "dominant_component",
    "interval_from_json",
]

DEFAULT_GAP = Fraction(1, 10**9)
DEFAULT_MAX_ITER = 10_000


@dataclass(frozen=True)
class SpectralInterval:
    """Exact rational bounds ``lower <= rho <= upper``.

    ``witness`` is the positive vector whose Collatz-Wielandt quotients
    produced the final step of the enclosure.  Refinement keeps the running
    intersection of all enclosures seen, so the stored bounds can be
    slightly tighter than the witness alone gives.
    """

    lower: Fraction
    upper: Fraction
    witness: ConeVector | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if self.lower < 0 or self.lower > self.upper:
            raise ValueError(f"invalid interval [{self.lower}, {self.upper}]")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def contains(self, value, tol=0) -> bool:
        return self.lower - tol <= value <= self.upper + tol

    def to_dict(self) -> dict:
        return {"lower": format_rational(self.lower), "upper": format_rational(self.upper)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def interval_from_json(text: str) -> SpectralInterval:
    doc = json.loads(text)
    return SpectralInterval(parse_rational(doc["lower"]), parse_rational(doc["upper"]))


def _cw_quotients(rows, x):
    y = [sum(a * v for a, v in zip(row, x) if a) for row in rows]
    qs = [Fraction(yi, xi) for yi, xi in zip(y, x)]
    return min(qs), max(qs), y


def collatz_wielandt(A: NonNegIntMatrix, x: ConeVector) -> SpectralInterval:
    """Collatz-Wielandt enclosure of rho(A) from a strictly positive vector.

    >>> from pennercert.intmatrix import from_rows
    >>> I = collatz_wielandt(from_rows([[0, 1], [1, 1]]), ConeVector((2, 3)))
    >>> I.lower, I.upper
    (Fraction(3, 2), Fraction(5, 3))
    """
    if not is_irreducible(A):
        raise NotIrreducible("Collatz-Wielandt bounds need an irreducible matrix")
    if not isinstance(x, ConeVector):
        x = ConeVector(tuple(x))
    if x.dim != A.n:
        raise ValueError(f"witness has dimension {x.dim}, matrix has {A.n}")
    if not x.is_positive():
        raise NonPositiveWitness("witness must be strictly positive")
    lo, hi, _ = _cw_quotients(A.rows, x.coords)
    return SpectralInterval(lo, hi, x)


# --- exact p-th roots ---------------------------------------------------------


def _iroot_floor(n: int, p: int) -> int:
    """Largest integer r >= 0 with r**p <= n, by bisection."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2 or p == 1:
        return n
    lo, hi = 0, 1 << (n.bit_length() // p + 1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**p <= n:
            lo = mid
        else:
            hi = mid
    return lo


def _exact_root(q: Fraction, p: int):
    a = _iroot_floor(q.numerator, p)
    b = _iroot_floor(q.denominator, p)
    if a**p == q.numerator and b**p == q.denominator:
        return Fraction(a, b)
    return None


def root_lower(q: Fraction, p: int, bits: int) -> Fraction:
    """A dyadic rational r with r**p <= q and q**(1/p) - r < 2**-bits."""
    exact = _exact_root(q, p)
    if exact is not None:
        return exact
    scaled = (q.numerator << (bits * p)) // q.denominator
    return Fraction(_iroot_floor(scaled, p), 1 << bits)


def root_upper(q: Fraction, p: int, bits: int) -> Fraction:
    """A dyadic rational r with r**p >= q and r - q**(1/p) < 2**-bits."""
    exact = _exact_root(q, p)
    if exact is not None:
        return exact
    scaled = -((-q.numerator << (bits * p)) // q.denominator)
    r = _iroot_floor(scaled, p)
    if r**p < scaled:
        r += 1
    return Fraction(r, 1 << bits)


# --- per-component refinement ------------------------------------------------


class _PowerIteration:
    """Stateful Collatz-Wielandt refinement of one irreducible block.

    The iterate is kept as a positive integer vector; once its entries exceed
    ``precision_bits`` bits they are shifted right (and floored at 1), which
    keeps arithmetic cheap while every quotient stays an exact, valid bound.
    """

    def __init__(self, B: NonNegIntMatrix):
        self.rows = B.rows
        self.x = [1] * B.n
        self.lower = Fraction(0)
        self.upper = None
        self.iterations = 0
        maxent = max(max(r) for r in self.rows)
        # eigenvector coordinates can differ by a factor up to maxent**n
        self.spread_bits = B.n * maxent.bit_length()

    def refine(self, target: Fraction, max_iter: int):
        bits = 64 + self.spread_bits + 2 * (target.denominator // max(target.numerator, 1)).bit_length()
        while True:
            lo, hi, y = _cw_quotients(self.rows, self.x)
            self.witness = ConeVector(tuple(self.x))
            if lo > self.lower:
                self.lower = lo
            if self.upper is None or hi < self.upper:
                self.upper = hi
            if self.upper - self.lower <= target:
                return
            if self.iterations >= max_iter:
                raise GapNotReached(
                    f"gap {self.upper - self.lower} above {target} after {self.iterations} iterations",
                    SpectralInterval(self.lower, self.upper, self.witness),
                    self.iterations,
                )
            self.iterations += 1
            top = max(y).bit_length()
            if top > bits:
                s = top - bits
                y = [max(1, v >> s) for v in y]
            self.x = y


@dataclass(frozen=True)
class ComponentEnclosure:
    vertices: tuple[int, ...]
    kind: ComponentKind
    period: int
    interval: SpectralInterval


class _ComponentRefiner:
    def __init__(self, A, comp, kind):
        self.vertices = comp
        self.kind = kind
        self.iteration = None
        self.period = 0
        self.exact = None
        if kind is ComponentKind.TRIVIAL:
            self.exact = Fraction(0)
        elif kind is ComponentKind.CIRCLE:
            self.exact = Fraction(1)
            self.period = len(comp)
        else:
            B = restrict(A, comp)
            self.period = component_period(A, comp)
            if B.n == 1:
                self.exact = Fraction(B.rows[0][0])
            else:
                self.iteration = _PowerIteration(mat_pow(B, self.period))

    def enclose(self, gap: Fraction, max_iter: int) -> ComponentEnclosure:
        if self.exact is not None:
            interval = SpectralInterval(self.exact, self.exact)
        elif self.period == 1:
            self.iteration.refine(gap, max_iter)
            it = self.iteration
            interval = SpectralInterval(it.lower, it.upper, it.witness)
        else:
            interval = self._enclose_imprimitive(gap, max_iter)
        return ComponentEnclosure(self.vertices, self.kind, self.period, interval)

    def _enclose_imprimitive(self, gap, max_iter):
        # rho > 1 here, so t -> t**(1/p) contracts distances on [1, inf)
        p = self.period
        bits = (4 * gap.denominator // gap.numerator).bit_length() + 1
        inner = gap / 2
        it = self.iteration
        try:
            while True:
                it.refine(inner, max_iter)
                lo = root_lower(it.lower, p, bits)
                hi = root_upper(it.upper, p, bits)
                if hi - lo <= gap:
                    return SpectralInterval(lo, hi, it.witness)
                inner /= 4
        except GapNotReached as exc:
            partial = SpectralInterval(
                root_lower(it.lower, p, bits), root_upper(it.upper, p, bits), it.witness
            )
            raise GapNotReached(str(exc), partial, exc.iterations) from None


def _refiners(A):
    dec = scc_decompose(A)
    return [_ComponentRefiner(A, c, _kind_unchecked(A, c)) for c in dec.components]


def _as_gap(gap) -> Fraction:
    gap = Fraction(gap) if not isinstance(gap, float) else Fraction(gap).limit_denominator(10**18)
    if gap <= 0:
        raise ValueError("gap must be positive")
    return gap


def component_enclosures(A: NonNegIntMatrix, gap=DEFAULT_GAP, max_iter=DEFAULT_MAX_ITER):
    """Enclosures of every SCC, listed like ``scc_decompose(A).components``."""
    gap = _as_gap(gap)
    return [r.enclose(gap, max_iter) for r in _refiners(A)]


def _embed(A, vertices, witness):
    if witness is None:
        return None
    coords = [Fraction(0)] * A.n
    for v, c in zip(vertices, witness.coords):
        coords[v - 1] = c
    return ConeVector(tuple(coords))


def spectral_radius(A: NonNegIntMatrix, gap=DEFAULT_GAP, max_iter=DEFAULT_MAX_ITER) -> SpectralInterval:
    """Enclose rho(A) in an interval of width at most ``gap``.

    The result is the componentwise maximum of the SCC enclosures.  If a
    component fails to converge within ``max_iter`` iterations,
    ``GapNotReached`` carries the merged partial interval.
    """
    gap = _as_gap(gap)
    encs, failed = [], None
    for r in _refiners(A):
        try:
            encs.append(r.enclose(gap, max_iter))
        except GapNotReached as exc:
            failed = failed or exc
            encs.append(ComponentEnclosure(r.vertices, r.kind, r.period, exc.interval))
    lower = max(e.interval.lower for e in encs)
    upper = max(e.interval.upper for e in encs)
    best = max(encs, key=lambda e: e.interval.lower)
    result = SpectralInterval(lower, upper, _embed(A, best.vertices, best.interval.witness))
    if failed is not None:
        raise GapNotReached(str(failed), result, failed.iterations)
    return result


@dataclass(frozen=True)
class DominantComponent:
    """The SCC carrying the spectral radius.

    ``ties`` lists every component (including ``vertices``) whose enclosure
    could not be separated from the winner; empty when the winner is unique.
    """

    vertices: tuple[int, ...]
    interval: SpectralInterval
    ties: tuple[tuple[int, ...], ...] = ()

    def __iter__(self):
        return iter((self.vertices, self.interval))


def dominant_component(A: NonNegIntMatrix, gap=Fraction(1, 2**10), max_iter=DEFAULT_MAX_ITER,
                       max_rounds: int = 40) -> DominantComponent:
    """Find the SCC whose enclosure lies strictly above all other components.

    Gaps are halved until the best component separates from the rest or
    ``max_rounds`` refinements pass; components that never separate (for
    example two identical blocks) are reported in ``ties`` and the one with
    the smallest vertex wins.
    """
    gap = _as_gap(gap)
    refiners = [r for r in _refiners(A) if r.kind is not ComponentKind.TRIVIAL]
    if not refiners:
        raise Acyclic("G(A) has no cycle; the spectral radius is 0")
    live = refiners
    encs = {}
    for _ in range(max_rounds + 1):
        for r in live:
            encs[r.vertices] = r.enclose(gap, max_iter).interval
        best = max(refiners, key=lambda r: (encs[r.vertices].lower, -r.vertices[0]))
        top = encs[best.vertices]
        rivals = [r for r in refiners if r is not best and encs[r.vertices].upper >= top.lower]
        if not rivals:
            return DominantComponent(best.vertices, top)
        if all(encs[r.vertices].is_exact for r in rivals) and top.is_exact:
            break
        live = [best] + rivals
        gap /= 2
    tied = sorted([best] + rivals, key=lambda r: r.vertices[0])
    winner = tied[0]
    return DominantComponent(
        winner.vertices, encs[winner.vertices], tuple(r.vertices for r in tied)
    )
