"""Substitutions on finite alphabets and their incidence matrices.

A Markov decomposition is given combinatorially: an ordered alphabet of arcs
(or train-track branches) and, for each symbol, the word of symbols its
image crosses.  Row ``i`` of the incidence matrix counts the image of
symbol ``i``, so the incidence matrix of the ``k``-fold iterate is the
``k``-th matrix power.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import ParseError, UnknownSymbol
from .intmatrix import NonNegIntMatrix
from .spectral import DEFAULT_GAP, DEFAULT_MAX_ITER, SpectralInterval, spectral_radius

__all__ = [
    "Substitution",
    "incidence_matrix",
    "iterate",
    "entropy_interval",
    "arc_count_admissible",
    "parse_substitution",
    "format_substitution",
]

_NAME = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class Substitution:
    alphabet: tuple[str, ...]
    images: Mapping[str, tuple[str, ...]]

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise ValueError(f"alphabet has repeated names: {list(alphabet)}")
        images = {a: tuple(w) for a, w in dict(self.images).items()}
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "images", images)

    @classmethod
    def from_dict(cls, rules: Mapping[str, Sequence[str] | str]) -> Substitution:
        """Build from ``{symbol: word}``; a ``str`` word is split into characters.

        >>> Substitution.from_dict({"a": "ab", "b": "a"}).images["a"]
        ('a', 'b')
        """
        return cls(tuple(rules), {k: tuple(v) for k, v in rules.items()})

    def image(self, symbol: str) -> tuple[str, ...]:
        if symbol not in self.images:
            raise UnknownSymbol(f"no image given for symbol {symbol!r}")
        return self.images[symbol]

    def apply(self, word: Sequence[str]) -> tuple[str, ...]:
        return tuple(s for a in word for s in self.image(a))


def _validate(sub: Substitution):
    known = set(sub.alphabet)
    for a in sub.alphabet:
        for s in sub.image(a):
            if s not in known:
                raise UnknownSymbol(f"image of {a!r} uses unknown symbol {s!r}")
    extra = set(sub.images) - known
    if extra:
        raise UnknownSymbol(f"images given for symbols outside the alphabet: {sorted(extra)}")


def incidence_matrix(sub: Substitution) -> NonNegIntMatrix:
    """``M[i][j]`` = occurrences of symbol ``j`` in the image of symbol ``i``."""
    _validate(sub)
    pos = {a: k for k, a in enumerate(sub.alphabet)}
    rows = []
    for a in sub.alphabet:
        row = [0] * len(sub.alphabet)
        for s in sub.images[a]:
            row[pos[s]] += 1
        rows.append(tuple(row))
    return NonNegIntMatrix(tuple(rows))


def iterate(sub: Substitution, times: int) -> Substitution:
    """The ``times``-fold composite; ``times == 0`` is the identity substitution."""
    _validate(sub)
    if times < 0:
        raise ValueError("times must be nonnegative")
    images = {a: (a,) for a in sub.alphabet}
    for _ in range(times):
        images = {a: sub.apply(w) for a, w in images.items()}
    return Substitution(sub.alphabet, images)


def entropy_interval(sub: Substitution, gap=DEFAULT_GAP, max_iter=DEFAULT_MAX_ITER) -> SpectralInterval:
    """Enclosure of the growth rate; the topological entropy is its logarithm."""
    return spectral_radius(incidence_matrix(sub), gap, max_iter)


def arc_count_admissible(sub: Substitution, chi_abs: int) -> bool:
    """Whether the alphabet fits under the arc cap ``3 * chi_abs`` of a core."""
    if chi_abs < 1:
        raise ValueError("chi_abs must be positive")
    return len(sub.alphabet) <= 3 * chi_abs


def parse_substitution(text: str) -> Substitution:
    """Parse ``name -> w1 w2 ...`` rules, one per line.

    Blank lines and ``#`` comments are skipped; an empty right-hand side is
    the empty word.  Symbol order follows first appearance on a left side.
    """
    alphabet, images = [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ParseError(f"line {lineno}: expected 'name -> word'")
        lhs, rhs = (part.strip() for part in line.split("->", 1))
        if not _NAME.match(lhs):
            raise ParseError(f"line {lineno}: bad symbol name {lhs!r}")
        if lhs in images:
            raise ParseError(f"line {lineno}: duplicate rule for {lhs!r}")
        word = rhs.split()
        for tok in word:
            if not _NAME.match(tok):
                raise ParseError(f"line {lineno}: bad symbol name {tok!r}")
        alphabet.append(lhs)
        images[lhs] = tuple(word)
    sub = Substitution(tuple(alphabet), images)
    try:
        _validate(sub)
    except UnknownSymbol as exc:
        raise ParseError(str(exc)) from exc
    return sub


def format_substitution(sub: Substitution) -> str:
    return "".join(f"{a} -> {' '.join(sub.images[a])}\n" for a in sub.alphabet)
