"""Square matrices of arbitrary-precision nonnegative integers.

Entries are plain Python ``int`` so powers never overflow.  Vertex / row /
column indices are 1-based in every public function and error message;
``rows`` itself is an ordinary 0-based tuple of tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NegativeEntry, NonSquare, ParseError

__all__ = [
    "NonNegIntMatrix",
    "ConeVector",
    "from_rows",
    "identity",
    "zeros",
    "mat_pow",
    "path_count",
    "cone_norm",
    "unit_vector",
    "parse_matrix",
    "matrix_to_json",
    "format_rational",
    "parse_rational",
]


@dataclass(frozen=True)
class NonNegIntMatrix:
    """An immutable ``n x n`` matrix with nonnegative integer entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise NonSquare("matrix must have at least one row")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != n:
                raise NonSquare(
                    f"row {r} has {len(row)} entries, expected {n} (matrix has {n} rows)"
                )
            for c, v in enumerate(row, start=1):
                if isinstance(v, bool) or not isinstance(v, int):
                    raise TypeError(f"entry ({r},{c}) is not an integer: {v!r}")
                if v < 0:
                    raise NegativeEntry(f"entry ({r},{c}) is negative: {v}")

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry ``A_ij`` with 1-based indices."""
        _check_index(i, self.n, "i")
        _check_index(j, self.n, "j")
        return self.rows[i - 1][j - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __matmul__(self, other: NonNegIntMatrix) -> NonNegIntMatrix:
        if not isinstance(other, NonNegIntMatrix):
            return NotImplemented
        if other.n != self.n:
            raise NonSquare(f"dimension mismatch: {self.n} vs {other.n}")
        cols = list(zip(*other.rows))
        return NonNegIntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col) if a and b) for col in cols)
                for row in self.rows
            )
        )

    def apply(self, x):
        """Return ``A x`` for a ConeVector or a plain sequence of numbers.

        A plain sequence yields a tuple; a ConeVector yields a ConeVector.
        """
        coords = x.coords if isinstance(x, ConeVector) else tuple(x)
        if len(coords) != self.n:
            raise NonSquare(f"vector has dimension {len(coords)}, matrix has {self.n}")
        out = tuple(sum(a * v for a, v in zip(row, coords) if a) for row in self.rows)
        if isinstance(x, ConeVector):
            return ConeVector(tuple(Fraction(v) for v in out))
        return out

    def transpose(self) -> NonNegIntMatrix:
        return NonNegIntMatrix(tuple(zip(*self.rows)))

    def permuted(self, perm: Sequence[int]) -> NonNegIntMatrix:
        """Simultaneous row/column reordering: row ``k`` of the result is row ``perm[k]``.

        ``perm`` lists 1-based vertices.
        """
        idx = [p - 1 for p in perm]
        if sorted(idx) != list(range(self.n)):
            raise ValueError(f"not a permutation of 1..{self.n}: {list(perm)}")
        return NonNegIntMatrix(tuple(tuple(self.rows[a][b] for b in idx) for a in idx))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in zip(*self.rows))

    def __str__(self):
        width = max(len(str(v)) for r in self.rows for v in r)
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)


@dataclass(frozen=True)
class ConeVector:
    """A nonzero vector of nonnegative exact rationals."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise ValueError("cone vector must have positive dimension")
        if any(c < 0 for c in coords):
            raise ValueError("cone vector coordinates must be nonnegative")
        if not any(coords):
            raise ValueError("cone vector must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.coords)

    def __add__(self, other: ConeVector) -> ConeVector:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return ConeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, t) -> ConeVector:
        t = Fraction(t)
        if t <= 0:
            raise ValueError("scale factor must be positive to stay in the cone")
        return ConeVector(tuple(t * c for c in self.coords))


def from_rows(rows: Iterable[Iterable[int]]) -> NonNegIntMatrix:
    """Build a validated matrix from nested lists of integers.

    >>> from_rows([[0, 1], [1, 1]]).n
    2
    """
    return NonNegIntMatrix(tuple(tuple(r) for r in rows))


def identity(n: int) -> NonNegIntMatrix:
    return NonNegIntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def zeros(n: int) -> NonNegIntMatrix:
    return NonNegIntMatrix(tuple((0,) * n for _ in range(n)))


def mat_pow(A: NonNegIntMatrix, m: int) -> NonNegIntMatrix:
    """Exact ``A**m`` by repeated squaring; ``A**0`` is the identity."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {m!r}")
    result = identity(A.n)
    base = A
    while m:
        if m & 1:
            result = result @ base
        m >>= 1
        if m:
            base = base @ base
    return result


def path_count(A: NonNegIntMatrix, i: int, j: int, m: int) -> int:
    """Number of weighted length-``m`` walks from vertex ``i`` to vertex ``j`` in G(A)."""
    _check_index(i, A.n, "i")
    _check_index(j, A.n, "j")
    if m < 0:
        raise ValueError("path length must be nonnegative")
    # propagate a single row instead of forming A**m
    row = [0] * A.n
    row[i - 1] = 1
    for _ in range(m):
        new = [0] * A.n
        for k, v in enumerate(row):
            if v:
                for c, a in enumerate(A.rows[k]):
                    if a:
                        new[c] += v * a
        row = new
    return row[j - 1]


def cone_norm(x: ConeVector) -> Fraction:
    """Coordinate sum of a cone vector (its l1 norm, since coordinates are >= 0)."""
    return sum(x.coords, Fraction(0))


def unit_vector(dim: int, j: int) -> ConeVector:
    _check_index(j, dim, "j")
    return ConeVector(tuple(Fraction(int(k == j - 1)) for k in range(dim)))


def _check_index(i, n, name):
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n:
        raise IndexOutOfRange(f"index {name}={i!r} outside 1..{n}")


# --- text formats -----------------------------------------------------------


def parse_matrix(text: str) -> NonNegIntMatrix:
    """Parse either the JSON form ``{"n": k, "rows": [...]}`` or whitespace rows.

    Raises ParseError for anything unreadable; NonSquare / NegativeEntry
    propagate from validation.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty matrix input")
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict) or "rows" not in doc:
            raise ParseError('JSON matrix must be an object with a "rows" key')
        rows = doc["rows"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError('"rows" must be a list of lists')
        for r in rows:
            for v in r:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise ParseError(f"non-integer entry {v!r}")
        A = from_rows(rows)
        if "n" in doc and doc["n"] != A.n:
            raise ParseError(f'"n" is {doc["n"]} but {A.n} rows were given')
        return A
    rows = []
    for lineno, line in enumerate(stripped.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.replace(",", " ").split()])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise ParseError("no matrix rows found")
    return from_rows(rows)


def matrix_to_json(A: NonNegIntMatrix) -> str:
    return json.dumps({"n": A.n, "rows": A.to_lists()})


def format_rational(q) -> str:
    """Render an exact rational as ``"p/q"`` (always with a denominator)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, (int, Fraction)) and not isinstance(s, bool):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {s!r}") from exc
