"""The end-periodic example family f_d and its train-track operator.

The action of f_1 on its invariant train track, in the branch basis, is the
infinite matrix with ``(1,2) = 1``, ``(2,2) = 2`` and ``(i, i-2) = 1`` for
``i >= 3``.  ``claim_operator(k)`` is its leading ``k x k`` truncation.  Every
truncation has the same dominant block ``[[2]]`` (vertex 2), the other
vertices being trivial components, so the leading eigenvalue is 2 for all k.

f_d^d lifts f_1 to a d-fold cover, so ``log rho(f_d) = log 2 / d``.
"""

from __future__ import annotations

import decimal
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionTooSmall, EigenvectorMismatch, NonPositive
from .intmatrix import ConeVector, NonNegIntMatrix, format_rational
from .penner import core_bound
from .substitution import Substitution

__all__ = [
    "FamilyParams",
    "FamilyStretch",
    "SharpnessReport",
    "claim_operator",
    "claim_substitution",
    "family_stretch",
    "sharpness_report",
    "eigenvector_check",
]


@dataclass(frozen=True)
class FamilyParams:
    d: int
    k: int = 2

    def __post_init__(self):
        if self.d < 1:
            raise NonPositive(f"d must be >= 1, got {self.d}")
        if self.k < 2:
            raise DimensionTooSmall(f"k must be >= 2, got {self.k}")


def claim_operator(k: int) -> NonNegIntMatrix:
    """The ``k x k`` truncation of the f_1 train-track operator.

    >>> print(claim_operator(4))
    0 1 0 0
    0 2 0 0
    1 0 0 0
    0 1 0 0
    """
    if k < 2:
        raise DimensionTooSmall(f"the operator needs k >= 2, got {k}")
    rows = [[0] * k for _ in range(k)]
    rows[0][1] = 1
    rows[1][1] = 2
    for i in range(2, k):
        rows[i][i - 2] = 1
    return NonNegIntMatrix(tuple(tuple(r) for r in rows))


def claim_substitution(k: int) -> Substitution:
    """Branch substitution b1 -> b2, b2 -> b2 b2, b_i -> b_{i-2}; incidence is ``claim_operator(k)``."""
    if k < 2:
        raise DimensionTooSmall(f"the operator needs k >= 2, got {k}")
    names = tuple(f"b{i}" for i in range(1, k + 1))
    images = {"b1": ("b2",), "b2": ("b2", "b2")}
    for i in range(3, k + 1):
        images[f"b{i}"] = (f"b{i - 2}",)
    return Substitution(names, images)


@dataclass(frozen=True)
class FamilyStretch:
    """``rho(f_d) = 2 ** exponent`` with a decimal rendering."""

    d: int
    exponent: Fraction
    decimal: str


def family_stretch(d: int, digits: int = 12) -> FamilyStretch:
    if d < 1:
        raise NonPositive(f"d must be >= 1, got {d}")
    ctx = decimal.Context(prec=digits + 10)
    value = ctx.power(decimal.Decimal(2), ctx.divide(decimal.Decimal(1), decimal.Decimal(d)))
    rendered = decimal.Context(prec=digits).plus(value)
    return FamilyStretch(d, Fraction(1, d), str(rendered))


@dataclass(frozen=True)
class SharpnessReport:
    d: int
    chi_abs: int
    lambda_exponent: Fraction
    bound_exponent: Fraction
    ratio: Fraction
    k: int | None = None

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "lambda_exponent": format_rational(self.lambda_exponent),
            "bound_exponent": format_rational(self.bound_exponent),
            "ratio": format_rational(self.ratio),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def sharpness_report(d: int, chi_abs_of_fd: int, k: int | None = None) -> SharpnessReport:
    """Compare the true exponent ``log2 rho(f_d) = 1/d`` with the core bound.

    With ``chi_abs_of_fd = c * d`` the ratio is the constant ``3c``.
    """
    if d < 1 or chi_abs_of_fd < 1:
        raise NonPositive(f"d and |chi| must be positive, got d={d}, chi={chi_abs_of_fd}")
    if k is not None and k < 2:
        raise DimensionTooSmall(f"k must be >= 2, got {k}")
    actual = Fraction(1, d)
    bound = core_bound(chi_abs_of_fd).exponent
    return SharpnessReport(d, chi_abs_of_fd, actual, bound, actual / bound, k)


def eigenvector_check(k: int) -> ConeVector:
    """Return the exact eigenvector for eigenvalue 2, verified by multiplication.

    ``x1 = 1, x2 = 2, x_i = x_{i-2} / 2``.
    """
    A = claim_operator(k)
    x = [Fraction(1), Fraction(2)]
    for i in range(2, k):
        x.append(x[i - 2] / 2)
    vec = ConeVector(tuple(x))
    image = A.apply(vec)
    if image.coords != tuple(2 * c for c in vec.coords):
        raise EigenvectorMismatch(f"A x != 2 x for k={k}")
    return vec
