"""Exact certificates for ``log rho(A) >= log 2 / n``.

A certificate names a strongly connected component G' of G(A) that is not a
circle, with ``n'`` vertices and transition matrix B, together with the
column sums of ``B**n'``.  Every column sum is at least 2: starting anywhere
in a strongly connected graph that is not a single cycle, a walk of length
``n'`` must pass a branching vertex.  Because ``rho(M) >= min column sum``
for any nonnegative M,

    rho(A)**n' >= rho(B)**n' = rho(B**n') >= 2,

so ``rho(A) >= 2**(1/n') >= 2**(1/n)``.  ``check`` re-derives all of this
from the matrix alone and trusts nothing in the certificate but its claims.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .digraph import ComponentKind, _kind_unchecked, exceeds_one, restrict, scc_decompose
from .errors import DimensionMismatch, LeadingEigenvalueNotAboveOne, NonPositiveChi, ParseError
from .intmatrix import NonNegIntMatrix, format_rational, mat_pow, parse_rational
from .spectral import dominant_component

__all__ = [
    "PennerCertificate",
    "BoundReport",
    "certify",
    "check",
    "core_bound",
    "bound_from_certificate",
    "certificate_from_json",
]


@dataclass(frozen=True)
class PennerCertificate:
    n: int
    dominant_vertices: tuple[int, ...]
    n_prime: int
    power_column_sums: tuple[int, ...]

    @property
    def exponent_n_prime(self) -> Fraction:
        """Certified statement: rho >= 2 ** exponent_n_prime."""
        return Fraction(1, self.n_prime)

    @property
    def exponent_n(self) -> Fraction:
        return Fraction(1, self.n)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dominant_vertices": list(self.dominant_vertices),
            "n_prime": self.n_prime,
            "power_column_sums": [str(s) for s in self.power_column_sums],
            "exponent_n_prime": format_rational(self.exponent_n_prime),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def certificate_from_json(text: str) -> PennerCertificate:
    """Parse the JSON form written by ``PennerCertificate.to_json``.

    Structural problems raise ParseError.  An ``exponent_n_prime`` that
    disagrees with ``n_prime`` also raises ParseError, since the document
    then makes two different claims.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid certificate JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("certificate must be a JSON object")
    try:
        n = doc["n"]
        verts = doc["dominant_vertices"]
        n_prime = doc["n_prime"]
        sums = doc["power_column_sums"]
    except KeyError as exc:
        raise ParseError(f"certificate is missing {exc.args[0]!r}") from exc
    if not _is_int(n) or not _is_int(n_prime) or not all(_is_int(v) for v in verts):
        raise ParseError("n, n_prime and dominant_vertices must be integers")
    if not all(isinstance(s, str) and s.isdigit() for s in sums):
        raise ParseError("power_column_sums must be decimal integer strings")
    if "exponent_n_prime" in doc and n_prime > 0:
        if parse_rational(doc["exponent_n_prime"]) != Fraction(1, n_prime):
            raise ParseError("exponent_n_prime does not equal 1/n_prime")
    return PennerCertificate(n, tuple(verts), n_prime, tuple(int(s) for s in sums))


def _is_int(v):
    return isinstance(v, int) and not isinstance(v, bool)


def certify(A: NonNegIntMatrix) -> PennerCertificate:
    """Run the SCC reduction on A and return the column-sum certificate.

    Raises LeadingEigenvalueNotAboveOne when rho(A) <= 1 (decided exactly).
    """
    if not exceeds_one(A):
        raise LeadingEigenvalueNotAboveOne(
            "every strongly connected component is trivial or a circle, so rho(A) <= 1"
        )
    dom = dominant_component(A)
    B = restrict(A, dom.vertices)
    sums = mat_pow(B, B.n).column_sums()
    return PennerCertificate(A.n, tuple(dom.vertices), B.n, sums)


def check(A: NonNegIntMatrix, cert: PennerCertificate) -> bool:
    """Independently verify a certificate against A."""
    if cert.n != A.n:
        raise DimensionMismatch(f"certificate is for n={cert.n}, matrix has n={A.n}")
    verts = tuple(cert.dominant_vertices)
    if not verts or list(verts) != sorted(set(verts)):
        return False
    if cert.n_prime != len(verts) or len(cert.power_column_sums) != cert.n_prime:
        return False
    if any(not 1 <= v <= A.n for v in verts):
        return False
    if verts not in scc_decompose(A).components:
        return False
    if _kind_unchecked(A, verts) is not ComponentKind.EXPANDING:
        return False
    B = restrict(A, verts)
    sums = mat_pow(B, B.n).column_sums()
    return tuple(cert.power_column_sums) == sums and min(sums) >= 2


def bound_from_certificate(cert: PennerCertificate) -> tuple[Fraction, Fraction]:
    """``(1/n', 1/n)``: rho >= 2**(1/n') >= 2**(1/n)."""
    return cert.exponent_n_prime, cert.exponent_n


@dataclass(frozen=True)
class BoundReport:
    """Lower bound for the stretch factor from the core characteristic.

    ``arc_cap`` caps the number of pairwise non-isotopic essential arcs in a
    core, hence the size of the incidence matrix, and the bound is
    ``log rho >= log 2 / arc_cap``.
    """

    chi_abs: int
    arc_cap: int
    exponent: Fraction

    @property
    def log_bound(self) -> float:
        return math.log(2) * self.exponent

    @property
    def stretch_bound(self) -> float:
        return 2.0**self.exponent

    def to_dict(self) -> dict:
        return {
            "chi_abs": self.chi_abs,
            "arc_cap": self.arc_cap,
            "exponent": format_rational(self.exponent),
        }


def core_bound(chi_abs: int) -> BoundReport:
    """Bound for a map whose core characteristic has absolute value ``chi_abs``."""
    if isinstance(chi_abs, bool) or not isinstance(chi_abs, int) or chi_abs < 1:
        raise NonPositiveChi(f"|chi(f)| must be a positive integer, got {chi_abs!r}")
    cap = 3 * chi_abs
    return BoundReport(chi_abs, cap, Fraction(1, cap))
