import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import matrices, random_matrix
from oracles import float_radius
from pennercert.errors import Acyclic, GapNotReached, NonPositiveWitness, NotIrreducible
from pennercert.family import claim_operator
from pennercert.intmatrix import ConeVector, from_rows, identity
from pennercert.spectral import (
    SpectralInterval,
    _PowerIteration,
    collatz_wielandt,
    component_enclosures,
    dominant_component,
    interval_from_json,
    root_lower,
    root_upper,
    spectral_radius,
)

GOLDEN = (1 + math.sqrt(5)) / 2


def test_collatz_wielandt_examples(fib):
    I = collatz_wielandt(from_rows([[2]]), ConeVector((1,)))
    assert (I.lower, I.upper) == (2, 2)
    I = collatz_wielandt(fib, ConeVector((1, 1)))
    assert (I.lower, I.upper) == (1, 2)
    I = collatz_wielandt(fib, ConeVector((2, 3)))
    assert (I.lower, I.upper) == (Fraction(3, 2), Fraction(5, 3))
    assert I.contains(GOLDEN)


def test_collatz_wielandt_errors(fib):
    with pytest.raises(NotIrreducible):
        collatz_wielandt(claim_operator(3), ConeVector((1, 1, 1)))
    with pytest.raises(NonPositiveWitness):
        collatz_wielandt(fib, ConeVector((0, 1)))


@settings(max_examples=100)
@given(matrices(5, 3))
def test_row_sum_bounds_with_ones_witness(A):
    from pennercert.digraph import is_irreducible
    if not is_irreducible(A):
        return
    I = collatz_wielandt(A, ConeVector((1,) * A.n))
    assert min(A.row_sums()) == I.lower
    assert I.upper == max(A.row_sums())


def test_identity_is_exact():
    I = spectral_radius(identity(3), Fraction(1, 1000))
    assert (I.lower, I.upper) == (1, 1)


@pytest.mark.parametrize("k", [2, 5, 8, 13])
def test_claim_operator_exact(k):
    I = spectral_radius(claim_operator(k), Fraction(1, 3))
    assert (I.lower, I.upper) == (2, 2)


def test_fibonacci_golden_ratio(fib):
    gap = Fraction(1, 10**6)
    I = spectral_radius(fib, gap)
    assert I.width <= gap
    assert I.contains(GOLDEN)
    # exact check against the quadratic: lower^2 - lower - 1 < 0 < upper^2 - upper - 1
    assert I.lower**2 - I.lower - 1 < 0 < I.upper**2 - I.upper - 1


def test_imprimitive_component():
    # bipartite, period 2, rho = sqrt(5)
    A = from_rows([[0, 1, 2], [1, 0, 0], [2, 0, 0]])
    gap = Fraction(1, 10**8)
    I = spectral_radius(A, gap)
    assert I.width <= gap
    assert I.lower**2 <= 5 <= I.upper**2


def test_exact_root_helpers():
    assert root_lower(Fraction(9, 4), 2, 10) == Fraction(3, 2)
    assert root_upper(Fraction(8), 3, 10) == 2
    lo, hi = root_lower(Fraction(2), 2, 30), root_upper(Fraction(2), 2, 30)
    assert lo**2 <= 2 <= hi**2
    assert hi - lo <= Fraction(2, 2**30)


def test_soundness_against_float_oracle(rng):
    gap = Fraction(1, 10**6)
    for _ in range(150):
        A = random_matrix(rng, rng.randint(1, 5), 3)
        I = spectral_radius(A, gap)
        assert I.width <= gap
        assert I.contains(float_radius(A.to_lists()), tol=1e-6)


def test_monotone_refinement(fib):
    A = from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    for M in (fib, A, claim_operator(2) @ claim_operator(2)):
        from pennercert.digraph import is_irreducible
        if not is_irreducible(M):
            continue
        it = _PowerIteration(M)
        prev = None
        for t in range(1, 12):
            try:
                it.refine(Fraction(1, 10**30), t)
            except GapNotReached:
                pass
            if prev is not None:
                assert it.lower >= prev[0] and it.upper <= prev[1]
            prev = (it.lower, it.upper)


def test_scc_max_identity(rng):
    for _ in range(40):
        A = random_matrix(rng, rng.randint(2, 6), 3)
        gap = Fraction(1, 10**5)
        I = spectral_radius(A, gap)
        encs = component_enclosures(A, gap)
        assert I.upper == max(e.interval.upper for e in encs)
        assert I.lower == max(e.interval.lower for e in encs)


def test_permutation_invariance(rng):
    for _ in range(60):
        n = rng.randint(2, 5)
        A = random_matrix(rng, n, 3)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        gap = Fraction(1, 10**6)
        assert spectral_radius(A, gap) == spectral_radius(A.permuted(perm), gap)


def test_gap_not_reached_reports_partial(fib):
    with pytest.raises(GapNotReached) as info:
        spectral_radius(fib, Fraction(1, 10**40), max_iter=3)
    part = info.value.interval
    assert part is not None and part.contains(GOLDEN)


def test_dominant_component_examples(fib):
    dom = dominant_component(claim_operator(9))
    assert dom.vertices == (2,)
    assert (dom.interval.lower, dom.interval.upper) == (2, 2)
    # block diagonal Fibonacci + [[3]]
    A = from_rows([[0, 1, 0], [1, 1, 0], [0, 0, 3]])
    verts, interval = dominant_component(A)
    assert verts == (3,) and interval.lower == 3
    with pytest.raises(Acyclic):
        dominant_component(from_rows([[0, 1, 5], [0, 0, 2], [0, 0, 0]]))


def test_dominant_component_reports_ties():
    A = from_rows([[2, 1, 0], [0, 0, 0], [0, 1, 2]])
    dom = dominant_component(A)
    assert dom.vertices == (1,)
    assert set(dom.ties) == {(1,), (3,)}


def test_dominant_component_against_feeding_block():
    # Fibonacci block {1,2} (golden ratio) feeds {3,4,5}, whose radius is
    # ~1.3247 (x^3 = x + 1)
    A = from_rows([
        [0, 1, 0, 0, 1],
        [1, 1, 0, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 1, 1, 0],
    ])
    dom = dominant_component(A)
    rho = float_radius(A.to_lists())
    assert dom.vertices == (1, 2)
    assert dom.interval.contains(rho, tol=1e-9)
    assert not dom.ties


def test_interval_json_roundtrip():
    I = SpectralInterval(Fraction(3, 2), Fraction(5, 3))
    assert I.to_json() == '{"lower": "3/2", "upper": "5/3"}'
    assert interval_from_json(I.to_json()) == I
    assert SpectralInterval(2, 2).to_dict() == {"lower": "2/1", "upper": "2/1"}
