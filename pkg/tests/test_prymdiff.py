import pytest
from hypothesis import given, settings

from prymcheck.cyclo import CycloElem
from prymcheck.linalg import ExactMatrix, rank
from prymcheck.prymdiff import (
    SymCoords,
    TensorElem,
    big_omega,
    combination,
    expand_pair,
    kernel_of_phi,
    omega,
    phi_grouped_coeffs,
    phi_rank,
    phi_value,
    psi,
    restriction_value,
    rho,
    sigma_pullback,
)

from conftest import cyclo_elems


def test_omega_basics():
    assert omega(3).coords[2] == 1 and sum(1 for c in omega(3).coords if c) == 1
    assert all(c == 1 for c in big_omega(0).coords)
    assert big_omega(1)[2] == rho(2)
    with pytest.raises(ValueError):
        omega(0)
    with pytest.raises(ValueError):
        big_omega(7)


def test_eigen_basis_rank():
    assert rank(ExactMatrix([big_omega(i).coords for i in range(1, 7)])) == 6


@pytest.mark.parametrize("i", range(7))
def test_sigma_eigenvalues(i):
    assert sigma_pullback(big_omega(i)) == big_omega(i).scale(rho(i))


def test_sigma_order_seven():
    v = big_omega(2) + omega(5)
    w = v
    for _ in range(7):
        w = sigma_pullback(w)
    assert w == v
    assert sigma_pullback(big_omega(0)) == big_omega(0)


def test_psi_examples():
    p1 = psi(1)
    assert all((p1[a, b] == 1) == (a == b) for a in range(1, 8) for b in range(1, 8))
    assert psi(2)[7, 1] == 1
    total = TensorElem.zero()
    for i in range(1, 8):
        total = total + psi(i)
    assert all(x == 1 for r in total.coords for x in r)
    with pytest.raises(ValueError):
        psi(8)


EXPANSIONS = {
    1: [(1, 0), (7, 1), (6, 2), (5, 3), (4, 4), (3, 5), (2, 6)],
    2: [(1, 0), (4, 1), (7, 2), (3, 3), (6, 4), (2, 5), (5, 6)],
    3: [(1, 0), (3, 1), (5, 2), (7, 3), (2, 4), (4, 5), (6, 6)],
}


@pytest.mark.parametrize("i", [1, 2, 3])
def test_expansions(i):
    t, coeffs = expand_pair(i)
    rebuilt = TensorElem.zero()
    for k, e in EXPANSIONS[i]:
        assert coeffs[k] == rho(e)
        rebuilt = rebuilt + psi(k).scale(rho(e))
    assert (rebuilt - t).is_zero()


def test_expand_pair_range():
    with pytest.raises(ValueError):
        expand_pair(4)


def test_grouped_examples():
    d = phi_grouped_coeffs(SymCoords.of(1, 1, 1))
    assert d[0] == 3 and d[1] + d[2] + d[3] == -3
    assert phi_grouped_coeffs(SymCoords.of(1, -1, 0))[0] == 0
    d = phi_grouped_coeffs(SymCoords.of(1, 0, 0))
    assert d[1:] == (rho(1) + rho(6), rho(2) + rho(5), rho(3) + rho(4))


def test_grouped_brackets():
    a, b, c = (SymCoords.of(*v) for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert phi_grouped_coeffs(b)[1:] == (rho(2) + rho(5), rho(3) + rho(4), rho(1) + rho(6))
    assert phi_grouped_coeffs(c)[1:] == (rho(3) + rho(4), rho(1) + rho(6), rho(2) + rho(5))


@settings(max_examples=30, deadline=None)
@given(cyclo_elems(), cyclo_elems(), cyclo_elems())
def test_grouped_invariants(a, b, c):
    s = SymCoords(a, b, c)
    d0, d1, d2, d3 = phi_grouped_coeffs(s)
    assert d0 == a + b + c
    assert d1 + d2 + d3 == -(a + b + c)
    assert combination(s)[1, 1] == a + b + c
    assert restriction_value(s) == -5 * (a + b + c)


def test_kernel():
    ker = kernel_of_phi()
    assert len(ker) == 2
    assert phi_rank() == 1
    ref = [[1, -1, 0], [1, 0, -1]]
    rows = [list(k.as_tuple()) for k in ker] + [[CycloElem.scalar(x) for x in r] for r in ref]
    assert rank(ExactMatrix(rows)) == 2
    assert phi_value(SymCoords.of(1, 1, 1)) != 0
    for k in ker:
        assert phi_value(k) == 0
        assert -5 * (k.a + k.b + k.c) == 0
