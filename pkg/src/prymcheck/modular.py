"""Riemann-Hurwitz genus, Gamma_0(N) index and the boundary degree bookkeeping."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class RamProfile:
    degree: int
    branch_points: tuple  # one partition of ``degree`` per branch point

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        for part in self.branch_points:
            if any(e < 1 for e in part) or sum(part) != self.degree:
                raise ValueError(f"{part} is not a partition of {self.degree}")

    def ramification_mass(self):
        return sum(e - 1 for part in self.branch_points for e in part)


# pi: X_0(7) -> X(1) over j = 0, j = 1728 and the cusp.  The elliptic-point
# profiles follow from nu_3(7) = 2 and nu_2(7) = 0; the cusp fibre is one
# unramified point and one point of index 7.
X0_7_PROFILE = RamProfile(8, ((3, 3, 1, 1), (2, 2, 2, 2), (7, 1)))


def riemann_hurwitz_genus(profile, base_genus=0):
    """g = 1 + d (h - 1) + R/2; returned as a Fraction so integrality is checkable."""
    return 1 + profile.degree * (base_genus - 1) + Fraction(profile.ramification_mass(), 2)


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def gamma0_index(N):
    """[SL2(Z) : Gamma_0(N)] = N * prod_{q | N} (1 + 1/q)."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    idx = Fraction(N)
    for q in prime_factors(N):
        idx *= Fraction(q + 1, q)
    assert idx.denominator == 1
    return int(idx)


def p1_points(N):
    """Enumerate P^1(Z/N): pairs (u, v) with gcd(u, v, N) = 1 modulo unit scaling."""
    units = [a for a in range(1, N + 1) if gcd(a, N) == 1]
    seen, reps = set(), []
    for u in range(N):
        for v in range(N):
            if gcd(gcd(u, v), N) != 1 or (u, v) in seen:
                continue
            reps.append((u, v))
            seen.update(((a * u) % N, (a * v) % N) for a in units)
    return reps


def p1_count(N):
    return len(p1_points(N))


def projection_degree(curve_degree, from_point_on_curve=True):
    """Degree of the projection of a plane curve of degree d from a point."""
    return curve_degree - 1 if from_point_on_curve else curve_degree


@dataclass(frozen=True)
class LocalDegree:
    value: int
    trace: str


def local_degree_S1():
    # E embedded as a plane cubic by |3*0|; the fibre map is projection from 0 in E.
    d = projection_degree(3, from_point_on_curve=True)
    return LocalDegree(d, "E -> P^1 is projection of a plane cubic from the point 0 on it: 3 - 1 = 2")


def local_degree_S2(N=7):
    d = gamma0_index(N)
    return LocalDegree(d, f"fibre map is X_0({N}) -> X(1), of degree [SL2(Z):Gamma_0({N})] = {d}")


def total_degree(N=7):
    return local_degree_S1().value + local_degree_S2(N).value


@dataclass(frozen=True)
class CuspData:
    widths: tuple
    polygons: dict  # width -> (Neron polygon, boundary cover type)


def cusp_data(N=7):
    if N != 7:
        raise ValueError("cusp data is only tabulated for N = 7")
    # cusp infinity: width 1, Tate curve with mu_7 -> 1-gon;
    # cusp 0: width 7 -> 7-gon.
    return CuspData(widths=(1, 7), polygons={1: ("1-gon", "iii"), 7: ("7-gon", "iv")})
