"""Achievable dimensions sum(r_v * s_v) of Shimura moduli with given signature size."""

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True)
class SignatureProblem:
    e0: int  # degree of the totally real subfield
    m: int  # dim P / e0

    def __post_init__(self):
        if self.e0 < 1 or self.m < 1:
            raise ValueError(f"need e0 >= 1 and m >= 1, got {self}")


# Q(zeta_7): totally real subfield of degree 3, dim P = 6.
PRESET_2_7 = SignatureProblem(e0=3, m=2)
# Q(zeta_6) = Q(sqrt(-3)): e0 = 1, dim P = 5.
PRESET_2_6 = SignatureProblem(e0=1, m=5)


@dataclass(frozen=True)
class SignatureDims:
    dims: tuple
    maximum: int
    maximizers: tuple  # signatures ((r_1, s_1), ..., (r_e0, s_e0)) reaching the maximum


def signatures(problem):
    m = problem.m
    for rs in product(range(m + 1), repeat=problem.e0):
        yield tuple((r, m - r) for r in rs)


def signature_dims(problem):
    by_dim = {}
    for sig in signatures(problem):
        by_dim.setdefault(sum(r * s for r, s in sig), []).append(sig)
    top = max(by_dim)
    return SignatureDims(tuple(sorted(by_dim)), top, tuple(by_dim[top]))


def dim_R(g, p=7):
    """dim R_{g,p} = dim M_g = 3g - 3 (the cover data is discrete)."""
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    return 3 * g - 3


@dataclass(frozen=True)
class ClaimReport:
    problem: SignatureProblem
    dims: tuple
    target: int
    holds: bool


def check_26_claim(problem=PRESET_2_6, target=3):
    """True iff ``target`` is not an achievable dimension for ``problem``."""
    dims = signature_dims(problem).dims
    return ClaimReport(problem, dims, target, target not in dims)
