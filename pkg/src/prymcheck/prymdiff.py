"""Formal algebra of Prym differentials on the boundary covers.

The differentials w_1..w_7 are treated as a formal basis permuted cyclically
by sigma.  Index conventions: indices are 1..7 and wrap mod 7, so w_8 = w_1
and w_0 = w_7.  The eigenbasis is W_i = sum_j z^(ij) w_j with z = zeta_7.
"""

from dataclasses import dataclass
from functools import lru_cache

from .cyclo import CycloElem
from .linalg import ExactMatrix, kernel_basis, rank

P = 7


def _wrap(j):
    """Map any integer to the index range 1..7."""
    return (j - 1) % P + 1


def rho(k=1):
    return CycloElem.root(k, P)


_ZERO = CycloElem.zero(P)
_ONE = CycloElem.one(P)


@dataclass(frozen=True)
class OmegaVector:
    coords: tuple  # coefficient of w_1, ..., w_7

    def __post_init__(self):
        if len(self.coords) != P:
            raise ValueError(f"need {P} coordinates")

    def __getitem__(self, j):
        return self.coords[_wrap(j) - 1]

    def __add__(self, other):
        return OmegaVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, c):
        return OmegaVector(tuple(c * a for a in self.coords))

    __rmul__ = scale


@dataclass(frozen=True)
class TensorElem:
    coords: tuple  # coords[a-1][b-1] = coefficient of w_a (x) w_b

    def __getitem__(self, ab):
        a, b = ab
        return self.coords[_wrap(a) - 1][_wrap(b) - 1]

    def __add__(self, other):
        return TensorElem(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        return self + other.scale(-_ONE)

    def scale(self, c):
        return TensorElem(tuple(tuple(c * x for x in r) for r in self.coords))

    __rmul__ = scale

    def is_zero(self):
        return all(x.is_zero() for r in self.coords for x in r)

    @classmethod
    def zero(cls):
        return cls(tuple(tuple(_ZERO for _ in range(P)) for _ in range(P)))


@dataclass(frozen=True)
class SymCoords:
    """a, b, c: coefficients of W1W6, W2W5, W3W4."""

    a: CycloElem
    b: CycloElem
    c: CycloElem

    def as_tuple(self):
        return (self.a, self.b, self.c)

    @classmethod
    def of(cls, a, b, c):
        return cls(*(x if isinstance(x, CycloElem) else CycloElem.scalar(x, P) for x in (a, b, c)))


def omega(j):
    if not 1 <= j <= P:
        raise ValueError(f"omega index must be in 1..{P}, got {j}")
    return OmegaVector(tuple(_ONE if k == j else _ZERO for k in range(1, P + 1)))


def big_omega(i):
    if not 0 <= i <= P - 1:
        raise ValueError(f"Omega index must be in 0..{P - 1}, got {i}")
    return OmegaVector(tuple(rho(i * j) for j in range(1, P + 1)))


def sigma_pullback(v):
    # sigma^* w_j = w_{j-1}: since w_j = (sigma^{-j})^* w_1, pulling back by sigma
    # lowers the index by one.  Coefficient of w_k in the image is v[k+1].
    return OmegaVector(tuple(v[k + 1] for k in range(1, P + 1)))


def tensor(u, v):
    return TensorElem(tuple(tuple(x * y for y in v.coords) for x in u.coords))


def psi(i):
    """psi_i = sum_j w_j (x) w_{j+i-1}."""
    if not 1 <= i <= P:
        raise ValueError(f"psi index must be in 1..{P}, got {i}")
    rows = []
    for a in range(1, P + 1):
        target = _wrap(a + i - 1)
        rows.append(tuple(_ONE if b == target else _ZERO for b in range(1, P + 1)))
    return TensorElem(tuple(rows))


def psi_decompose(t):
    """Coefficients {i: c_i} with t = sum c_i psi_i; raises if t is off the psi span."""
    coeffs = {}
    for i in range(1, P + 1):
        coeffs[i] = t[1, i]
    rebuilt = TensorElem.zero()
    for i, c in coeffs.items():
        rebuilt = rebuilt + psi(i).scale(c)
    if not (rebuilt - t).is_zero():
        raise ValueError("tensor is not a combination of the cyclic diagonals psi_i")
    return coeffs


def expand_pair(i):
    """W_i (x) W_{7-i} and its expansion in the psi basis."""
    if i not in (1, 2, 3):
        raise ValueError(f"pair index must be 1, 2 or 3, got {i}")
    t = tensor(big_omega(i), big_omega(P - i))
    return t, psi_decompose(t)


def symmetrize(t):
    """Image in Sym^2: {(a, b) with a <= b: coefficient of w_a w_b}."""
    out = {}
    for a in range(1, P + 1):
        for b in range(1, P + 1):
            key = (min(a, b), max(a, b))
            out[key] = out.get(key, _ZERO) + t[a, b]
    return out


def cyclic_sym_sum(s):
    """The symmetric tensor sum_j w_j w_{j+s} as a Sym^2 coordinate dict."""
    out = {}
    for j in range(1, P + 1):
        a, b = j, _wrap(j + s)
        key = (min(a, b), max(a, b))
        out[key] = out.get(key, _ZERO) + _ONE
    return out


def combination(s):
    t = TensorElem.zero()
    for i, x in zip((1, 2, 3), s.as_tuple()):
        t = t + expand_pair(i)[0].scale(x)
    return t


def phi_grouped_coeffs(s):
    """(d0, d1, d2, d3): coefficients of sum w_j^2 and sum_j w_j w_{j+k}, k = 1, 2, 3.

    Computed by symmetrizing a W1W6 + b W2W5 + c W3W4 and reading off the
    coefficient at a representative monomial of each cyclic class; the
    result is checked to be exactly that combination of the four sums.
    """
    sym = symmetrize(combination(s))
    d = []
    for k in range(4):
        a, b = 1, _wrap(1 + k)
        d.append(sym[(min(a, b), max(a, b))] if k else sym[(1, 1)])
    rebuilt = {}
    for k, dk in enumerate(d):
        for key, mult in cyclic_sym_sum(k).items():
            rebuilt[key] = rebuilt.get(key, _ZERO) + dk * mult
    if any(sym.get(key, _ZERO) != rebuilt.get(key, _ZERO) for key in set(sym) | set(rebuilt)):
        raise AssertionError("symmetrized tensor is not in the span of the cyclic sums")
    return tuple(d)


@lru_cache(maxsize=None)
def phi_condition_row():
    """Coefficient of psi_1 in each basis element; phi vanishes iff this row kills (a, b, c)."""
    return tuple(expand_pair(i)[1][1] for i in (1, 2, 3))


def phi_matrix():
    return ExactMatrix([list(phi_condition_row())])


def phi_value(s):
    return sum((r * x for r, x in zip(phi_condition_row(), s.as_tuple())), _ZERO)


def restriction_value(s):
    """Value of phi on a component: a+b+c + 6(a+b+c) * sum_{j=1..6} z^j."""
    t = s.a + s.b + s.c
    return t + 6 * t * sum((rho(j) for j in range(1, P)), _ZERO)


def kernel_of_phi():
    return [SymCoords(*v) for v in kernel_basis(phi_matrix())]


def phi_rank():
    return rank(phi_matrix())
