"""Exact arithmetic in Q(zeta_p) and in Q[c1, c2]/(c1^p - 1, c2^p - 1).

Cyclotomic elements are stored in the power basis 1, z, ..., z^(p-2) with
rational coordinates.  Every operation returns a reduced element, so two
elements are equal exactly when their coordinate tuples are equal.
"""

from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

# Scalars are plain fractions; Fraction keeps lowest terms with a positive denominator.
Rational = Fraction

DEFAULT_P = 7
_F0 = Fraction(0)


class ConductorMismatch(ValueError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _common_denominator(coords):
    """(integer numerators, d) with coords[k] == nums[k] / d."""
    d = 1
    for c in coords:
        d = d * c.denominator // gcd(d, c.denominator)
    return [c.numerator * (d // c.denominator) for c in coords], d


def _reduce_cyclic(full, p):
    """Fold a length-p vector (coefficients mod z^p - 1) onto the power basis."""
    top = full[p - 1]
    return tuple(c - top for c in full[: p - 1])


class CycloElem:
    """Element of the cyclotomic field Q(zeta_p), p an odd prime."""

    __slots__ = ("p", "coords")

    def __init__(self, coords, p=DEFAULT_P):
        if p < 3 or not _is_prime(p):
            raise ValueError(f"conductor must be an odd prime, got {p}")
        coords = [Fraction(c) for c in coords]
        if len(coords) > p - 1:
            full = [Fraction(0)] * p
            for k, c in enumerate(coords):
                full[k % p] += c
            coords = list(_reduce_cyclic(full, p))
        else:
            coords += [Fraction(0)] * (p - 1 - len(coords))
        self.p = p
        self.coords = tuple(coords)

    # constructors ---------------------------------------------------------

    @classmethod
    def _raw(cls, coords, p):
        obj = object.__new__(cls)
        obj.p = p
        obj.coords = coords
        return obj

    @classmethod
    def zero(cls, p=DEFAULT_P):
        return cls._raw((Fraction(0),) * (p - 1), p)

    @classmethod
    def one(cls, p=DEFAULT_P):
        return cls.scalar(1, p)

    @classmethod
    def scalar(cls, q, p=DEFAULT_P):
        return cls._raw((Fraction(q),) + (Fraction(0),) * (p - 2), p)

    @classmethod
    def root(cls, k=1, p=DEFAULT_P):
        """zeta^k for any integer k."""
        full = [Fraction(0)] * p
        full[k % p] = Fraction(1)
        return cls._raw(_reduce_cyclic(full, p), p)

    zeta = root

    def zero_like(self):
        return CycloElem.zero(self.p)

    def one_like(self):
        return CycloElem.one(self.p)

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.p != self.p:
                raise ConductorMismatch(f"conductors {self.p} and {other.p} differ")
            return other
        if isinstance(other, (int, _RationalABC)):
            return CycloElem.scalar(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem._raw(tuple(a + b for a, b in zip(self.coords, other.coords)), self.p)

    __radd__ = __add__

    def __neg__(self):
        return CycloElem._raw(tuple(-a for a in self.coords), self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem._raw(tuple(a - b for a, b in zip(self.coords, other.coords)), self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # multiply integer numerators over a common denominator, divide once at the end
        p = self.p
        xs, dx = _common_denominator(self.coords)
        ys, dy = _common_denominator(other.coords)
        full = [0] * p
        for i, a in enumerate(xs):
            if not a:
                continue
            for j, b in enumerate(ys):
                if b:
                    full[(i + j) % p] += a * b
        d, top = dx * dy, full[p - 1]
        return CycloElem._raw(tuple(Fraction(c - top, d) if c != top else _F0 for c in full[: p - 1]), p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.one_like()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self):
        """Field norm to Q: product of all Galois conjugates."""
        prod = self.one_like()
        for k in range(1, self.p):
            prod = prod * self.galois(k)
        assert all(c == 0 for c in prod.coords[1:])
        return prod.coords[0]

    def inverse(self):
        # x^{-1} = (product of the nontrivial conjugates) / N(x)
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        others = self.one_like()
        for k in range(2, self.p):
            others = others * self.galois(k)
        n = (self * others).coords[0]
        return CycloElem._raw(tuple(c / n for c in others.coords), self.p)

    def galois(self, k):
        """Image under the automorphism zeta -> zeta^k."""
        p = self.p
        if gcd(k, p) != 1:
            raise ValueError(f"k={k} is not coprime to p={p}")
        full = [Fraction(0)] * p
        for e, c in enumerate(self.coords):
            if c:
                full[(e * k) % p] += c
        return CycloElem._raw(_reduce_cyclic(full, p), p)

    # comparison -------------------------------------------------------------

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.p == other.p and self.coords == other.coords
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coords))

    def __repr__(self):
        terms = []
        for e, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return body if self.p == DEFAULT_P else f"{body} (p={self.p})"


def galois_apply(x, k):
    return x.galois(k)


def cyclo_add(x, y):
    return x + y


def cyclo_mul(x, y):
    return x * y


def cyclo_neg(x):
    return -x


def cyclo_inv(x):
    return x.inverse()


class TorusPoly:
    """Element of Q[c1, c2]/(c1^p - 1, c2^p - 1) as a p x p coefficient grid.

    Entry (i, j) is the coefficient of c1^i c2^j.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs=None, p=DEFAULT_P):
        """``coeffs`` is a mapping {(i, j): q} or a p x p nested sequence."""
        grid = [[Fraction(0)] * p for _ in range(p)]
        if coeffs is None:
            pass
        elif hasattr(coeffs, "items"):
            for (i, j), c in coeffs.items():
                grid[i % p][j % p] += Fraction(c)
        else:
            rows = list(coeffs)
            if len(rows) != p or any(len(r) != p for r in rows):
                raise ValueError(f"coefficient grid must be {p}x{p}")
            grid = [[Fraction(c) for c in r] for r in rows]
        self.p = p
        self.coeffs = tuple(tuple(r) for r in grid)

    @classmethod
    def _raw(cls, coeffs, p):
        obj = object.__new__(cls)
        obj.p = p
        obj.coeffs = coeffs
        return obj

    @classmethod
    def monomial(cls, i, j, coeff=1, p=DEFAULT_P):
        return cls({(i, j): coeff}, p)

    @classmethod
    def const(cls, q, p=DEFAULT_P):
        return cls({(0, 0): q}, p)

    @classmethod
    def c1(cls, p=DEFAULT_P):
        return cls.monomial(1, 0, p=p)

    @classmethod
    def c2(cls, p=DEFAULT_P):
        return cls.monomial(0, 1, p=p)

    def zero_like(self):
        return TorusPoly(p=self.p)

    def one_like(self):
        return TorusPoly.const(1, self.p)

    def terms(self):
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    def _coerce(self, other):
        if isinstance(other, TorusPoly):
            if other.p != self.p:
                raise ConductorMismatch(f"conductors {self.p} and {other.p} differ")
            return other
        if isinstance(other, (int, _RationalABC)):
            return TorusPoly.const(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TorusPoly._raw(
            tuple(
                tuple(a + b if b else a for a, b in zip(r, s))
                for r, s in zip(self.coeffs, other.coeffs)
            ),
            self.p,
        )

    __radd__ = __add__

    def __neg__(self):
        return TorusPoly._raw(tuple(tuple(-a if a else a for a in r) for r in self.coeffs), self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        lhs, rhs = list(self.terms()), list(other.terms())
        xs, dx = _common_denominator([a for _, _, a in lhs])
        ys, dy = _common_denominator([b for _, _, b in rhs])
        grid = [[0] * p for _ in range(p)]
        for (i, j, _), a in zip(lhs, xs):
            for (k, l, _), b in zip(rhs, ys):
                grid[(i + k) % p][(j + l) % p] += a * b
        d = dx * dy
        return TorusPoly._raw(tuple(tuple(Fraction(c, d) if c else _F0 for c in r) for r in grid), p)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("TorusPoly is not a field; negative powers unsupported")
        result = self.one_like()
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, a, b):
        """Ring homomorphism c1 -> zeta^a, c2 -> zeta^b into Q(zeta_p)."""
        p = self.p
        full = [Fraction(0)] * p
        for i, j, c in self.terms():
            full[(i * a + j * b) % p] += c
        return CycloElem._raw(_reduce_cyclic(full, p), p)

    def swap(self):
        """Exchange the roles of c1 and c2."""
        p = self.p
        return TorusPoly._raw(
            tuple(tuple(self.coeffs[j][i] for j in range(p)) for i in range(p)), p
        )

    def is_zero(self):
        return not any(any(r) for r in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, TorusPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, (int, _RationalABC)):
            return self == TorusPoly.const(other, self.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        out = []
        for i, j, c in self.terms():
            mono = "*".join(
                m for m in (
                    "" if i == 0 else ("c1" if i == 1 else f"c1^{i}"),
                    "" if j == 0 else ("c2" if j == 1 else f"c2^{j}"),
                ) if m
            )
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ") if out else "0"


def torus_mul(f, g):
    return f * g


def torus_eval(f, a, b):
    return f.evaluate(a, b)
