"""Dense exact linear algebra over CycloElem, Fraction and TorusPoly entries.

Over a field the determinant uses fraction-free (Bareiss) elimination and
rank/kernel use reduced row echelon form.  TorusPoly has zero divisors, so
its determinant is only offered through the Leibniz expansion for n <= 4.
"""

from fractions import Fraction
from itertools import permutations

from .cyclo import CycloElem

MAX_RING_DET = 4


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(r) for r in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        cols = len(entries[0])
        if any(len(r) != cols for r in entries):
            raise ValueError("rows have different lengths")
        conductors = {e.p for r in entries for e in r if hasattr(e, "p")}
        if len(conductors) > 1:
            raise ValueError(f"entries mix conductors {sorted(conductors)}")
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "ExactMatrix([\n" + ",\n".join(f"  {list(r)!r}" for r in self.entries) + "\n])"

    def __matmul__(self, other):
        return matmul(self, other)

    def map(self, fn):
        return ExactMatrix([[fn(e) for e in r] for r in self.entries])

    def column(self, j):
        return [r[j] for r in self.entries]

    def transpose(self):
        return ExactMatrix(list(zip(*self.entries)))

    @property
    def is_square(self):
        return self.rows == self.cols


def _zero(x):
    return x.zero_like() if hasattr(x, "zero_like") else Fraction(0)


def _one(x):
    return x.one_like() if hasattr(x, "one_like") else Fraction(1)


def _is_field_element(x):
    return isinstance(x, (CycloElem, Fraction, int))


def identity(n, like=Fraction(1)):
    one, zero = _one(like), _zero(like)
    return ExactMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])


def matmul(a, b):
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    zero = _zero(a[0, 0])
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = zero
            for k in range(a.cols):
                acc = acc + a[i, k] * b[k, j]
            row.append(acc)
        out.append(row)
    return ExactMatrix(out)


def _perm_sign(perm):
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(m):
    """Sum over permutations; valid in any commutative ring."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    acc = _zero(m[0, 0])
    for perm in permutations(range(n)):
        term = _one(m[0, 0])
        for i in range(n):
            term = term * m[i, perm[i]]
        acc = acc + term if _perm_sign(perm) > 0 else acc - term
    return acc


def det_bareiss(m):
    """Fraction-free elimination; requires exact division (field entries)."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = [list(r) for r in m.entries]
    one = _one(a[0][0])
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for s in range(k + 1, n):
                if a[s][k]:
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return _zero(one)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det(m):
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    if _is_field_element(m[0, 0]):
        return det_bareiss(m)
    if m.rows > MAX_RING_DET:
        raise ValueError(
            f"determinant over {type(m[0, 0]).__name__} only supported up to {MAX_RING_DET}x{MAX_RING_DET}"
        )
    return det_leibniz(m)


def rref(m):
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    a = [list(r) for r in m.entries]
    if not _is_field_element(a[0][0]):
        raise TypeError("row reduction needs field entries")
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = _one(a[r][c]) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m):
    return len(rref(m)[1])


def kernel_basis(m):
    """Basis of {x : m x = 0}, one vector per free column in ascending order.

    The free coordinate is set to 1, the other free coordinates to 0, and
    pivot coordinates are read off the reduced echelon form.
    """
    a, pivots = rref(m)
    zero, one = _zero(m[0, 0]), _one(m[0, 0])
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f]
        basis.append(v)
    return basis


def apply(m, v):
    zero = _zero(m[0, 0])
    out = []
    for row in m.entries:
        acc = zero
        for x, y in zip(row, v):
            acc = acc + x * y
        out.append(acc)
    return out
