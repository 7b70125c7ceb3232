"""The 3x3 boundary multiplication matrix over the gluing constants c1, c2.

On the curve made of two rational components meeting in three points, the
section of omega twisted by eta^i restricted to one component is
a_i x + b_i y with a_i = c1^i - 1, b_i = c2^i - 1.  Multiplying the sections
for i and 7 - i gives a quadratic form; the three forms for i = 1, 2, 3 are
the rows of A.

Two versions of A are built: the reference ("printed") matrix with middle
entries 2 - c1^i c2^j - c1^j c2^i, and the matrix whose middle column is the
xy-coefficient a_i b_j + a_j b_i of the product.  They
differ in the middle column only, and their determinants differ by a sign.
"""

from dataclasses import dataclass

from .cyclo import TorusPoly
from .linalg import ExactMatrix, det

P = 7


def _c1_pow(k):
    return TorusPoly.monomial(k, 0, p=P)


def _c2_pow(k):
    return TorusPoly.monomial(0, k, p=P)


@dataclass(frozen=True)
class SectionCoeffs:
    index: int
    a: TorusPoly
    b: TorusPoly


@dataclass(frozen=True)
class QuadraticForm:
    xx: TorusPoly
    xy: TorusPoly
    yy: TorusPoly

    def row(self):
        return (self.xx, self.xy, self.yy)


def build_section(i):
    if not 1 <= i <= P - 1:
        raise ValueError(f"section index must be in 1..{P - 1}, got {i}")
    return SectionCoeffs(i, _c1_pow(i) - 1, _c2_pow(i) - 1)


def build_product(i):
    """Coefficients of f_i * f_{7-i}."""
    if not 1 <= i <= 3:
        raise ValueError(f"product index must be in 1..3, got {i}")
    s, t = build_section(i), build_section(P - i)
    return QuadraticForm(xx=s.a * t.a, xy=s.a * t.b + t.a * s.b, yy=s.b * t.b)


def printed_row(i):
    j = P - i
    return (
        2 - _c1_pow(i) - _c1_pow(j),
        2 - TorusPoly.monomial(i, j, p=P) - TorusPoly.monomial(j, i, p=P),
        2 - _c2_pow(i) - _c2_pow(j),
    )


def matrix_A_printed():
    return ExactMatrix([printed_row(i) for i in (1, 2, 3)])


def matrix_A_derived():
    return ExactMatrix([build_product(i).row() for i in (1, 2, 3)])


VARIANTS = {"printed": matrix_A_printed, "derived": matrix_A_derived}


def det_formula():
    """7 * F(c1, c2) with F the closed form of det(A) / 7."""
    terms = [
        (6, 3, 1), (6, 5, -1),
        (5, 6, 1), (5, 3, -1),
        (4, 2, 1), (4, 1, -1),
        (3, 5, 1), (3, 6, -1),
        (2, 1, 1), (2, 4, -1),
        (1, 4, 1), (1, 2, -1),
    ]
    return TorusPoly({(i, j): 7 * s for i, j, s in terms}, p=P)


@dataclass(frozen=True)
class VariantCheck:
    name: str
    determinant: TorusPoly
    symbolic_equal: bool  # det == 7F in the quotient ring
    pointwise_equal: bool  # det == 7F at all 49 evaluation points
    symbolic_negated: bool  # det == -7F
    pointwise_negated: bool


@dataclass(frozen=True)
class DetIdentityReport:
    variants: tuple
    authoritative: str | None
    outer_columns_agree: bool  # columns xx and yy coincide between the variants
    middle_column_relation: bool  # printed middle = xx + yy - derived middle

    @property
    def satisfied_by(self):
        return tuple(v.name for v in self.variants if v.symbolic_equal and v.pointwise_equal)


def _all_points():
    return [(a, b) for a in range(P) for b in range(P)]


def _pointwise_equal(f, g):
    return all(f.evaluate(a, b) == g.evaluate(a, b) for a, b in _all_points())


def verify_det_identity():
    target = det_formula()
    checks = []
    for name, build in VARIANTS.items():
        d = det(build())
        checks.append(
            VariantCheck(
                name=name,
                determinant=d,
                symbolic_equal=d == target,
                pointwise_equal=_pointwise_equal(d, target),
                symbolic_negated=d == -target,
                pointwise_negated=_pointwise_equal(d, -target),
            )
        )
    printed, derived = matrix_A_printed(), matrix_A_derived()
    outer = all(printed.column(k) == derived.column(k) for k in (0, 2))
    middle = all(
        printed[r, 1] == printed[r, 0] + printed[r, 2] - derived[r, 1] for r in range(3)
    )
    good = [c.name for c in checks if c.symbolic_equal and c.pointwise_equal]
    return DetIdentityReport(
        variants=tuple(checks),
        authoritative=good[0] if good else None,
        outer_columns_agree=outer,
        middle_column_relation=middle,
    )


def authoritative_matrix():
    name = verify_det_identity().authoritative
    if name is None:
        raise RuntimeError("no matrix variant satisfies the determinant identity")
    return VARIANTS[name]()


def det_at(matrix, a, b):
    """Determinant of the entrywise evaluation at c1 = z^a, c2 = z^b."""
    return det(matrix.map(lambda e: e.evaluate(a, b)))


def vanishing_sweep(matrix=None):
    """table[a][b] is True when det A(z^a, z^b) != 0."""
    if matrix is None:
        matrix = authoritative_matrix()
    return [[bool(det_at(matrix, a, b)) for b in range(P)] for a in range(P)]


def predicted_nonvanishing(a, b):
    """Nonzero exactly off c1 = 1, c2 = 1, with c2 = c1^k for k in {3, 5}."""
    a, b = a % P, b % P
    return a != 0 and b != 0 and (b in ((3 * a) % P, (5 * a) % P))


def render_table(table):
    lines = ["a\\b " + " ".join(str(b) for b in range(P))]
    for a, row in enumerate(table):
        lines.append(f"  {a} " + " ".join("#" if x else "." for x in row))
    return "\n".join(lines)
