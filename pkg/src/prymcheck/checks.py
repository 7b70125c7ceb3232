"""Verification suites run by the command-line driver.

Each suite is a list of check functions.  A check returns (status, details)
and is timed by ``run_suite``.  Randomized checks draw from the ``rng``
passed in, so a fixed seed gives a fixed report.
"""

import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import covers, modular, mulmap, prymdiff, shimura
from .cyclo import CycloElem
from .linalg import ExactMatrix, det, rank

PASS, FAIL, AMBIGUITY = "pass", "fail", "reported-ambiguity"


@dataclass
class CheckResult:
    id: str
    paper_anchor: str
    status: str
    details: str
    elapsed: float  # milliseconds

    def to_dict(self):
        return asdict(self)


def _verdict(ok):
    return PASS if ok else FAIL


def random_cyclo(rng, p=7, bound=5):
    return CycloElem([Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(p - 1)], p)


# shimura -------------------------------------------------------------------------


def check_shimura_2_7(rng):
    res = shimura.signature_dims(shimura.PRESET_2_7)
    only_balanced = res.maximizers == (((1, 1),) * 3,)
    ok = res.dims == (0, 1, 2, 3) and res.maximum == 3 and only_balanced
    return _verdict(ok), (
        f"(2,7): max dim {res.maximum}; dims {set(res.dims)}; "
        f"maximizers {list(res.maximizers)}"
    )


def check_shimura_equality(rng):
    top = shimura.signature_dims(shimura.PRESET_2_7).maximum
    r = shimura.dim_R(2, 7)
    return _verdict(top == r == 3), f"max dim B_D = {top}, dim R_2,7 = {r}"


def check_shimura_2_6(rng):
    rep = shimura.check_26_claim()
    ok = rep.dims == (0, 4, 6) and rep.holds
    return _verdict(ok), f"(2,6): {{{','.join(map(str, rep.dims))}}}; 3 excluded: {rep.holds}"


def check_shimura_max_formula(rng):
    bad = []
    for e0 in range(1, 5):
        for m in range(1, 9):
            res = shimura.signature_dims(shimura.SignatureProblem(e0, m))
            if res.maximum != e0 * (m // 2) * ((m + 1) // 2):
                bad.append((e0, m))
            if any(tuple((s, r) for r, s in sig) not in res.maximizers for sig in res.maximizers):
                bad.append((e0, m, "asym"))
    return _verdict(not bad), "max = e0*floor(m/2)*ceil(m/2), e0<=4, m<=8" + (f"; failures {bad}" if bad else "")


SHIMURA = [
    ("shimura.dims_2_7", "signature dimension sum r*s, Q(zeta_7)", check_shimura_2_7),
    ("shimura.equality_2_7", "dim B_D = dim R_{2,7} = 3", check_shimura_equality),
    ("shimura.dims_2_6", "signature dimensions, Q(zeta_6)", check_shimura_2_6),
    ("shimura.max_formula", "signature dimension sum r*s", check_shimura_max_formula),
]


# detsweep ------------------------------------------------------------------------


def check_det_identity(rng):
    rep = mulmap.verify_det_identity()
    ok = rep.authoritative is not None
    lines = [
        f"{v.name}: det == 7F symbolic={v.symbolic_equal} pointwise={v.pointwise_equal}; "
        f"det == -7F symbolic={v.symbolic_negated}"
        for v in rep.variants
    ]
    return _verdict(ok), f"authoritative variant: {rep.authoritative}\n" + "\n".join(lines)


def check_det_variants(rng):
    rep = mulmap.verify_det_identity()
    derived = next(v for v in rep.variants if v.name == "derived")
    details = (
        "printed middle column 2 - c1^i c2^j - c1^j c2^i differs from the product "
        "coefficient a_i b_j + a_j b_i; printed = xx + yy - derived "
        f"({rep.middle_column_relation}), outer columns agree ({rep.outer_columns_agree}); "
        f"derived det == -7F ({derived.symbolic_negated}). "
        f"Resolution: sweep uses '{rep.authoritative}'; both share the vanishing set."
    )
    ok = rep.outer_columns_agree and rep.middle_column_relation
    return (AMBIGUITY if ok else FAIL), details


def check_sweep(rng):
    table = mulmap.vanishing_sweep()
    n = sum(map(sum, table))
    match = all(
        table[a][b] == mulmap.predicted_nonvanishing(a, b) for a in range(7) for b in range(7)
    )
    symmetric = all(table[a][b] == table[b][a] for a in range(7) for b in range(7))
    ok = n == 12 and match and symmetric
    return _verdict(ok), f"{n} of 49 cells nonzero; matches k in {{3,5}}: {match}\n" + mulmap.render_table(table)


def check_det_swap(rng):
    d = det(mulmap.authoritative_matrix())
    ok = all(d.evaluate(a, b) == d.swap().evaluate(b, a) for a in range(7) for b in range(7))
    return _verdict(ok), "det(c1, c2) at (a, b) equals swapped det at (b, a)"


def check_det_eval_commutes(rng):
    m = mulmap.authoritative_matrix()
    d = det(m)
    pts = [(a, b) for a in range(7) for b in range(7)]
    ok = all(d.evaluate(a, b) == mulmap.det_at(m, a, b) for a, b in pts)
    return _verdict(ok), "eval(det A) == det(eval A) at all 49 points"


def check_field_axioms(rng):
    failures = 0
    for _ in range(50):
        x, y, z = (random_cyclo(rng) for _ in range(3))
        failures += (x * y) * z != x * (y * z)
        failures += x * (y + z) != x * y + x * z
        if x:
            failures += x * x.inverse() != 1
        k, l = rng.choice([1, 2, 3, 4, 5, 6]), rng.choice([1, 2, 3, 4, 5, 6])
        failures += x.galois(k).galois(l) != x.galois(k * l % 7)
    return _verdict(failures == 0), f"50 random triples, {failures} failures"


DETSWEEP = [
    ("mulmap.det_identity", "det A / 7 closed form", check_det_identity),
    ("mulmap.variant", "xy coefficient of f_i f_{7-i}", check_det_variants),
    ("mulmap.sweep", "det A != 0 iff c2 = c1^3 or c1^5", check_sweep),
    ("mulmap.swap_symmetry", "det A symmetry in c1, c2", check_det_swap),
    ("mulmap.eval_commutes", "gluing constants with c^7 = 1", check_det_eval_commutes),
    ("cyclo.field_axioms", "arithmetic in Q(rho)", check_field_axioms),
]


# differentials -------------------------------------------------------------------

# exponent of rho in the psi_k coefficient of Omega_i (x) Omega_{7-i}
EXPECTED_PSI_EXPANSIONS = {
    1: {1: 0, 7: 1, 6: 2, 5: 3, 4: 4, 3: 5, 2: 6},
    2: {1: 0, 4: 1, 7: 2, 3: 3, 6: 4, 2: 5, 5: 6},
    3: {1: 0, 3: 1, 5: 2, 7: 3, 2: 4, 4: 5, 6: 6},
}


def check_eigen(rng):
    bad = [
        i for i in range(7)
        if prymdiff.sigma_pullback(prymdiff.big_omega(i)) != prymdiff.big_omega(i).scale(prymdiff.rho(i))
    ]
    m = ExactMatrix([prymdiff.big_omega(i).coords for i in range(1, 7)])
    r = rank(m)
    return _verdict(not bad and r == 6), f"sigma^* W_i = rho^i W_i for i=0..6 (failures {bad}); rank(W_1..W_6) = {r}"


def check_psi_expansions(rng):
    bad = []
    for i, expected in EXPECTED_PSI_EXPANSIONS.items():
        _, coeffs = prymdiff.expand_pair(i)
        if any(coeffs[k] != prymdiff.rho(e) for k, e in expected.items()):
            bad.append(i)
    return _verdict(not bad), f"three reference psi-expansions; mismatches {bad}"


def check_phi_kernel(rng):
    ker = prymdiff.kernel_of_phi()
    r = prymdiff.phi_rank()
    span = ExactMatrix([k.as_tuple() for k in ker])
    ref = ExactMatrix([[1, -1, 0], [1, 0, -1]]).map(lambda q: CycloElem.scalar(q))
    same = rank(span) == 2 and rank(ExactMatrix(list(span.entries) + list(ref.entries))) == 2
    vanish = all(prymdiff.restriction_value(k) == 0 and prymdiff.phi_value(k) == 0 for k in ker)
    ok = len(ker) == 2 and r == 1 and same and vanish
    return _verdict(ok), f"dim ker phi = {len(ker)}, rank = {r}, kernel = span{{(1,-1,0),(1,0,-1)}}: {same}"


def check_grouped(rng):
    failures = 0
    for _ in range(20):
        a, b, c = (random_cyclo(rng) for _ in range(3))
        d0, d1, d2, d3 = prymdiff.phi_grouped_coeffs(prymdiff.SymCoords(a, b, c))
        failures += d0 != a + b + c
        failures += d1 + d2 + d3 != -(a + b + c)
        failures += prymdiff.restriction_value(prymdiff.SymCoords(a, b, c)) != -5 * (a + b + c)
    return _verdict(failures == 0), f"20 random (a,b,c): d0 = a+b+c, d1+d2+d3 = -(a+b+c), restriction = -5(a+b+c); {failures} failures"


DIFFERENTIALS = [
    ("prymdiff.eigenbasis", "sigma^*(Omega_i) = rho^i Omega_i", check_eigen),
    ("prymdiff.psi_expansions", "Omega_i (x) Omega_{7-i} in the psi basis", check_psi_expansions),
    ("prymdiff.phi_kernel", "codifferential phi has rank 1", check_phi_kernel),
    ("prymdiff.grouped_coeffs", "Omega_i (x) Omega_{7-i} in the psi basis", check_grouped),
]


# covers ----------------------------------------------------------------------------


def check_cover_genus(rng):
    pa = covers.cover_genus(2, r=0)
    r1 = covers.cover_genus(2, r=1)
    return _verdict(pa == 8 and r1 == 11), f"p_a(C~) = {pa} for g=2, r=0; {r1} for r=1"


def check_prym_numbers(rng):
    d, t = covers.prym_dim(2), covers.polarization_type(2)
    return _verdict(d == 6 and t == (1, 1, 1, 1, 1, 7)), f"dim P = {d}, type {t}"


def check_star_star_instances(rng):
    seen = bad = 0
    for base in covers.BaseType:
        for cand in covers.enumerate_candidates(base):
            if cand.counts is None:
                continue
            seen += 1
            c = cand.counts
            t_up, t_down = covers.torus_dims(c)
            # synthesized cover: torus dims are Betti numbers when connected
            if cand.cover.is_connected():
                bad += (t_up, t_down) != (cand.cover.betti(), base.graph.betti())
            bad += covers.check_star_star(c) != (c.r == 0 and c.comp1 == c.n1)
            bad += (t_up == t_down) != (c.comp1 == c.n1)
    return _verdict(bad == 0), f"{seen} enumerated instances; (**) <=> r=0 and comp1=n1; {bad} failures"


def check_classification(rng):
    cat = covers.fiber_catalog()
    table = "\n".join(f"{b.value}: {list(t) or '-'}" for b, t in cat.by_base.items())
    expected = {
        covers.BaseType.ELLIPTIC_ONE_NODE: ("i",),
        covers.BaseType.TWO_ELLIPTIC: ("ii",),
        covers.BaseType.ELLIPTIC_NODAL_RATIONAL: ("iii", "iv"),
    }
    ok = cat.types == ("i", "ii", "iii", "iv") and all(
        cat.by_base[b] == expected.get(b, ()) for b in covers.BaseType
    )
    return _verdict(ok), f"{len(cat.types)} cover types from {len(cat.nonempty_bases)} base types\n{table}"


def check_fiber_invariants(rng):
    bad = 0
    n = 0
    for base in covers.BaseType:
        for c in covers.classify_fiber(base).witnesses:
            n += 1
            up, down = covers.torus_dims(c.counts)
            bad += not covers.check_star_star(c.counts)
            bad += covers.arithmetic_genus(c.cover) != 7 * covers.arithmetic_genus(base.graph) - 6
            bad += up != down
    return _verdict(bad == 0), f"{n} surviving covers: (**), p_a = 7 p_a(C) - 6, equal torus dims; {bad} failures"


def check_uniqueness(rng):
    cat = covers.fiber_catalog()
    ok = cat.unique == ("iii", "iv") and cat.intersection() == ("iv",)
    return _verdict(ok), f"unique types {cat.unique}; S1 = {cat.strata['S1']}, S2 = {cat.strata['S2']}, S1 & S2 = {cat.intersection()}"


def check_group_counts(rng):
    n120 = covers.sylow_7_subgroup_count_of_S7()
    n49 = covers.x_of_e_kernel_order()
    return _verdict(n120 == 120 and n49 == 49), f"order-7 subgroups of S_7: {n120}; |ker| = {n49}"


def check_type_ii_count(rng):
    n = covers.order_p_subgroups_of_plane()
    return AMBIGUITY, f"order-7 subgroups of (Z/7)^2: {n}; offered as candidate count of type (ii) covers over a fixed C, not asserted"


def random_symmetric_graph(rng, p=7, max_orbits=3):
    """Connected graph on k*p vertices with the free Z/p action v -> v+1 within each orbit."""
    k = rng.randint(1, max_orbits)
    sigma = covers.GraphAutomorphism(tuple(o * p + (i + 1) % p for o in range(k) for i in range(p)))
    while True:
        edges = []
        for _ in range(rng.randint(1, 2 * k + 1)):
            o1, o2 = rng.randrange(k), rng.randrange(k)
            i1, i2 = rng.randrange(p), rng.randrange(p)
            edges.extend((o1 * p + (i1 + t) % p, o2 * p + (i2 + t) % p) for t in range(p))
        g = covers.DualGraph((0,) * (k * p), tuple(edges))
        if g.is_connected():
            return g, sigma


def check_fundamental_random(rng, cases=200):
    bad = 0
    for _ in range(cases):
        g, s = random_symmetric_graph(rng)
        bad += not covers.check_fundamental_subgraph(g, s, covers.fundamental_subgraph(g, s))
    return _verdict(bad == 0), f"{cases} random sigma-symmetric graphs (<= 21 vertices); {bad} failures"


COVERS = [
    ("covers.cover_genus", "p_a of the cover = 8", check_cover_genus),
    ("covers.prym_numbers", "dim P = 6g-6, type (1,...,1,7,...,7)", check_prym_numbers),
    ("covers.star_star", "(**) iff r = 0 and c_1 = n_1", check_star_star_instances),
    ("covers.classification", "fibre of the Prym map over X(E)", check_classification),
    ("covers.fiber_invariants", "fibre covers satisfy (**)", check_fiber_invariants),
    ("covers.uniqueness", "S = S1 u S2, types (iii) and (iv) unique", check_uniqueness),
    ("covers.group_counts", "X(E) = ker(E^7 -> E)", check_group_counts),
    ("covers.type_ii_count", "type (ii) covers over a fixed C", check_type_ii_count),
    ("covers.fundamental_subgraph", "connected fundamental subgraph for an order-7 graph automorphism", check_fundamental_random),
]


# modular -------------------------------------------------------------------------


def check_gamma0(rng):
    idx = modular.gamma0_index(7)
    bad = [N for N in range(1, 31) if modular.gamma0_index(N) != modular.p1_count(N)]
    return _verdict(idx == 8 and not bad), f"[SL2(Z):Gamma_0(7)] = {idx}; P^1(Z/N) oracle agrees for N <= 30 (mismatches {bad})"


def check_x0_7_genus(rng):
    g = modular.riemann_hurwitz_genus(modular.X0_7_PROFILE, 0)
    mass = modular.X0_7_PROFILE.ramification_mass()
    ok = g == 0 and mass == 14 == 2 * 0 - 2 + 2 * 8
    return _verdict(ok), f"genus X_0(7) = {g}, ramification mass {mass}"


def check_x0_7_profile(rng):
    return AMBIGUITY, (
        "profiles over j=0 and j=1728 stored as (3,3,1,1) and (2,2,2,2) from nu_3(7)=2, nu_2(7)=0; "
        "'ramification degree 4 on each fibre' is read as total ramification 4 per fibre"
    )


def check_cusps(rng):
    cd = modular.cusp_data(7)
    ok = set(cd.widths) == {1, 7} and sum(cd.widths) == modular.gamma0_index(7)
    return _verdict(ok), f"cusp widths {cd.widths}; " + ", ".join(
        f"width {w}: {poly} <-> type ({t})" for w, (poly, t) in cd.polygons.items()
    )


def check_degrees(rng):
    s1, s2 = modular.local_degree_S1(), modular.local_degree_S2()
    total = modular.total_degree()
    ok = (s1.value, s2.value, total) == (2, 8, 10)
    return _verdict(ok), f"local degree S1 = {s1.value} ({s1.trace}); S2 = {s2.value} ({s2.trace}); total degree = {total}"


MODULAR = [
    ("modular.gamma0_index", "X_0(7) -> P^1 has degree 8", check_gamma0),
    ("modular.x0_7_genus", "X_0(7) has genus 0", check_x0_7_genus),
    ("modular.x0_7_profile", "ramification of X_0(7) over j = 0, 1728", check_x0_7_profile),
    ("modular.cusps", "cusps of X_0(7) as Neron polygons", check_cusps),
    ("modular.degrees", "local degrees along S1, S2 and total degree", check_degrees),
]


SUITES = {
    "shimura": SHIMURA,
    "detsweep": DETSWEEP,
    "differentials": DIFFERENTIALS,
    "covers": COVERS,
    "modular": MODULAR,
}


def run_suite(name, seed=0):
    rng = random.Random(f"{seed}:{name}")
    out = []
    for cid, anchor, fn in SUITES[name]:
        t0 = time.perf_counter()
        try:
            status, details = fn(rng)
        except Exception as exc:  # a crashing check is a failed check
            status, details = FAIL, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(cid, anchor, status, details, round((time.perf_counter() - t0) * 1000, 3)))
    return out
