from fractions import Fraction

from hypothesis import strategies as st

from prymcheck.cyclo import CycloElem, TorusPoly


def cyclo_elems(p=7):
    # integer numerators over one shared denominator: cheap to draw, still non-integral
    nums = st.lists(st.integers(-6, 6), min_size=p - 1, max_size=p - 1)
    return st.tuples(nums, st.integers(1, 4)).map(lambda t: CycloElem([Fraction(n, t[1]) for n in t[0]], p))


def nonzero_cyclo(p=7):
    return cyclo_elems(p).filter(bool)


def torus_polys(p=7, max_terms=5):
    # each term is (flattened exponent pair, coefficient); repeated exponents add up
    terms = st.lists(st.tuples(st.integers(0, p * p - 1), st.integers(-3, 3)), max_size=max_terms)

    def build(ts):
        coeffs = {}
        for k, c in ts:
            key = divmod(k, p)
            coeffs[key] = coeffs.get(key, 0) + c
        return TorusPoly(coeffs, p)

    return terms.map(build)
