import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from toricgb.algebra import TwistedTorus
from toricgb.poly2 import LaurentPoly

# property suites run 10^3 examples each; HYPOTHESIS_PROFILE=quick for local iteration
settings.register_profile("ci", max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

exponents = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


def laurent_polys(max_terms=6, lo=-6, hi=6, nonzero=False):
    terms = st.lists(st.tuples(st.integers(lo, hi), st.integers(lo, hi)), min_size=1 if nonzero else 0, max_size=max_terms)
    polys = terms.map(LaurentPoly.from_terms)
    return polys.filter(bool) if nonzero else polys


def trinomials(span=3):
    """1 + two further monomials, the shape used by weight-6 codes."""
    mono = st.tuples(st.integers(-span, span), st.integers(-span, span)).filter(lambda e: e != (0, 0))
    return st.tuples(mono, mono).filter(lambda t: t[0] != t[1]).map(lambda t: LaurentPoly.from_terms([(0, 0), *t]))


@st.composite
def tori(draw, max_alpha=8, max_beta=4):
    alpha = draw(st.integers(1, max_alpha))
    beta = draw(st.integers(1, max_beta))
    gamma = draw(st.integers(0, alpha - 1))
    return TwistedTorus(alpha, beta, gamma)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[num])
