import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kbsm.elements import CHEBYSHEV, MONOMIAL, SkeinElement
from kbsm.laurent import LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

laurent = st.builds(
    LaurentPoly,
    st.lists(st.tuples(st.integers(-8, 8), st.integers(-20, 20)), max_size=5),
)
nonzero_laurent = laurent.filter(bool)

index = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


def elements(basis=CHEBYSHEV, max_size=4):
    return st.builds(lambda ts: SkeinElement(ts, basis),
                     st.lists(st.tuples(index, laurent), max_size=max_size))


cheb_elements = elements(CHEBYSHEV)
mono_elements = elements(MONOMIAL)
