from fractions import Fraction

from hypothesis import settings, strategies as st

from bwkit.exact import ExactMatrix, ExactScalar

settings.register_profile("bwkit", max_examples=40, deadline=None)
settings.load_profile("bwkit")

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(ExactScalar, small_fractions, small_fractions)


def matrices(n: int, m: int | None = None):
    m = n if m is None else m
    return st.lists(st.lists(scalars, min_size=m, max_size=m), min_size=n, max_size=n).map(ExactMatrix)


__all__ = ["Fraction", "scalars", "small_fractions", "matrices"]
