from fractions import Fraction

from hypothesis import strategies as st

from disq.exact_poly import Polynomial


def rationals(max_num=20, max_den=6):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


nonzero_rationals = rationals().filter(lambda q: q != 0)


@st.composite
def polynomials(draw, min_degree=2, max_degree=6, degree=None):
    n = degree if degree is not None else draw(st.integers(min_degree, max_degree))
    lead = draw(nonzero_rationals)
    rest = draw(st.lists(rationals(), min_size=n, max_size=n))
    return Polynomial([lead] + rest)


@st.composite
def integer_polynomials(draw, degree, bound=9):
    lead = draw(st.integers(-bound, bound).filter(bool))
    rest = draw(st.lists(st.integers(-bound, bound), min_size=degree, max_size=degree))
    return Polynomial([lead] + rest)
