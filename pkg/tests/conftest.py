import hypothesis.strategies as st
from hypothesis import settings

from qsymlab.qsym import QSymElement
from qsymlab.shapes import SkewShape

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def compositions(draw, max_size=6, min_size=0):
    n = draw(st.integers(min_size, max_size))
    parts, left = [], n
    while left:
        p = draw(st.integers(1, left))
        parts.append(p)
        left -= p
    return tuple(parts)


@st.composite
def shapes(draw, max_size=6, partition_inner=False):
    alpha = draw(compositions(max_size, min_size=1))
    k = draw(st.integers(0, len(alpha)))
    beta = [draw(st.integers(1, a)) for a in alpha[:k]] if k else []
    while beta and beta[-1] == 0:
        beta.pop()
    if partition_inner:
        beta = sorted(beta, reverse=True)
        beta = [min(b, a) for a, b in zip(alpha, beta)]
        # clipping can break monotonicity; redo the running minimum
        for i in range(1, len(beta)):
            beta[i] = min(beta[i], beta[i - 1])
    return SkewShape(alpha, tuple(beta))


@st.composite
def m_elements(draw, max_degree=5):
    terms = draw(st.dictionaries(compositions(max_degree, min_size=1), st.integers(-5, 5), max_size=4))
    return QSymElement("M", terms)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance as acc

    if not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, _ in acc.CRITERIA:
        if number in acc.RESULTS:
            terminalreporter.write_line(acc.line(number, title))
