import pytest

from logatom import make_alpha, solve_block


@pytest.fixture(scope="session")
def alpha_one():
    return make_alpha(1, 1)


@pytest.fixture(scope="session")
def blocks(alpha_one):
    """Five lowest states for each channel l_alpha = 0..5, default grid.

    Computed once per session; most physics tests read from this cache
    instead of re-running the solver.
    """
    return {l: solve_block(alpha_one, l, 5) for l in range(6)}
