import mpmath
import pytest

mpmath.mp.dps = 30


@pytest.fixture(scope="session")
def mp():
    return mpmath


def mp_L(s):
    """Dirichlet beta via Hurwitz zeta, the independent oracle for L."""
    s = mpmath.mpc(s)
    return (mpmath.zeta(s, 0.25) - mpmath.zeta(s, 0.75)) / mpmath.power(4, s)


def mp_eh(s):
    s = mpmath.mpc(s)
    return ((1 - mpmath.power(2, s)) * (1 - mpmath.power(2, 1 - s)) * mpmath.gamma(s) * mpmath.zeta(s) * mp_L(s)
            / mpmath.power(mpmath.pi, s))
