"""Test configuration and fixtures."""

from pathlib import Path

import pytest

from weightdirac.core.modules import cuspidal_sl2, simple_hw, verma
from weightdirac.core.rootdata import Weight, build_root_system, parabolic, window_weights
from weightdirac.logging_config import configure_logging

GOLDEN_DIR = Path(__file__).parent / "golden"

configure_logging("WARNING")


# Root data


@pytest.fixture
def a1():
    """Root datum of sl(2)."""
    return build_root_system("A1")


@pytest.fixture
def a1xa1():
    """Root datum of sl(2) x sl(2)."""
    return build_root_system("A1xA1")


@pytest.fixture
def a2():
    """Root datum of sl(3)."""
    return build_root_system("A2")


@pytest.fixture
def b2():
    """Root datum of so(5), long simple root first."""
    return build_root_system("B2")


@pytest.fixture(params=["A1", "A1xA1", "A2", "B2"])
def any_rd(request):
    """Every supported root datum in turn."""
    return build_root_system(request.param)


# Parabolics


@pytest.fixture
def a1_borel(a1):
    """Borel of sl(2)."""
    return parabolic(a1, ())


@pytest.fixture
def a2_borel(a2):
    """Borel of sl(3)."""
    return parabolic(a2, ())


@pytest.fixture
def a2_levi1(a2):
    """Parabolic of sl(3) whose Levi contains the first simple root."""
    return parabolic(a2, (0,))


# Golden modules


@pytest.fixture
def m0(a1):
    """Verma module M(0) of sl(2)."""
    return verma(a1, Weight.of(0))


@pytest.fixture
def m_minus_alpha(a1):
    """Verma module M(-alpha) = M(-2) of sl(2)."""
    return verma(a1, Weight.of(-2))


@pytest.fixture
def l0(a1):
    """Trivial module L(0) of sl(2)."""
    return simple_hw(a1, Weight.of(0))


@pytest.fixture
def cuspidal(a1):
    """Cuspidal monomial module F_(1/2, 1/2)."""
    return cuspidal_sl2("1/2", "1/2", a1)


@pytest.fixture
def a1_window(a1):
    """Even weights -8..8 of sl(2)."""
    return window_weights(a1, Weight.of(0), 4)


@pytest.fixture
def a1_odd_window(a1):
    """Odd weights -9..7 of sl(2), where A1 spin indices live."""
    return window_weights(a1, Weight.of(-1), 4)


@pytest.fixture
def golden_dir():
    """Directory of golden job files."""
    return GOLDEN_DIR
