import sys

import numpy as np
import pytest
from hypothesis import settings

from frwtk import MexicanHat, Morlet, SampledSignal, TransformParams, WaveletTriple

settings.register_profile("frwtk", deadline=None, max_examples=30)
settings.load_profile("frwtk")


@pytest.fixture
def gauss_chirp():
    return SampledSignal.from_function(
        lambda t: np.exp(-0.5 * t * t + 0.3j * t * t), -8.0, 16.0 / 255, 256)


@pytest.fixture
def morlet_triple():
    return WaveletTriple.uniform(Morlet(5.0))


@pytest.fixture
def mexican_triple():
    return WaveletTriple.uniform(MexicanHat())


@pytest.fixture
def half_params():
    return TransformParams(0.5, rho=0.5)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
