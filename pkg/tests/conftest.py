import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from iqfu.multi_type import ModelConfig  # noqa: E402

import golden  # noqa: E402

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=25, deadline=None)
settings.load_profile("ci")

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


@pytest.fixture
def single_model():
    g = golden.SINGLE
    return ModelConfig.poisson(g["N"], [g["mu"]], [g["rho"]], [g["F"]])


@pytest.fixture
def two_type_model():
    g = golden.TWO_TYPE
    return ModelConfig.poisson(g["N"], g["mu"], g["rho"], g["fu"])


@pytest.fixture
def config_dir():
    return CONFIG_DIR


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
