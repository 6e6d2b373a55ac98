from typing import Callable, Optional

import numpy as np
import pytest

from src.core import LaminateProfile
from src.utils import reset_default_tolerances


@pytest.fixture(autouse=True)
def fresh_tolerances(monkeypatch):
    for variable in (
        "LAMINATE_ZERO_TOL",
        "LAMINATE_EPS_P",
        "LAMINATE_DEGENERACY_TOL",
        "LAMINATE_EIGENSOLVER_TOL",
    ):
        monkeypatch.delenv(variable, raising=False)

    reset_default_tolerances()
    yield
    reset_default_tolerances()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20231019)


def draw_profile(
    rng: np.random.Generator,
    r: Optional[int] = None,
    low: float = 0.1,
    high: float = 10.0,
    indefinite: bool = False,
) -> LaminateProfile:
    """Values in [-high, high] with |value| >= low"""

    r = int(rng.integers(0, 9)) if r is None else r

    while True:
        values = rng.uniform(low, high, r + 1) * rng.choice([-1.0, 1.0], r + 1)

        if not indefinite or (values.min() < 0 < values.max()):
            return LaminateProfile.from_values(values)


@pytest.fixture
def profile_factory(rng) -> Callable[..., LaminateProfile]:
    return lambda **kwargs: draw_profile(rng, **kwargs)
