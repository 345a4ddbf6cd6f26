import math
import random
from pathlib import Path

import pytest

from clamm import (
    BancorV2Params,
    CarbonParams,
    NaturalParams,
    UniswapV3Params,
    curve_for,
)

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"

# One real curve expressed in every bounded parameter form.  All worked
# expectations in the suite were derived by hand-substitution on this curve
# and cross-checked by quadrature.
WORKED_BANCOR = BancorV2Params(x0=100.0, y0=100.0, A=2.0)
WORKED_UNISWAP = UniswapV3Params(L=200.0, p_high=4.0, p_low=0.25)
WORKED_CARBON = CarbonParams(a=1.5, b=0.5, z=300.0)
WORKED_NATURAL = NaturalParams(c=4.0, anchor="asymptotes", anchor_x=-100.0, anchor_y=-100.0)

LN4 = math.log(4.0)


def assert_rel(actual, expected, rel=1e-9, abs_floor=1e-12):
    assert math.isclose(actual, expected, rel_tol=rel, abs_tol=abs_floor), (
        f"{actual!r} != {expected!r} (rel {rel})"
    )


def rel_dev(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def random_bancor(rng: random.Random, exp_range=(-3.0, 9.0), amp_range=(1.01, 100.0)):
    return BancorV2Params(
        x0=10.0 ** rng.uniform(*exp_range),
        y0=10.0 ** rng.uniform(*exp_range),
        A=rng.uniform(*amp_range),
    )


@pytest.fixture
def bancor_curve():
    return curve_for(WORKED_BANCOR)


@pytest.fixture
def uniswap_curve():
    return curve_for(WORKED_UNISWAP)


@pytest.fixture
def carbon_curve():
    return curve_for(WORKED_CARBON)


@pytest.fixture
def rng():
    return random.Random(20240401)
