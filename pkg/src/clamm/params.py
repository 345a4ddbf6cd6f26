"""Curve parameter sets, pool state, and the shared real-curve interface.

Every real concentrated-liquidity curve handled here is a shifted rectangular
hyperbola ``(x + shift_x) * (y + shift_y) = scale`` restricted to the first
quadrant.  Each parameterization encodes the three constants differently; the
parameter dataclasses below are the configuration surface and
``ShiftedProductCurve`` is the interface the per-form modules implement.

Sign convention is the pool's frame of reference: a trade that adds x tokens
(dx > 0) removes y tokens (dy < 0), and marginal prices are negative slopes.
All values are binary64 floats; equality is always a relative-tolerance check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields
from typing import ClassVar, Union

from .errors import BoundsExceeded, DomainError, InsufficientLiquidity

# Default relative tolerance for on-curve checks; absolute floor near zero.
REL_TOL = 1e-9
ABS_FLOOR = 1e-12

# Relative slack for intercept bounds checks: a trade aimed exactly at an
# intercept may overshoot by a final ulp and must not be rejected for it.
BOUNDS_SLACK = 1e-12


def rel_close(a: float, b: float, rel_tol: float = REL_TOL, abs_floor: float = ABS_FLOOR) -> bool:
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_floor)


def _require(cond: bool, name: str, reason: str) -> None:
    if not cond:
        raise DomainError(name, reason)


def _check_finite_positive(value: float, name: str) -> None:
    _require(isinstance(value, (int, float)) and math.isfinite(value), name, "must be finite")
    _require(value > 0, name, "must be positive")


# ---------------------------------------------------------------------------
# Parameter sets (one per curve form)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReferenceParams:
    """Unshifted hyperbola x*y = x0*y0 through the starting balances."""

    x0: float
    y0: float

    form: ClassVar[str] = "reference"


@dataclass(frozen=True)
class BancorV2Params:
    """Starting balances plus the amplification constant A > 1."""

    x0: float
    y0: float
    A: float

    form: ClassVar[str] = "bancor_v2"


@dataclass(frozen=True)
class UniswapV3Params:
    """Liquidity L and the marginal-price bounds of the tradeable range."""

    L: float
    p_high: float
    p_low: float

    form: ClassVar[str] = "uniswap_v3"


@dataclass(frozen=True)
class CarbonParams:
    """One-balance form: a = sqrt(p_high) - sqrt(p_low), b = sqrt(p_low), z = y intercept."""

    a: float
    b: float
    z: float

    form: ClassVar[str] = "carbon"


ANCHOR_KINDS = ("center", "intercepts", "asymptotes")

# JSON field names for the anchor coordinates, per anchor kind.
_ANCHOR_FIELDS = {
    "center": ("x0", "y0"),
    "intercepts": ("x_int", "y_int"),
    "asymptotes": ("x_asym", "y_asym"),
}


@dataclass(frozen=True)
class NaturalParams:
    """Concentration constant c plus one anchor point of the real curve.

    The asymptote anchor is preferred: the invariant written against it is
    singularity-free on the whole curve.
    """

    c: float
    anchor: str
    anchor_x: float
    anchor_y: float

    form: ClassVar[str] = "natural"


CurveParams = Union[ReferenceParams, BancorV2Params, UniswapV3Params, CarbonParams, NaturalParams]

FORM_REGISTRY = {
    cls.form: cls
    for cls in (ReferenceParams, BancorV2Params, UniswapV3Params, CarbonParams, NaturalParams)
}


# ---------------------------------------------------------------------------
# State, trade, geometry containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PoolState:
    """Current real token balances on a curve."""

    x: float
    y: float

    def __post_init__(self):
        _require(math.isfinite(self.x), "x", "must be finite")
        _require(math.isfinite(self.y), "y", "must be finite")
        _require(self.x >= 0, "x", "must be nonnegative")
        _require(self.y >= 0, "y", "must be nonnegative")


@dataclass(frozen=True)
class SwapDelta:
    """Signed trade amounts in the pool frame: dx and dy have opposite signs."""

    dx: float
    dy: float

    def __post_init__(self):
        _require(math.isfinite(self.dx), "dx", "must be finite")
        _require(math.isfinite(self.dy), "dy", "must be finite")
        if (self.dx == 0) != (self.dy == 0):
            raise DomainError("dx", "dx and dy must both be zero or both nonzero")
        if self.dx != 0 and (self.dx > 0) == (self.dy > 0):
            raise DomainError("dx", "dx and dy must have opposite signs")


@dataclass(frozen=True)
class CurveGeometry:
    """Derived constants of a real curve.

    Intercepts are the maximum holdings of each token, asymptotes the negated
    shift constants (zero for an unshifted curve), p_high/p_low the marginal
    prices at full depletion of x and y, p0 their geometric mean, c the
    concentration constant sqrt(p_high/p_low) and phi = ln(c).
    """

    x_int: float
    y_int: float
    x_asym: float
    y_asym: float
    p_high: float
    p_low: float
    p0: float
    c: float
    phi: float


@dataclass(frozen=True)
class VirtualBounds:
    """Virtual-balance extremes over the tradeable range of the emulated curve."""

    min_xv: float
    max_xv: float
    min_yv: float
    max_yv: float


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate(params: CurveParams) -> CurveParams:
    """Check all type invariants of a parameter set; returns it unchanged.

    Raises DomainError naming the offending field.  Degenerate limits are
    rejected rather than treated as limits: A = 1 and p_high = p_low both zero
    out a shift divisor.
    """
    if isinstance(params, ReferenceParams):
        _check_finite_positive(params.x0, "x0")
        _check_finite_positive(params.y0, "y0")
        _require(math.isfinite(params.x0 * params.y0), "x0", "x0*y0 must be finite")
    elif isinstance(params, BancorV2Params):
        _check_finite_positive(params.x0, "x0")
        _check_finite_positive(params.y0, "y0")
        _require(math.isfinite(params.A), "A", "must be finite")
        _require(params.A > 1, "A", "must exceed 1")
        _require(math.isfinite(params.A * params.A * params.x0 * params.y0), "A", "A^2*x0*y0 must be finite")
    elif isinstance(params, UniswapV3Params):
        _check_finite_positive(params.L, "L")
        _check_finite_positive(params.p_high, "p_high")
        _check_finite_positive(params.p_low, "p_low")
        _require(params.p_low < params.p_high, "p_low", "must be < p_high")
    elif isinstance(params, CarbonParams):
        _check_finite_positive(params.a, "a")
        _check_finite_positive(params.b, "b")
        _check_finite_positive(params.z, "z")
    elif isinstance(params, NaturalParams):
        _require(math.isfinite(params.c), "c", "must be finite")
        _require(params.c > 1, "c", "must exceed 1")
        _require(params.anchor in ANCHOR_KINDS, "anchor", f"must be one of {ANCHOR_KINDS}")
        _require(math.isfinite(params.anchor_x), "anchor_x", "must be finite")
        _require(math.isfinite(params.anchor_y), "anchor_y", "must be finite")
        nx, ny = _ANCHOR_FIELDS[params.anchor]
        if params.anchor == "asymptotes":
            _require(params.anchor_x < 0, nx, "must be negative")
            _require(params.anchor_y < 0, ny, "must be negative")
        else:
            _require(params.anchor_x > 0, nx, "must be positive")
            _require(params.anchor_y > 0, ny, "must be positive")
    else:
        raise DomainError("spec", f"unknown parameter type {type(params).__name__}")
    return params


# ---------------------------------------------------------------------------
# JSON spec schema: {"form": <tag>, ...fields}
# ---------------------------------------------------------------------------


def spec_from_dict(data: dict) -> CurveParams:
    if not isinstance(data, dict):
        raise DomainError("spec", "must be a JSON object")
    form = data.get("form")
    if form not in FORM_REGISTRY:
        raise DomainError("form", f"unknown form {form!r}; expected one of {sorted(FORM_REGISTRY)}")
    body = {k: v for k, v in data.items() if k != "form"}
    cls = FORM_REGISTRY[form]
    if cls is NaturalParams:
        anchor = body.pop("anchor", None)
        if anchor not in ANCHOR_KINDS:
            raise DomainError("anchor", f"must be one of {ANCHOR_KINDS}")
        nx, ny = _ANCHOR_FIELDS[anchor]
        try:
            params = NaturalParams(c=body.pop("c"), anchor=anchor, anchor_x=body.pop(nx), anchor_y=body.pop(ny))
        except KeyError as exc:
            raise DomainError(str(exc.args[0]), "missing field") from None
    else:
        names = [f.name for f in fields(cls)]
        missing = [n for n in names if n not in body]
        if missing:
            raise DomainError(missing[0], "missing field")
        params = cls(**{n: body.pop(n) for n in names})
    if body:
        raise DomainError(next(iter(body)), f"unexpected field for form {form!r}")
    return validate(params)


def spec_to_dict(params: CurveParams) -> dict:
    if isinstance(params, NaturalParams):
        nx, ny = _ANCHOR_FIELDS[params.anchor]
        return {"form": params.form, "c": params.c, "anchor": params.anchor,
                nx: params.anchor_x, ny: params.anchor_y}
    out = {"form": params.form}
    out.update({f.name: getattr(params, f.name) for f in fields(params)})
    return out


def load_spec(path: str) -> CurveParams:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DomainError("spec", f"invalid JSON: {exc}") from None
    return spec_from_dict(data)


# ---------------------------------------------------------------------------
# Shared real-curve interface
# ---------------------------------------------------------------------------


class ShiftedProductCurve:
    """Common operations on (x + shift_x)(y + shift_y) = scale, x, y >= 0.

    Subclasses set ``params``, ``shift_x``, ``shift_y``, ``scale`` and ``geom``
    at construction and may override any closed form with the native phenotype
    of their parameterization.  Everything is pure and immutable; instances are
    safe to share across threads.
    """

    params: CurveParams
    shift_x: float
    shift_y: float
    scale: float
    geom: CurveGeometry

    # -- curve sampling ----------------------------------------------------

    def y_from_x(self, x: float) -> float:
        if x + self.shift_x <= 0:
            raise DomainError("x", "outside the admissible range")
        y = self.scale / (x + self.shift_x) - self.shift_y
        return _snap_nonnegative(y, self.shift_y)

    def x_from_y(self, y: float) -> float:
        if y + self.shift_y <= 0:
            raise DomainError("y", "outside the admissible range")
        x = self.scale / (y + self.shift_y) - self.shift_x
        return _snap_nonnegative(x, self.shift_x)

    def state_from_x(self, x: float) -> PoolState:
        return PoolState(x, self.y_from_x(x))

    def state_at_price(self, price: float) -> PoolState:
        """On-curve state whose marginal price magnitude equals ``price``."""
        _require(price > 0 and math.isfinite(price), "price", "must be a positive finite magnitude")
        x = _snap_nonnegative(math.sqrt(self.scale / price) - self.shift_x, self.shift_x)
        y = _snap_nonnegative(math.sqrt(self.scale * price) - self.shift_y, self.shift_y)
        self._check_x_bounds(x)
        return PoolState(x, y)

    # -- invariants ---------------------------------------------------------

    def invariant_residual(self, state: PoolState) -> float:
        return (state.x + self.shift_x) * (state.y + self.shift_y) / self.scale - 1.0

    def on_curve(self, state: PoolState, rel_tol: float = REL_TOL) -> bool:
        return abs(self.invariant_residual(state)) <= rel_tol

    # -- trades -------------------------------------------------------------

    def swap_exact_in_x(self, state: PoolState, dx: float) -> SwapDelta:
        """Trade a signed amount of x; returns the coupled dy."""
        _require(math.isfinite(dx), "dx", "must be finite")
        if dx == 0:
            return SwapDelta(0.0, 0.0)
        x_new = state.x + dx
        self._check_x_bounds(x_new)
        dy = -dx * self.scale / ((state.x + self.shift_x) * (x_new + self.shift_x))
        return make_delta(dx, dy)

    def swap_exact_out_y(self, state: PoolState, dy: float) -> SwapDelta:
        """Trade a signed amount of y; returns the coupled dx."""
        _require(math.isfinite(dy), "dy", "must be finite")
        if dy == 0:
            return SwapDelta(0.0, 0.0)
        y_new = state.y + dy
        self._check_y_bounds(y_new)
        dx = -dy * self.scale / ((state.y + self.shift_y) * (y_new + self.shift_y))
        return make_delta(dx, dy)

    def effective_price(self, state: PoolState, delta: SwapDelta) -> float:
        """Realized dy/dx of a finite trade of delta.dx from this state."""
        if delta.dx == 0:
            raise DomainError("dx", "effective price is undefined for a zero-size trade")
        swapped = self.swap_exact_in_x(state, delta.dx)
        return swapped.dy / swapped.dx

    # -- prices -------------------------------------------------------------

    def marginal_price(self, state: PoolState) -> float:
        """Instantaneous dy/dx at the state (negative in the pool frame)."""
        return -(state.y + self.shift_y) / (state.x + self.shift_x)

    def price_slope_at_x(self, x: float) -> float:
        """dy/dx as a function of x alone; the integrand behind dy."""
        s = x + self.shift_x
        return -self.scale / (s * s)

    def price_slope_at_y(self, y: float) -> float:
        """dx/dy as a function of y alone; the integrand behind dx."""
        s = y + self.shift_y
        return -self.scale / (s * s)

    # -- bounds -------------------------------------------------------------

    def _check_x_bounds(self, x_new: float) -> None:
        x_int = self.geom.x_int
        if math.isinf(x_int):
            if x_new <= 0:
                raise InsufficientLiquidity("trade would fully deplete the y reserve")
            return
        if x_new < 0 or x_new > x_int * (1.0 + BOUNDS_SLACK):
            raise BoundsExceeded(f"x would leave [0, {x_int}]")

    def _check_y_bounds(self, y_new: float) -> None:
        y_int = self.geom.y_int
        if math.isinf(y_int):
            if y_new <= 0:
                raise InsufficientLiquidity("trade would fully deplete the y reserve")
            return
        if y_new < 0 or y_new > y_int * (1.0 + BOUNDS_SLACK):
            raise BoundsExceeded(f"y would leave [0, {y_int}]")


def make_delta(dx: float, dy: float) -> SwapDelta:
    """SwapDelta from a computed trade pair, rejecting binary64 underflow.

    A nonzero input whose coupled output rounds to zero is below the
    resolution of the curve; no delta can represent it honestly.
    """
    if (dx == 0) != (dy == 0):
        raise DomainError("dx", "trade too small to resolve at this scale")
    return SwapDelta(dx, dy)


def _snap_nonnegative(value: float, reference: float) -> float:
    # Values a final ulp below zero come from intercept arithmetic, not from
    # a genuinely negative balance.
    if value < 0 and abs(value) <= max(abs(reference), 1.0) * 1e-12:
        return 0.0
    return value


def apply_delta(state: PoolState, delta: SwapDelta) -> PoolState:
    """New pool state after a trade, snapping a final-ulp negative to zero."""
    x = state.x + delta.dx
    y = state.y + delta.dy
    return PoolState(_snap_nonnegative(x, state.x), _snap_nonnegative(y, state.y))
