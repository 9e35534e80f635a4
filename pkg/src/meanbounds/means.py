"""Bivariate means in direct and half-log-ratio form.

Fifteen classical means of two positive numbers are supported, identified by
kebab-case tags.  Every mean M here is symmetric and positively homogeneous
of degree 1, so with

    t = log sqrt(max(a,b) / min(a,b))        (the "half log ratio")

it factors as M(a, b) = sqrt(a*b) * m(t), where m is the value of the mean on
the normalized pair (e^-t, e^t).  All numerical work happens on m(t), which
turns each mean into a hyperbolic-function expression:

    power p        cosh^(1/p)(p t)               (geometric mean at p = 0)
    lehmer p       cosh((p+1) t) / cosh(p t)
    log            sinh(t) / t
    identric       exp(t/tanh(t) - 1)
    first-seiffert sinh(t) / arctan(sinh t)
    second-seiffert sinh(t) / arctan(tanh t)
    neuman-sandor  sinh(t) / asinh(tanh t)
    yang           sqrt(2) sinh(t) / arctan(sqrt(2) sinh t)
    sandor         cosh(t) exp(arctan(sinh t)/sinh(t) - 1)
    sandor-yang    cosh^(1/2)(2t) exp(arctan(tanh t)/tanh(t) - 1)
    toader         (2/pi) * int_0^{pi/2} sqrt(e^{2t} sin^2 + e^{-2t} cos^2)

The module also publishes the two analytic fingerprints of each normalized
mean that pin sharp comparison endpoints: the t^2 coefficient of log m(t)
at t -> 0 and the offset lim (log m(t) - t) at t -> infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import (
    LOG2,
    atan_sinh_ratio_m1,
    atan_tanh_ratio_m1,
    ellipe_agm,
    gauss_legendre_quadrant,
    logcosh,
    logsinh,
)

PLAIN_TAGS = (
    "harmonic",
    "geometric",
    "arithmetic",
    "quadratic",
    "log",
    "identric",
    "first-seiffert",
    "second-seiffert",
    "neuman-sandor",
    "yang",
    "sandor",
    "toader",
    "sandor-yang",
)
PARAMETRIC_TAGS = ("power", "lehmer")

# Nodes for the fixed quadrature rule used by the Toader mean, and the
# points where its evaluation switches to the AGM/asymptotic branches.
_TOADER_NODES = 64
_TOADER_GL_MAX_T = 2.0
_TOADER_ASYMPTOTIC_T = 19.0

# Below this |p| the power mean switches to its second-order expansion in p;
# both branches agree to better than 1e-12 at the boundary.
_POWER_SMALL_P = 1e-8


@dataclass(frozen=True)
class MeanKind:
    """Tagged mean identifier; `power` and `lehmer` carry a real parameter."""

    tag: str
    param: float | None = None

    def __post_init__(self):
        if self.tag in PARAMETRIC_TAGS:
            if self.param is None:
                raise ValueError(f"mean '{self.tag}' requires a parameter")
            p = float(self.param)
            if math.isnan(p):
                raise ValueError("mean parameter must not be NaN")
            if self.tag == "lehmer" and math.isinf(p):
                raise ValueError("lehmer mean does not accept an infinite parameter")
            object.__setattr__(self, "param", p)
        elif self.tag in PLAIN_TAGS:
            if self.param is not None:
                raise ValueError(f"mean '{self.tag}' takes no parameter")
        else:
            raise ValueError(f"unknown mean '{self.tag}'")

    @classmethod
    def power(cls, p) -> "MeanKind":
        return cls("power", float(p))

    @classmethod
    def lehmer(cls, p) -> "MeanKind":
        return cls("lehmer", float(p))

    def label(self) -> str:
        if self.tag in PARAMETRIC_TAGS:
            return f"{self.tag}:{self.param:g}"
        return self.tag


def parse_mean(text: str) -> MeanKind:
    """Parse a CLI-style mean name: a plain tag or `power:p` / `lehmer:p`."""
    name, sep, param = text.partition(":")
    if not sep:
        return MeanKind(name)
    if name not in PARAMETRIC_TAGS:
        raise ValueError(f"mean '{name}' takes no parameter")
    try:
        value = float(param)
    except ValueError:
        raise ValueError(f"bad parameter {param!r} for mean '{name}'") from None
    return MeanKind(name, value)


def half_log_ratio(a, b):
    """t = log sqrt(max/min); zero iff a = b.

    Computed through log1p of the relative gap, which stays fully accurate
    when a and b agree to many digits (log(b) - log(a) would not).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if not (np.all(a > 0) and np.all(b > 0)):
        raise ValueError("mean arguments must be positive")
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    t = 0.5 * np.log1p((hi - lo) / lo)
    return float(t) if t.ndim == 0 else t


# --- normalized log-mean evaluators ----------------------------------------
#
# Each helper takes an ndarray t >= 0 and returns log m(t) elementwise.
# Entries with t == 0 are routed around the 0/0 forms explicitly.


def _guarded(t):
    pos = t > 0
    return pos, np.where(pos, t, 1.0)


def _lognorm_power(p: float, t):
    if p == 0.0:
        return np.zeros_like(t)
    if math.isinf(p):
        return t.copy() if p > 0 else -t
    if abs(p) < _POWER_SMALL_P:
        return 0.5 * p * t * t
    return logcosh(p * t) / p


def _lognorm_lehmer(p: float, t):
    return logcosh((p + 1.0) * t) - logcosh(p * t)


def _lognorm_log(t):
    pos, ts = _guarded(t)
    return np.where(pos, logsinh(ts) - np.log(ts), 0.0)


def _lognorm_identric(t):
    pos, ts = _guarded(t)
    return np.where(pos, ts / np.tanh(ts) - 1.0, 0.0)


# sinh overflows past ~710; its arctan is already pi/2 to machine precision
# long before the clip point, so clipping is exact here.
def _sinh_clipped(t):
    return np.sinh(np.minimum(t, 300.0))


def _lognorm_first_seiffert(t):
    pos, ts = _guarded(t)
    return np.where(pos, logsinh(ts) - np.log(np.arctan(_sinh_clipped(ts))), 0.0)


def _lognorm_second_seiffert(t):
    pos, ts = _guarded(t)
    return np.where(pos, logsinh(ts) - np.log(np.arctan(np.tanh(ts))), 0.0)


def _lognorm_neuman_sandor(t):
    pos, ts = _guarded(t)
    return np.where(pos, logsinh(ts) - np.log(np.arcsinh(np.tanh(ts))), 0.0)


def _lognorm_yang(t):
    pos, ts = _guarded(t)
    arg = np.arctan(math.sqrt(2.0) * _sinh_clipped(ts))
    return np.where(pos, logsinh(ts) + 0.5 * LOG2 - np.log(arg), 0.0)


def _lognorm_sandor(t):
    return logcosh(t) + atan_sinh_ratio_m1(t)


def _lognorm_sandor_yang(t):
    # log cosh(2t)/2 split as log cosh(t) + log(1 + tanh^2 t)/2: every term is
    # relative-accurate, so the t^2 leading behaviour survives cancellation.
    return logcosh(t) + 0.5 * np.log1p(np.tanh(t) ** 2) + atan_tanh_ratio_m1(t)


def _lognorm_toader(t):
    out = np.empty_like(t)
    gl = t <= _TOADER_GL_MAX_T
    if np.any(gl):
        theta, w = gauss_legendre_quadrant(_TOADER_NODES)
        tg = t[gl, None]
        integrand = np.sqrt(
            np.exp(2.0 * tg) * np.sin(theta) ** 2 + np.exp(-2.0 * tg) * np.cos(theta) ** 2
        )
        out[gl] = np.log((2.0 / math.pi) * (integrand @ w))
    mid = (~gl) & (t < _TOADER_ASYMPTOTIC_T)
    if np.any(mid):
        tm = t[mid]
        out[mid] = tm + np.log((2.0 / math.pi) * ellipe_agm(1.0 - np.exp(-4.0 * tm)))
    far = t >= _TOADER_ASYMPTOTIC_T
    out[far] = t[far] + math.log(2.0 / math.pi)
    out[t == 0.0] = 0.0
    return out


_PLAIN_LOGNORM = {
    "harmonic": lambda t: _lognorm_power(-1.0, t),
    "geometric": lambda t: _lognorm_power(0.0, t),
    "arithmetic": lambda t: _lognorm_power(1.0, t),
    "quadratic": lambda t: _lognorm_power(2.0, t),
    "log": _lognorm_log,
    "identric": _lognorm_identric,
    "first-seiffert": _lognorm_first_seiffert,
    "second-seiffert": _lognorm_second_seiffert,
    "neuman-sandor": _lognorm_neuman_sandor,
    "yang": _lognorm_yang,
    "sandor": _lognorm_sandor,
    "toader": _lognorm_toader,
    "sandor-yang": _lognorm_sandor_yang,
}


def log_mean_normalized(kind: MeanKind, t):
    """log of the mean evaluated on the pair (e^-t, e^t), elementwise."""
    arr = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(arr < 0):
        raise ValueError("half log ratio must be nonnegative")
    if kind.tag == "power":
        out = _lognorm_power(kind.param, arr)
    elif kind.tag == "lehmer":
        out = _lognorm_lehmer(kind.param, arr)
    else:
        out = _PLAIN_LOGNORM[kind.tag](arr)
    return float(out[0]) if np.ndim(t) == 0 else out


def eval_mean_normalized(kind: MeanKind, t):
    """The mean on the normalized pair (e^-t, e^t); sqrt(ab) factored to 1."""
    return np.exp(log_mean_normalized(kind, t))


def eval_mean(kind: MeanKind, a, b):
    """Evaluate a mean on positive a, b.

    Equal arguments return a exactly (every supported mean is a mean value);
    otherwise the value is sqrt(ab) * exp(log m(t)), which is overflow-safe at
    any argument ratio.  Power(+/-inf) returns max/min exactly.
    """
    scalar = np.ndim(a) == 0 and np.ndim(b) == 0
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if not (np.all(a > 0) and np.all(b > 0)):
        raise ValueError("mean arguments must be positive")
    if kind.tag == "power" and math.isinf(kind.param):
        out = np.maximum(a, b) if kind.param > 0 else np.minimum(a, b)
        return float(out) if scalar else out
    t = np.atleast_1d(half_log_ratio(a, b))
    scale = np.sqrt(a) * np.sqrt(b)
    out = np.where(a == b, a, scale * np.exp(log_mean_normalized(kind, t)))
    return float(out[0]) if scalar else out


def toader_mean(a, b):
    """The elliptic-integral mean (2/pi) int_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2).

    Fixed 64-node Gauss-Legendre quadrature where that rule is converged
    (argument ratios up to e^4); an AGM elliptic-integral branch beyond.
    """
    return eval_mean(MeanKind("toader"), a, b)


# --- analytic endpoint fingerprints ----------------------------------------

_QUAD_COEFF = {
    "log": 1.0 / 6.0,
    "identric": 1.0 / 3.0,
    "first-seiffert": 1.0 / 3.0,
    "second-seiffert": 5.0 / 6.0,
    "neuman-sandor": 2.0 / 3.0,
    "yang": 2.0 / 3.0,
    "sandor": 1.0 / 6.0,
    "toader": 3.0 / 4.0,
    "sandor-yang": 2.0 / 3.0,
    "harmonic": -0.5,
    "geometric": 0.0,
    "arithmetic": 0.5,
    "quadratic": 1.0,
}

_GROWTH_OFFSET = {
    "log": -math.inf,
    "identric": -1.0,
    "first-seiffert": -math.log(math.pi),
    "second-seiffert": LOG2 - math.log(math.pi),
    "neuman-sandor": -math.log(2.0 * math.log(1.0 + math.sqrt(2.0))),
    "yang": 0.5 * LOG2 - math.log(math.pi),
    "sandor": -(1.0 + LOG2),
    "toader": LOG2 - math.log(math.pi),
    "sandor-yang": math.pi / 4.0 - 1.0 - 0.5 * LOG2,
    "harmonic": -math.inf,
    "geometric": -math.inf,
    "arithmetic": -LOG2,
    "quadratic": -0.5 * LOG2,
}


def quadratic_coefficient(kind: MeanKind) -> float:
    """c2 with log m(t) = c2 * t^2 + O(t^4) as t -> 0."""
    if kind.tag == "power":
        return kind.param / 2.0
    if kind.tag == "lehmer":
        return kind.param + 0.5
    return _QUAD_COEFF[kind.tag]


def growth_offset(kind: MeanKind) -> float:
    """lim_{t->inf} (log m(t) - t); -inf when the mean grows slower than e^t."""
    if kind.tag == "power":
        return -LOG2 / kind.param if kind.param > 0 else -math.inf
    if kind.tag == "lehmer":
        if kind.param > 0:
            return 0.0
        return -LOG2 if kind.param == 0 else -math.inf
    return _GROWTH_OFFSET[kind.tag]
