"""Scalar rate formulas for the two-user Gaussian multiple access channel.

All rates are in bits per channel use (base-2 logs), all powers are linear
(watts, not dB).  Every function here is pure and accepts numpy arrays in
place of scalar powers or fractions, broadcasting elementwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

LN2 = math.log(2.0)

__all__ = [
    "ChannelConfig",
    "PerUser",
    "SumPower",
    "PowerBudget",
    "RatePair",
    "ResourceSplit",
    "SCHEMES",
    "shannon_rate",
    "sum_capacity",
    "sic_rate",
    "corner_points",
    "td_rate_pair",
    "fd_rate_pair",
    "fd_touch_split",
    "sum_power_rate_pair",
]

#: Multiple-access schemes: superposition coding, time division, frequency division.
SCHEMES = ("sc", "td", "fd")


def _check_power(name, value):
    arr = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    if np.any(arr < 0):
        raise ValueError(f"{name} must be nonnegative")


def _maybe_scalar(arr):
    # preserve scalar-in / scalar-out while allowing array arguments
    return float(arr) if np.ndim(arr) == 0 else arr


@dataclass(frozen=True)
class ChannelConfig:
    """Shared AWGN channel.

    noise_power is the total in-band noise power N; a frequency-division
    sub-band covering a fraction a of the band sees noise a*N.  bandwidth
    is normalized (allocations are always fractions of it) and does not
    enter the per-channel-use rate formulas.
    """

    noise_power: float
    bandwidth: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.noise_power) and self.noise_power > 0):
            raise ValueError("noise_power must be positive and finite")
        if not (np.isfinite(self.bandwidth) and self.bandwidth > 0):
            raise ValueError("bandwidth must be positive and finite")


@dataclass(frozen=True)
class PerUser:
    """Individual power constraint: user one caps at p1, user two at p2."""

    p1: float
    p2: float

    def __post_init__(self):
        _check_power("p1", self.p1)
        _check_power("p2", self.p2)

    @property
    def total(self) -> float:
        return self.p1 + self.p2


@dataclass(frozen=True)
class SumPower:
    """Relaxed constraint: only the users' combined power is capped."""

    p_total: float

    def __post_init__(self):
        _check_power("p_total", self.p_total)


PowerBudget = Union[PerUser, SumPower]


@dataclass(frozen=True)
class RatePair:
    """An achievable (r1, r2) point, bits per channel use."""

    r1: float
    r2: float

    def __post_init__(self):
        for name, v in (("r1", self.r1), ("r2", self.r2)):
            if not (np.isfinite(v) and v >= 0):
                raise ValueError(f"{name} must be finite and nonnegative")

    def __iter__(self):
        yield self.r1
        yield self.r2

    @property
    def total(self) -> float:
        return self.r1 + self.r2


@dataclass(frozen=True)
class ResourceSplit:
    """Fraction of the shared resource given to user one.

    Depending on the scheme the fraction is time (TD), bandwidth (FD), or
    transmit power (superposition sweep under a sum-power budget).
    """

    alpha: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and 0.0 <= self.alpha <= 1.0):
            raise ValueError("alpha must lie in [0, 1]")


def _alpha_value(split) -> float:
    """Accept a ResourceSplit or a bare fraction; validate either way."""
    a = split.alpha if isinstance(split, ResourceSplit) else float(split)
    if not (np.isfinite(a) and 0.0 <= a <= 1.0):
        raise ValueError("alpha must lie in [0, 1]")
    return a


def shannon_rate(p, ch: ChannelConfig):
    """Single-user AWGN rate log2(1 + p/N).

    Computed through log1p so that small-SNR values keep full relative
    precision.  Zero power gives exactly 0.
    """
    _check_power("power", p)
    return _maybe_scalar(np.log1p(np.asarray(p, dtype=float) / ch.noise_power) / LN2)


def sum_capacity(budget: PowerBudget, ch: ChannelConfig):
    """Largest achievable rate sum: log2(1 + (total power)/N)."""
    if isinstance(budget, PerUser):
        return shannon_rate(budget.p1 + budget.p2, ch)
    if isinstance(budget, SumPower):
        return shannon_rate(budget.p_total, ch)
    raise TypeError(f"expected PerUser or SumPower, got {type(budget).__name__}")


def sic_rate(p_decode, p_interference, ch: ChannelConfig):
    """Rate of a user decoded while the other is still on the air.

    The undecoded signal acts as extra noise: log2(1 + Pd/(Pi + N)).
    With p_interference = 0 this reduces to shannon_rate.
    """
    _check_power("p_decode", p_decode)
    _check_power("p_interference", p_interference)
    denom = np.asarray(p_interference, dtype=float) + ch.noise_power
    return _maybe_scalar(np.log1p(np.asarray(p_decode, dtype=float) / denom) / LN2)


def corner_points(budget: PerUser, ch: ChannelConfig) -> tuple[RatePair, RatePair]:
    """The two rate pairs reached by the two interference-cancellation orders.

    Returns ((C1, C2*), (C1*, C2)): first decode user two against user one's
    interference, cancel it, then decode user one cleanly; the second pair
    swaps the roles.  Both pairs attain the full sum capacity.
    """
    if not isinstance(budget, PerUser):
        raise ValueError(
            "corner points need a per-user budget; under a sum-power budget "
            "the corners become a swept family (see sum_power_rate_pair)"
        )
    c1 = shannon_rate(budget.p1, ch)
    c2 = shannon_rate(budget.p2, ch)
    c2_star = sic_rate(budget.p2, budget.p1, ch)
    c1_star = sic_rate(budget.p1, budget.p2, ch)
    return RatePair(c1, c2_star), RatePair(c1_star, c2)


def td_rate_pair(split, budget: PowerBudget, ch: ChannelConfig) -> RatePair:
    """Time-division rates when user one gets a fraction alpha of the time.

    Per-user budget: (alpha*C1, (1-alpha)*C2).  Sum-power budget: the active
    user transmits at the full total power in its slots, so both single-user
    rates equal log2(1 + P/N) scaled by the time share.
    """
    a = _alpha_value(split)
    if isinstance(budget, PerUser):
        return RatePair(a * shannon_rate(budget.p1, ch),
                        (1.0 - a) * shannon_rate(budget.p2, ch))
    if isinstance(budget, SumPower):
        r = shannon_rate(budget.p_total, ch)
        return RatePair(a * r, (1.0 - a) * r)
    raise TypeError(f"expected PerUser or SumPower, got {type(budget).__name__}")


def _fd_term(alpha, p, noise_power):
    """alpha * log2(1 + p/(alpha*N)), with the alpha -> 0 limit pinned to 0."""
    a = np.asarray(alpha, dtype=float)
    out = np.zeros(a.shape)
    pos = a > 0
    out[pos] = a[pos] * np.log1p(p / (a[pos] * noise_power)) / LN2
    return _maybe_scalar(out)


def fd_rate_pair(split, budget: PowerBudget, ch: ChannelConfig) -> RatePair:
    """Frequency-division rates when user one gets a fraction alpha of the band.

    A sub-band of fraction a carries noise a*N, so user one sees
    a*log2(1 + p1/(a*N)) and user two the complementary term.  At the
    endpoints the silent user's rate is the limit value 0.  Under a
    sum-power budget each user also gets the matching fraction of the
    power and the expression collapses to the time-division one.
    """
    a = _alpha_value(split)
    if isinstance(budget, PerUser):
        return RatePair(_fd_term(a, budget.p1, ch.noise_power),
                        _fd_term(1.0 - a, budget.p2, ch.noise_power))
    if isinstance(budget, SumPower):
        r = shannon_rate(budget.p_total, ch)
        return RatePair(a * r, (1.0 - a) * r)
    raise TypeError(f"expected PerUser or SumPower, got {type(budget).__name__}")


def fd_touch_split(budget: PerUser) -> ResourceSplit:
    """Bandwidth split at which frequency division attains the full sum capacity.

    Each user's power is then proportional to its allocated bandwidth:
    alpha = p1/(p1+p2).
    """
    if not isinstance(budget, PerUser):
        raise ValueError("touch split is defined for per-user budgets")
    total = budget.p1 + budget.p2
    if total <= 0:
        raise ValueError("touch split undefined for an all-zero power budget")
    return ResourceSplit(budget.p1 / total)


def sum_power_rate_pair(scheme: str, split, p_total, ch: ChannelConfig) -> RatePair:
    """Rate pair under a sum-power budget for one of the three schemes.

    'td' and 'fd' delegate to the budget-aware pair functions.  'sc' sweeps
    superposition coding by a power split: user one transmits q1 = alpha*P,
    user two q2 = (1-alpha)*P; user two is decoded first against user one's
    interference and cancelled, so the pair is
    (log2(1+q1/N), log2(1+q2/(q1+N))) and the components always sum to
    log2(1+P/N).
    """
    a = _alpha_value(split)
    _check_power("p_total", p_total)
    p_total = float(p_total)
    budget = SumPower(p_total)
    if scheme == "td":
        return td_rate_pair(a, budget, ch)
    if scheme == "fd":
        return fd_rate_pair(a, budget, ch)
    if scheme == "sc":
        q1 = a * p_total
        q2 = (1.0 - a) * p_total
        return RatePair(shannon_rate(q1, ch), sic_rate(q2, q1, ch))
    raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
