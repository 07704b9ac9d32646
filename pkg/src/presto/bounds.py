"""Sample sizes that guarantee a relative (epsilon, eta) approximation.

All calculators take the ratio between the window-start range and the slack
``(c - 1) * delta`` (or the number of admissible edge starts) and return the
smallest integer sample count satisfying the corresponding concentration
bound.  Arithmetic is double precision with a single ceiling at the end.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasibleBudget, InvalidGoal

__all__ = [
    "ApproximationGoal",
    "bennett_h",
    "hoeffding_sample_size_a",
    "bennett_sample_size_a",
    "bennett_sample_size_e",
    "variance_bound_factor",
    "bennett_tail",
]

MAX_EXACT_INT = 2**53


@dataclass(frozen=True)
class ApproximationGoal:
    epsilon: float
    eta: float

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise InvalidGoal(f"epsilon must be > 0, got {self.epsilon}")
        if not 0 < self.eta < 1:
            raise InvalidGoal(f"eta must lie in (0, 1), got {self.eta}")


def bennett_h(x: float) -> float:
    """``(1 + x) * ln(1 + x) - x``, accurate near zero."""
    if x < 0:
        raise InvalidGoal("h(x) is only used for x >= 0")
    if x < 1e-4:
        return x * x / 2 - x**3 / 6 + x**4 / 12
    return (1 + x) * math.log1p(x) - x


def _ceil(value: float) -> int:
    if not value < MAX_EXACT_INT:
        raise InfeasibleBudget(f"required sample size {value:.4g} exceeds 2**53")
    return max(1, math.ceil(value))


def _slack_ratio(delta_T1, c, delta):
    if not c > 1:
        raise InvalidGoal(f"c must be > 1, got {c}")
    if not delta > 0:
        raise InvalidGoal(f"delta must be > 0, got {delta}")
    if not delta_T1 > 0:
        raise InvalidGoal(f"delta_T1 must be > 0, got {delta_T1}")
    return delta_T1 / ((c - 1) * delta)


def hoeffding_sample_size_a(goal: ApproximationGoal, delta_T1: float, c: float,
                            delta: float) -> int:
    """Samples needed under Hoeffding's inequality (continuous starts).

    Each iteration lies in ``[0, C * R]`` with ``R = delta_T1 / ((c-1) delta)``,
    giving ``s = R**2 / (2 eps**2) * ln(2/eta)``.
    """
    ratio = _slack_ratio(delta_T1, c, delta)
    return _ceil(ratio**2 / (2 * goal.epsilon**2) * math.log(2 / goal.eta))


def bennett_sample_size_a(goal: ApproximationGoal, delta_T1: float, c: float,
                          delta: float) -> int:
    """Samples needed under Bennett's inequality (continuous starts).

    ``s = (R - 1) / h(eps) * ln(2/eta)`` with ``R = delta_T1 / ((c-1) delta)``;
    linear in ``R`` where the Hoeffding version is quadratic.
    """
    ratio = _slack_ratio(delta_T1, c, delta)
    if not ratio > 1:
        raise InvalidGoal(f"delta_T1 / ((c-1) delta) must exceed 1, got {ratio}")
    return _ceil((ratio - 1) / bennett_h(goal.epsilon) * math.log(2 / goal.eta))


def bennett_sample_size_e(goal: ApproximationGoal, delta_T2: int) -> int:
    """Samples needed under Bennett's inequality (edge-anchored starts).

    With a single admissible start the estimator is exact and one sample
    suffices.
    """
    if int(delta_T2) != delta_T2 or delta_T2 < 1:
        raise InvalidGoal(f"delta_T2 must be a positive integer, got {delta_T2}")
    if delta_T2 == 1:
        return 1
    return _ceil((delta_T2 - 1) / bennett_h(goal.epsilon) * math.log(2 / goal.eta))


def variance_bound_factor(variant: str, delta_T: float, c: float = None,
                          delta: float = None, s: int = 1) -> float:
    """Multiplier of ``C**2`` in the variance bound of the mean of ``s`` samples.

    For ``"A"`` this is ``(R - 1) / s`` with ``R = delta_T / ((c-1) delta)``;
    for ``"E"`` it is ``(delta_T - 1) / s`` with ``delta_T`` the number of
    admissible edge starts.
    """
    if int(s) != s or s < 1:
        raise InvalidGoal(f"s must be a positive integer, got {s}")
    variant = str(variant).upper()
    if variant == "A":
        return (_slack_ratio(delta_T, c, delta) - 1) / s
    if variant == "E":
        if delta_T < 1:
            raise InvalidGoal("delta_T2 must be >= 1")
        return (delta_T - 1) / s
    raise InvalidGoal(f"unknown variant {variant!r}")


def bennett_tail(s: float, v: float, B: float, t: float) -> float:
    """Two-sided Bennett bound ``2 exp(-s v / B**2 * h(t B / v))``.

    ``v`` may be any upper bound on the average variance: the bound is
    non-decreasing in ``v``.
    """
    if not (v > 0 and B > 0 and t >= 0 and s > 0):
        raise InvalidGoal("bennett_tail needs v > 0, B > 0, t >= 0, s > 0")
    return 2.0 * math.exp(-s * (v / B**2) * bennett_h(t * B / v))
