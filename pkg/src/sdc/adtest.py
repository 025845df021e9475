"""Anderson-Darling test of observed reachabilities against the random model.

The null hypothesis is that each observed diagram's reachable-state count was
drawn from the uniform-random-diagram distribution at its own
(states, transitions) configuration, represented by a simulated
:class:`~sdc.montecarlo.ReachabilityPMF`.

Because reachability is discrete, observations go through a *randomized*
probability integral transform: an observation ``x`` maps to a uniform draw
from ``(cdf(x-1), cdf(x)]``.  Under the null this makes each transformed
value exactly Uniform(0,1) — plain ``cdf(x)`` would not be — so the
Anderson-Darling statistic of the transformed sample can be compared against
uniformity.  Its null distribution is estimated by Monte Carlo: each
replicate resamples one reachability per configuration from its PMF, applies
the same transform, and evaluates the same statistic.  The p-value uses the
add-one estimator ``(1 + #{A2_null >= A2_obs}) / (n_null + 1)``, which a
finite simulation can never drive to zero.

Everything is deterministic given the seed: the observed transform uses RNG
stream ``(seed, 0)`` and replicate ``r`` uses stream ``(seed, r+1)``, so
replicates may be evaluated in any order or in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ConfigMismatchError, EmptySampleError
from .montecarlo import ReachabilityPMF, cdf
from .rng import SplitMix64

#: Default observed sample for the CLI: one (states, transitions, reachable)
#: triple per observed diagram.
DEFAULT_OBSERVATIONS = (
    (11, 13, 10),
    (11, 13, 11),
    (11, 14, 11),
    (11, 16, 11),
    (11, 21, 11),
)


@dataclass(frozen=True)
class Observation:
    n_states: int
    n_transitions: int
    reachable: int

    def __post_init__(self):
        if not 1 <= self.reachable <= self.n_states:
            raise ValueError(
                f"reachable must be in [1, {self.n_states}], got {self.reachable}")


@dataclass(frozen=True)
class AdTestResult:
    statistic: float
    p_value: float
    n_null: int
    n_pmf_samples: int
    seed: int
    u_values: tuple[float, ...]


def _check_pairing(observations: Sequence[Observation],
                   pmfs: Sequence[ReachabilityPMF]) -> None:
    if len(observations) != len(pmfs):
        raise ConfigMismatchError(
            f"{len(observations)} observations but {len(pmfs)} distributions")
    for i, (obs, pmf) in enumerate(zip(observations, pmfs)):
        if (obs.n_states, obs.n_transitions) != (pmf.config.n_states,
                                                 pmf.config.n_transitions):
            raise ConfigMismatchError(
                f"observation {i} is ({obs.n_states}, {obs.n_transitions}) but its "
                f"distribution was simulated at ({pmf.config.n_states}, "
                f"{pmf.config.n_transitions})")


def pit_transform(observations: Sequence[Observation],
                  pmfs: Sequence[ReachabilityPMF],
                  rng: SplitMix64) -> list[float]:
    """Randomized probability integral transform of each observation.

    Observation ``x`` with empirical CDF ``F`` maps to a uniform draw from
    ``(F(x-1), F(x)]``; under the null the result is exactly Uniform(0,1).
    One ``rng`` draw is consumed per observation, in order.
    """
    _check_pairing(observations, pmfs)
    values = []
    for obs, pmf in zip(observations, pmfs):
        lo = cdf(pmf, obs.reachable - 1)
        hi = cdf(pmf, obs.reachable)
        values.append(lo + (hi - lo) * rng.unit_open_closed())
    return values


def ad_statistic(u_values: Sequence[float]) -> float:
    """Anderson-Darling A2 of a sample against Uniform(0,1).

    With the sample sorted ascending as ``u_1..u_k``::

        A2 = -k - (1/k) * sum_i (2i-1) * (ln u_i + ln(1 - u_{k+1-i}))

    Values must lie strictly inside (0,1); callers clamp empirical-CDF
    boundary values first (see :func:`ad_test`).
    """
    if len(u_values) == 0:
        raise EmptySampleError("cannot evaluate the statistic of an empty sample")
    ordered = sorted(u_values)
    if ordered[0] <= 0.0 or ordered[-1] >= 1.0:
        raise ValueError("values must lie strictly inside (0, 1)")
    k = len(ordered)
    total = 0.0
    for i in range(k):
        total += (2 * i + 1) * (math.log(ordered[i]) + math.log1p(-ordered[k - 1 - i]))
    return -k - total / k


def _clamp(values, eps):
    return [min(max(v, eps), 1.0 - eps) for v in values]


def _draw_reachability(pmf: ReachabilityPMF, rng: SplitMix64) -> int:
    # Pick one of the n_samples simulated diagrams uniformly; its reach
    # count is an exact draw from the empirical PMF.
    target = rng.below(pmf.config.n_samples)
    acc = 0
    for k, count in enumerate(pmf.counts):
        acc += count
        if target < acc:
            return k
    raise AssertionError("counts do not sum to n_samples")


def ad_test(observations: Sequence[Observation],
            pmfs: Sequence[ReachabilityPMF],
            n_null: int = 10_000,
            seed: int = 0) -> AdTestResult:
    """Monte-Carlo Anderson-Darling test of observations against their PMFs.

    ``n_null`` replicates (at least 1000) estimate the null distribution of
    the statistic.  Transformed values are clamped into ``[eps, 1-eps]`` with
    ``eps = 1/(2 * n_pmf_samples)`` before the logs, since an empirical CDF
    can return exactly 0 or 1.
    """
    _check_pairing(observations, pmfs)
    if not observations:
        raise EmptySampleError("need at least one observation")
    if n_null < 1000:
        raise ValueError(f"need at least 1000 null replicates, got {n_null}")

    n_pmf_samples = min(p.config.n_samples for p in pmfs)
    eps = 0.5 / n_pmf_samples

    observed_u = _clamp(pit_transform(observations, pmfs,
                                      SplitMix64.stream(seed, 0)), eps)
    observed_a2 = ad_statistic(observed_u)

    exceed = 0
    for r in range(n_null):
        rng = SplitMix64.stream(seed, r + 1)
        synthetic = [
            Observation(p.config.n_states, p.config.n_transitions,
                        _draw_reachability(p, rng))
            for p in pmfs
        ]
        u = _clamp(pit_transform(synthetic, pmfs, rng), eps)
        if ad_statistic(u) >= observed_a2:
            exceed += 1

    return AdTestResult(
        statistic=observed_a2,
        p_value=(1 + exceed) / (n_null + 1),
        n_null=n_null,
        n_pmf_samples=n_pmf_samples,
        seed=seed,
        u_values=tuple(observed_u),
    )
