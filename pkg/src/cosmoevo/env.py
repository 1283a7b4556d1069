"""Toy sequence-synthesis environment.

A trajectory is a fixed-length sequence of small integer actions; its
reward is ``reward_base - |sum(actions) - target|``. The module also
provides an exhaustive oracle (ground truth for expected random reward,
optimum, and optimum multiplicity) and a schedule mechanism that moves the
target mid-run to emulate a distribution shift.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from . import kernels
from .errors import EnumerationTooLargeError, ValidationError

ENUMERATION_GUARD = 10**7

ActionSequence = tuple[int, ...]


@dataclass(frozen=True)
class EnvConfig:
    """Environment parameters. Defaults give the 6^5 = 7776-sequence task."""

    length: int = 5
    action_max: int = 5
    target: int = 15
    reward_base: float = 10.0

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValidationError(f"length must be >= 1, got {self.length}")
        if self.action_max < 0:
            raise ValidationError(f"action_max must be >= 0, got {self.action_max}")

    @property
    def n_actions(self) -> int:
        return self.action_max + 1


@dataclass(frozen=True)
class ShiftSchedule:
    """Ordered (activation_step, new_target) pairs; empty means no shift."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        steps = [s for s, _ in self.entries]
        if any(s < 0 for s in steps):
            raise ValidationError("shift activation steps must be non-negative")
        if any(b <= a for a, b in zip(steps, steps[1:])) or len(set(steps)) != len(steps):
            raise ValidationError("shift activation steps must be strictly increasing")

    def __bool__(self) -> bool:
        return bool(self.entries)

    @classmethod
    def parse(cls, text: str) -> "ShiftSchedule":
        """Parse ``step:target[,step:target...]``; blank means empty."""
        text = text.strip()
        if not text:
            return cls()
        entries = []
        for part in text.split(","):
            try:
                step_s, target_s = part.split(":")
                entries.append((int(step_s), int(target_s)))
            except ValueError as exc:
                raise ValidationError(f"bad shift entry {part!r}") from exc
        return cls(tuple(entries))

    def render(self) -> str:
        return ",".join(f"{s}:{t}" for s, t in self.entries)


@dataclass(frozen=True)
class OracleReport:
    """Exhaustive ground truth for one environment configuration."""

    expected_random_reward: float
    optimal_reward: float
    optimal_count: int
    total_sequences: int

    def to_dict(self) -> dict:
        return {
            "expected_random_reward": self.expected_random_reward,
            "optimal_reward": self.optimal_reward,
            "optimal_count": self.optimal_count,
            "total_sequences": self.total_sequences,
        }


def validate_actions(seq: Sequence[int], cfg: EnvConfig) -> None:
    """Reject sequences of the wrong length or with out-of-range actions."""
    if len(seq) != cfg.length:
        raise ValidationError(f"sequence length {len(seq)} != {cfg.length}")
    for a in seq:
        if not 0 <= a <= cfg.action_max:
            raise ValidationError(f"action {a} outside [0, {cfg.action_max}]")


def reward(seq: Sequence[int], cfg: EnvConfig) -> float:
    """Reward of one sequence; pure and deterministic."""
    validate_actions(seq, cfg)
    return cfg.reward_base - abs(sum(seq) - cfg.target)


def rewards_batch(actions: np.ndarray, cfg: EnvConfig) -> np.ndarray:
    """Vectorized reward over an (n, length) int64 matrix (not validated)."""
    return kernels.batch_rewards(actions, cfg.target, cfg.reward_base)


def sample_random(rng: np.random.Generator, cfg: EnvConfig) -> ActionSequence:
    """Draw each position independently and uniformly from [0, action_max]."""
    u = rng.random(cfg.length)
    draws = np.minimum((u * cfg.n_actions).astype(np.int64), cfg.action_max)
    return tuple(int(a) for a in draws)


def _sum_counts(cfg: EnvConfig) -> np.ndarray:
    """Number of sequences per attainable action sum, by exhaustive convolution.

    counts[s] covers every one of the (action_max+1)^length sequences exactly
    once, grouped by sum; rewards depend on the sum only.
    """
    counts = np.zeros(1, dtype=object)
    counts[0] = 1
    step = np.ones(cfg.n_actions, dtype=object)
    for _ in range(cfg.length):
        counts = np.convolve(counts, step)
    return counts


def oracle_enumerate(cfg: EnvConfig) -> OracleReport:
    """Exhaustive oracle over the full sequence space.

    Raises EnumerationTooLargeError when the space exceeds the 1e7 guard.
    """
    total = cfg.n_actions**cfg.length
    if total > ENUMERATION_GUARD:
        raise EnumerationTooLargeError(
            f"{cfg.n_actions}^{cfg.length} = {total} sequences exceeds the "
            f"{ENUMERATION_GUARD} enumeration guard"
        )
    counts = _sum_counts(cfg)
    sums = np.arange(len(counts))
    devs = np.abs(sums - cfg.target)
    dev_total = int(np.dot(counts, devs))
    best_dev = int(devs.min())
    optimal_count = int(counts[devs == best_dev].sum())
    return OracleReport(
        expected_random_reward=cfg.reward_base - dev_total / total,
        optimal_reward=cfg.reward_base - best_dev,
        optimal_count=optimal_count,
        total_sequences=total,
    )


def monte_carlo_mean(cfg: EnvConfig, n: int, rng: np.random.Generator) -> float:
    """Empirical counterpart of expected_random_reward over n fresh samples."""
    u = rng.random((n, cfg.length))
    actions = np.minimum((u * cfg.n_actions).astype(np.int64), cfg.action_max)
    return float(rewards_batch(actions, cfg).mean())


def apply_shift(cfg: EnvConfig, step: int, schedule: ShiftSchedule) -> EnvConfig:
    """Return cfg with the target of the latest activated entry, if any."""
    target = cfg.target
    for activation, new_target in schedule.entries:
        if activation <= step:
            target = new_target
    if target == cfg.target:
        return cfg
    return replace(cfg, target=target)
