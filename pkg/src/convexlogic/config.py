"""Run-wide settings shared by the command-line tools."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .frames.algebra import DEFAULT_CAP


@dataclass(frozen=True)
class Config:
    """``seed`` drives every random choice; ``cap`` bounds upset enumeration;
    ``samples`` is the verifier's sampling budget; ``precision`` is the number
    of decimals in approximate (OFF) output."""
    seed: int = 0
    cap: int = DEFAULT_CAP
    samples: int = 100
    format: str = "json"
    precision: int = 6

    def __post_init__(self):
        if self.cap < 1 or self.samples < 0 or self.precision < 0:
            raise ValueError("cap must be positive, samples and precision non-negative")
        if self.format not in ("json", "off", "dot", "drawing"):
            raise ValueError(f"unknown format {self.format!r}")

    def rng(self) -> random.Random:
        return random.Random(self.seed)
