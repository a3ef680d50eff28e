import logging
from enum import Enum
from itertools import accumulate
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..core.exceptions import InvalidParameterError, InvalidPathError, PathParseError

logger = logging.getLogger(__name__)

_ALPHABET = frozenset("UD")


class Step(str, Enum):
    UP = "U"
    DOWN = "D"


class StepSeq(BaseModel):
    """
    A path of unit up-steps and down-steps of k units, stored as its U/D text.

    Length and end level are derived from the steps, never stored.
    """

    model_config = ConfigDict(frozen=True)

    steps: str = ""
    k: int = 1

    @field_validator("k")
    @classmethod
    def _positive_k(cls, k: int) -> int:
        if k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        return k

    @field_validator("steps")
    @classmethod
    def _alphabet(cls, steps: str) -> str:
        if not _ALPHABET.issuperset(steps):
            raise ValueError(f"path text may only contain U and D: {steps!r}")
        return steps

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    @property
    def ups(self) -> int:
        return self.steps.count(Step.UP.value)

    @property
    def downs(self) -> int:
        return self.steps.count(Step.DOWN.value)

    @property
    def end_level(self) -> int:
        return self.ups - self.k * self.downs

    def to_text(self) -> str:
        return self.steps


class PathClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    t: int
    end_level: int
    k: int = 1

    @model_validator(mode="after")
    def _bounds(self) -> "PathClass":
        if self.t < 0:
            raise ValueError(f"t must be non-negative, got {self.t}")
        if self.end_level < -self.t:
            raise ValueError(f"end level {self.end_level} lies below the boundary -{self.t}")
        return self


def parse_path(text: str, k: int = 1) -> StepSeq:
    """
    Parse the canonical U/D text of a path
    """
    text = text.strip()
    bad = set(text) - _ALPHABET
    if bad:
        raise PathParseError(
            f"invalid step symbol(s) {''.join(sorted(bad))!r} in path {text!r}; use U and D"
        )
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    return StepSeq(steps=text, k=k)


def level_profile(p: StepSeq) -> List[int]:
    """
    Levels after each step: U adds 1, D subtracts k. The start level 0 is not included.
    """
    k = p.k
    return list(accumulate(1 if s == "U" else -k for s in p.steps))


def coordinates(p: StepSeq) -> List[Tuple[int, int]]:
    return [(0, 0)] + list(enumerate(level_profile(p), start=1))


def _check_t(t: int) -> None:
    if t < 0:
        raise InvalidParameterError(f"t must be non-negative, got {t}")


def is_kt_dyck(p: StepSeq, t: int) -> bool:
    """
    True iff the path never goes below -t and ends on level 0.
    """
    _check_t(t)
    profile = level_profile(p)
    if not profile:
        return True
    return profile[-1] == 0 and min(profile) >= -t


def is_nonnegative(p: StepSeq) -> bool:
    return all(level >= 0 for level in level_profile(p))


def path_class(p: StepSeq) -> PathClass:
    profile = level_profile(p)
    lowest = min(profile, default=0)
    return PathClass(t=max(0, -lowest), end_level=profile[-1] if profile else 0, k=p.k)


def parameter_j(p: StepSeq, t: int) -> int:
    """
    Number of steps until level t is reached for the first time.

    The input is a non-negative path (typically a lifted k_t-path); for t = 0
    the start already sits on level 0 and the result is 0.
    """
    _check_t(t)
    if t == 0:
        return 0
    for index, level in enumerate(level_profile(p), start=1):
        if level < 0:
            raise InvalidPathError(f"path {p.steps!r} goes below level 0 at step {index}")
        if level == t:
            return index
    raise InvalidPathError(f"path {p.steps!r} never reaches level {t}")
