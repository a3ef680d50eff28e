"""
Bijections between k_t-Dyck paths and (t+1)-tuples of k-Dyck paths.

A k_t-path lifted by t units and prefixed with t up-steps becomes a
non-negative path ending on level t. Cutting that path at the up-steps that
leave levels 0..t-1 for the last time gives t+1 k-Dyck paths. For t <= k
the prefix of t up-steps is the only way to reach level t first, so the map
is a bijection; for larger t use the F/G split instead.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.exceptions import BijectionError, InvalidPathError
from .core_paths import StepSeq, is_kt_dyck, level_profile, parameter_j, parse_path

logger = logging.getLogger(__name__)


class TupleDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    parts: Tuple[StepSeq, ...]
    k: int
    t: int

    @model_validator(mode="after")
    def _parts_are_dyck(self) -> "TupleDecomposition":
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.t < 0:
            raise ValueError(f"t must be non-negative, got {self.t}")
        if len(self.parts) != self.t + 1:
            raise ValueError(f"expected {self.t + 1} parts, got {len(self.parts)}")
        for index, part in enumerate(self.parts):
            if part.k != self.k:
                raise ValueError(f"part {index} uses k={part.k}, expected k={self.k}")
            if not is_kt_dyck(part, 0):
                raise ValueError(f"part {index} ({part.steps!r}) is not a {self.k}-Dyck path")
        return self

    @property
    def total_length(self) -> int:
        return sum(len(part) for part in self.parts)

    def to_texts(self) -> List[str]:
        return [part.steps for part in self.parts]


class FGSplit(BaseModel):
    model_config = ConfigDict(frozen=True)

    f: StepSeq
    g: StepSeq
    t: int

    @model_validator(mode="after")
    def _shape(self) -> "FGSplit":
        k = self.f.k
        if (len(self.f) - self.t) % (k + 1):
            raise ValueError(f"|F| = {len(self.f)} is not t plus a multiple of {k + 1}")
        if self.t > 0:
            if not self.f.steps.endswith("U"):
                raise ValueError("F must end with an up-step")
            if any(not 0 <= level < self.t for level in level_profile(self.f)[:-1]):
                raise ValueError(f"F must stay within levels 0..{self.t - 1} before its last step")
        if any(self.t + level < 0 for level in level_profile(self.g)):
            raise ValueError("G must not go below level 0")
        return self

    @property
    def j(self) -> int:
        return len(self.f)


def make_tuple(texts: Sequence[str], k: int, t: Optional[int] = None) -> TupleDecomposition:
    """Build a decomposition from its U/D texts (t defaults to len(texts) - 1)."""
    if t is None:
        t = len(texts) - 1
    return TupleDecomposition(parts=tuple(parse_path(text, k) for text in texts), k=k, t=t)


def lift_prepend(p: StepSeq, t: int) -> StepSeq:
    if not is_kt_dyck(p, t):
        raise InvalidPathError(f"{p.steps!r} is not a {p.k}_{t}-Dyck path")
    return StepSeq(steps="U" * t + p.steps, k=p.k)


def _check_nonnegative_to(q: StepSeq, t: int) -> List[int]:
    levels = [0] + level_profile(q)
    if min(levels) < 0:
        raise InvalidPathError(f"{q.steps!r} goes below level 0")
    if levels[-1] != t:
        raise InvalidPathError(f"{q.steps!r} ends on level {levels[-1]}, expected {t}")
    return levels


def decompose_last_visits(q: StepSeq, t: int) -> TupleDecomposition:
    """
    Split q as P_0 U P_1 U ... U P_t, where the i-th marked U leaves level i
    for the last time.
    """
    levels = _check_nonnegative_to(q, t)
    last_visit = {}
    for position, level in enumerate(levels):
        if level < t:
            last_visit[level] = position
    parts = []
    start = 0
    for level in range(t):
        cut = last_visit[level]
        if q.steps[cut] != "U":
            raise InvalidPathError(
                f"{q.steps!r}: the step after the last visit to level {level} is not an up-step"
            )
        parts.append(StepSeq(steps=q.steps[start:cut], k=q.k))
        start = cut + 1
    parts.append(StepSeq(steps=q.steps[start:], k=q.k))
    return TupleDecomposition(parts=tuple(parts), k=q.k, t=t)


def compose(parts: TupleDecomposition) -> StepSeq:
    for index, part in enumerate(parts.parts):
        if not is_kt_dyck(part, 0):
            raise InvalidPathError(f"part {index} ({part.steps!r}) is not a {parts.k}-Dyck path")
    return StepSeq(steps="U".join(part.steps for part in parts.parts), k=parts.k)


def to_tuple(p: StepSeq, t: int) -> TupleDecomposition:
    if t > p.k:
        raise BijectionError(
            f"t={t} exceeds k={p.k}: the tuple map is not a bijection there; use split_fg"
        )
    return decompose_last_visits(lift_prepend(p, t), t)


def from_tuple(parts: TupleDecomposition) -> StepSeq:
    t = parts.t
    if t > parts.k:
        raise BijectionError(f"t={t} exceeds k={parts.k}: no inverse tuple map")
    q = compose(parts)
    if q.steps[:t] != "U" * t:
        raise BijectionError(f"composed path {q.steps!r} does not start with {t} up-steps")
    return StepSeq(steps=q.steps[t:], k=parts.k)


def split_fg(q: StepSeq, t: int) -> FGSplit:
    """
    F runs up to the first arrival at level t, G is the rest.
    """
    _check_nonnegative_to(q, t)
    j = parameter_j(q, t)
    logger.debug("split_fg(%s, t=%d): J=%d", q.steps, t, j)
    return FGSplit(
        f=StepSeq(steps=q.steps[:j], k=q.k),
        g=StepSeq(steps=q.steps[j:], k=q.k),
        t=t,
    )
