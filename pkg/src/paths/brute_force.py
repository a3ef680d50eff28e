"""
Exhaustive ground-truth oracles.

Everything here walks paths one step at a time; nothing uses a formula. The
closed forms, series and bijections are all checked against these counts.
"""
import logging
from collections import Counter
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.config import get_settings
from ..core.exceptions import InvalidParameterError, ResourceLimitError
from .bijections import TupleDecomposition
from .core_paths import StepSeq, parameter_j

logger = logging.getLogger(__name__)


class EnumSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    t: int
    n: int
    h: Optional[int] = None
    i: Optional[int] = None

    @model_validator(mode="after")
    def _bounds(self) -> "EnumSpec":
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.t < 0 or self.n < 0:
            raise ValueError("t and n must be non-negative")
        if self.h is not None and self.h < 0:
            raise ValueError(f"upper bound h must be non-negative, got {self.h}")
        if self.i is not None and self.i < -self.t:
            raise ValueError(f"end level {self.i} lies below -{self.t}")
        if self.h is not None and self.i is not None and self.i > self.h:
            raise ValueError(f"end level {self.i} lies above h={self.h}")
        return self

    @property
    def length(self) -> int:
        return (self.k + 1) * self.n


def check_limit(length: int, limit: Optional[int] = None) -> None:
    if limit is None:
        limit = get_settings().BRUTE_LIMIT
    if length > limit:
        logger.warning("Refusing to enumerate %d-step paths (limit %d)", length, limit)
        raise ResourceLimitError(length, limit)


def _lex_paths(k: int, floor: int, ups: int, downs: int) -> Iterator[str]:
    """
    All arrangements of `ups` U's and `downs` D's whose levels stay >= floor,
    in lexicographic order with U < D.
    """
    buf: List[str] = []

    def walk(level: int, u: int, d: int) -> Iterator[str]:
        if not u and not d:
            yield "".join(buf)
            return
        if u:
            buf.append("U")
            yield from walk(level + 1, u - 1, d)
            buf.pop()
        if d and level - k >= floor:
            buf.append("D")
            yield from walk(level - k, u, d - 1)
            buf.pop()

    return walk(0, ups, downs)


def enumerate_kt(spec: EnumSpec, limit: Optional[int] = None) -> Iterator[StepSeq]:
    """
    Yield every k_t-Dyck path of length (k+1)n exactly once, lexicographically.
    """
    if spec.h is not None:
        raise InvalidParameterError("enumerate_kt takes no upper bound; use count_strip")
    check_limit(spec.length, limit)
    logger.debug("Enumerating %s", spec)
    for text in _lex_paths(spec.k, -spec.t, spec.k * spec.n, spec.n):
        yield StepSeq.model_construct(steps=text, k=spec.k)


def enumerate_nonnegative_to(
    k: int, t: int, length: int, limit: Optional[int] = None
) -> Iterator[StepSeq]:
    """
    Non-negative paths of the given length from level 0 to level t.
    """
    check_limit(length, limit)
    downs, rest = divmod(length - t, k + 1)
    if rest or downs < 0:
        return
    for text in _lex_paths(k, 0, t + k * downs, downs):
        yield StepSeq.model_construct(steps=text, k=k)


def count_strip(spec: EnumSpec, length: int) -> int:
    """
    Paths of exactly `length` steps from 0 to i that stay within [-t, h].

    Counts are pushed forward level by level, one step at a time.
    """
    if spec.h is None or spec.i is None:
        raise InvalidParameterError("count_strip needs both the upper bound h and the end level i")
    if length < 0:
        raise InvalidParameterError(f"length must be non-negative, got {length}")
    k, low, high = spec.k, -spec.t, spec.h
    counts: Dict[int, int] = {0: 1}
    for _ in range(length):
        nxt: Dict[int, int] = {}
        for level, ways in counts.items():
            if level + 1 <= high:
                nxt[level + 1] = nxt.get(level + 1, 0) + ways
            if level - k >= low:
                nxt[level - k] = nxt.get(level - k, 0) + ways
        counts = nxt
    return counts.get(spec.i, 0)


def j_histogram(t: int, n: int, k: int = 1, limit: Optional[int] = None) -> Dict[int, int]:
    """
    Histogram of s = (J - t)/(k+1) over the non-negative paths from 0 to t of
    length t + (k+1)n, where J is the first-arrival time at level t.
    """
    if t < 0 or n < 0:
        raise InvalidParameterError("t and n must be non-negative")
    histogram: Counter = Counter()
    for q in enumerate_nonnegative_to(k, t, t + (k + 1) * n, limit):
        histogram[(parameter_j(q, t) - t) // (k + 1)] += 1
    logger.debug("j_histogram(t=%d, n=%d, k=%d): %d paths", t, n, k, sum(histogram.values()))
    return dict(sorted(histogram.items()))


def first_arrival_counts(k: int, t: int, l_max: int, limit: Optional[int] = None) -> List[int]:
    """
    Entry l counts the non-negative paths of length t + (k+1)l that reach
    level t for the first time with their final step.
    """
    result = []
    for ell in range(l_max + 1):
        length = t + (k + 1) * ell
        result.append(
            sum(1 for q in enumerate_nonnegative_to(k, t, length, limit) if parameter_j(q, t) == length)
        )
    return result


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_tuples(k: int, t: int, n: int, limit: Optional[int] = None) -> Iterator[TupleDecomposition]:
    """
    Every ordered (t+1)-tuple of k-Dyck paths with total length (k+1)n.
    """
    check_limit((k + 1) * n, limit)
    dyck = {
        m: [p.steps for p in enumerate_kt(EnumSpec(k=k, t=0, n=m), limit)] for m in range(n + 1)
    }
    for sizes in _compositions(n, t + 1):
        for texts in product(*(dyck[m] for m in sizes)):
            parts = tuple(StepSeq.model_construct(steps=text, k=k) for text in texts)
            yield TupleDecomposition(parts=parts, k=k, t=t)
