"""Integer partitions with significant zero parts.

A :class:`Partition` is a weakly decreasing tuple of non-negative integers.
Zero parts are kept: ``(2, 1)`` and ``(2, 1, 0)`` are different partitions
with different lengths, because the length feeds generating-function
exponents elsewhere in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence


class PartitionError(ValueError):
    """Raised for malformed partition text or invalid part sequences."""


class PartitionClass(str, Enum):
    POSITIVE = "positive-parts"
    ZEROS_ALLOWED = "zeros-allowed"
    DISTINCT_POSITIVE = "distinct-positive"
    TRIANGULAR = "triangular"


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"part {i} is not an integer: {p!r}")
            if p < 0:
                raise PartitionError(f"part {i} is negative: {p}")
            if i and parts[i - 1] < p:
                raise PartitionError(
                    f"not weakly decreasing at index {i}: {parts[i - 1]} < {p}"
                )

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        """Largest part; 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> float | int:
        """Smallest part; ``math.inf`` for the empty partition."""
        return self.parts[-1] if self.parts else math.inf

    def part(self, i: int) -> int:
        """0-based part lookup that reads missing parts as 0."""
        return self.parts[i] if i < len(self.parts) else 0

    def tail(self, start: int = 1) -> "Partition":
        return Partition(self.parts[start:])


EMPTY = Partition(())


def parse_partition(text: str) -> Partition:
    """Parse ``"p1,p2,...,pk"``; the empty (or blank) string is the empty partition."""
    text = text.strip()
    if not text:
        return EMPTY
    parts = []
    for i, token in enumerate(text.split(",")):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise PartitionError(f"token {i} is not an integer: {token!r}") from None
        if value < 0:
            raise PartitionError(f"token {i} is negative: {value}")
        if parts and parts[-1] < value:
            raise PartitionError(
                f"not weakly decreasing at index {i}: {parts[-1]} < {value}"
            )
        parts.append(value)
    return Partition(tuple(parts))


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p.parts)


def stats(p: Partition) -> tuple[int, int, int, float | int]:
    """Return ``(length, weight, largest, smallest)``."""
    return p.length, p.weight, p.largest, p.smallest


def triangular(n: int) -> Partition:
    if n < 0:
        raise PartitionError(f"triangular size must be non-negative, got {n}")
    return Partition(tuple(range(n, 0, -1)))


def is_triangular(p: Partition) -> bool:
    return p.parts == tuple(range(len(p.parts), 0, -1))


def is_member(p: Partition, cls: PartitionClass | str) -> bool:
    cls = PartitionClass(cls)
    if cls is PartitionClass.ZEROS_ALLOWED:
        return True
    if cls is PartitionClass.POSITIVE:
        return not p.parts or p.parts[-1] >= 1
    if cls is PartitionClass.DISTINCT_POSITIVE:
        if p.parts and p.parts[-1] < 1:
            return False
        return all(x > y for x, y in zip(p.parts, p.parts[1:]))
    return is_triangular(p)


def add_pointwise(x: Partition, y: Partition) -> Partition:
    n = max(len(x), len(y))
    return Partition(tuple(x.part(i) + y.part(i) for i in range(n)))


def strip_zeros(p: Partition) -> Partition:
    return Partition(tuple(x for x in p.parts if x))


def _bounded(
    n: int, max_part: int, max_len: int, min_part: int = 1, strict: bool = False
) -> Iterator[tuple[int, ...]]:
    # Partitions of exactly n, parts in [min_part, max_part], at most max_len
    # parts, lexicographically descending.
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        if first * max_len < n:
            break
        nxt = first - 1 if strict else first
        for rest in _bounded(n - first, nxt, max_len - 1, min_part, strict):
            yield (first,) + rest


def partitions_of(
    n: int,
    max_part: Optional[int] = None,
    max_len: Optional[int] = None,
    distinct: bool = False,
    min_part: int = 1,
) -> Iterator[Partition]:
    """Partitions of exactly ``n`` into positive parts, lexicographically descending."""
    if n < 0:
        return
    mp = n if max_part is None else max_part
    ml = n if max_len is None else max_len
    for parts in _bounded(n, mp, ml, max(min_part, 1), distinct):
        yield Partition(parts)


def enumerate_partitions(
    weight_max: int,
    cls: PartitionClass | str = PartitionClass.POSITIVE,
    length_max: Optional[int] = None,
) -> Iterator[Partition]:
    """Every partition of the class with weight at most ``weight_max``.

    Order is by weight, then lexicographically descending on the positive
    parts, then (for zeros-allowed) by the number of trailing zeros.
    ``length_max`` is mandatory for the zeros-allowed class.
    """
    cls = PartitionClass(cls)
    if weight_max < 0:
        raise PartitionError("weight_max must be non-negative")
    if cls is PartitionClass.ZEROS_ALLOWED and length_max is None:
        raise PartitionError("zeros-allowed enumeration needs length_max")
    if cls is PartitionClass.TRIANGULAR:
        n = 0
        while n * (n + 1) // 2 <= weight_max:
            if length_max is None or n <= length_max:
                yield triangular(n)
            n += 1
        return
    distinct = cls is PartitionClass.DISTINCT_POSITIVE
    for w in range(weight_max + 1):
        for p in partitions_of(w, max_len=length_max, distinct=distinct):
            if cls is PartitionClass.ZEROS_ALLOWED:
                for z in range(length_max - len(p) + 1):
                    yield Partition(p.parts + (0,) * z)
            else:
                yield p


def count_partitions(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence; independent of the enumerators."""
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * table[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[n]


def as_partition(value: Partition | Sequence[int] | str) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    return Partition(tuple(value))
