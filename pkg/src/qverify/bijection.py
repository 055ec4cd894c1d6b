"""Adding a staircase to a partition and splitting the sum.

A source pair ``(lam, mu)`` has ``lam`` a staircase and ``mu`` a partition
whose zero parts count. Adding the two row by row and cutting after
``k = min(len(lam), len(mu))`` rows gives ``(X, Y)``: X has distinct
positive parts and every part of Y is smaller than every part of X. The
tag records which of the two lengths was shorter, and the inverse reads
the staircase back off from the lengths of X and Y.

When both lengths agree the classic staircase bijection between
partitions into k non-negative parts and into k distinct positive parts
falls out, with Y empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .partitions import (
    Partition,
    PartitionError,
    add_pointwise,
    format_partition,
    is_member,
    is_triangular,
    partitions_of,
    triangular,
)
from .report import Check, Report
from .series import Series, Window, compare, from_terms

A1 = "A1"
A2 = "A2"


class DomainError(ValueError):
    """An input pair violates the invariants of its family."""


@dataclass(frozen=True)
class SourcePair:
    lam: Partition
    mu: Partition

    def __post_init__(self) -> None:
        if not is_triangular(self.lam):
            raise DomainError(f"lambda {format_partition(self.lam)!r} is not a staircase")

    @property
    def weight(self) -> int:
        return self.lam.weight + self.mu.weight

    @property
    def a_exponent(self) -> int:
        return self.mu.length

    @property
    def c_exponent(self) -> int:
        return self.lam.length

    def as_dict(self) -> dict:
        return {"lambda": format_partition(self.lam), "mu": format_partition(self.mu)}


@dataclass(frozen=True)
class SplitPair:
    x: Partition
    y: Partition
    tag: str

    def __post_init__(self) -> None:
        if self.tag not in (A1, A2):
            raise DomainError(f"tag must be A1 or A2, got {self.tag!r}")
        if not is_member(self.x, "distinct-positive"):
            raise DomainError(f"X {format_partition(self.x)!r} does not have distinct positive parts")
        if not self.y.largest < self.x.smallest:
            raise DomainError(
                f"a(Y) = {self.y.largest} is not below s(X) = {self.x.smallest}"
            )
        if self.tag == A2:
            if not self.y:
                raise DomainError("an empty Y is only representable with tag A1")
            if not is_triangular(self.y):
                raise DomainError(f"Y {format_partition(self.y)!r} is not a staircase, required for A2")

    @property
    def weight(self) -> int:
        return self.x.weight + self.y.weight

    @property
    def a_exponent(self) -> int:
        return self.x.length + self.y.length if self.tag == A1 else self.x.length

    @property
    def c_exponent(self) -> int:
        return self.x.length if self.tag == A1 else self.x.length + self.y.length

    def as_dict(self) -> dict:
        return {"x": format_partition(self.x), "y": format_partition(self.y), "tag": self.tag}


def add_and_split(p: SourcePair) -> SplitPair:
    k = min(p.lam.length, p.mu.length)
    s = add_pointwise(p.lam, p.mu)
    tag = A1 if p.lam.length <= p.mu.length else A2
    return SplitPair(Partition(s.parts[:k]), Partition(s.parts[k:]), tag)


def unsplit(p: SplitPair) -> SourcePair:
    """Inverse of :func:`add_and_split`."""
    lx, ly = p.x.length, p.y.length
    if p.tag == A1:
        lam = triangular(lx)
        head = tuple(p.x[i] - (lx - i) for i in range(lx))
        mu = head + p.y.parts
    else:
        lam = triangular(lx + ly)
        mu = tuple(p.x[i] - (lx + ly - i) for i in range(lx))
    try:
        return SourcePair(lam, Partition(mu))
    except PartitionError as exc:
        raise DomainError(str(exc)) from None


def trace_split(p: SourcePair) -> dict:
    s = add_pointwise(p.lam, p.mu)
    out = add_and_split(p)
    return {"k": min(p.lam.length, p.mu.length), "sum": s, "result": out}


# -- enumeration -----------------------------------------------------------


@lru_cache(maxsize=None)
def _positive(n: int) -> tuple[tuple[Partition, ...], ...]:
    return tuple(tuple(partitions_of(w)) for w in range(n + 1))


def enumerate_sources(weight_max: int, length_cap: int) -> Iterator[SourcePair]:
    """Source pairs with weight <= weight_max and len(mu) <= length_cap.

    Ordered by weight, staircase size, weight of mu, mu (descending), then
    number of zero parts.
    """
    if length_cap is None:
        raise ValueError("length_cap is required")
    parts = _positive(weight_max)
    for total in range(weight_max + 1):
        k = 0
        while k * (k + 1) // 2 <= total:
            lam = triangular(k)
            rest = total - lam.weight
            for mu in parts[rest]:
                for z in range(length_cap - mu.length + 1):
                    yield SourcePair(lam, Partition(mu.parts + (0,) * z))
            k += 1


def _distinct_above(n: int, floor: int) -> Iterator[Partition]:
    # distinct parts all > floor, total n
    yield from partitions_of(n, distinct=True, min_part=floor + 1)


def enumerate_splits(weight_max: int, length_cap: int) -> Iterator[SplitPair]:
    """Split pairs with weight <= weight_max and a-exponent <= length_cap.

    A1 pairs (Y any partition with zeros allowed, including empty) come first
    within each weight, then A2 pairs (Y a nonempty staircase).
    """
    if length_cap is None:
        raise ValueError("length_cap is required")
    parts = _positive(weight_max)
    for total in range(weight_max + 1):
        # A1: choose Y first (positive parts + zeros), then X above a(Y)
        for wy in range(total + 1):
            for ypos in parts[wy]:
                for x in _distinct_above(total - wy, ypos.largest):
                    room = length_cap - x.length - ypos.length
                    for z in range(room + 1):
                        yield SplitPair(x, Partition(ypos.parts + (0,) * z), A1)
        n = 1
        while n * (n + 1) // 2 <= total:
            y = triangular(n)
            for x in _distinct_above(total - y.weight, n):
                if x.length <= length_cap:
                    yield SplitPair(x, y, A2)
            n += 1


def enumerate_domain(side: str, weight_max: int, length_cap: Optional[int]):
    if length_cap is None:
        raise ValueError("length_cap is required")
    if side == "R":
        return enumerate_sources(weight_max, length_cap)
    if side == "A":
        return enumerate_splits(weight_max, length_cap)
    raise ValueError(f"side must be R or A, got {side!r}")


_PAIR_SELECTORS = ("R", "A", "A1", "A1-nonempty", "A1-empty", "A2")


def weighted_sum_pairs(selector: str, weight_max: int, length_cap: int, w: Window) -> Series:
    """``sum a^a_exp c^c_exp q^weight`` over one family of the slice.

    ``A1-nonempty`` drops the ``(X, empty)`` pairs, ``A1-empty`` keeps only
    them.
    """
    if selector not in _PAIR_SELECTORS:
        raise ValueError(f"unknown selector {selector!r}")
    if w.q_max > weight_max:
        raise ValueError(f"q_max={w.q_max} exceeds the enumerated weight {weight_max}")
    if w.a_max > length_cap:
        raise ValueError(f"a_max={w.a_max} exceeds the length cap {length_cap}")
    raw: dict = {}
    items = enumerate_sources(weight_max, length_cap) if selector == "R" else enumerate_splits(weight_max, length_cap)
    for p in items:
        if selector != "R" and selector != "A":
            if selector == "A2" and p.tag != A2:
                continue
            if selector.startswith("A1"):
                if p.tag != A1:
                    continue
                if selector == "A1-nonempty" and not p.y:
                    continue
                if selector == "A1-empty" and p.y:
                    continue
        key = (p.weight, p.a_exponent, 0, p.c_exponent)
        raw[key] = raw.get(key, 0) + 1
    # Pairs beyond the length cap have a-exponent above it.
    return from_terms(raw, w, hi=length_cap)


# -- audits ----------------------------------------------------------------

FIGURES = {
    1: (
        SourcePair(triangular(6), Partition((8, 6, 6, 6, 4, 4, 4, 3, 3, 0, 0, 0, 0, 0))),
        SplitPair(Partition((14, 11, 10, 9, 6, 5)), Partition((4, 3, 3, 0, 0, 0, 0, 0)), A1),
    ),
    2: (
        SourcePair(triangular(6), Partition((8, 8, 0))),
        SplitPair(Partition((14, 13, 4)), Partition((3, 2, 1)), A2),
    ),
}


def _statistics_hold(p: SourcePair, s: SplitPair) -> bool:
    if p.weight != s.weight:
        return False
    lx, ly = s.x.length, s.y.length
    if s.tag == A1:
        return lx + ly == p.mu.length and lx == p.lam.length
    return lx + ly == p.lam.length and lx == p.mu.length


def audit_bijection(weight_max: int, length_cap: int, series: bool = True) -> Report:
    report = Report("audit-bijection", {"weight": weight_max, "length_cap": length_cap, "series": series})
    chk_land = report.add(Check("forward-lands-in-slice", note="image is a split pair inside the weight/length slice"))
    chk_inj = report.add(Check("forward-injective"))
    chk_left = report.add(Check("inverse-after-forward-is-identity"))
    chk_right = report.add(Check("forward-after-inverse-is-identity"))
    chk_surj = report.add(Check("forward-surjective-onto-slice"))
    chk_stats = report.add(Check("statistics-transferred", note="weight, and the length conditions per tag"))
    chk_sep = report.add(Check("largest-Y-below-smallest-X"))
    chk_fig = report.add(Check("figures-round-trip", note="both worked examples, forward and inverse"))

    sources = list(enumerate_sources(weight_max, length_cap))
    splits = list(enumerate_splits(weight_max, length_cap))
    split_set = set(splits)
    seen: dict = {}
    for p in sources:
        s = add_and_split(p)
        chk_land.tick()
        if s not in split_set:
            chk_land.fail({"source": p.as_dict(), "image": s.as_dict()})
        chk_inj.tick()
        if s in seen:
            chk_inj.fail({"source": p.as_dict(), "other": seen[s].as_dict(), "image": s.as_dict()})
        else:
            seen[s] = p
        chk_left.tick()
        back = unsplit(s)
        if back != p:
            chk_left.fail({"source": p.as_dict(), "image": s.as_dict(), "back": back.as_dict()})
        chk_stats.tick()
        if not _statistics_hold(p, s):
            chk_stats.fail({"source": p.as_dict(), "image": s.as_dict()})
        chk_sep.tick()
        if not s.y.largest < s.x.smallest:
            chk_sep.fail({"source": p.as_dict(), "image": s.as_dict()})
    for s in splits:
        chk_right.tick()
        try:
            p = unsplit(s)
        except DomainError as exc:
            chk_right.fail({"split": s.as_dict(), "error": str(exc)})
            continue
        if add_and_split(p) != s:
            chk_right.fail({"split": s.as_dict(), "source": p.as_dict()})
        chk_surj.tick()
        if s not in seen:
            chk_surj.fail({"split": s.as_dict()})

    for n, (src, dst) in sorted(FIGURES.items()):
        chk_fig.tick()
        got = add_and_split(src)
        if got != dst or unsplit(dst) != src:
            chk_fig.fail({"figure": n, "expected": dst.as_dict(), "got": got.as_dict()})
        chk_stats.tick()
        if not _statistics_hold(src, dst):
            chk_stats.fail({"figure": n, "source": src.as_dict(), "image": dst.as_dict()})

    empty_y = sum(1 for s in splits if not s.y)
    report.totals.update(
        {
            "sources_enumerated": len(sources),
            "splits_enumerated": len(splits),
            "splits_with_empty_Y": empty_y,
        }
    )
    if series:
        w = Window(weight_max, 0, length_cap, 0, weight_max)
        report.config["window"] = w.as_dict()
        for c in bridge_checks(weight_max, length_cap, w):
            report.add(c)
        report.totals["monomials_compared"] = sum(c.compared for c in report.checks if c.kind == "series")
    return report


def bridge_checks(weight_max: int, length_cap: int, w: Window) -> list[Check]:
    """Enumeration sums of the families against their product/sum formulas."""
    from .identities import build_side, plus_ac_product

    r_sum = weighted_sum_pairs("R", weight_max, length_cap, w)
    a_sum = weighted_sum_pairs("A", weight_max, length_cap, w)
    a1 = weighted_sum_pairs("A1-nonempty", weight_max, length_cap, w)
    a2 = weighted_sum_pairs("A2", weight_max, length_cap, w)
    gap = weighted_sum_pairs("A1-empty", weight_max, length_cap, w)
    out = [
        Check.from_comparison("source-sum-equals-product-formula", compare(r_sum, build_side("gf-R", "RHS", w), w)),
        Check.from_comparison("split-sum-equals-source-sum", compare(a_sum, r_sum, w)),
        Check.from_comparison("first-family-sum-equals-formula", compare(a1, build_side("gf-A1", "RHS", w), w),
                              note="pairs with Y nonempty"),
        Check.from_comparison("second-family-sum-equals-formula", compare(a2, build_side("gf-A2", "RHS", w), w)),
        Check.from_comparison("empty-Y-gap-equals-plus-ac-product", compare(gap, plus_ac_product(w), w),
                              note="pairs (X, empty) are covered by neither printed family sum"),
    ]
    return out


def classic_staircase_check(n: int, k: int) -> Check:
    """Adding the staircase of length k to partitions of n into k non-negative parts."""
    chk = Check(f"classic-staircase-n{n}-k{k}")
    lam = triangular(k)
    sources = [
        Partition(p.parts + (0,) * (k - p.length))
        for p in partitions_of(n, max_len=k)
    ]
    targets = set(p for p in partitions_of(n + k * (k + 1) // 2, max_len=k, distinct=True) if p.length == k)
    images = set()
    for mu in sources:
        chk.tick()
        s = add_and_split(SourcePair(lam, mu))
        if s.y or s.x not in targets or s.x in images:
            chk.fail({"mu": format_partition(mu), "x": format_partition(s.x), "y": format_partition(s.y)})
        images.add(s.x)
    if len(sources) != len(targets) or images != targets:
        chk.fail({"sources": len(sources), "targets": len(targets), "images": len(images)})
    return chk


def classic_report(n_max: int, k_max: int) -> Report:
    report = Report("classic-check", {"weight": n_max, "length_cap": k_max})
    agg = report.add(Check("classic-staircase", note="all n <= weight, k <= length cap"))
    pairs = 0
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            c = classic_staircase_check(n, k)
            agg.compared += c.compared
            pairs += 1
            for ex in c.counterexamples:
                agg.fail({"n": n, "k": k, **ex})
    report.totals["cases"] = pairs
    return report
