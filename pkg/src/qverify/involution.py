"""The sign-reversing involution on (staircase, partition, partition) triples.

A triple ``(lam, mu, gamma)`` has ``lam`` a staircase ``(n, n-1, ..., 1)``
and ``mu``, ``gamma`` partitions into positive parts. The involution moves
the first row of ``lam + mu`` onto ``gamma`` or pulls the first row of
``gamma`` back, so paired triples carry opposite signs ``(-1)^len(lam)``
and equal q- and b-weights. Exhaustive audits over a weight slice check
every structural claim about the map, including the ones that do not hold
as printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .partitions import (
    Partition,
    PartitionError,
    format_partition,
    is_member,
    is_triangular,
    partitions_of,
    strip_zeros,
    triangular,
)
from .report import Check, Report
from .series import Series, Window, compare, from_terms, mul, one_minus

FIXED = "fixed"
B1_PRINTED = "b1-printed"
B1_CORRECTED = "b1-corrected"
B2 = "b2"
GENERIC = "generic"


@dataclass(frozen=True)
class Triple:
    lam: Partition
    mu: Partition
    gamma: Partition

    def __post_init__(self) -> None:
        if not is_triangular(self.lam):
            raise PartitionError(f"lambda {format_partition(self.lam)!r} is not a staircase")
        for name in ("mu", "gamma"):
            p = getattr(self, name)
            if not is_member(p, "positive-parts"):
                raise PartitionError(f"{name} {format_partition(p)!r} has a zero part")

    @property
    def weight(self) -> int:
        return self.lam.weight + self.mu.weight + self.gamma.weight

    @property
    def b_exponent(self) -> int:
        return self.lam.length + self.gamma.length

    @property
    def sign(self) -> int:
        return -1 if self.lam.length % 2 else 1

    def as_dict(self) -> dict:
        return {
            "lambda": format_partition(self.lam),
            "mu": format_partition(self.mu),
            "gamma": format_partition(self.gamma),
        }

    def __str__(self) -> str:
        return "({} | {} | {})".format(*(format_partition(p) or "-" for p in (self.lam, self.mu, self.gamma)))


def make_triple(lam, mu, gamma) -> Triple:
    return Triple(Partition(tuple(lam)), Partition(tuple(mu)), Partition(tuple(gamma)))


def involution_case(t: Triple) -> int:
    """Which of the three rules applies: 1 (fixed), 2 (push a row) or 3 (pull a row)."""
    top = t.lam.largest + t.mu.largest
    if not t.lam and t.mu.largest >= t.gamma.largest:
        return 1
    if t.lam and top >= t.gamma.largest:
        return 2
    return 3


def involution(t: Triple) -> Triple:
    case = involution_case(t)
    if case == 1:
        return t
    lam, mu, gamma = t.lam, t.mu, t.gamma
    if case == 2:
        row = lam.part(0) + mu.part(0)
        return Triple(lam.tail(), mu.tail(), Partition((row,) + gamma.parts))
    # case 3; gamma is nonempty here because a(gamma) > a(lam) + a(mu) >= 0
    l1 = lam.part(0)
    new_lam = strip_zeros(Partition((l1 + 1, l1) + lam.parts[1:]))
    new_mu = strip_zeros(Partition((gamma[0] - l1 - 1,) + mu.parts))
    return Triple(new_lam, new_mu, gamma.tail())


def a_exponent(t: Triple) -> int:
    """``len(mu) - len(lam) - 1``, the a-statistic that refines the a = 1 argument."""
    return t.mu.length - t.lam.length - 1


def is_fixed_shape(t: Triple) -> bool:
    return not t.lam and t.mu.largest >= t.gamma.largest


def classify(t: Triple) -> frozenset[str]:
    tags = set()
    if is_fixed_shape(t):
        tags.add(FIXED)
    if not t.mu:
        if t.lam and t.gamma.largest <= t.lam.largest:
            tags.add(B1_CORRECTED)
            if t.gamma.largest > 0:
                tags.add(B1_PRINTED)
        if t.gamma.largest == t.lam.largest + 1:
            tags.add(B2)
    if not tags:
        tags.add(GENERIC)
    return frozenset(tags)


@lru_cache(maxsize=None)
def _partitions_by_weight(n: int) -> tuple[tuple[Partition, ...], ...]:
    return tuple(tuple(partitions_of(w)) for w in range(n + 1))


@lru_cache(maxsize=8)
def _triples(n: int) -> tuple[Triple, ...]:
    parts = _partitions_by_weight(n)
    out = []
    for total in range(n + 1):
        k = 0
        while k * (k + 1) // 2 <= total:
            lam = triangular(k)
            rest = total - lam.weight
            for wm in range(rest + 1):
                for mu in parts[wm]:
                    for gamma in parts[rest - wm]:
                        out.append(Triple(lam, mu, gamma))
            k += 1
    return tuple(out)


def enumerate_triples(weight_max: int) -> Iterator[Triple]:
    """All triples of total weight at most ``weight_max``.

    Ordered by total weight, then staircase size, then weight of ``mu``,
    then ``mu`` and ``gamma`` lexicographically descending.
    """
    if weight_max < 0:
        raise ValueError("weight_max must be non-negative")
    return iter(_triples(weight_max))


_SELECTORS = {"all", FIXED, B1_PRINTED, B1_CORRECTED, B2, GENERIC}


def _weight(t: Triple, weighting: str) -> tuple[int, int]:
    """(sign, a-exponent) for a weighting scheme."""
    if weighting == "eq3":
        return t.sign, 0
    if weighting == "fix":
        return 1, 0
    if weighting == "s3":
        return t.sign, a_exponent(t)
    if weighting == "s3-fix":
        return 1, a_exponent(t)
    if weighting == "s3-fix-printed":
        return t.sign, t.mu.length - t.lam.length
    raise ValueError(f"unknown weighting {weighting!r}")


def weighted_sum(selector: str, weighting: str, weight_max: int, w: Window) -> Series:
    """Generating series of a subset of the weight slice.

    ``selector`` is ``"all"`` or a class tag; every term is
    ``sign * a^e * b^(len lam + len gamma) * q^weight`` per ``weighting``.
    """
    if selector not in _SELECTORS:
        raise ValueError(f"unknown selector {selector!r}")
    if w.q_max > weight_max:
        raise ValueError(f"q_max={w.q_max} exceeds the enumerated weight {weight_max}")
    raw: dict = {}
    for t in _triples(weight_max):
        if selector != "all" and selector not in classify(t):
            continue
        sign, ae = _weight(t, weighting)
        key = (t.weight, ae, t.b_exponent, 0)
        raw[key] = raw.get(key, 0) + sign
    return from_terms(raw, w)


# -- audit -----------------------------------------------------------------


def _pair(t: Triple, image: Triple) -> dict:
    return {"triple": t.as_dict(), "image": image.as_dict()}


def audit_combinatorics(weight_max: int) -> tuple[list[Check], dict]:
    names = [
        ("maps-into-S", True, "the image is again a valid triple"),
        ("involutive", True, ""),
        ("weight-preserved", True, ""),
        ("length-lambda-plus-gamma-preserved", True, ""),
        ("fixed-point-characterization", True, "fixed iff lambda empty and a(mu) >= a(gamma)"),
        ("lambda-length-step", True, "len(lambda) changes by exactly 1 off the fixed set"),
        ("b1-corrected-b2-disjoint", True, ""),
        ("psi-b1-corrected-onto-b2", True, "image of the corrected subset equals b2 on the slice"),
        ("f-shift-on-b1-corrected", True, "f(image) = f(t) + 1"),
        ("f-preserved-elsewhere", True, "non-fixed t outside b1-corrected and b2"),
        ("psi-b1-printed-onto-b2", False, "printed subset requires a(gamma) > 0"),
        ("f-shift-printed-direction", False, "printed direction f(t) = f(image) + 1"),
        ("length-lambda-plus-mu-preserved", False, "printed as an invariant of the pairing"),
    ]
    checks = {n: Check(n, expected=e, note=note) for n, e, note in names}
    image_b1c, image_b1p = set(), set()
    b2_set = set()
    counts = {"triples_enumerated": 0, "fixed_points": 0, "b1_corrected": 0, "b1_printed": 0, "b2": 0}
    triples = _triples(weight_max)
    for t in triples:
        counts["triples_enumerated"] += 1
        tags = classify(t)
        try:
            s = involution(t)
        except PartitionError as exc:
            checks["maps-into-S"].fail({"triple": t.as_dict(), "error": str(exc)})
            continue
        checks["maps-into-S"].tick()
        checks["involutive"].tick()
        if involution(s) != t:
            checks["involutive"].fail(_pair(t, s))
        checks["weight-preserved"].tick()
        if s.weight != t.weight:
            checks["weight-preserved"].fail(_pair(t, s))
        checks["length-lambda-plus-gamma-preserved"].tick()
        if s.b_exponent != t.b_exponent:
            checks["length-lambda-plus-gamma-preserved"].fail(_pair(t, s))
        checks["fixed-point-characterization"].tick()
        if (s == t) != is_fixed_shape(t):
            checks["fixed-point-characterization"].fail(_pair(t, s))
        checks["length-lambda-plus-mu-preserved"].tick()
        if t.lam.length + t.mu.length != s.lam.length + s.mu.length:
            checks["length-lambda-plus-mu-preserved"].fail(_pair(t, s))
        if s != t:
            checks["lambda-length-step"].tick()
            if abs(s.lam.length - t.lam.length) != 1:
                checks["lambda-length-step"].fail(_pair(t, s))
        if FIXED in tags:
            counts["fixed_points"] += 1
        if B2 in tags:
            counts["b2"] += 1
            b2_set.add(t)
        checks["b1-corrected-b2-disjoint"].tick()
        if B1_CORRECTED in tags and B2 in tags:
            checks["b1-corrected-b2-disjoint"].fail({"triple": t.as_dict()})
        if B1_CORRECTED in tags:
            counts["b1_corrected"] += 1
            image_b1c.add(s)
            checks["f-shift-on-b1-corrected"].tick()
            if a_exponent(s) != a_exponent(t) + 1:
                checks["f-shift-on-b1-corrected"].fail(_pair(t, s))
            checks["f-shift-printed-direction"].tick()
            if a_exponent(t) != a_exponent(s) + 1:
                checks["f-shift-printed-direction"].fail(_pair(t, s))
        if B1_PRINTED in tags:
            counts["b1_printed"] += 1
            image_b1p.add(s)
        if s != t and B1_CORRECTED not in tags and B2 not in tags:
            checks["f-preserved-elsewhere"].tick()
            if a_exponent(s) != a_exponent(t):
                checks["f-preserved-elsewhere"].fail(_pair(t, s))

    order = {t: i for i, t in enumerate(triples)}
    for name, image in (("psi-b1-corrected-onto-b2", image_b1c), ("psi-b1-printed-onto-b2", image_b1p)):
        chk = checks[name]
        chk.tick(len(image | b2_set))
        for t in sorted(image - b2_set, key=order.get):
            chk.fail({"image-not-in-b2": t.as_dict(), "preimage": involution(t).as_dict()})
        for t in sorted(b2_set - image, key=order.get):
            chk.fail({"b2-not-in-image": t.as_dict(), "preimage": involution(t).as_dict()})
    return list(checks.values()), counts


def audit_window(weight_max: int, a_max: int | None = None) -> Window:
    from .identities import theta_top

    top = weight_max if a_max is None else a_max
    return Window(weight_max, -(theta_top(weight_max) + 1), max(top, 0), weight_max, 0)


def audit_series(weight_max: int, w: Window | None = None) -> list[Check]:
    """Enumeration sums against the closed-form sides, plus the assembly identity."""
    from .identities import build_side

    w = audit_window(weight_max) if w is None else w
    w_b = Window(w.q_max, 0, 0, w.b_max, 0)
    checks = []

    def cmp(name, f, g, on, expected=True, note=""):
        checks.append(Check.from_comparison(name, compare(f, g, on), expected, note))

    fix = weighted_sum(FIXED, "fix", weight_max, w_b)
    signed = weighted_sum("all", "eq3", weight_max, w_b)
    cmp("fix-sum-equals-eq3-lhs", fix, build_side("eq3", "LHS", w_b), w_b)
    cmp("signed-sum-equals-eq3-rhs", signed, build_side("eq3", "RHS", w_b), w_b)

    ssum = weighted_sum("all", "s3", weight_max, w)
    b1c = weighted_sum(B1_CORRECTED, "s3", weight_max, w)
    b1p = weighted_sum(B1_PRINTED, "s3", weight_max, w)
    fixa = weighted_sum(FIXED, "s3-fix", weight_max, w)
    fixp = weighted_sum(FIXED, "s3-fix-printed", weight_max, w)
    b1_rhs = build_side("s3-B1sum", "RHS", w)
    fix_rhs = build_side("s3-Fixsum-corrected", "RHS", w)
    cmp("signed-a-sum-equals-closed-form", ssum, build_side("s3-Ssum", "RHS", w), w)
    cmp("b1-corrected-sum-equals-closed-form", b1c, b1_rhs, w)
    cmp("b1-printed-sum-equals-closed-form", b1p, b1_rhs, w, False,
        "differs exactly at the gamma-empty triples")
    cmp("fix-sum-exponent-f-equals-closed-form", fixa, fix_rhs, w)
    cmp("fix-sum-printed-exponent-equals-closed-form", fixp, fix_rhs, w, False,
        "printed exponent len(mu) - len(lambda) misses the -1")
    checks.append(assembly_check(weight_max, w))
    return checks


def assembly_check(weight_max: int, w: Window | None = None) -> Check:
    """Signed a-sum = (1 - a) * (corrected exceptional sum) + fixed-point sum."""
    w = audit_window(weight_max) if w is None else w
    ssum = weighted_sum("all", "s3", weight_max, w)
    b1c = weighted_sum(B1_CORRECTED, "s3", weight_max, w)
    fixa = weighted_sum(FIXED, "s3-fix", weight_max, w)
    assembled = mul(one_minus(1, w, a=1), b1c) + fixa
    lo, hi = assembled.a_validity
    on = Window(w.q_max, lo, hi, w.b_max, w.c_max)
    return Check.from_comparison(
        "assembly-signed-sum", compare(ssum, assembled, on),
        note="signed sum = (1 - a) * b1-corrected sum + fixed-point sum",
    )


def audit_involution(weight_max: int, series: bool = True) -> Report:
    report = Report("audit-involution", {"weight": weight_max, "series": series})
    checks, counts = audit_combinatorics(weight_max)
    for c in checks:
        report.add(c)
    if series:
        w = audit_window(weight_max)
        report.config["window"] = w.as_dict()
        for c in audit_series(weight_max, w):
            report.add(c)
        counts["monomials_compared"] = sum(c.compared for c in report.checks if c.kind == "series")
    report.totals.update(counts)
    return report
