"""Registry of q-series identities and builders for both of their sides.

Each identity has one left-hand and one right-hand builder. Sides given
by a closed formula are expanded with :mod:`qverify.series`; sides that
are combinatorial sums over a set of partition tuples are produced by
enumeration (see :mod:`qverify.involution` and :mod:`qverify.bijection`).

Printed variants that turn out to be wrong are kept next to their
corrections, so a verification run reports exactly where a display
deviates from the enumerated truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .series import (
    Series,
    SeriesError,
    Window,
    from_terms,
    inverse_one_minus,
    mul,
    one,
    one_minus,
    restrict,
    term,
    zero,
)


class BudgetError(SeriesError):
    """The requested window cannot host the identity's Laurent shifts."""


def tri(n: int) -> int:
    return n * (n + 1) // 2


def theta_top(q_max: int) -> int:
    """Largest n with n(n+1)/2 <= q_max."""
    n = 0
    while tri(n + 1) <= q_max:
        n += 1
    return n


def _mono(p: Series) -> tuple[int, tuple[int, int, int, int]]:
    if len(p) != 1:
        raise SeriesError("expected a single nonzero monomial")
    (e, coef), = p.items()
    return coef, e


def _poch_range(p: Series, n: Optional[int], w: Window) -> range:
    coef, (dq, da, db, dc) = _mono(p)
    if n is None:
        if dq == 0 and not (coef == 1 and (da, db, dc) == (1, 0, 0)):
            raise SeriesError(f"(p)_oo does not terminate for p exponent {(dq, da, db, dc)}")
        # factors with dq + k > q_max are exactly 1
        return range(0, max(0, w.q_max - dq + 1))
    return range(n)


def pochhammer(p: Series, n: Optional[int], w: Optional[Window] = None) -> Series:
    """``(p)_n = (1 - p)(1 - pq)...(1 - pq^(n-1))``; ``n=None`` is the infinite product."""
    w = p.window if w is None else w
    coef, (dq, da, db, dc) = _mono(p)
    result = one(w)
    for k in _poch_range(p, n, w):
        result = mul(result, one_minus(coef, w, dq + k, da, db, dc))
    return result


def pochhammer_inverse(p: Series, n: Optional[int], w: Optional[Window] = None) -> Series:
    """``1 / (p)_n``, expanded as a product of geometric series."""
    w = p.window if w is None else w
    coef, (dq, da, db, dc) = _mono(p)
    result = one(w)
    for k in _poch_range(p, n, w):
        result = mul(result, inverse_one_minus(coef, w, dq + k, da, db, dc))
    return result


# -- formula pieces (all take the internal window) --------------------------


def _q_poch_inv(w: Window, n: Optional[int], a: int = 0, b: int = 0, c: int = 0, coef: int = 1, start: int = 1) -> Series:
    """prod_{k=start}^{n} 1/(1 - coef a^a b^b c^c q^k); n=None runs to q_max."""
    stop = w.q_max if n is None else min(n, w.q_max)
    result = one(w)
    for k in range(start, stop + 1):
        result = mul(result, inverse_one_minus(coef, w, k, a, b, c))
    return result


def _suffix_products(w: Window) -> list[Series]:
    """``out[n] = prod_{k>n} (1 + a c q^k)`` for n = 0..q_max."""
    out = [one(w)] * (w.q_max + 1)
    for n in range(w.q_max - 1, -1, -1):
        out[n] = mul(out[n + 1], one_minus(-1, w, n + 1, 1, 0, 1))
    return out


def plus_ac_product(w: Window) -> Series:
    """``prod_{k>=1} (1 + a c q^k)``."""
    return _suffix_products(w)[0]


def theta_c(w: Window, start: int = 0) -> Series:
    """``sum_{n>=start} q^(n(n+1)/2) c^n``."""
    return from_terms({(tri(n), 0, 0, n): 1 for n in range(start, theta_top(w.q_max) + 1)}, w)


def _hyper_sum(w: Window, first: Series, a_step: bool, base_a: int) -> Series:
    # first + sum_{n>=1} q^n / ((x q)_n (b q)_n) with x = a (a_step) or x = 1
    total = first
    t = one(w)
    for n in range(1, w.q_max + 1):
        t = mul(t, term(1, w, q=1))
        t = mul(t, inverse_one_minus(1, w, n, base_a if a_step else 0))
        t = mul(t, inverse_one_minus(1, w, n, 0, 1))
        total = total + t
    return total


def eq1_lhs(w: Window) -> Series:
    return _hyper_sum(w, one(w), True, 1)


def _alternating_theta_ab(w: Window, start: int) -> list[tuple[int, Series]]:
    return [
        (n, term((-1) ** n, w, q=tri(n), a=-n, b=n))
        for n in range(start, theta_top(w.q_max) + 1)
    ]


def _b1_inner(w: Window) -> Series:
    # sum_{n>=1} (-1)^n q^T(n) b^n a^-n / (bq)_n
    total = zero(w)
    for n, t in _alternating_theta_ab(w, 1):
        total = total + mul(t, _q_poch_inv(w, n, b=1))
    return total


def _ssum_core(w: Window) -> Series:
    # sum_{n>=0} (-1)^n q^T(n) b^n a^-n / ((aq)_oo (bq)_oo)
    theta = zero(w)
    for _, t in _alternating_theta_ab(w, 0):
        theta = theta + t
    prod = mul(_q_poch_inv(w, None, a=1), _q_poch_inv(w, None, b=1))
    return mul(theta, prod)


def eq1_rhs(w: Window) -> Series:
    a_inv = term(1, w, a=-1)
    first = mul(one(w) - a_inv, one(w) + _b1_inner(w))
    return first + mul(a_inv, _ssum_core(w))


def eq3_lhs(w: Window) -> Series:
    return _hyper_sum(w, one(w), False, 0)


def eq3_rhs(w: Window) -> Series:
    theta = from_terms(
        {(tri(n), 0, n, 0): (-1) ** n for n in range(theta_top(w.q_max) + 1)}, w
    )
    return mul(theta, mul(_q_poch_inv(w, None), _q_poch_inv(w, None, b=1)))


def _eq5_first_sum(w: Window, suffix: list[Series]) -> Series:
    # sum_{n>=0} a q^n prod_{k>n}(1 + acq^k) / ((1-a)(aq)_n)
    total = zero(w)
    base = mul(term(1, w, a=1), inverse_one_minus(1, w, 0, 1))
    for n in range(0, w.q_max + 1):
        if n:
            base = mul(base, mul(term(1, w, q=1), inverse_one_minus(1, w, n, 1)))
        total = total + mul(base, suffix[n])
    return total


def _eq5_theta_sum(w: Window, suffix: list[Series], start: int) -> Series:
    # sum_{n>=start} q^T(n) c^n prod_{k>n}(1 + acq^k)
    total = zero(w)
    for n in range(start, theta_top(w.q_max) + 1):
        total = total + mul(term(1, w, q=tri(n), c=n), suffix[n])
    return total


def eq5_lhs(w: Window, theta_start: int) -> Series:
    suffix = _suffix_products(w)
    return _eq5_first_sum(w, suffix) + _eq5_theta_sum(w, suffix, theta_start)


def eq5_rhs(w: Window) -> Series:
    """``theta(c) / (a)_oo``; also the product side of the R generating function."""
    return mul(theta_c(w), _q_poch_inv(w, None, a=1, start=0))


def partial_theta_lhs(w: Window) -> Series:
    """``sum_{n>=0} (-a)^n q^(n(n-1)/2)``."""
    raw = {}
    n = 0
    while n * (n - 1) // 2 <= w.q_max:
        raw[(n * (n - 1) // 2, n, 0, 0)] = (-1) ** n
        n += 1
    return from_terms(raw, w)


def partial_theta_rhs(w: Window) -> Series:
    """``(a)_oo (q)_oo sum_{n>=0} q^n / ((a)_n (q)_n)``."""
    a_poch = one(w)
    for k in range(0, w.q_max + 1):
        a_poch = mul(a_poch, one_minus(1, w, k, 1))
    q_poch = one(w)
    for k in range(1, w.q_max + 1):
        q_poch = mul(q_poch, one_minus(1, w, k))
    total = one(w)
    t = one(w)
    for n in range(1, w.q_max + 1):
        t = mul(t, term(1, w, q=1))
        t = mul(t, inverse_one_minus(1, w, n - 1, 1))
        t = mul(t, inverse_one_minus(1, w, n))
        total = total + t
    return mul(mul(a_poch, q_poch), total)


def gf_a1_rhs(w: Window) -> Series:
    return _eq5_first_sum(w, _suffix_products(w))


def gf_a2_rhs(w: Window) -> Series:
    return _eq5_theta_sum(w, _suffix_products(w), 1)


def s3_ssum_rhs(w: Window) -> Series:
    return mul(term(1, w, a=-1), _ssum_core(w))


def s3_b1sum_rhs(w: Window) -> Series:
    return mul(term(1, w, a=-1), _b1_inner(w))


def s3_fix_rhs(w: Window) -> Series:
    return _hyper_sum(w, term(1, w, a=-1), True, 1)


# -- enumeration sides -----------------------------------------------------


def _involution_sum(selector: str, weighting: str) -> Callable[[Window], Series]:
    def build(w: Window) -> Series:
        from .involution import weighted_sum

        return weighted_sum(selector, weighting, w.q_max, w)

    return build


def _pair_sum(selector: str) -> Callable[[Window], Series]:
    def build(w: Window) -> Series:
        from .bijection import weighted_sum_pairs

        return weighted_sum_pairs(selector, w.q_max, max(w.a_max, 0), w)

    return build


# -- registry --------------------------------------------------------------


def _no_floor(q_max: int) -> int:
    return 0


def _theta_floor(q_max: int) -> int:
    return -(theta_top(q_max) + 1)


def _theta_budget(q_max: int) -> int:
    return theta_top(q_max) + 1


@dataclass(frozen=True)
class Identity:
    id: str
    location: str
    notes: str
    lhs: Callable[[Window], Series]
    rhs: Callable[[Window], Series]
    holds: bool = True
    a_floor: Callable[[int], int] = _no_floor
    a_budget: Callable[[int], int] = _no_floor
    minimal_window: dict = None  # documented smallest sensible run

    def required_a_min(self, q_max: int) -> int:
        return self.a_floor(q_max)


def _reg(*items: Identity) -> dict[str, Identity]:
    return {i.id: i for i in items}


IDENTITIES: dict[str, Identity] = _reg(
    Identity(
        "eq1",
        "base identity in q, a, b with Laurent powers of a",
        "printed form; right side carries a^-n, so a_min must reach -(n*+1)",
        eq1_lhs,
        eq1_rhs,
        a_floor=_theta_floor,
        a_budget=_theta_budget,
        minimal_window={"q_max": 0, "a_min": -1, "a_max": 0},
    ),
    Identity(
        "eq3",
        "the a = 1 specialization, proved by the involution",
        "two-variable identity in q and b",
        eq3_lhs,
        eq3_rhs,
        minimal_window={"q_max": 0},
    ),
    Identity(
        "eq5-printed",
        "c-form used for the bijection, n = 1 start",
        "theta sum on the left starts at n = 1 as printed; falls short by prod_{k>=1}(1+acq^k)",
        lambda w: eq5_lhs(w, 1),
        eq5_rhs,
        holds=False,
        minimal_window={"q_max": 0},
    ),
    Identity(
        "eq5-corrected",
        "c-form used for the bijection, n = 0 start",
        "theta sum on the left starts at n = 0",
        lambda w: eq5_lhs(w, 0),
        eq5_rhs,
        minimal_window={"q_max": 0},
    ),
    Identity(
        "partial-theta",
        "partial theta identity in q-Pochhammer notation",
        "sum (-a)^n q^(n(n-1)/2) = (a)_oo (q)_oo sum q^n/((a)_n (q)_n)",
        partial_theta_lhs,
        partial_theta_rhs,
        minimal_window={"q_max": 0, "a_max": 1},
    ),
    Identity(
        "gf-R",
        "generating function of staircase/partition pairs",
        "left side enumerates (lambda, mu) with mu allowing zero parts, length <= a_max",
        _pair_sum("R"),
        eq5_rhs,
        minimal_window={"q_max": 0},
    ),
    Identity(
        "gf-A1",
        "generating function of the first split family",
        "left side enumerates pairs (X, Y) with Y nonempty; the (X, empty) pairs belong to neither printed family",
        _pair_sum("A1-nonempty"),
        gf_a1_rhs,
        minimal_window={"q_max": 0},
    ),
    Identity(
        "gf-A2",
        "generating function of the second split family",
        "left side enumerates pairs (X, Y) with Y a nonempty staircase",
        _pair_sum("A2"),
        gf_a2_rhs,
        minimal_window={"q_max": 0},
    ),
    Identity(
        "s3-Ssum",
        "a-refined signed sum over all triples",
        "left side enumerates all triples with weight (-1)^len(lambda) a^f b^(len lambda + len gamma)",
        _involution_sum("all", "s3"),
        s3_ssum_rhs,
        a_floor=_theta_floor,
        a_budget=_theta_budget,
        minimal_window={"q_max": 0, "a_min": -1, "a_max": 0},
    ),
    Identity(
        "s3-B1sum",
        "a-refined sum over the first exceptional subset",
        "left side enumerates the subset with empty mu and a(gamma) <= a(lambda), gamma allowed empty",
        _involution_sum("b1-corrected", "s3"),
        s3_b1sum_rhs,
        a_floor=_theta_floor,
        minimal_window={"q_max": 0, "a_min": -1, "a_max": 0},
    ),
    Identity(
        "s3-Fixsum-corrected",
        "a-refined sum over fixed points",
        "left side uses the exponent len(mu) - len(lambda) - 1; the printed exponent drops the -1",
        _involution_sum("fixed", "s3-fix"),
        s3_fix_rhs,
        a_floor=lambda q_max: -1,
        minimal_window={"q_max": 0, "a_min": -1, "a_max": 0},
    ),
)


def get_identity(identity_id: str) -> Identity:
    try:
        return IDENTITIES[identity_id]
    except KeyError:
        raise BudgetError(
            f"unknown identity {identity_id!r}; known: {', '.join(IDENTITIES)}"
        ) from None


def check_budget(ident: Identity, w: Window) -> None:
    need = ident.required_a_min(w.q_max)
    if w.a_min > need:
        raise BudgetError(
            f"identity {ident.id} at q_max={w.q_max} needs a_min <= {need} (got {w.a_min})"
        )


def build_side(identity_id: str, side: str, w: Window) -> Series:
    """Build the ``"LHS"`` or ``"RHS"`` of an identity, exact on the window."""
    ident = get_identity(identity_id)
    check_budget(ident, w)
    side = side.upper()
    if side not in ("LHS", "RHS"):
        raise ValueError(f"side must be LHS or RHS, got {side!r}")
    builder = ident.lhs if side == "LHS" else ident.rhs
    inner = w.widened(a_above=ident.a_budget(w.q_max))
    result = restrict(builder(inner), w)
    lo, hi = result.a_validity
    if lo > w.a_min or hi < w.a_max:
        raise SeriesError(
            f"{identity_id} {side}: exact only on a in [{lo}, {hi}], window needs [{w.a_min}, {w.a_max}]"
        )
    return result
