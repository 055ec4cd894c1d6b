"""Step-by-step algebra between the registered identities, checked as series.

Two chains are covered:

* from the a, b identity to the bijective c-form: substitute ``b = -a c``,
  multiply by ``a prod(1 + a c q^k)``, move the ``(a - 1)`` block across and
  divide by ``1 - a``, then merge the first two sums;
* from the c-form to the partial theta identity: multiply by ``1 - a``,
  set ``a = 1``, multiply by ``(q)_oo`` and send ``c -> -a``. That recipe
  lands on the partial theta identity with ``a`` replaced by ``a q``, so one
  more rescaling ``a -> a / q`` is needed; both outcomes are reported.
"""

from __future__ import annotations

from .identities import (
    _eq5_theta_sum,
    _q_poch_inv,
    _suffix_products,
    build_side,
    eq5_lhs,
    eq5_rhs,
    plus_ac_product,
    theta_c,
    theta_top,
    tri,
)
from .report import Check, Report
from .series import (
    INF,
    Series,
    SeriesError,
    Window,
    compare,
    evaluate_a_at_one,
    inverse_one_minus,
    map_exponents,
    mul,
    one,
    one_minus,
    restrict,
    term,
    zero,
)


def substitute_b_minus_ac(f: Series, target: Window) -> Series:
    """``b -> -a c``: ``q^i a^j b^k`` becomes ``(-1)^k q^i a^(j+k) c^k``."""
    lo, hi = f.exactness
    if lo > -INF:
        lo = lo + target.c_max
    src_lo, src_hi = f.a_validity
    hi = min(hi, src_hi)
    if f.window.b_max < target.c_max:
        raise SeriesError("source b range must cover the target c range")

    def move(e):
        q, a, b, c = e
        return (q, a + b, 0, c + b), (-1) ** b

    return map_exponents(f, move, target, lo, hi)


def substitute_c_minus_a(f: Series, target: Window) -> Series:
    """``c -> -a`` on a series free of a and b."""
    if not f.complete:
        raise SeriesError("c -> -a needs a complete series")

    def move(e):
        q, a, b, c = e
        if a or b:
            raise SeriesError(f"unexpected a or b in {e}")
        return (q, c, 0, 0), (-1) ** c

    return map_exponents(f, move, target, -INF, INF if f.window.c_max >= target.a_max else f.window.c_max)


def rescale_a_by_q(f: Series, target: Window) -> Series:
    """``a -> a / q``; every term must have q-degree at least its a-degree."""
    if not f.complete:
        raise SeriesError("a -> a/q needs a complete series")
    if f.window.q_max < target.q_max + target.a_max:
        raise SeriesError("source q range must exceed the target by a_max")

    def move(e):
        q, a, b, c = e
        if q < a:
            raise SeriesError(f"a -> a/q would give a negative q-degree at {e}")
        return (q - a, a, b, c), 1

    return map_exponents(f, move, target, -INF, INF)


# -- the a, b -> c rewriting chain ------------------------------------------


def _c_form_lhs(w: Window) -> Series:
    total = one(w)
    t = one(w)
    for n in range(1, w.q_max + 1):
        t = mul(t, term(1, w, q=1))
        t = mul(t, inverse_one_minus(1, w, n, 1))
        t = mul(t, inverse_one_minus(-1, w, n, 1, 0, 1))
        total = total + t
    return total


def _c_form_rhs(w: Window) -> Series:
    a_inv = term(1, w, a=-1)
    inner = one(w)
    denom = one(w)
    for n in range(1, theta_top(w.q_max) + 1):
        denom = mul(denom, inverse_one_minus(-1, w, n, 1, 0, 1))
        inner = inner + mul(term(1, w, q=tri(n), c=n), denom)
    prod = mul(_q_poch_inv(w, None, a=1), _q_poch_inv(w, None, a=1, c=1, coef=-1))
    return mul(one(w) - a_inv, inner) + mul(a_inv, mul(theta_c(w), prod))


def _times_prod_parts(w: Window) -> tuple[Series, Series, Series]:
    """Left side, the (a - 1) block and theta(c)/(aq)_oo after multiplying through."""
    suffix = _suffix_products(w)
    p = suffix[0]
    lhs = mul(term(1, w, a=1), p)
    base = one(w)
    for n in range(1, w.q_max + 1):
        base = mul(base, mul(term(1, w, q=1), inverse_one_minus(1, w, n, 1)))
        lhs = lhs + mul(term(1, w, a=1), mul(base, suffix[n]))
    block = mul(term(1, w, a=1) - one(w), p + _eq5_theta_sum(w, suffix, 1))
    tail = mul(theta_c(w), _q_poch_inv(w, None, a=1))
    return lhs, block, tail


def _divided_lhs(w: Window) -> Series:
    suffix = _suffix_products(w)
    p = suffix[0]
    geo = inverse_one_minus(1, w, 0, 1)
    total = mul(p, geo)
    base = mul(term(1, w, a=1), geo)
    for n in range(1, w.q_max + 1):
        base = mul(base, mul(term(1, w, q=1), inverse_one_minus(1, w, n, 1)))
        total = total + mul(base, suffix[n])
    return total + _eq5_theta_sum(w, suffix, 1)


def _inner(w: Window, budget: int = 1) -> Window:
    return w.widened(a_above=budget)


def rewriting_chain(q_max: int, a_max: int, c_max: int) -> Report:
    wt = Window(q_max, -1, a_max, 0, c_max)
    wi = _inner(wt, 2)
    report = Report("derive", {"chain": "rewrite", "window": wt.as_dict()})

    def cmp(name, f, g, note=""):
        report.add(Check.from_comparison(name, compare(f, g, wt), note=note))

    src = Window(q_max, min(wt.a_min - c_max, -(theta_top(q_max) + 1)), a_max, c_max, 0)
    e1l = substitute_b_minus_ac(build_side("eq1", "LHS", src), wt)
    e1r = substitute_b_minus_ac(build_side("eq1", "RHS", src), wt)
    d1l = restrict(_c_form_lhs(wi), wt)
    d1r = restrict(_c_form_rhs(wi), wt)
    cmp("substituted-lhs-equals-c-form", e1l, d1l, "b = -a c applied to the a, b identity")
    cmp("substituted-rhs-equals-c-form", e1r, d1r)
    cmp("c-form-holds", d1l, d1r)

    ap = mul(term(1, wt, a=1), plus_ac_product(wt))
    d2l, block, tail = (restrict(s, wt) for s in _times_prod_parts(wi))
    cmp("multiplied-lhs", mul(d1l, ap), d2l, "times a prod(1 + a c q^k)")
    cmp("multiplied-rhs", mul(d1r, ap), block + tail)
    cmp("multiplied-form-holds", d2l, block + tail)

    geo = inverse_one_minus(1, wt, 0, 1)
    d3l = restrict(_divided_lhs(wi), wt)
    d3r = restrict(eq5_rhs(wi), wt)
    cmp("divided-lhs", mul(d2l - block, geo), d3l, "(a - 1) block moved left, then divided by 1 - a")
    cmp("divided-rhs", mul(tail, geo), d3r)
    cmp("divided-form-holds", d3l, d3r)

    cmp("merged-lhs-equals-corrected", d3l, restrict(eq5_lhs(wi, 0), wt),
        "merging the first two sums puts the n = 0 theta term back")
    report.add(Check.from_comparison(
        "printed-shortfall-equals-plus-ac-product",
        compare(d3l - restrict(eq5_lhs(wi, 1), wt), plus_ac_product(wt), wt),
    ))
    return report


# -- c-form -> partial theta -----------------------------------------------


def _cancelled_sides(w: Window) -> tuple[Series, Series]:
    """(1 - a) times both sides of the corrected c-form, with 1/(1 - a) cancelled."""
    suffix = _suffix_products(w)
    first = zero(w)
    base = term(1, w, a=1)
    for n in range(0, w.q_max + 1):
        if n:
            base = mul(base, mul(term(1, w, q=1), inverse_one_minus(1, w, n, 1)))
        first = first + mul(base, suffix[n])
    lhs = first + mul(one_minus(1, w, a=1), _eq5_theta_sum(w, suffix, 0))
    rhs = mul(theta_c(w), _q_poch_inv(w, None, a=1))
    return lhs, rhs


def partial_theta_recipe(q_max: int, a_max: int) -> Report:
    target = Window(q_max, 0, a_max)
    qs = q_max + a_max
    ws = Window(qs, 0, qs + 2, 0, a_max)
    report = Report("derive", {"chain": "partial-theta", "window": target.as_dict()})

    lhs, rhs = _cancelled_sides(ws)
    if not (lhs.complete and rhs.complete):
        raise SeriesError("cancelled sides are not complete in a; widen the source window")
    check_w = Window(qs, 0, ws.a_max - 1, 0, a_max)
    geo = inverse_one_minus(1, ws, 0, 1)
    for name, s, full in (("lhs", lhs, eq5_lhs(ws, 0)), ("rhs", rhs, eq5_rhs(ws))):
        report.add(Check.from_comparison(
            f"cancelled-{name}-times-geometric-equals-corrected", compare(mul(s, geo), full, check_w)
        ))

    q_poch = one(Window(qs, 0, 0, 0, a_max))
    for k in range(1, qs + 1):
        q_poch = mul(q_poch, one_minus(1, q_poch.window, k))
    reduced = []
    for s in (lhs, rhs):
        at_one = evaluate_a_at_one(s)
        reduced.append(substitute_c_minus_a(mul(at_one, q_poch), Window(qs, 0, a_max)))
    pt_l = build_side("partial-theta", "LHS", target)
    pt_r = build_side("partial-theta", "RHS", target)

    lit_l, lit_r = (restrict(s, target) for s in reduced)
    report.add(Check.from_comparison("recipe-sides-agree", compare(lit_l, lit_r, target)))
    report.add(Check.from_comparison("literal-recipe-gives-partial-theta-lhs", compare(lit_l, pt_l, target),
                                     expected=False, note="without a -> a/q the theta exponent is n(n+1)/2"))
    report.add(Check.from_comparison("literal-recipe-gives-partial-theta-rhs", compare(lit_r, pt_r, target),
                                     expected=False))
    res_l, res_r = (rescale_a_by_q(s, target) for s in reduced)
    report.add(Check.from_comparison("rescaled-recipe-gives-partial-theta-lhs", compare(res_l, pt_l, target),
                                     note="after a -> a/q"))
    report.add(Check.from_comparison("rescaled-recipe-gives-partial-theta-rhs", compare(res_r, pt_r, target)))
    return report
