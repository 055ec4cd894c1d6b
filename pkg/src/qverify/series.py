"""Exact truncated series in q, a, b, c.

A :class:`Series` stores integer coefficients of monomials
``q^i a^j b^k c^m`` inside a :class:`Window`. Exponents of q, b and c are
never negative, so dropping terms above ``q_max``, ``b_max`` or ``c_max``
loses nothing that a later product could bring back. The a-exponent is
Laurent, and truncation in a is lossy: a factor ``a^-m`` drags unseen terms
from above ``a_max`` into the window. Every series therefore carries an
exactness interval ``[lo, hi]`` in the a-degree. Infinite ends mean the
series is known to be complete on that side (no true terms were dropped),
which is also what lets products avoid shrinking.

Coefficients are Python ints, so there is no overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Optional

Exponent = tuple[int, int, int, int]

INF = math.inf


class SeriesError(ValueError):
    """Raised for window mismatches, inadmissible inverses and invalid comparisons."""


@dataclass(frozen=True)
class Window:
    q_max: int
    a_min: int = 0
    a_max: int = 0
    b_max: int = 0
    c_max: int = 0

    def __post_init__(self) -> None:
        if self.q_max < 0 or self.b_max < 0 or self.c_max < 0:
            raise SeriesError(f"negative bound in {self}")
        if self.a_min > self.a_max:
            raise SeriesError(f"a_min > a_max in {self}")

    def contains(self, e: Exponent) -> bool:
        q, a, b, c = e
        return (
            0 <= q <= self.q_max
            and self.a_min <= a <= self.a_max
            and 0 <= b <= self.b_max
            and 0 <= c <= self.c_max
        )

    def inside(self, other: "Window") -> bool:
        return (
            self.q_max <= other.q_max
            and other.a_min <= self.a_min
            and self.a_max <= other.a_max
            and self.b_max <= other.b_max
            and self.c_max <= other.c_max
        )

    def widened(self, a_below: int = 0, a_above: int = 0, q_above: int = 0) -> "Window":
        return Window(
            self.q_max + q_above,
            self.a_min - a_below,
            self.a_max + a_above,
            self.b_max,
            self.c_max,
        )

    def size(self) -> int:
        return (
            (self.q_max + 1)
            * (self.a_max - self.a_min + 1)
            * (self.b_max + 1)
            * (self.c_max + 1)
        )

    def as_dict(self) -> dict:
        return {
            "q_max": self.q_max,
            "a_min": self.a_min,
            "a_max": self.a_max,
            "b_max": self.b_max,
            "c_max": self.c_max,
        }


class Series:
    """Immutable windowed series with an a-degree exactness interval.

    Build instances with :func:`monomial`, :func:`from_terms` and the
    arithmetic operators rather than calling the constructor directly.
    """

    __slots__ = ("_terms", "window", "_lo", "_hi")

    def __init__(self, terms: dict, window: Window, lo: float = -INF, hi: float = INF):
        self._terms = terms
        self.window = window
        self._lo = lo
        self._hi = hi

    # -- inspection ------------------------------------------------------

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, q: int = 0, a: int = 0, b: int = 0, c: int = 0) -> int:
        return self._terms.get((q, a, b, c), 0)

    def __getitem__(self, e: Exponent) -> int:
        return self._terms.get(tuple(e), 0)

    @property
    def exactness(self) -> tuple[float, float]:
        """Raw ``(lo, hi)``; infinite ends mean complete on that side."""
        return self._lo, self._hi

    @property
    def a_validity(self) -> tuple[int, int]:
        """The a-degrees inside the window whose coefficients are exact.

        Returns ``(lo, hi)``; ``lo > hi`` means nothing is exact.
        """
        w = self.window
        lo = min(max(self._lo, w.a_min), w.a_max + 1)
        hi = max(min(self._hi, w.a_max), w.a_min - 1)
        return int(lo), int(hi)

    @property
    def complete(self) -> bool:
        return self._lo == -INF and self._hi == INF

    def _support_bounds(self) -> tuple[float, float]:
        # Bounds on the a-support of the true (untruncated in a) series.
        lo, hi = self._lo, self._hi
        if lo == -INF:
            degs = [e[1] for e in self._terms if e[1] <= hi]
            floor = min(degs) if degs else INF
            floor = min(floor, hi + 1)
        else:
            floor = -INF
        if hi == INF:
            degs = [e[1] for e in self._terms if e[1] >= lo]
            ceil = max(degs) if degs else -INF
            ceil = max(ceil, lo - 1)
        else:
            ceil = INF
        return floor, ceil

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.window == other.window
            and self._terms == other._terms
            and self.exactness == other.exactness
        )

    def __hash__(self):
        return hash((self.window, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Series({to_text(self)}, {self.window}, validity={self.a_validity})"

    # -- operators -------------------------------------------------------

    def __add__(self, other):
        return add(self, _coerce(other, self.window))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series({e: -x for e, x in self._terms.items()}, self.window, self._lo, self._hi)

    def __sub__(self, other):
        return add(self, -_coerce(other, self.window))

    def __rsub__(self, other):
        return add(_coerce(other, self.window), -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented


def _coerce(x, w: Window) -> Series:
    if isinstance(x, Series):
        return x
    if isinstance(x, int):
        return constant(x, w)
    raise TypeError(f"cannot combine Series with {type(x).__name__}")


def from_terms(
    raw: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]],
    w: Window,
    lo: float = -INF,
    hi: float = INF,
) -> Series:
    """Canonicalize raw terms: sum duplicates, drop zeros and out-of-window terms.

    Terms past the a-range that are dropped shrink the exactness interval;
    terms past the q, b or c bounds are dropped silently (exact truncation).
    """
    items = raw.items() if isinstance(raw, Mapping) else raw
    acc: dict = {}
    for e, x in items:
        if x:
            acc[e] = acc.get(e, 0) + x
    terms = {}
    for e, x in acc.items():
        if not x:
            continue
        q, a, b, c = e
        if q > w.q_max or b > w.b_max or c > w.c_max:
            continue
        if q < 0 or b < 0 or c < 0:
            raise SeriesError(f"negative q/b/c exponent {e}")
        if a > w.a_max:
            hi = min(hi, w.a_max)
            continue
        if a < w.a_min:
            lo = max(lo, w.a_min)
            continue
        terms[e] = x
    return Series(terms, w, lo, hi)


def zero(w: Window) -> Series:
    return Series({}, w)


def constant(x: int, w: Window) -> Series:
    return from_terms({(0, 0, 0, 0): x}, w)


def one(w: Window) -> Series:
    return constant(1, w)


def monomial(coef: int, e: Exponent, w: Window) -> Series:
    e = tuple(e)
    if not w.contains(e):
        raise SeriesError(f"exponent {e} outside window {w}")
    return Series({e: coef} if coef else {}, w)


def term(coef: int, w: Window, q: int = 0, a: int = 0, b: int = 0, c: int = 0) -> Series:
    """A monomial that may fall outside the window (then truncated per :func:`from_terms`)."""
    return from_terms({(q, a, b, c): coef}, w)


def _check_same(f: Series, g: Series) -> None:
    if f.window != g.window:
        raise SeriesError(f"window mismatch: {f.window} vs {g.window}")


def add(f: Series, g: Series) -> Series:
    _check_same(f, g)
    terms = dict(f._terms)
    for e, x in g._terms.items():
        y = terms.get(e, 0) + x
        if y:
            terms[e] = y
        else:
            terms.pop(e, None)
    return Series(terms, f.window, max(f._lo, g._lo), min(f._hi, g._hi))


def scale(f: Series, k: int) -> Series:
    if not k:
        return Series({}, f.window, f._lo, f._hi)
    return Series({e: k * x for e, x in f._terms.items()}, f.window, f._lo, f._hi)


def mul(f: Series, g: Series) -> Series:
    _check_same(f, g)
    w = f.window
    if f.complete and not f:
        return zero(w)
    if g.complete and not g:
        return zero(w)
    # Exactness of the product: a coefficient at degree d is exact only if
    # every contributing pair of factor coefficients is exact.
    lf, hf = f.exactness
    lg, hg = g.exactness
    ff, cf = f._support_bounds()
    fg, cg = g._support_bounds()
    lo, hi = -INF, INF
    if lf > -INF:
        lo = max(lo, lf + cg)
    if lg > -INF:
        lo = max(lo, lg + cf)
    if hf < INF:
        hi = min(hi, hf + fg)
    if hg < INF:
        hi = min(hi, hg + ff)

    if len(f._terms) < len(g._terms):
        f, g = g, f
    small = sorted(g._terms.items())
    qmax, amin, amax, bmax, cmax = w.q_max, w.a_min, w.a_max, w.b_max, w.c_max
    out: dict = {}
    over = under = False
    for (q1, a1, b1, c1), x in f._terms.items():
        for (q2, a2, b2, c2), y in small:
            q = q1 + q2
            if q > qmax:
                break
            b = b1 + b2
            c = c1 + c2
            if b > bmax or c > cmax:
                continue
            a = a1 + a2
            if a > amax:
                over = True
                continue
            if a < amin:
                under = True
                continue
            e = (q, a, b, c)
            out[e] = out.get(e, 0) + x * y
    if over:
        hi = min(hi, amax)
    if under:
        lo = max(lo, amin)
    return Series({e: v for e, v in out.items() if v}, w, lo, hi)


def power(f: Series, n: int) -> Series:
    result = one(f.window)
    for _ in range(n):
        result = mul(result, f)
    return result


def _geometric(coef: int, e: Exponent, w: Window) -> Series:
    dq, da, db, dc = e
    terms = {}
    lo, hi = -INF, INF
    j, x = 0, 1
    while True:
        q, a, b, c = j * dq, j * da, j * db, j * dc
        if q > w.q_max or b > w.b_max or c > w.c_max:
            break
        if a > w.a_max:
            hi = min(hi, w.a_max)
            if da >= 0:
                break
        elif a < w.a_min:
            lo = max(lo, w.a_min)
            if da <= 0:
                break
        else:
            terms[(q, a, b, c)] = x
        j += 1
        x *= coef
    return Series(terms, w, lo, hi)


def geometric_inverse(m: Series, w: Optional[Window] = None) -> Series:
    """``1 / (1 - m)`` for a single-term series ``m``, truncated to the window.

    ``m`` needs a positive q-degree, or must be exactly ``a`` (whose
    expansion is cut at ``a_max`` and is then exact only up to there).
    """
    w = m.window if w is None else w
    if len(m) != 1:
        raise SeriesError("geometric_inverse needs a single nonzero monomial")
    (e, coef), = m.items()
    _check_terminates(coef, e)
    return _geometric(coef, e, w)


def _check_terminates(coef: int, e: Exponent) -> None:
    dq, da, db, dc = e
    if dq == 0 and not (da == 1 and db == 0 and dc == 0 and coef == 1):
        raise SeriesError(f"1/(1 - m) does not terminate in the window for m with exponent {e}")


def one_minus(coef: int, w: Window, q: int = 0, a: int = 0, b: int = 0, c: int = 0) -> Series:
    """``1 - coef * q^q a^a b^b c^c``."""
    return from_terms({(0, 0, 0, 0): 1, (q, a, b, c): -coef}, w)


def inverse_one_minus(coef: int, w: Window, q: int = 0, a: int = 0, b: int = 0, c: int = 0) -> Series:
    """``1 / (1 - coef * q^q a^a b^b c^c)``; the monomial need not fit the window."""
    _check_terminates(coef, (q, a, b, c))
    return _geometric(coef, (q, a, b, c), w)


def product_over(
    ks: Iterable[int] | tuple[int, None],
    factor: Callable[[int], Series],
    w: Window,
) -> Series:
    """Product of ``factor(k)`` over ``ks``.

    ``ks`` is a finite iterable, or ``(start, None)`` for ``k >= start``
    unbounded; in that case each factor must be ``1 + O(q^k)`` and factors
    past ``q_max`` are skipped as exactly 1.
    """
    if isinstance(ks, tuple) and len(ks) == 2 and ks[1] is None:
        start = ks[0]
        if start < 1:
            raise SeriesError("an unbounded product must start at k >= 1")
        result = one(w)
        for k in range(start, w.q_max + 1):
            fk = factor(k)
            for (q, a, b, c), x in fk.items():
                if (q, a, b, c) == (0, 0, 0, 0):
                    if x != 1:
                        raise SeriesError(f"factor {k} has constant term {x}, not 1")
                elif q < k:
                    raise SeriesError(f"factor {k} has a term of q-degree {q} < {k}")
            if fk.coefficient() != 1:
                raise SeriesError(f"factor {k} has no constant term 1")
            result = mul(result, fk)
        return result
    result = one(w)
    for k in ks:
        result = mul(result, factor(k))
    return result


def restrict(f: Series, w: Window) -> Series:
    """Re-truncate ``f`` to a smaller window."""
    if not w.inside(f.window):
        raise SeriesError(f"{w} is not inside {f.window}")
    return from_terms(f._terms, w, f._lo, f._hi)


def map_exponents(
    f: Series,
    fn: Callable[[Exponent], tuple[Exponent, int]],
    w: Window,
    lo: float,
    hi: float,
) -> Series:
    """Apply a monomial substitution ``e -> (e', sign)``; the caller supplies exactness."""
    raw: dict = {}
    for e, x in f._terms.items():
        e2, s = fn(e)
        raw[e2] = raw.get(e2, 0) + s * x
    return from_terms(raw, w, lo, hi)


def evaluate_a_at_one(f: Series) -> Series:
    """Collapse every (q, b, c)-slice by summing its a-degrees.

    Only meaningful when no a-truncation happened, so the series must be complete.
    """
    if not f.complete:
        raise SeriesError(f"evaluation at a = 1 needs a complete series, validity is {f.exactness}")
    w = f.window
    target = Window(w.q_max, 0, 0, w.b_max, w.c_max)
    raw: dict = {}
    for (q, a, b, c), x in f._terms.items():
        key = (q, 0, b, c)
        raw[key] = raw.get(key, 0) + x
    return from_terms(raw, target)


@dataclass(frozen=True)
class Mismatch:
    monomial: Exponent
    lhs: int
    rhs: int

    def as_dict(self) -> dict:
        q, a, b, c = self.monomial
        return {"monomial": {"q": q, "a": a, "b": b, "c": c}, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class Comparison:
    window: Window
    mismatches: tuple[Mismatch, ...]
    monomials_compared: int

    @property
    def equal(self) -> bool:
        return not self.mismatches


def _covered(f: Series, on: Window) -> bool:
    lo, hi = f.a_validity
    return on.inside(f.window) and lo <= on.a_min and on.a_max <= hi


def compare(f: Series, g: Series, on: Optional[Window] = None) -> Comparison:
    on = f.window if on is None else on
    for name, s in (("left", f), ("right", g)):
        if not on.inside(s.window):
            raise SeriesError(f"comparison window {on} exceeds the {name} window {s.window}")
        if not _covered(s, on):
            raise SeriesError(
                f"comparison window a-range [{on.a_min}, {on.a_max}] exceeds the {name} "
                f"operand's exact a-range {s.a_validity}"
            )
    keys = {e for e in f._terms if on.contains(e)} | {e for e in g._terms if on.contains(e)}
    out = []
    for e in sorted(keys):
        x, y = f._terms.get(e, 0), g._terms.get(e, 0)
        if x != y:
            out.append(Mismatch(e, x, y))
    return Comparison(on, tuple(out), on.size())


def to_tsv(f: Series) -> str:
    lines = [
        f"{q}\t{a}\t{b}\t{c}\t{x}" for (q, a, b, c), x in sorted(f._terms.items())
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def from_tsv(text: str, w: Window) -> Series:
    raw = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        q, a, b, c, x = (int(t) for t in line.split("\t"))
        raw[(q, a, b, c)] = raw.get((q, a, b, c), 0) + x
    return from_terms(raw, w)


def _mono_text(e: Exponent) -> str:
    parts = []
    for name, d in zip("qabc", e):
        if d == 1:
            parts.append(name)
        elif d:
            parts.append(f"{name}^{d}")
    return "*".join(parts)


def to_text(f: Series, limit: int = 12) -> str:
    if not f._terms:
        return "0"
    out = []
    for i, (e, x) in enumerate(sorted(f._terms.items())):
        if i == limit:
            out.append("...")
            break
        m = _mono_text(e)
        if not m:
            out.append(str(x))
        elif x == 1:
            out.append(m)
        elif x == -1:
            out.append("-" + m)
        else:
            out.append(f"{x}*{m}")
    return " + ".join(out).replace("+ -", "- ")
