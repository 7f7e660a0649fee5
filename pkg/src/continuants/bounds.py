"""Counting bounds, growth thresholds, and certified real comparisons.

Everything decidable over the integers or rationals is decided exactly:
the distinct-value upper bound 2^{2s} s! ((s+1)!)^m, the class-size lower
bound ((s-l+t)m)! / (2 (m!)^{s-l+t}), and the repetition threshold from
which the simplified per-letter bound holds (least m with
2^{2s} s! 99^m <= 100^m).

Transcendental quantities (powers of e, pi, square roots) are evaluated as
interval enclosures with exact rational endpoints: the constants e and pi
come from series with rational truncation-error brackets, square roots use
integer isqrt with directed rounding, and all other arithmetic is exact on
Fractions.  A threshold comparison is decided only when the enclosure
excludes the threshold; otherwise precision doubles, up to a hard maximum,
and failing that the comparison raises instead of guessing.  Boundary
misclassification would silently change which alphabets count as
admissible, so nothing here ever rounds to nearest.

Quantities tied to a lacunary alphabet {b_1<...<b_t} | {l+1..s}:

* density_power(t, l, s): ((s-l+t)/(s+1))^{s+1}, the (s+1)-th power of the
  alphabet-density ratio.  Exactly rational; increases in s toward
  e^{-(l-t)-1}.
* density_threshold_s(t, l): least s where density_power reaches half its
  limit.
* growth_factor(t, l, s): (363/800) e^{s-l+t} / (sqrt(2 pi (s+1))
  (s-l+t)^{l-t+1}).  For large repetition counts m the class-size to
  distinct-value ratio N/P of equipartitioned classes exceeds
  growth_factor^m, so any s with growth_factor > 1 forces value collisions
  whose multiplicity grows geometrically.
* smallest_admissible_s(t, l): least such s (also >= the threshold above
  and > l, since the alphabet shape needs l < s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

DEFAULT_PREC_BITS = 128
MAX_PREC_BITS = 4096

# Extra working bits on top of the requested precision.
_GUARD_BITS = 16


class PrecisionExhaustedError(Exception):
    """A certified comparison stayed undecided at the maximum precision."""

    def __init__(self, description: str, max_prec: int):
        super().__init__(
            f"{description}: enclosure still straddles the threshold at {max_prec} bits"
        )
        self.description = description
        self.max_prec = max_prec


# ---------------------------------------------------------------------------
# Rational interval kernel.  Intervals are (lo, hi) Fraction pairs, lo <= hi,
# positive unless noted.  Constants are rounded outward to dyadics at q bits;
# +,*,/ stay exact on Fractions, sqrt rounds outward at q bits.
# ---------------------------------------------------------------------------

def _dyadic_floor(x: Fraction, q: int) -> Fraction:
    return Fraction((x.numerator << q) // x.denominator, 1 << q)


def _dyadic_ceil(x: Fraction, q: int) -> Fraction:
    return Fraction(-((-x.numerator << q) // x.denominator), 1 << q)


@lru_cache(maxsize=None)
def _e_interval(q: int) -> tuple[Fraction, Fraction]:
    """Enclosure of e from partial sums of sum 1/k!; remainder < 2/(K+1)!."""
    k, fact = 0, 1
    while fact.bit_length() <= q + 5:  # (K+1)! >= 2^(q+5) makes 2/(K+1)! <= 2^-(q+4)
        k += 1
        fact *= k
    s = Fraction(0)
    f = 1
    for i in range(k):
        s += Fraction(1, f)
        f *= i + 1
    s += Fraction(1, f)  # term 1/K!
    lo = s
    hi = s + Fraction(2, f * (k + 1))
    return _dyadic_floor(lo, q), _dyadic_ceil(hi, q)


def _atan_inv_brackets(x: int, eps: Fraction) -> tuple[Fraction, Fraction]:
    """Brackets for arctan(1/x) by the alternating series, error <= first omitted term."""
    s = Fraction(0)
    k = 0
    while True:
        term = Fraction(1, (2 * k + 1) * x ** (2 * k + 1))
        if term <= eps:
            return s - term, s + term
        s += term if k % 2 == 0 else -term
        k += 1


@lru_cache(maxsize=None)
def _pi_interval(q: int) -> tuple[Fraction, Fraction]:
    """Enclosure of pi via Machin's formula 16 atan(1/5) - 4 atan(1/239)."""
    eps = Fraction(1, 1 << (q + 8))
    a5_lo, a5_hi = _atan_inv_brackets(5, eps / 32)
    a239_lo, a239_hi = _atan_inv_brackets(239, eps / 8)
    lo = 16 * a5_lo - 4 * a239_hi
    hi = 16 * a5_hi - 4 * a239_lo
    return _dyadic_floor(lo, q), _dyadic_ceil(hi, q)


def _iv_scale(iv: tuple[Fraction, Fraction], c: Fraction) -> tuple[Fraction, Fraction]:
    assert c > 0
    return iv[0] * c, iv[1] * c


def _iv_div(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    assert b[0] > 0
    return a[0] / b[1], a[1] / b[0]


def _iv_powi(iv: tuple[Fraction, Fraction], k: int) -> tuple[Fraction, Fraction]:
    assert iv[0] >= 0 and k >= 0
    return iv[0] ** k, iv[1] ** k


def _iv_sqrt(iv: tuple[Fraction, Fraction], q: int) -> tuple[Fraction, Fraction]:
    lo, hi = iv
    assert lo >= 0
    t_lo = (lo.numerator << (2 * q)) // lo.denominator
    r_lo = math.isqrt(t_lo)
    t_hi = -((-hi.numerator << (2 * q)) // hi.denominator)
    r_hi = math.isqrt(t_hi)
    if r_hi * r_hi < t_hi:
        r_hi += 1
    return Fraction(r_lo, 1 << q), Fraction(r_hi, 1 << q)


def _refine(decide, start_prec: int, max_prec: int, description: str) -> bool:
    """Run decide(prec) -> True | False | None, doubling precision while undecided."""
    prec = start_prec
    while True:
        verdict = decide(prec)
        if verdict is not None:
            return verdict
        if prec >= max_prec:
            raise PrecisionExhaustedError(description, max_prec)
        prec = min(2 * prec, max_prec)


# ---------------------------------------------------------------------------
# Certified real values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CertifiedReal:
    """An interval [lower, upper] of exact rationals enclosing a real value.

    ``prec_bits`` records the working precision used to produce the
    enclosure; 0 marks an exactly rational value (lower == upper).
    """

    lower: Fraction
    upper: Fraction
    prec_bits: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"empty enclosure: {self.lower} > {self.upper}")

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def radius(self) -> Fraction:
        return (self.upper - self.lower) / 2

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def __contains__(self, x) -> bool:
        return self.lower <= Fraction(x) <= self.upper

    def definitely_greater(self, c) -> bool:
        return self.lower > Fraction(c)

    def definitely_less(self, c) -> bool:
        return self.upper < Fraction(c)

    def to_json_dict(self, digits: int = 36) -> dict:
        # The decimal radius is padded by the midpoint's decimal rounding
        # error and rounded up, so the serialized interval still contains
        # the true value.
        mid = self.midpoint
        mid_dec = _fraction_to_decimal(mid, digits, ROUND_HALF_EVEN)
        err = abs(mid - Fraction(mid_dec))
        rad_dec = _fraction_to_decimal(self.radius + err, digits, ROUND_CEILING)
        return {
            "midpoint": str(mid_dec),
            "radius": str(rad_dec),
            "precision_bits": self.prec_bits,
        }


def _fraction_to_decimal(x: Fraction, digits: int, rounding: str) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = rounding
        return Decimal(x.numerator) / Decimal(x.denominator)


# ---------------------------------------------------------------------------
# Exact integer bounds
# ---------------------------------------------------------------------------

def value_count_upper_bound(s: int, m: int) -> int:
    """Upper bound 2^{2s} s! ((s+1)!)^m on distinct continuant values.

    Bounds the number of distinct values over any equipartitioned class
    with repetition count m on an alphabet whose largest letter is s;
    strictly increasing in both arguments.
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return (1 << (2 * s)) * math.factorial(s) * math.factorial(s + 1) ** m


def _check_shape(t: int, l: int, s: int) -> None:
    if not (1 <= t <= l < s):
        raise ValueError(f"need 1 <= t <= l < s, got t={t}, l={l}, s={s}")


def class_count_lower_bound(t: int, l: int, s: int, m: int) -> int:
    """Lower bound floor(((s-l+t)m)! / (2 (m!)^{s-l+t})) on the class size.

    The true quotient is a half-integer when palindromes exist; flooring
    keeps it a valid lower bound for the reversal-quotient count.
    """
    _check_shape(t, l, s)
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    k = s - l + t
    return math.factorial(k * m) // (2 * math.factorial(m) ** k)


def simplified_bound_threshold(s: int) -> int:
    """Least m with 2^{2s} s! 99^m <= 100^m, decided in exact integer arithmetic.

    From this repetition count on, the distinct-value bound collapses to
    ((100/99) (s+1)!)^m.
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    target = (1 << (2 * s)) * math.factorial(s)

    def ok(m: int) -> bool:
        return 100**m >= target * 99**m

    hi = 1
    while not ok(hi):
        hi <<= 1
    lo = hi >> 1
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


# ---------------------------------------------------------------------------
# Density power, growth factor, thresholds
# ---------------------------------------------------------------------------

def _density_fraction(t: int, l: int, s: int) -> Fraction:
    if not 1 <= t <= l:
        raise ValueError(f"need 1 <= t <= l, got t={t}, l={l}")
    if s < l - t:
        raise ValueError(f"density base is negative for s={s} < l-t={l - t}")
    return Fraction(s - l + t, s + 1) ** (s + 1)


def density_power(t: int, l: int, s: int) -> CertifiedReal:
    """((s-l+t)/(s+1))^{s+1} as an exact rational enclosure (radius 0).

    Strictly increasing in s on [l-t+1, oo), with limit e^{-(l-t)-1}.
    """
    f = _density_fraction(t, l, s)
    return CertifiedReal(f, f, 0)


def _half_exp_neg_interval(c: int, q: int) -> tuple[Fraction, Fraction]:
    """Enclosure of e^{-c} / 2 for integer c >= 1."""
    e_lo, e_hi = _e_interval(q)
    return Fraction(1, 2) / e_hi**c, Fraction(1, 2) / e_lo**c


def density_threshold_s(
    t: int,
    l: int,
    *,
    prec: int = DEFAULT_PREC_BITS,
    max_prec: int = MAX_PREC_BITS,
) -> int:
    """Least s >= l-t+1 with density_power(t, l, s) >= e^{-(l-t)-1} / 2.

    The left side is exactly rational and the threshold is irrational, so
    the certified comparison always resolves at some precision.
    """
    if not 1 <= t <= l:
        raise ValueError(f"need 1 <= t <= l, got t={t}, l={l}")
    c = l - t + 1
    s = c
    while True:
        f = _density_fraction(t, l, s)

        def decide(q: int, f=f):
            thr_lo, thr_hi = _half_exp_neg_interval(c, q + _GUARD_BITS)
            if f >= thr_hi:
                return True
            if f < thr_lo:
                return False
            return None

        if _refine(decide, prec, max_prec, f"density_power({t},{l},{s}) vs half-limit"):
            return s
        s += 1


def growth_factor(t: int, l: int, s: int, *, prec: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    """Certified enclosure of the per-repetition collision growth factor.

    (363/400) e^{s+1} / (sqrt(2 pi (s+1)) (s-l+t)^{l-t+1}) * e^{-(l-t)-1}/2,
    with the e powers folded to e^{s-l+t}.
    """
    _check_shape(t, l, s)
    q = prec + _GUARD_BITS
    k = s - l + t
    e_pow = _iv_powi(_e_interval(q), k)
    root = _iv_sqrt(_iv_scale(_pi_interval(q), Fraction(2 * (s + 1))), q)
    denom = _iv_scale(root, Fraction(k ** (l - t + 1)))
    lo, hi = _iv_div(_iv_scale(e_pow, Fraction(363, 800)), denom)
    return CertifiedReal(lo, hi, prec)


def _growth_exceeds_one(t: int, l: int, s: int, prec: int, max_prec: int) -> bool:
    def decide(q: int):
        g = growth_factor(t, l, s, prec=q)
        if g.definitely_greater(1):
            return True
        if g.definitely_less(1):
            return False
        return None

    return _refine(decide, prec, max_prec, f"growth_factor({t},{l},{s}) vs 1")


def smallest_admissible_s(
    t: int,
    l: int,
    *,
    prec: int = DEFAULT_PREC_BITS,
    max_prec: int = MAX_PREC_BITS,
) -> int:
    """Least s >= max(density_threshold_s(t, l), l+1) with growth_factor > 1.

    Exists because the growth factor behaves like e^s over a polynomial.
    """
    s = max(density_threshold_s(t, l, prec=prec, max_prec=max_prec), l + 1)
    while True:
        if _growth_exceeds_one(t, l, s, prec, max_prec):
            return s
        s += 1


def is_admissible(
    t: int,
    l: int,
    s: int,
    *,
    prec: int = DEFAULT_PREC_BITS,
    max_prec: int = MAX_PREC_BITS,
) -> bool:
    """Whether the alphabet shape (t, l, s) has certified growth_factor > 1.

    Also requires s >= density_threshold_s(t, l) (the growth bound only
    applies from there on) and s > l (the shape itself needs it).
    """
    _check_shape(t, l, s)
    if s < max(density_threshold_s(t, l, prec=prec, max_prec=max_prec), l + 1):
        return False
    return _growth_exceeds_one(t, l, s, prec, max_prec)


def stirling_enclosure(n: int, *, prec: int = DEFAULT_PREC_BITS) -> tuple[CertifiedReal, CertifiedReal]:
    """Certified (lower, upper) factorial bounds around n!.

    lower encloses e^{-n} n^n sqrt(2 pi n) and upper encloses 12/11 times
    that; the exact factorial lies strictly between the two enclosed
    values for every n >= 1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    q = prec + _GUARD_BITS
    root = _iv_sqrt(_iv_scale(_pi_interval(q), Fraction(2 * n)), q)
    num = _iv_scale(root, Fraction(n**n))
    base = _iv_div(num, _iv_powi(_e_interval(q), n))
    upper = _iv_scale(base, Fraction(12, 11))
    return CertifiedReal(base[0], base[1], prec), CertifiedReal(upper[0], upper[1], prec)


def growth_ratio_sides(
    t: int,
    l: int,
    s: int,
    m: int,
    class_size: int,
    distinct_values: int,
    *,
    prec: int = DEFAULT_PREC_BITS,
) -> tuple[Fraction, CertifiedReal]:
    """The two sides of the asymptotic ratio statement, for inspection only.

    Returns (exact N/P from a census, certified growth_factor^m).  The
    inequality between them is asymptotic in m and is not asserted at desk
    scale.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    g = growth_factor(t, l, s, prec=prec)
    lo, hi = _iv_powi((g.lower, g.upper), m)
    return Fraction(class_size, distinct_values), CertifiedReal(lo, hi, prec)


# ---------------------------------------------------------------------------
# Bundled report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundsReport:
    """All bound and threshold values for one parameter choice.

    Fields not derivable from the supplied parameters are None: s-dependent
    quantities need s, the integer bounds need s and m, and admissible_s is
    only searched on request.
    """

    t: int
    l: int
    s: int | None
    m: int | None
    s_threshold: int
    m_threshold: int | None
    density_power: CertifiedReal | None
    growth_factor: CertifiedReal | None
    admissible: bool | None
    admissible_s: int | None
    value_count_upper: int | None
    class_count_lower: int | None

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "l": self.l,
            "s": self.s,
            "m": self.m,
            "s_threshold": self.s_threshold,
            "m_threshold": self.m_threshold,
            "density_power": None if self.density_power is None else self.density_power.to_json_dict(),
            "growth_factor": None if self.growth_factor is None else self.growth_factor.to_json_dict(),
            "admissible": self.admissible,
            "admissible_s": self.admissible_s,
            "value_count_upper": None if self.value_count_upper is None else str(self.value_count_upper),
            "class_count_lower": None if self.class_count_lower is None else str(self.class_count_lower),
        }


def bounds_report(
    t: int,
    l: int,
    s: int | None = None,
    m: int | None = None,
    *,
    find_admissible: bool = False,
    prec: int = DEFAULT_PREC_BITS,
    max_prec: int = MAX_PREC_BITS,
) -> BoundsReport:
    """Evaluate every bound derivable from the given parameters."""
    if not 1 <= t <= l:
        raise ValueError(f"need 1 <= t <= l, got t={t}, l={l}")
    if m is not None and s is None:
        raise ValueError("m was given without s")
    s_thr = density_threshold_s(t, l, prec=prec, max_prec=max_prec)
    m_thr = dens = growth = adm = vcu = ccl = None
    if s is not None:
        _check_shape(t, l, s)
        m_thr = simplified_bound_threshold(s)
        dens = density_power(t, l, s)
        growth = growth_factor(t, l, s, prec=prec)
        adm = is_admissible(t, l, s, prec=prec, max_prec=max_prec)
        if m is not None:
            vcu = value_count_upper_bound(s, m)
            ccl = class_count_lower_bound(t, l, s, m)
    adm_s = (
        smallest_admissible_s(t, l, prec=prec, max_prec=max_prec) if find_admissible else None
    )
    return BoundsReport(
        t=t,
        l=l,
        s=s,
        m=m,
        s_threshold=s_thr,
        m_threshold=m_thr,
        density_power=dens,
        growth_factor=growth,
        admissible=adm,
        admissible_s=adm_s,
        value_count_upper=vcu,
        class_count_lower=ccl,
    )
