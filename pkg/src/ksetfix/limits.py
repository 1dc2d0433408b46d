"""Limiting fix probabilities via exact exponential polynomials.

As the degree grows, the number of j-cycles of a uniform random
permutation tends to an independent Poisson count with mean 1/j, so the
limiting probability that no k-subset is fixed equals the probability
that the random partition with Poisson(1/j) parts of size j is k-free.
Summing over the k-free row table, each row r contributes the product of
per-position weights

    x_j(r) = e^{-1/j} / (j^{m_j} m_j!)                   if m_j < floor(k/j)
    x_j(r) = 1 - e^{-1/j} * sum_{i<floor(k/j)} 1/(j^i i!)   if m_j = floor(k/j)

(the capped case charges the row with every tail multiplicity at once),
times e^{-1/k} for the omitted k-cycle position. The total is kept as an
exact :class:`~ksetfix.exppoly.ExpPoly` and evaluated once at the end to
any requested number of decimal places.

Accumulation groups rows by their set of capped positions: within a
group only the rational weight 1/prod(j^{m_j} m_j!) varies, so each row
adds one integer to a per-group numerator over a fixed common
denominator, and the binomial capped factors are expanded once per group
after enumeration. This reproduces the row-by-row sum exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exppoly import ExpPoly, exponent_fraction
from .precision import (
    exp_neg_fraction,
    exp_small,
    format_scaled,
    ln_int,
    ln_scaled,
    pow_three_halves,
    round_scaled,
)
from .table import TableStats, enumerate_rows, m1_windows

# extra decimal digits carried by evaluate() beyond the requested ones;
# the audited per-term error is under 4 ulp, so this covers polynomials
# with up to ~10**8 terms of unit coefficient mass
_EVAL_GUARD = 12


@dataclass(frozen=True)
class HighPrecisionDecimal:
    """A decimal string with certified absolute error below 10**-digits."""

    digits: int
    value: str
    scaled: int  # round(value * 10**digits), half to even

    def __str__(self) -> str:
        return self.value

    def as_fraction(self) -> Fraction:
        return Fraction(self.scaled, 10**self.digits)


def floor_cap(k: int, j: int) -> int:
    """The capping multiplicity floor(k/j) at position j."""
    return k // j


def capped_tail_weight(k: int, j: int) -> Fraction:
    """sum_{0 <= i < floor(k/j)} 1/(j^i i!), the weight subtracted by a capped factor."""
    return sum(
        (Fraction(1, j**i * factorial(i)) for i in range(k // j)), Fraction(0)
    )


def row_factor(k: int, j: int, m: int) -> ExpPoly:
    """The weight x_j of multiplicity m at position j of a k-free row."""
    if not 1 <= j <= k:
        raise ValueError("need 1 <= j <= k")
    cap = floor_cap(k, j)
    if not 0 <= m <= cap:
        raise ValueError("multiplicity out of range for this position")
    if m < cap:
        return ExpPoly.exp_inv(j, Fraction(1, j**m * factorial(m)))
    return ExpPoly.one() - ExpPoly.exp_inv(j, capped_tail_weight(k, j))


def row_contribution(k: int, row) -> ExpPoly:
    """Product of all position weights of a row, including the k-cycle factor.

    The row has length k-1; position k always carries multiplicity 0 and
    contributes the single factor e^{-1/k}.
    """
    if len(row) != k - 1:
        raise ValueError("row must have length k-1")
    poly = ExpPoly.exp_inv(k)
    for j, m in enumerate(row, start=1):
        poly = poly * row_factor(k, j, m)
    return poly


def _accumulate_rows(k: int, m1_hi: int | None, m1_lo: int):
    """One enumeration pass: group numerators by capped-position mask.

    Returns ({cap_mask: integer numerator}, common denominator, stats).
    Uncapped positions with multiplicity m contribute j^m m! to a row's
    denominator; every such denominator divides the product of the
    per-position maxima, which serves as the common denominator.
    """
    caps = [k // j for j in range(1, k)]
    bound = [(k - 1) // j for j in range(1, k)]
    weight = [
        [j**m * factorial(m) for m in range(bound[j - 1] + 1)] for j in range(1, k)
    ]
    common = 1
    for j in range(1, k):
        common *= weight[j - 1][bound[j - 1]]
    acc: dict[int, int] = {}
    cofactor: dict[int, int] = {}

    def consume(row: tuple[int, ...]) -> None:
        cap_mask = 0
        den = 1
        for idx, m in enumerate(row):
            if m == caps[idx]:
                cap_mask |= 1 << idx
            elif m:
                den *= weight[idx][m]
        c = cofactor.get(den)
        if c is None:
            c = cofactor[den] = common // den
        acc[cap_mask] = acc.get(cap_mask, 0) + c

    stats = enumerate_rows(k, consume, m1_hi=m1_hi, m1_lo=m1_lo)
    return acc, common, stats


def _accumulate_window(args):
    k, hi, lo = args
    acc, _, stats = _accumulate_rows(k, hi, lo)
    return acc, stats


def _expand_groups(k: int, acc: dict[int, int], common: int) -> ExpPoly:
    """Turn grouped numerators into the expanded exponential polynomial."""
    full_mask = (1 << k) - 1
    tails = {}
    total: dict[int, Fraction] = {}
    for cap_mask, num in acc.items():
        poly = {full_mask & ~cap_mask: Fraction(num, common)}
        mm, jpos = cap_mask, 0
        while mm:
            if mm & 1:
                j = jpos + 1
                t = tails.get(j)
                if t is None:
                    t = tails[j] = capped_tail_weight(k, j)
                grown: dict[int, Fraction] = {}
                for mask, c in poly.items():
                    grown[mask] = grown.get(mask, Fraction(0)) + c
                    withj = mask | (1 << jpos)
                    grown[withj] = grown.get(withj, Fraction(0)) - c * t
                poly = grown
            mm >>= 1
            jpos += 1
        for mask, c in poly.items():
            v = total.get(mask, Fraction(0)) + c
            if v:
                total[mask] = v
            else:
                total.pop(mask, None)
    return ExpPoly(total)


def limiting_survival(k: int, jobs: int = 1) -> ExpPoly:
    """Exact limiting probability that no k-subset is fixed, as an ExpPoly."""
    return limiting_survival_with_stats(k, jobs)[0]


def limiting_survival_with_stats(k: int, jobs: int = 1) -> tuple[ExpPoly, TableStats]:
    """Like :func:`limiting_survival`, also returning the table counters.

    With jobs > 1 the row table is split by the leading multiplicity and
    the per-window group sums are merged in window order; exact integer
    accumulation makes the result identical to the serial run.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if jobs <= 1 or k < 3:
        acc, common, stats = _accumulate_rows(k, None, 0)
        return _expand_groups(k, acc, common), stats
    from concurrent.futures import ProcessPoolExecutor

    windows = m1_windows(k, jobs)
    common = 1
    for j in range(1, k):
        b = (k - 1) // j
        common *= j**b * factorial(b)
    acc: dict[int, int] = {}
    stats = TableStats()
    with ProcessPoolExecutor(max_workers=len(windows)) as pool:
        for part, wstats in pool.map(
            _accumulate_window, [(k, hi, lo) for hi, lo in windows]
        ):
            for mask, num in part.items():
                acc[mask] = acc.get(mask, 0) + num
            stats = stats.merged(wstats)
    return _expand_groups(k, acc, common), stats


def evaluate_scaled(poly: ExpPoly, prec: int) -> int:
    """poly evaluated at scale 10**prec; error under (T + 2*sum|c| + 2) ulp."""
    total = 0
    for mask, c in poly.terms.items():
        q = exponent_fraction(mask)
        e = exp_neg_fraction(q.numerator, q.denominator, prec)
        total += c.numerator * e // c.denominator
    return total


def evaluate(poly: ExpPoly, digits: int) -> HighPrecisionDecimal:
    """Evaluate an ExpPoly to ``digits`` decimal places, certified.

    Working precision adds guard digits scaling with the term count and
    the coefficient mass, so the accumulated error (series truncation,
    one reciprocal and one floor division per term) stays strictly below
    half an output ulp; the half-even output rounding then keeps the
    printed string within 10**-digits of the true value.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    mass = int(poly.abs_coefficient_sum()) + 1
    nterms = len(poly)
    prec = digits + _EVAL_GUARD + len(str(nterms + 1)) + len(str(mass))
    total = evaluate_scaled(poly, prec)
    budget = nterms + 2 * mass + 2
    assert 2 * budget < 10 ** (prec - digits)
    scaled = round_scaled(total, prec, digits)
    return HighPrecisionDecimal(digits, format_scaled(scaled, digits), scaled)


def limiting_fix_probability(k: int, digits: int, jobs: int = 1) -> HighPrecisionDecimal:
    """i(k) = 1 - survival, to ``digits`` places; subtraction done symbolically."""
    return evaluate(ExpPoly.one() - limiting_survival(k, jobs), digits)


def decay_exponent_scaled(prec: int) -> int:
    """The exponent 1 - (1 + ln ln 2)/ln 2 at scale 10**prec, within a few ulp."""
    s = 10**prec
    l2 = ln_int(2, prec)
    ll2 = ln_scaled(l2, prec)
    return s - (s + ll2) * s // l2


def decay_exponent(digits: int) -> HighPrecisionDecimal:
    """The comparison-curve exponent (about 0.08607) to ``digits`` places."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    prec = digits + _EVAL_GUARD
    scaled = round_scaled(decay_exponent_scaled(prec), prec, digits)
    return HighPrecisionDecimal(digits, format_scaled(scaled, digits), scaled)


def efg_ratio(k: int, digits: int, jobs: int = 1) -> HighPrecisionDecimal:
    """i(k) / (k^-d (ln k)^-3/2) with d the decay exponent, to ``digits`` places.

    All factors are order one and carry at most a few ulp of error at the
    working precision, which exceeds the output precision by enough guard
    digits to absorb them.
    """
    if k < 2:
        raise ValueError("the ratio needs k >= 2 (positive ln k)")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    prec = digits + _EVAL_GUARD + 4
    s = 10**prec
    fix = s - evaluate_scaled(limiting_survival(k, jobs), prec)
    lnk = ln_int(k, prec)
    d = decay_exponent_scaled(prec)
    k_pow = exp_small(d * lnk // s, prec)
    lnk_pow = pow_three_halves(lnk, prec)
    value = fix * k_pow // s * lnk_pow // s
    scaled = round_scaled(value, prec, digits)
    return HighPrecisionDecimal(digits, format_scaled(scaled, digits), scaled)
