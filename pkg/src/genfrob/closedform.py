"""Closed forms for g(A; s) on three-part tuples with a divisibility condition.

A tuple (a1, a2, a3) with overall gcd 1 admits a closed form whenever some
pivot part ai is divisible by (aj / d) for a non-pivot part aj, where d is
the gcd of the two non-pivot parts.  Each such configuration pins

    g(A; sigma(s)) = (s+1) * (product of non-pivot parts)/d + ai*d - a1 - a2 - a3

at the cumulative index sigma(s) = sum_{j=0..s} ceil(j * num / den) with
num/den = (product of non-pivot parts) / (ai * d^2).  All arithmetic is
exact; every division is checked to be remainder-free.

Also here: the union of the three index sequences (which counts are ever
pinned), and the specializations to consecutive triangular numbers, to
pairwise-coprime products, and to tuples containing 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple

from .denumerant import Coins
from .errors import InvalidInputError
from .exactint import ceil_div, gcd, require_i64


def _cumulative_ceil(num: int, den: int, s: int) -> int:
    """sum(ceil(j*num/den) for j in 0..s); strictly increasing for num >= 1."""
    if s < 0:
        raise InvalidInputError("s must be non-negative")
    total = 0
    for j in range(1, s + 1):
        total += ceil_div(j * num, den)
    return require_i64(total, "sigma index")


@dataclass(frozen=True)
class ClosedFormCase:
    """One applicable (pivot, divisibility) configuration of a 3-part tuple."""

    coins: Coins
    pivot: int  # 1-based index of the pivot part
    d: int  # gcd of the two non-pivot parts
    modulus_part: int  # 1-based index of the non-pivot part with (part/d) | pivot
    num: int  # sigma-step coefficient numerator, lowest terms
    den: int  # sigma-step coefficient denominator

    @property
    def pivot_value(self) -> int:
        return self.coins.parts[self.pivot - 1]

    @property
    def other_values(self) -> tuple[int, int]:
        return tuple(p for i, p in enumerate(self.coins.parts, 1) if i != self.pivot)

    def sigma(self, s: int) -> int:
        """The cumulative ceiling index paired with :meth:`value` at the same s."""
        return _cumulative_ceil(self.num, self.den, s)

    def value(self, s: int) -> int:
        """g(A; sigma(s)), evaluated without any rounding."""
        if s < 0:
            raise InvalidInputError("s must be non-negative")
        x, y = self.other_values
        q, r = divmod(x * y, self.d)
        assert r == 0  # d divides each non-pivot part, hence their product
        v = (s + 1) * q + self.pivot_value * self.d - sum(self.coins.parts)
        return require_i64(v, "closed-form value")


class Row(NamedTuple):
    """One table row: index s, cumulative sigma, and the pinned g value."""

    s: int
    sigma: int
    g: int


def _three_parts(coins) -> Coins:
    coins = Coins.of(coins)
    if len(coins.parts) != 3:
        raise InvalidInputError("closed-form detection is defined for 3-part tuples")
    return coins


def detect_cases(coins) -> tuple[ClosedFormCase, ...]:
    """Every applicable configuration, ordered by pivot.

    A pivot with both non-pivot conditions holding yields a single case
    (sigma and the value depend only on the pivot); the recorded
    modulus_part is the first that holds.
    """
    coins = _three_parts(coins)
    if coins.overall_gcd != 1:
        raise InvalidInputError("closed forms require overall gcd 1")
    a = coins.parts
    cases = []
    for i in range(3):
        j, k = (x for x in range(3) if x != i)
        d = gcd(a[j], a[k])
        for m in (j, k):
            if a[i] % (a[m] // d) == 0:
                num, den = a[j] * a[k], a[i] * d * d
                shrink = gcd(num, den)
                cases.append(
                    ClosedFormCase(coins, i + 1, d, m + 1, num // shrink, den // shrink)
                )
                break
    return tuple(cases)


def table_rows(case: ClosedFormCase, s_values) -> list[Row]:
    """Rows (s, sigma, g) for strictly increasing s values, one sigma walk."""
    s_values = list(s_values)
    if not s_values or any(b <= a for a, b in zip(s_values, s_values[1:])):
        raise InvalidInputError("s values must be non-empty and strictly increasing")
    if s_values[0] < 0:
        raise InvalidInputError("s must be non-negative")
    rows = []
    total, j = 0, 0
    for s in s_values:
        while j < s:
            j += 1
            total += ceil_div(j * case.num, case.den)
        rows.append(Row(s, require_i64(total, "sigma index"), case.value(s)))
    return rows


def _index_sequences(coins, s_max: int) -> list[list[int]]:
    coins = _three_parts(coins)
    if s_max < 0:
        raise InvalidInputError("s_max must be non-negative")
    a = coins.parts
    sequences = []
    for i in range(3):
        j, k = (x for x in range(3) if x != i)
        d = gcd(a[j], a[k])
        num, den = a[j] * a[k], a[i] * d * d
        seq = [0]
        total = 0
        for s in range(1, s_max + 1):
            total += ceil_div(s * num, den)
            seq.append(require_i64(total, "sigma index"))
        sequences.append(seq)
    return sequences


def u_set(coins, s_max: int) -> tuple[int, ...]:
    """Sorted union of the three index sequences, each truncated at s_max.

    All three divisors d_i are used whether or not the corresponding
    divisibility condition holds.
    """
    sequences = _index_sequences(coins, s_max)
    return tuple(sorted(set().union(*sequences)))


def u_set_prefix(coins, s_max: int) -> tuple[tuple[int, ...], int]:
    """(prefix, bound): the union elements <= bound, which are final.

    Each sequence is strictly increasing past its truncation point, so no
    union element at or below the smallest truncated maximum can appear
    later; bound is that maximum.
    """
    sequences = _index_sequences(coins, s_max)
    bound = min(seq[-1] for seq in sequences)
    merged = sorted(set().union(*sequences))
    return tuple(v for v in merged if v <= bound), bound


def triangular(n: int) -> int:
    """The n-th triangular number n(n+1)/2."""
    if n < 0:
        raise InvalidInputError("triangular numbers are indexed by n >= 0")
    return require_i64(n * (n + 1) // 2, "triangular number")


def _exact_quarter(value: int) -> int:
    q, r = divmod(value, 4)
    assert r == 0
    return q


def triangular_frobenius(
    n: int, s: int, variant: Literal["first", "second"]
) -> tuple[int, int]:
    """(sigma, g) for the tuple of consecutive triangular numbers (t_n, t_{n+1}, t_{n+2}).

    ``first`` pivots on t_n with d = gcd(t_{n+1}, t_{n+2}); ``second``
    pivots on t_{n+2} with d = gcd(t_n, t_{n+1}).  The first variant is
    additionally checked against the factored single-fraction presentation
    (even n, and odd n >= 3), which must agree exactly.
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    if s < 0:
        raise InvalidInputError("s must be non-negative")
    if variant not in ("first", "second"):
        raise InvalidInputError(f"unknown variant {variant!r}")
    t0, t1, t2 = triangular(n), triangular(n + 1), triangular(n + 2)
    total = t0 + t1 + t2
    if variant == "first":
        d = gcd(t1, t2)
        num, den = t1 * t2, t0 * d * d
        value = (s + 1) * (t1 * t2 // d) + t0 * d - total
    else:
        d = gcd(t0, t1)
        num, den = t0 * t1, t2 * d * d
        value = (s + 1) * (t0 * t1 // d) + t2 * d - total
    sigma = _cumulative_ceil(num, den, s)
    value = require_i64(value, "closed-form value")
    if variant == "first":
        if n % 2 == 0:
            alt_value = _exact_quarter((n + 1) * (n + 2) * (2 * s * (n + 3) + 3 * n)) - 1
            alt_sigma = s * (s + 1) + sum(ceil_div(6 * j, n) for j in range(1, s + 1))
            assert (sigma, value) == (alt_sigma, alt_value)
        elif n >= 3:
            alt_value = _exact_quarter((n + 1) * (n + 2) * ((n + 3) * s + 3 * (n - 1))) - 1
            alt_sigma = sum(ceil_div(j * (n + 3), 2 * n) for j in range(1, s + 1))
            assert (sigma, value) == (alt_sigma, alt_value)
    return sigma, value


def pairwise_coprime_frobenius(m1: int, m2: int, m3: int, n: int) -> int:
    """g(m2*m3, m1*m3, m1*m2; t_n) = m1*m2*m3*(n+2) - m1*m2 - m1*m3 - m2*m3.

    The product tuple always admits the pivot-1 configuration with index
    coefficient exactly 1, so the paired index is the n-th triangular
    number; that structure is asserted.
    """
    for m in (m1, m2, m3):
        if m < 1:
            raise InvalidInputError("factors must be positive")
    for x, y in ((m1, m2), (m1, m3), (m2, m3)):
        if gcd(x, y) != 1:
            raise InvalidInputError(f"factors must be pairwise coprime, got gcd({x},{y}) > 1")
    if n < 0:
        raise InvalidInputError("n must be non-negative")
    value = require_i64(
        m1 * m2 * m3 * (n + 2) - m1 * m2 - m1 * m3 - m2 * m3, "closed-form value"
    )
    coins = Coins((m2 * m3, m1 * m3, m1 * m2))
    case = next(c for c in detect_cases(coins) if c.pivot == 1)
    assert case.num == case.den == 1  # hence case.sigma(n) == triangular(n)
    assert case.value(n) == value
    return value


def one_a_b_frobenius(a: int, b: int, s: int) -> tuple[int, int]:
    """(sigma, g) for the tuple (1, a, b): g(1, a, b; sum ceil(j*b/a)) = s*b - 1."""
    if a < 1 or b < 1:
        raise InvalidInputError("parts must be positive")
    if s < 0:
        raise InvalidInputError("s must be non-negative")
    sigma = _cumulative_ceil(b, a, s)
    value = require_i64(s * b - 1, "closed-form value")
    case = next(c for c in detect_cases(Coins((1, a, b))) if c.pivot == 2)
    assert case.value(s) == value
    return sigma, value
