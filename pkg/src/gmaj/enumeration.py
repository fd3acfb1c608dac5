"""Counting bipartitional and compatible bipartitional relations.

Two independent routes are provided for each count: a closed Stirling-number
formula, and the coefficient recurrence of the exponential generating
function (computed entirely with integer binomial convolutions).  The
recognizer-based exhaustive scan in the survey module gives a third route
at small r.

Heads up for anyone checking these against published tables: the r=3
compatible count is 44, confirmed here by the formula, the generating
function, and exhaustive generation; a published series expansion prints
66 for that coefficient, which is inconsistent with its own closed formula.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import GmajError

COMPATIBLE_R3_ERRATUM = (
    "note: compatible count at r=3 is 44 (formula, generating-function "
    "recurrence, and exhaustive generation all agree); a published series "
    "expansion prints 66 for this coefficient, which contradicts the "
    "closed formula. 44 is used throughout."
)


@lru_cache(maxsize=None)
def stirling2(r: int, k: int) -> int:
    """Stirling number of the second kind via the standard triangle."""
    if r < 0 or k < 0:
        raise GmajError("stirling2 needs non-negative arguments")
    if r == 0 and k == 0:
        return 1
    if r == 0 or k == 0:
        return 0
    return k * stirling2(r - 1, k) + stirling2(r - 1, k - 1)


def count_bipartitional(r: int) -> int:
    """Ordered set partitions with independently underlinable blocks:
    sum over k of S(r,k) * k! * 2^k."""
    if r < 0:
        raise GmajError("r must be non-negative")
    if r == 0:
        return 1
    return sum(stirling2(r, k) * math.factorial(k) * 2**k for k in range(1, r + 1))


def count_compatible(r: int) -> int:
    """Ordered set partitions with an underlined prefix: the k-block ones
    admit k+1 prefix cuts, giving sum of S(r,k) * (k+1)!."""
    if r < 0:
        raise GmajError("r must be non-negative")
    if r == 0:
        return 1
    return sum(stirling2(r, k) * math.factorial(k + 1) for k in range(1, r + 1))


def egf_bipartitional(n_max: int) -> list[int]:
    """Coefficients a_0..a_n of the generating function 1/(3 - 2*e^u),
    via a_0 = 1 and a_n = 2 * sum_{k=1}^{n} C(n,k) a_{n-k}."""
    if n_max < 0:
        raise GmajError("n_max must be non-negative")
    a = [1]
    for n in range(1, n_max + 1):
        a.append(2 * sum(math.comb(n, k) * a[n - k] for k in range(1, n + 1)))
    return a


def fubini_numbers(n_max: int) -> list[int]:
    """Ordered-set-partition counts: f_0 = 1, f_n = sum C(n,k) f_{n-k}."""
    if n_max < 0:
        raise GmajError("n_max must be non-negative")
    f = [1]
    for n in range(1, n_max + 1):
        f.append(sum(math.comb(n, k) * f[n - k] for k in range(1, n + 1)))
    return f


def egf_compatible(n_max: int) -> list[int]:
    """Coefficients of 1/(2 - e^u)^2: the binomial square of the
    ordered-set-partition sequence."""
    f = fubini_numbers(n_max)
    return [
        sum(math.comb(n, k) * f[k] * f[n - k] for k in range(n + 1))
        for n in range(n_max + 1)
    ]
