"""Independent reference computations the library is checked against.

Everything here works by definition-level enumeration: all partial matchings,
all integer translates in a window, and so on.  None of it shares code with
the algorithmic paths it is used to verify.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations

from circlepers import CLOSED, CircleInterval
from circlepers.metric_quotient import QuotientPoint
from circlepers.rationals import Ext


def enumerate_bottleneck(pair_costs, diag_a, diag_b) -> Ext:
    """Minimum bottleneck cost over every partial matching, by enumeration."""
    n_a, n_b = len(diag_a), len(diag_b)
    best = None
    for k in range(min(n_a, n_b) + 1):
        for rows in combinations(range(n_a), k):
            for cols in permutations(range(n_b), k):
                cost: Ext = Fraction(0)
                for i, j in zip(rows, cols):
                    cost = max(cost, pair_costs[i][j])
                used_a = set(rows)
                used_b = set(cols)
                for i in range(n_a):
                    if i not in used_a:
                        cost = max(cost, diag_a[i])
                for j in range(n_b):
                    if j not in used_b:
                        cost = max(cost, diag_b[j])
                if best is None or cost < best:
                    best = cost
    assert best is not None
    return best


def window_quotient_linf(p: QuotientPoint, q: QuotientPoint) -> Fraction:
    """Quotient distance by enumerating shifts |k| <= ceil(max(|u|,|v|)) + 1.

    The window provably contains the optimum: the real minimiser -(u+v)/2 has
    absolute value at most max(|u|,|v|).
    """
    u = p.a - q.a
    v = p.b - q.b
    spread = math.ceil(max(abs(u), abs(v))) + 1
    return min(max(abs(u + k), abs(v + k)) for k in range(-spread, spread + 1))


def count_translates(interval: CircleInterval, x: Fraction, pad: int = 2) -> int:
    """Number of integer translates of x inside the interval, by direct scan.

    Membership is re-derived from the endpoint kinds here rather than through
    the interval's own predicate.
    """
    lo, hi = interval.lo, interval.hi
    k_min = math.floor(lo - x) - pad
    k_max = math.ceil(hi - x) + pad
    count = 0
    for k in range(k_min, k_max + 1):
        z = x + k
        if lo < z < hi:
            count += 1
        elif z == lo and lo == hi:
            count += 1  # singleton, necessarily closed-closed
        elif z == lo and interval.lo_kind is CLOSED and lo != hi:
            count += 1
        elif z == hi and interval.hi_kind is CLOSED and lo != hi:
            count += 1
    return count
