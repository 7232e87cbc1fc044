"""Brute-force reference counts by exhaustive permutation enumeration.

Every faster engine in this package is validated against these functions.
They are deliberately plain: generate all n! permutations, test the
constraint, count.  A hard cap on n keeps accidental factorial blowups
from hanging a test run.
"""

from itertools import permutations

from .specs import ABSOLUTE, SIGNED, ExceptionSpec, SequenceSpec

DEFAULT_CAP = 11


class EnumerationCapError(ValueError):
    """Raised when a brute-force call would enumerate more than cap! permutations."""


def _check_cap(n: int, cap: int):
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise EnumerationCapError(
            f"n={n} exceeds the enumeration cap {cap}; "
            f"raise `cap` explicitly if you really want {n}! permutations"
        )


def _violations(pi: tuple, r: int, s: int, mode: str) -> int:
    count = 0
    for i in range(len(pi) - r):
        d = pi[i + r] - pi[i]
        if d == s or (mode == ABSOLUTE and d == -s):
            count += 1
    return count


def brute_count(spec: SequenceSpec, n: int, cap: int = DEFAULT_CAP) -> int:
    """Number of permutations of {1..n} with no forbidden difference.

    n = 0 counts the empty permutation as 1.
    """
    _check_cap(n, cap)
    r, s, mode = spec.r, spec.s, spec.mode
    total = 0
    for pi in permutations(range(1, n + 1)):
        ok = True
        for i in range(n - r):
            d = pi[i + r] - pi[i]
            if d == s or (mode == ABSOLUTE and d == -s):
                ok = False
                break
        if ok:
            total += 1
    return total


def violation_profile(spec: SequenceSpec, n: int, cap: int = DEFAULT_CAP) -> list:
    """Entry k = number of permutations with exactly k violating indices.

    Entry 0 equals brute_count; the entries sum to n!.
    """
    _check_cap(n, cap)
    profile = [0] * (max(n - spec.r, 0) + 1)
    for pi in permutations(range(1, n + 1)):
        profile[_violations(pi, spec.r, spec.s, spec.mode)] += 1
    return profile


def single_violation_at(spec: SequenceSpec, n: int, i: int, cap: int = DEFAULT_CAP) -> int:
    """Permutations with exactly one violation, located at index i."""
    _check_cap(n, cap)
    if not 1 <= i <= n - spec.r:
        raise ValueError(f"i must lie in 1..{n - spec.r}, got {i}")
    r, s, mode = spec.r, spec.s, spec.mode
    total = 0
    for pi in permutations(range(1, n + 1)):
        if _violations(pi, r, s, mode) != 1:
            continue
        d = pi[i - 1 + r] - pi[i - 1]
        if d == s or (mode == ABSOLUTE and d == -s):
            total += 1
    return total


def count_with_exceptions(ex: ExceptionSpec, endpoint_rule: str = None,
                          cap: int = DEFAULT_CAP) -> int:
    """Permutations of {1..n} obeying the (r=1, s=1) rule except at waived links.

    A link i (between positions i and i+1) is waived when i is in
    ex.positions, or when the value test against ex.values holds.  The value
    test is controlled by `endpoint_rule`:

      "left"  waive when pi[i] is in ex.values
      "pair"  waive when {pi[i], pi[i+1]} is {v, v+1} for some v in ex.values
      "both"  waive when pi[i] or pi[i+1] is in ex.values

    Signed mode defaults to "left" (which, at an ascending link, is the same
    as "pair"); absolute mode defaults to "pair".  The parameter exists so
    the competing conventions stay testable side by side.
    """
    _check_cap(ex.n, cap)
    if endpoint_rule is None:
        endpoint_rule = "left" if ex.mode == SIGNED else "pair"
    if endpoint_rule not in ("left", "pair", "both"):
        raise ValueError(
            f"endpoint_rule must be 'left', 'pair' or 'both', got {endpoint_rule!r}"
        )
    n, mode = ex.n, ex.mode
    positions, values = ex.positions, ex.values
    total = 0
    for pi in permutations(range(1, n + 1)):
        ok = True
        for i in range(1, n):
            d = pi[i] - pi[i - 1]
            if d != 1 and not (mode == ABSOLUTE and d == -1):
                continue
            if i in positions:
                continue
            if endpoint_rule == "left":
                waived = pi[i - 1] in values
            elif endpoint_rule == "pair":
                waived = min(pi[i - 1], pi[i]) in values
            else:
                waived = pi[i - 1] in values or pi[i] in values
            if waived:
                continue
            ok = False
            break
        if ok:
            total += 1
    return total
