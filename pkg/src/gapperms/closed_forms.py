"""Fast engines for the adjacent-entries family (position gap r = 1).

Navarrete's alternating sum and its second-order recurrence cover the
signed constraint for any value gap s; Riordan's fourth-order recurrence
and Robbins' double sum cover the classic count of permutations without
rising or falling successions (OEIS A002464); and a run-profile summation
covers both modes for every s in polynomial time.
"""

from functools import lru_cache
from math import comb, factorial

from . import oracle
from .specs import ABSOLUTE, SIGNED, SequenceSpec, check_mode
from .tilings import _profile_counts


def navarrete_sum(s: int, n: int) -> int:
    """Permutations of {1..n} with pi[i+1] - pi[i] != s everywhere:
    sum_{j=0}^{n-s} (-1)^j C(n-s, j) (n-j)!  for n >= s.

    For n < s no two values of {1..n} differ by s, so the count is n!.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < s:
        return factorial(n)
    return sum((-1) ** j * comb(n - s, j) * factorial(n - j) for j in range(n - s + 1))


@lru_cache(maxsize=None)
def _validated_seeds(s: int, upto: int) -> tuple:
    """Factorial seeds for n = 0..upto, checked against the brute-force oracle."""
    spec = SequenceSpec(1, s, SIGNED)
    seeds = []
    for n in range(upto + 1):
        seed = factorial(n)
        if n <= 7 and oracle.brute_count(spec, n) != seed:
            raise AssertionError(f"recurrence seed at n={n} (s={s}) disagrees with the oracle")
        seeds.append(seed)
    return tuple(seeds)


def navarrete_recurrence(s: int, n_max: int) -> list:
    """The same counts as navarrete_sum for n = 1..n_max, via
    a(n) = (n-1) a(n-1) + (n-s-1) a(n-2).

    The recurrence is applied from n = max(2, s+1); below that the theorem's
    n >= s precondition fails for s >= 2 and the seeds are the factorials
    (oracle-checked, not trusted blindly).
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    start = max(2, s + 1)
    seeds = _validated_seeds(s, min(start - 1, n_max))
    values = list(seeds)  # index n = 0..
    for n in range(start, n_max + 1):
        values.append((n - 1) * values[n - 1] + (n - s - 1) * values[n - 2])
    return values[1:n_max + 1]


@lru_cache(maxsize=None)
def _riordan_seeds() -> tuple:
    spec = SequenceSpec(1, 1, ABSOLUTE)
    return tuple(oracle.brute_count(spec, n) for n in range(1, 5))


def riordan_sequence(n_max: int) -> list:
    """Permutations of {1..n} without rising or falling successions,
    n = 1..n_max, via Riordan's recurrence
    b(n) = (n+1) b(n-1) - (n-2) b(n-2) - (n-5) b(n-3) + (n-3) b(n-4),
    seeded from the oracle for n <= 4.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    values = list(_riordan_seeds()[:n_max])
    for n in range(5, n_max + 1):
        b1, b2, b3, b4 = values[-1], values[-2], values[-3], values[-4]
        values.append((n + 1) * b1 - (n - 2) * b2 - (n - 5) * b3 + (n - 3) * b4)
    return values


def robbins(n: int) -> int:
    """Robbins' double sum for the no-successions count riordan_sequence
    produces.

    The i = 0 term is taken as n! (the empty inner sum would drop the
    no-constraint term and give wrong values, e.g. -22 instead of 2 at n=4).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = factorial(n)
    for i in range(1, n):
        inner = sum(
            comb(i - 1, i - c) * comb(n - i, c) * 2 ** c for c in range(1, i + 1)
        )
        total += (-1) ** i * factorial(n - i) * inner
    return total


def fast_r1(s: int, mode: str, n_max: int) -> list:
    """Adjacent-entries counts for value gap s, both modes, n = 1..n_max.

    For r = 1 the chosen forbidden differences chain into value runs that
    occupy consecutive positions, so a gap-s run profile of the value board
    determines everything: with g(m, c) tilings into m tiles (c of them
    runs), each tiling contributes (-1)^(n-m) m! block arrangements, times
    2^c run directions in absolute mode.  Polynomial time in n.
    """
    check_mode(mode)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    fact = [factorial(k) for k in range(n_max + 1)]
    absolute = mode == ABSOLUTE
    out = []
    for n in range(1, n_max + 1):
        total = 0
        for (m, c), g in _profile_counts(s, n).items():
            term = g * fact[m]
            if absolute:
                term <<= c
            total += term if (n - m) % 2 == 0 else -term
        out.append(total)
    return out
