"""Weight enumerators of board tilings by arithmetic-progression tiles.

A gap-r tile is a horizontal shift of {1}, {1, 1+r}, {1, 1+r, 1+2r}, ...
A tiling of the board {1..n} is a partition of the board into such tiles.
Giving a tile of size k the weight x_k, the weight of a tiling is the
product of its tile weights, and the enumerator collects all tilings:

    poly(r, n) = sum over tilings T of prod_{t in T} x_{#t}

Monomials are keyed by the frequency vector (a_1, a_2, ...) of an integer
partition of n, trailing zeros trimmed, so x1^3 x2 is (3, 1).  For example

    tiling_polynomial(1, 2).terms == {(2,): 1, (0, 1): 1}     # x1^2 + x2

Every gap-r tile lives inside one residue class of {1..n} mod r, where it
is an interval, so the enumerator factors into a product of r interval
enumerators.  That factorization is the production path; a direct
position-by-position scan of the board is kept as an independent
cross-check.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb


def partition_weight(freqs: tuple) -> int:
    """The integer that a frequency vector partitions: sum of i * a_i."""
    return sum(i * a for i, a in enumerate(freqs, start=1))


def trim(freqs) -> tuple:
    """Canonical monomial key: tuple with trailing zeros removed."""
    f = list(freqs)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


@dataclass
class TilingPolynomial:
    """Sparse weight enumerator: monomial frequency vector -> tiling count."""

    gap: int
    board_size: int
    terms: dict

    def total_tilings(self) -> int:
        """Value at x_i := 1 for all i."""
        return sum(self.terms.values())


@dataclass
class RunProfile:
    """Tiling counts aggregated by (m, c) = (tiles, non-singleton tiles)."""

    gap: int
    board_size: int
    counts: dict


def _bump(freqs: tuple, size: int) -> tuple:
    f = list(freqs)
    if len(f) < size:
        f.extend([0] * (size - len(f)))
    f[size - 1] += 1
    return tuple(f)


@lru_cache(maxsize=None)
def _interval_terms(length: int) -> dict:
    """Gap-1 enumerator of an interval board, i.e. compositions of `length`
    collected by part multiset.  Dynamic programming on the last tile."""
    if length == 0:
        return {(): 1}
    out = {}
    for size in range(1, length + 1):
        for mono, count in _interval_terms(length - size).items():
            key = _bump(mono, size)
            out[key] = out.get(key, 0) + count
    return out


def _multiply(p: dict, q: dict) -> dict:
    out = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            # the longer vector's tail is already nonzero, so no re-trim needed
            head = tuple(a + b for a, b in zip(ma, mb))
            key = head + (ma[len(mb):] if len(ma) > len(mb) else mb[len(ma):])
            out[key] = out.get(key, 0) + ca * cb
    return out


def _class_sizes(gap: int, n: int) -> list:
    """Sizes of the residue classes of {1..n} mod gap (nonempty ones only)."""
    return [(n - j) // gap + 1 for j in range(1, min(gap, n) + 1)]


@lru_cache(maxsize=None)
def _tiling_terms(gap: int, n: int) -> dict:
    """Shared, cached term dict for tiling_polynomial. Treat as read-only."""
    poly = {(): 1}
    for size in _class_sizes(gap, n):
        poly = _multiply(poly, _interval_terms(size))
    return poly


def tiling_polynomial(r: int, n: int) -> TilingPolynomial:
    """Weight enumerator of gap-r tilings of {1..n} (residue factorization)."""
    if r < 1:
        raise ValueError("gap must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    return TilingPolynomial(r, n, dict(_tiling_terms(r, n)))


def tiling_polynomial_direct(r: int, n: int) -> TilingPolynomial:
    """Same enumerator by a direct scan over board positions.

    State: per residue class, the size of the still-open tile.  At each
    position the open tile of that class either grows or is closed (scoring
    its weight) and a new one starts.  Exponentially many states in r, so
    this is the cross-check, not the production path.
    """
    if r < 1:
        raise ValueError("gap must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    states = {(0,) * r: {(): 1}}
    for p in range(1, n + 1):
        cls = (p - 1) % r
        new = {}
        for state, poly in states.items():
            open_len = state[cls]
            grown = state[:cls] + (open_len + 1,) + state[cls + 1:]
            tgt = new.setdefault(grown, {})
            for mono, c in poly.items():
                tgt[mono] = tgt.get(mono, 0) + c
            if open_len > 0:
                restart = state[:cls] + (1,) + state[cls + 1:]
                tgt = new.setdefault(restart, {})
                for mono, c in poly.items():
                    key = _bump(mono, open_len)
                    tgt[key] = tgt.get(key, 0) + c
        states = new
    out = {}
    for state, poly in states.items():
        for mono, c in poly.items():
            key = mono
            for open_len in state:
                if open_len:
                    key = _bump(key, open_len)
            out[key] = out.get(key, 0) + c
    return TilingPolynomial(r, n, out)


def coefficient(r: int, n: int, freqs) -> int:
    """Count of gap-r tilings of {1..n} whose weight monomial is `freqs`.

    Zero when the monomial never occurs; `freqs` must be a partition of n.
    """
    key = trim(freqs)
    if partition_weight(key) != n:
        raise ValueError(f"{tuple(freqs)} is not a partition of {n}")
    return _tiling_terms(r, n).get(key, 0)


def _interval_profile(length: int) -> dict:
    """(m, c) profile of an interval: compositions of `length` with m parts,
    c of them >= 2.  Positions of the big parts give binomial(m, c), and the
    big parts themselves are a composition of length-(m-c) into c parts >= 2."""
    if length == 0:
        return {(0, 0): 1}
    out = {(length, 0): 1}
    for m in range(1, length):
        for c in range(1, m + 1):
            ways = comb(m, c) * comb(length - m - 1, c - 1)
            if ways:
                out[(m, c)] = ways
    return out


@lru_cache(maxsize=None)
def _profile_counts(gap: int, n: int) -> dict:
    counts = {(0, 0): 1}
    for size in _class_sizes(gap, n):
        step = _interval_profile(size)
        new = {}
        for (m1, c1), v1 in counts.items():
            for (m2, c2), v2 in step.items():
                key = (m1 + m2, c1 + c2)
                new[key] = new.get(key, 0) + v1 * v2
        counts = new
    return counts


def run_profile(s: int, n: int) -> RunProfile:
    """Gap-s tiling counts of {1..n} grouped by (tiles, non-singleton tiles).

    Agrees with aggregating tiling_polynomial(s, n) by
    (sum a_i, sum_{i>=2} a_i), but is computed directly from per-class
    binomials so it stays cheap for large n.
    """
    if s < 1:
        raise ValueError("gap must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    return RunProfile(s, n, dict(_profile_counts(s, n)))


def format_polynomial(poly: TilingPolynomial) -> str:
    """One term per line, "count * x1^a1 x2^a2 ...", sorted by descending
    a_1 then lexicographically.  Stable format for golden-file comparisons."""
    lines = []
    for mono in sorted(poly.terms, key=lambda m: (-(m[0] if m else 0), m)):
        factors = " ".join(
            f"x{i}^{a}" for i, a in enumerate(mono, start=1) if a
        )
        lines.append(f"{poly.terms[mono]} * {factors or '1'}")
    return "\n".join(lines)
