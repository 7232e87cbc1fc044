"""Fitting and checking linear recurrences with polynomial coefficients.

An operator of order rho and degree d is a list of rho + 1 integer
polynomials p_0 .. p_rho (constant term first) asserting

    p_0(n) t(n) + p_1(n) t(n-1) + ... + p_rho(n) t(n-rho) = 0

for every applicable n.  Fitting is plain undetermined coefficients: set up
the exact rational linear system over a window of known terms, compute its
nullspace by Gaussian elimination over Fraction, and accept only a
one-dimensional nullspace that also annihilates a held-out tail.  Floating
point is never used; a spurious approximate nullspace would defeat the
whole point.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm


@dataclass
class TermTable:
    """A run of consecutive sequence values t(offset), t(offset+1), ..."""

    offset: int
    values: list

    def __post_init__(self):
        if not self.values:
            raise ValueError("TermTable must hold at least one value")

    @property
    def last(self) -> int:
        return self.offset + len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not self.offset <= n <= self.last:
            raise IndexError(f"index {n} outside {self.offset}..{self.last}")
        return self.values[n - self.offset]


class InsufficientTermsError(ValueError):
    """fit() was given fewer terms than the data bound requires."""


class UnderdeterminedError(ValueError):
    """The fit nullspace has dimension > 1; no single operator is certified."""

    def __init__(self, dimension: int):
        self.dimension = dimension
        super().__init__(f"underdetermined: nullspace has dimension {dimension}")


class SingularLeadingTermError(ArithmeticError):
    """extend() hit p_0(n) = 0 at an index it must produce."""


class InexactStepError(ArithmeticError):
    """extend() produced a non-integer value: wrong operator or wrong seeds."""


def poly_eval(coeffs, n: int) -> int:
    total = 0
    for c in reversed(coeffs):
        total = total * n + c
    return total


def _trim(coeffs) -> list:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


@dataclass
class RecurrenceOperator:
    """Coefficients p_0 .. p_order, each a constant-first integer list,
    normalized to integer content 1 with the leading coefficient of p_0
    positive so operator equality is a plain comparison."""

    coeffs: list = field(default_factory=list)

    def __post_init__(self):
        self.coeffs = [_trim(p) for p in self.coeffs]
        if not self.coeffs or not self.coeffs[0]:
            raise ValueError("p_0 must not be identically zero")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max(len(p) - 1 for p in self.coeffs if p)

    def apply(self, terms: TermTable, n: int) -> int:
        """Value of sum_j p_j(n) t(n-j); zero whenever the operator holds."""
        return sum(poly_eval(p, n) * terms[n - j] for j, p in enumerate(self.coeffs))


def _nullspace(rows: list, ncols: int) -> list:
    """Basis of the exact rational nullspace of the given row system."""
    mat = [list(row) for row in rows]
    pivot_cols = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / Fraction(mat[r][col])
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivot_cols.append(col)
        r += 1
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivot_cols):
            vec[pc] = -mat[row_idx][fc]
        basis.append(vec)
    return basis


def _normalize(vec: list, order: int, degree: int) -> list:
    denom = lcm(*(f.denominator for f in vec))
    ints = [int(f * denom) for f in vec]
    content = gcd(*ints)
    if content:
        ints = [x // content for x in ints]
    coeffs = [ints[j * (degree + 1):(j + 1) * (degree + 1)] for j in range(order + 1)]
    lead = _trim(coeffs[0])
    if lead and lead[-1] < 0:
        coeffs = [[-c for c in p] for p in coeffs]
    return coeffs


def fit(terms: TermTable, order: int, degree: int, holdout: int = 5):
    """Fit a recurrence of the given order and degree to `terms`.

    Returns the unique normalized operator when the nullspace of the window
    system is one-dimensional and the operator also annihilates the final
    `holdout` values; returns None when no operator exists (or the candidate
    fails the holdout); raises UnderdeterminedError when more data is
    needed to single one out.
    """
    if order < 0 or degree < 0 or holdout < 0:
        raise ValueError("order, degree and holdout must be >= 0")
    n_values = len(terms.values)
    bound = (order + 1) * (degree + 1) + order + 1
    if n_values < bound + holdout:
        raise InsufficientTermsError(
            f"need at least (order+1)(degree+1)+order+1 = {bound} terms "
            f"plus holdout={holdout} (total {bound + holdout}); got {n_values}"
        )
    if all(v == 0 for v in terms.values):
        raise ValueError("degenerate input: all terms are zero")

    ncols = (order + 1) * (degree + 1)
    rows = []
    for n in range(terms.offset + order, terms.last + 1 - holdout):
        rows.append(
            [
                Fraction(n ** e * terms[n - j])
                for j in range(order + 1)
                for e in range(degree + 1)
            ]
        )
    basis = _nullspace(rows, ncols)
    if not basis:
        return None
    if len(basis) > 1:
        raise UnderdeterminedError(len(basis))
    coeffs = _normalize(basis[0], order, degree)
    if not _trim(coeffs[0]):
        return None  # p_0 vanished: not a usable operator
    op = RecurrenceOperator(coeffs)
    if verify(op, terms) is not None:
        return None  # holdout terms reject the candidate
    return op


def verify(op: RecurrenceOperator, terms: TermTable):
    """First index where the operator fails on `terms`, or None if it holds
    at every applicable index."""
    start = terms.offset + op.order
    if start > terms.last:
        raise ValueError(
            f"need at least {op.order + 1} consecutive terms to verify"
        )
    for n in range(start, terms.last + 1):
        if op.apply(terms, n) != 0:
            return n
    return None


def extend(op: RecurrenceOperator, seeds: TermTable, n_max: int) -> TermTable:
    """Terms up to index n_max produced by running the recurrence forward
    from `seeds`.  Division by p_0(n) must be exact at every step."""
    if len(seeds.values) < op.order:
        raise ValueError(f"seeds must cover at least order={op.order} terms")
    values = list(seeds.values)
    for n in range(seeds.last + 1, n_max + 1):
        p0 = poly_eval(op.coeffs[0], n)
        if p0 == 0:
            raise SingularLeadingTermError(f"p_0({n}) = 0; cannot solve for t({n})")
        acc = sum(
            poly_eval(op.coeffs[j], n) * values[n - j - seeds.offset]
            for j in range(1, op.order + 1)
        )
        q, rem = divmod(-acc, p0)
        if rem:
            raise InexactStepError(
                f"t({n}) is not an integer; operator and seeds are inconsistent"
            )
        values.append(q)
    return TermTable(seeds.offset, values)


def format_operator(op: RecurrenceOperator, offset: int = 1) -> str:
    """Stable text form: header "order degree offset", then one line of
    space-separated constant-first integers per coefficient polynomial."""
    lines = [f"{op.order} {op.degree} {offset}"]
    for p in op.coeffs:
        lines.append(" ".join(str(c) for c in (p or [0])))
    return "\n".join(lines) + "\n"


def parse_operator(text: str):
    """Inverse of format_operator; returns (operator, offset)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty operator text")
    try:
        order, _degree, offset = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad operator header {lines[0]!r}") from exc
    if len(lines) != order + 2:
        raise ValueError(f"expected {order + 1} coefficient lines, got {len(lines) - 1}")
    coeffs = [[int(x) for x in ln.split()] for ln in lines[1:]]
    return RecurrenceOperator(coeffs), offset
