"""Integer homology invariants and mod-p hypothesis gates.

A first-homology presentation is an integer matrix with rows as relations
and columns as generators; the group presented is the cokernel Z^cols /
(row space).  Smith normal form gives the elementary divisors and free
rank, from which every mod-p dimension follows.  On top sit the small rank
formulas for nilpotent quotients and elementary abelian covers, and the
gate that decides whether a manifold's homology certifies a k-free
fundamental group.

All arithmetic is exact (Python integers); pivoting picks the smallest
nonzero magnitude to keep coefficient growth tame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

__all__ = [
    "ElementaryDivisors",
    "GateResult",
    "PresentationInput",
    "SmithDecomposition",
    "cover_rank_bound",
    "elementary_divisors",
    "emit_matrix_text",
    "fill_slope",
    "hypothesis_gate",
    "mod_p_dim",
    "mod_p_rank",
    "nilpotent_quotient_dim",
    "parse_matrix_text",
    "smith_normal_form",
]


def _as_int_rows(matrix) -> list[list[int]]:
    rows = [[int(entry) for entry in row] for row in matrix]
    if rows:
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("matrix rows have inconsistent lengths")
    return rows


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class ElementaryDivisors:
    """Nonzero diagonal invariants d1 | d2 | ... and the cokernel free rank."""

    divisors: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        if any(d <= 0 for d in self.divisors):
            raise ValueError(f"divisors must be positive, got {self.divisors}")
        for a, b in zip(self.divisors, self.divisors[1:]):
            if b % a != 0:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")
        if self.free_rank < 0:
            raise ValueError(f"free rank must be nonnegative, got {self.free_rank}")


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V = D with U, V unimodular and D diagonal (as nested lists)."""

    transform_rows: list[list[int]]
    diagonal: list[list[int]]
    transform_cols: list[list[int]]
    invariants: ElementaryDivisors


def _find_pivot(d, start):
    best = None
    for i in range(start, len(d)):
        for j in range(start, len(d[0])):
            entry = d[i][j]
            if entry != 0 and (best is None or abs(entry) < abs(d[best[0]][best[1]])):
                best = (i, j)
    return best


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, src, dst, factor):
    m[dst] = [a + factor * b for a, b in zip(m[dst], m[src])]


def _add_col(m, src, dst, factor):
    for row in m:
        row[dst] += factor * row[src]


def smith_normal_form(matrix) -> SmithDecomposition:
    """Diagonalize an integer matrix with unimodular row/column transforms.

    Empty matrices (zero rows or zero columns) are legal and produce empty
    divisor lists.
    """
    d = _as_int_rows(matrix)
    rows = len(d)
    cols = len(d[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)
    t = 0
    while t < min(rows, cols):
        pivot = _find_pivot(d, t)
        if pivot is None:
            break
        while True:
            _swap_rows(d, t, pivot[0])
            _swap_rows(u, t, pivot[0])
            _swap_cols(d, t, pivot[1])
            _swap_cols(v, t, pivot[1])
            # Reduce against the current global-minimum pivot.  Every
            # nonzero remainder is strictly smaller in magnitude than the
            # pivot, so re-picking after each round both forces termination
            # and keeps the quotients (hence coefficient growth) small.
            reduced = False
            for i in range(t + 1, rows):
                if d[i][t] % d[t][t] != 0:
                    q = d[i][t] // d[t][t]
                    _add_row(d, t, i, -q)
                    _add_row(u, t, i, -q)
                    reduced = True
            for j in range(t + 1, cols):
                if d[t][j] % d[t][t] != 0:
                    q = d[t][j] // d[t][t]
                    _add_col(d, t, j, -q)
                    _add_col(v, t, j, -q)
                    reduced = True
            if reduced:
                pivot = _find_pivot(d, t)
                continue
            # The pivot row and column hold exact multiples: clear them.
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    _add_row(d, t, i, -q)
                    _add_row(u, t, i, -q)
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    _add_col(d, t, j, -q)
                    _add_col(v, t, j, -q)
            # Enforce the divisibility chain: fold an offending row into
            # the pivot row; the next reduction round then shrinks the
            # pivot below its current magnitude.
            offender = None
            for i in range(t + 1, rows):
                if any(d[i][j] % d[t][t] != 0 for j in range(t + 1, cols)):
                    offender = i
                    break
            if offender is None:
                break
            _add_row(d, offender, t, 1)
            _add_row(u, offender, t, 1)
            pivot = (t, t)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    divisors = tuple(d[i][i] for i in range(min(rows, cols)) if d[i][i] != 0)
    invariants = ElementaryDivisors(divisors=divisors, free_rank=cols - len(divisors))
    return SmithDecomposition(transform_rows=u, diagonal=d, transform_cols=v, invariants=invariants)


def elementary_divisors(matrix) -> ElementaryDivisors:
    return smith_normal_form(matrix).invariants


def _require_prime(p: int):
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"modulus must be a prime integer, got {p}")
    if p in (2, 3):
        return
    if p % 2 == 0 or p % 3 == 0:
        raise ValueError(f"modulus must be prime, got {p}")
    f = 5
    while f * f <= p:
        if p % f == 0 or p % (f + 2) == 0:
            raise ValueError(f"modulus must be prime, got {p}")
        f += 6


def mod_p_dim(invariants: ElementaryDivisors, p: int) -> int:
    """dim over Z_p of (cokernel) = free rank + #{divisors divisible by p}."""
    _require_prime(p)
    return invariants.free_rank + sum(1 for d in invariants.divisors if d % p == 0)


def mod_p_rank(matrix, p: int) -> int:
    """Rank of the matrix over Z_p by plain Gaussian elimination.

    Independent of smith_normal_form; the mod-p dimension of the cokernel
    is cols - mod_p_rank, which the certification compares against
    mod_p_dim on random matrices.
    """
    _require_prime(p)
    work = [[entry % p for entry in row] for row in _as_int_rows(matrix)]
    rank = 0
    cols = len(work[0]) if work else 0
    for col in range(cols):
        pivot_row = next((i for i in range(rank, len(work)) if work[i][col] % p != 0), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inv = pow(work[rank][col], -1, p)
        work[rank] = [(inv * entry) % p for entry in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col] % p != 0:
                factor = work[i][col]
                work[i] = [(a - factor * b) % p for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def fill_slope(matrix, lambda_class: Sequence[int], mu_class: Sequence[int], a: int, b: int):
    """Append the filling relation a*lambda + b*mu as a new row.

    (a, b) must be a primitive slope: gcd(a, b) = 1.
    """
    rows = _as_int_rows(matrix)
    cols = len(rows[0]) if rows else len(lambda_class)
    lam = [int(x) for x in lambda_class]
    mu = [int(x) for x in mu_class]
    if len(lam) != cols or len(mu) != cols:
        raise ValueError(f"peripheral classes must have length {cols}, got {len(lam)} and {len(mu)}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"slope ({a}, {b}) is not primitive")
    return rows + [[a * x + b * y for x, y in zip(lam, mu)]]


def nilpotent_quotient_dim(rank: int, cup_rank: int) -> int:
    """Dimension r (r + 1)/2 - t of the mod-2 nilpotent quotient step."""
    if rank < 0 or cup_rank < 0:
        raise ValueError(f"rank and cup rank must be nonnegative, got {rank}, {cup_rank}")
    if cup_rank > rank * (rank + 1) // 2:
        raise ValueError(f"cup rank {cup_rank} exceeds r(r+1)/2 = {rank * (rank + 1) // 2}")
    return rank * (rank + 1) // 2 - cup_rank


def cover_rank_bound(rank: int, cup_rank: int, exponent: int) -> int:
    """Homology rank bound (m+1) r - m (m+1)/2 - t of an (Z_2)^m cover."""
    if not 0 <= exponent <= rank:
        raise ValueError(f"exponent must lie in [0, rank], got {exponent}")
    if cup_rank < 0:
        raise ValueError(f"cup rank must be nonnegative, got {cup_rank}")
    return (exponent + 1) * rank - exponent * (exponent + 1) // 2 - cup_rank


class GateResult(str, Enum):
    A_SATISFIED = "A_SATISFIED"
    B_SATISFIED = "B_SATISFIED"
    BOTH = "BOTH"
    NEITHER = "NEITHER"
    B_UNKNOWN = "B_UNKNOWN"


def hypothesis_gate(mod_p_dims: Mapping[int, int], k: int, cup_rank: int | None = None) -> GateResult:
    """Decide the k-freeness homology gate.

    Condition A holds when some prime p has mod-p dimension >= k + 2.
    Condition B holds when the mod-2 dimension is >= k + 1 and the cup
    rank is at most k - 2; without a supplied cup rank, a qualifying mod-2
    dimension reports B_UNKNOWN (unless A already decides).
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k}")
    for p, dim in mod_p_dims.items():
        _require_prime(p)
        if dim < 0:
            raise ValueError(f"mod-{p} dimension must be nonnegative, got {dim}")
    dim2 = mod_p_dims.get(2, 0)
    if cup_rank is not None:
        if cup_rank < 0:
            raise ValueError(f"cup rank must be nonnegative, got {cup_rank}")
        if 2 in mod_p_dims and cup_rank > dim2 * (dim2 + 1) // 2:
            raise ValueError(f"cup rank {cup_rank} exceeds dim(dim+1)/2 = {dim2 * (dim2 + 1) // 2}")
    condition_a = any(dim >= k + 2 for dim in mod_p_dims.values())
    b_dimension = dim2 >= k + 1
    if cup_rank is not None:
        condition_b = b_dimension and cup_rank <= k - 2
        if condition_a and condition_b:
            return GateResult.BOTH
        if condition_a:
            return GateResult.A_SATISFIED
        if condition_b:
            return GateResult.B_SATISFIED
        return GateResult.NEITHER
    if condition_a:
        return GateResult.A_SATISFIED
    if b_dimension:
        return GateResult.B_UNKNOWN
    return GateResult.NEITHER


@dataclass(frozen=True)
class PresentationInput:
    """Parsed matrix file: presentation matrix plus optional peripheral rows."""

    matrix: tuple
    lambda_class: tuple | None
    mu_class: tuple | None


def parse_matrix_text(text: str) -> PresentationInput:
    """Parse the matrix file format.

    Line 1: "rows cols"; then rows*cols integers in row-major order across
    any number of lines; optional trailing lines "lambda: v1 ... v_cols"
    and "mu: v1 ... v_cols".
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ValueError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"first line must be 'rows cols', got {lines[0]!r}")
    rows, cols = (int(x) for x in header)
    if rows < 0 or cols <= 0:
        raise ValueError(f"need rows >= 0 and cols >= 1, got {rows} x {cols}")
    entries: list[int] = []
    peripherals: dict[str, tuple] = {}
    for line in lines[1:]:
        lowered = line.lower()
        if lowered.startswith("lambda:") or lowered.startswith("mu:"):
            key, _, rest = line.partition(":")
            values = tuple(int(tok) for tok in rest.split())
            if len(values) != cols:
                raise ValueError(f"{key} row must have {cols} entries, got {len(values)}")
            peripherals[key.strip().lower()] = values
        else:
            if peripherals:
                raise ValueError("matrix entries found after peripheral rows")
            entries.extend(int(tok) for tok in line.split())
    if len(entries) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
    matrix = tuple(tuple(entries[i * cols : (i + 1) * cols]) for i in range(rows))
    return PresentationInput(
        matrix=matrix,
        lambda_class=peripherals.get("lambda"),
        mu_class=peripherals.get("mu"),
    )


def emit_matrix_text(matrix, lambda_class=None, mu_class=None) -> str:
    rows = _as_int_rows(matrix)
    cols = len(rows[0]) if rows else (len(lambda_class) if lambda_class else 0)
    lines = [f"{len(rows)} {cols}"]
    lines.extend(" ".join(str(entry) for entry in row) for row in rows)
    if lambda_class is not None:
        lines.append("lambda: " + " ".join(str(int(x)) for x in lambda_class))
    if mu_class is not None:
        lines.append("mu: " + " ".join(str(int(x)) for x in mu_class))
    return "\n".join(lines) + "\n"
