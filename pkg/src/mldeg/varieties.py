"""Geometric constructions over the ideal engine.

Jacobians and minors, projective closure, dual varieties via conormal
elimination, hypersurface multiplicity at a point, Milnor sums of plane
curves, inverse linear spaces of symmetric matrices, and the smoothness
preflight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import RingMismatchError, UnsupportedInputError
from .groebner import (
    GroebnerBasis,
    HilbertData,
    Ideal,
    NotZeroDimensionalError,
    eliminate,
    groebner_basis,
    hilbert_data,
    ideal,
    ideal_quotient,
    intersect,
    is_zero_dimensional,
    quotient_by_ideal,
    saturate,
    saturate_by_ideal,
    zero_dim_count,
)
from .poly import (
    Exponent,
    Polynomial,
    Ring,
    Scalar,
    dehomogenize,
    fresh_name,
    gradient,
    homogenize,
    is_homogeneous,
    lift,
    squarefree_part,
)

# ---------------------------------------------------------------------------
# Polynomial matrices and minors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyMatrix:
    """A rectangular matrix of polynomials over one common ring."""

    ring: Ring
    rows: tuple[tuple[Polynomial, ...], ...]
    row_labels: tuple[str, ...]
    ncols: int

    def __post_init__(self):
        if len(self.row_labels) != len(self.rows):
            raise ValueError("need one label per row")
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")
            for p in row:
                if p.ring != self.ring:
                    raise RingMismatchError("matrix entry outside the matrix ring")

    @property
    def nrows(self) -> int:
        return len(self.rows)


def matrix(ring: Sequence[str], rows: Sequence[Sequence[Polynomial]],
           labels: Optional[Sequence[str]] = None, ncols: Optional[int] = None) -> PolyMatrix:
    rows_t = tuple(tuple(r) for r in rows)
    if ncols is None:
        if not rows_t:
            raise ValueError("empty matrix needs an explicit column count")
        ncols = len(rows_t[0])
    if labels is None:
        labels = tuple(f"r{i}" for i in range(len(rows_t)))
    from .poly import check_ring

    return PolyMatrix(check_ring(ring), rows_t, tuple(labels), ncols)


def jacobian(gens: Sequence[Polynomial], ring: Optional[Sequence[str]] = None) -> PolyMatrix:
    """Row i is the gradient of gens[i]; ``ring`` is required when gens is empty."""
    if gens:
        ring = gens[0].ring
    elif ring is None:
        raise ValueError("jacobian of no polynomials needs an explicit ring")
    rows = tuple(gradient(g) for g in gens)
    labels = tuple(f"grad_g{i + 1}" for i in range(len(gens)))
    return matrix(ring, rows, labels, ncols=len(tuple(ring)))


def _det(M: PolyMatrix, rows: tuple[int, ...], cols: tuple[int, ...], memo: dict) -> Polynomial:
    """Determinant of a square submatrix by first-row expansion with memoization."""
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(rows) == 1:
        out = M.rows[rows[0]][cols[0]]
    else:
        r0 = rows[0]
        rest = rows[1:]
        out = Polynomial.zero(M.ring)
        for j, c in enumerate(cols):
            entry = M.rows[r0][c]
            if not entry:
                continue
            sub = _det(M, rest, cols[:j] + cols[j + 1:], memo)
            term = entry * sub
            out = out + term if j % 2 == 0 else out - term
    memo[key] = out
    return out


def minors(M: PolyMatrix, k: int) -> list[Polynomial]:
    """All k x k minors, enumerated lexicographically over row/column index sets."""
    from itertools import combinations

    if k < 1 or k > min(M.nrows, M.ncols):
        raise ValueError(f"minor size {k} out of range for a {M.nrows}x{M.ncols} matrix")
    memo: dict = {}
    out = []
    for rows in combinations(range(M.nrows), k):
        for cols in combinations(range(M.ncols), k):
            out.append(_det(M, rows, cols, memo))
    return out


def determinant(M: PolyMatrix) -> Polynomial:
    if M.nrows != M.ncols:
        raise ValueError("determinant needs a square matrix")
    return _det(M, tuple(range(M.nrows)), tuple(range(M.ncols)), {})


# ---------------------------------------------------------------------------
# Projective closure and linear coordinate changes
# ---------------------------------------------------------------------------


def projective_closure(I_affine: Ideal, t_name: str) -> Ideal:
    """Homogenize each generator with ``t_name`` and saturate by it."""
    if t_name in I_affine.ring:
        raise ValueError(f"homogenizing variable {t_name!r} collides with the ring")
    big = I_affine.ring + (t_name,)
    gens = [homogenize(g, t_name) for g in I_affine.generators]
    t = Polynomial.variable(big, len(big) - 1)
    return saturate(ideal(big, gens), t)


def apply_linear(f: Polynomial, columns: Sequence[Sequence[Scalar]]) -> Polynomial:
    """Substitute x := T x' where T has the given columns (images of basis
    vectors); the result lives in the same ring."""
    n = f.nvars()
    if len(columns) != n or any(len(c) != n for c in columns):
        raise ValueError("need a square coefficient matrix")
    images = []
    for k in range(n):
        row = {
            (0,) * i + (1,) + (0,) * (n - i - 1): Fraction(columns[i][k])
            for i in range(n)
            if Fraction(columns[i][k])
        }
        images.append(Polynomial(f.ring, row))
    return f.substitute(images)


def multiplicity_at(g: Polynomial, point: Sequence[Scalar]) -> int:
    """Multiplicity of the hypersurface V(g) at a projective point.

    Moves the point to [0:...:0:1] by an invertible linear change, sets the
    last coordinate to 1 and reads off the minimal total degree; 0 exactly
    when g does not vanish at the point.
    """
    if not is_homogeneous(g) or not g:
        raise ValueError("multiplicity needs a nonzero homogeneous polynomial")
    p = [Fraction(v) for v in point]
    n = g.nvars()
    if len(p) != n or not any(p):
        raise ValueError("the point must be a nonzero coordinate vector")
    j = max(i for i, v in enumerate(p) if v)
    columns: list[list[Fraction]] = []
    for i in range(n - 1):
        col = [Fraction(0)] * n
        col[i if i != j else n - 1] = Fraction(1)
        columns.append(col)
    columns.append(p)
    moved = apply_linear(g, columns)
    local = dehomogenize(moved, n - 1)
    return min(sum(e) for e in local.terms)


# ---------------------------------------------------------------------------
# Dual varieties via conormal elimination
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualVarietyResult:
    """Dual variety of a projective variety, in dual coordinates.

    ``defining_polynomial`` is squarefree; ``multiplicity_at_p`` refers to
    the distinguished point [0:...:0:1] of the dual space.
    """

    eliminant_ideal: Ideal
    is_hypersurface: bool
    defining_polynomial: Optional[Polynomial]
    degree: Optional[int]
    multiplicity_at_p: Optional[int]


def dual_variety(I: Ideal) -> DualVarietyResult:
    """Dual variety by conormal elimination.

    Requires a homogeneous ideal defining an irreducible variety (trusted).
    In the doubled ring, the ideal plus the (e+1)-minors of the Jacobian
    stacked with the row of dual variables is saturated by the full ideal
    of e-minors of the Jacobian and the original variables are eliminated.
    """
    if not I.homogeneous:
        raise UnsupportedInputError("dual varieties need a homogeneous ideal")
    if not I.generators:
        raise UnsupportedInputError("the dual of the whole projective space is empty")
    nvars = len(I.ring)
    hd = hilbert_data(I)
    e = (nvars - 1) - hd.dimension
    if e < 1:
        raise UnsupportedInputError("input ideal does not cut a proper subvariety")
    dual_names = []
    taken = set(I.ring)
    for i in range(nvars):
        name = fresh_name(f"y{i}", taken)
        taken.add(name)
        dual_names.append(name)
    big = I.ring + tuple(dual_names)
    gens_big = [lift(g, big) for g in I.generators]
    jac = jacobian(list(I.generators))
    jac_big = matrix(big, [[lift(p, big) for p in row] for row in jac.rows],
                     jac.row_labels, ncols=nvars)
    dual_row = tuple(Polynomial.variable(big, nvars + i) for i in range(nvars))
    stacked = matrix(big, list(jac_big.rows) + [dual_row],
                     list(jac_big.row_labels) + ["dual_coords"], ncols=nvars)
    conormal = ideal(big, gens_big + minors(stacked, e + 1))
    saturants = [m for m in minors(jac_big, e) if m]
    if not saturants:
        raise UnsupportedInputError("degenerate Jacobian: variety is singular everywhere")
    cleaned = saturate_by_ideal(conormal, saturants)
    elim = eliminate(cleaned, I.ring)
    gens = elim.generators
    if len(gens) == 1 and not gens[0].is_constant():
        g = squarefree_part(gens[0])
        degree = g.total_degree()
        point = [0] * nvars
        point[-1] = 1
        mult = multiplicity_at(g, point)
        return DualVarietyResult(elim, True, g, degree, mult)
    return DualVarietyResult(elim, False, None, None, None)


# ---------------------------------------------------------------------------
# Milnor sums of plane curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularityReport:
    """Per-chart Milnor-sum contributions of a reduced plane curve.

    The three standard charts partition the projective plane: (z != 0),
    (z = 0, y != 0) and (z = y = 0), so every singular point is counted in
    exactly one chart.
    """

    chart_contributions: tuple[int, int, int]
    total: int


def _chart_equation(F: Polynomial, one_idx: int) -> Polynomial:
    """Dehomogenize at one coordinate, keeping the other two variable names."""
    return dehomogenize(F, one_idx)


def _local_on_curve(f: Polynomial) -> Optional[Ideal]:
    """Component of the chart's critical ideal supported on the curve.

    Returns None when the chart has no critical points at all (smooth or
    empty chart); raises UnsupportedInputError on non-isolated singularities.
    """
    r2 = f.ring
    J = ideal(r2, [f.partial(0), f.partial(1)])
    if not J.generators:
        # f is constant in this chart: no curve points here
        return None
    away = saturate(J, f)
    K = quotient_by_ideal(J, away)
    gb = groebner_basis(K)
    if gb.is_unit():
        return None
    if not is_zero_dimensional(K):
        raise UnsupportedInputError(
            "the curve has non-isolated singularities (chart component is positive-dimensional)"
        )
    return K


def _certify_isolated(f: Polynomial) -> None:
    sing = ideal(f.ring, [f, f.partial(0), f.partial(1)])
    gb = groebner_basis(sing)
    if gb.is_unit():
        return
    if not is_zero_dimensional(sing):
        raise UnsupportedInputError(
            "the reduced curve has a positive-dimensional singular scheme"
        )


def _count(I: Optional[Ideal]) -> int:
    if I is None:
        return 0
    return zero_dim_count(I)


def milnor_sum_plane_curve(F: Polynomial) -> SingularityReport:
    """Sum of the Milnor numbers of the reduced curve defined by ``F``.

    ``F`` must be a nonzero homogeneous polynomial in three variables; it is
    replaced by its squarefree part.  Chart contributions are local lengths
    of the critical ideal components supported on the curve, restricted to
    each chart's partition cell by saturating away the excluded coordinate
    hyperplanes (inclusion-exclusion on counts).
    """
    if F.nvars() != 3:
        raise UnsupportedInputError("Milnor sums are only defined for plane curves")
    if not F or not is_homogeneous(F):
        raise UnsupportedInputError("need a nonzero homogeneous polynomial")
    Fred = squarefree_part(F)

    # chart z != 0: full affine chart
    f1 = _chart_equation(Fred, 2)
    _certify_isolated(f1)
    K1 = _local_on_curve(f1)
    c1 = _count(K1)

    # chart y = 1, cell z = 0: drop the points with z != 0
    f2 = _chart_equation(Fred, 1)  # ring (x, z); z is index 1
    _certify_isolated(f2)
    K2 = _local_on_curve(f2)
    if K2 is None:
        c2 = 0
    else:
        zvar = Polynomial.variable(K2.ring, 1)
        c2 = _count(K2) - _count(saturate(K2, zvar))

    # chart x = 1, cell y = z = 0: inclusion-exclusion on the two exclusions
    f3 = _chart_equation(Fred, 0)  # ring (y, z)
    _certify_isolated(f3)
    K3 = _local_on_curve(f3)
    if K3 is None:
        c3 = 0
    else:
        yvar = Polynomial.variable(K3.ring, 0)
        zvar = Polynomial.variable(K3.ring, 1)
        sy = saturate(K3, yvar)
        sz = saturate(K3, zvar)
        syz = saturate(sy, zvar)
        c3 = _count(K3) - _count(sy) - _count(sz) + _count(syz)

    return SingularityReport((c1, c2, c3), c1 + c2 + c3)


# ---------------------------------------------------------------------------
# Inverse linear spaces of symmetric matrices
# ---------------------------------------------------------------------------


def entry_ring(n: int) -> Ring:
    """Upper-triangle coordinate names x11, x12, ..., xnn (row-major)."""
    if n >= 10:
        return tuple(f"x{i + 1}_{j + 1}" for i in range(n) for j in range(i, n))
    return tuple(f"x{i + 1}{j + 1}" for i in range(n) for j in range(i, n))


def _entry_positions(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def _validate_symmetric_basis(basis) -> tuple[int, list[list[list[Fraction]]]]:
    mats = []
    n = None
    for A in basis:
        rows = [[Fraction(x) for x in row] for row in A]
        if n is None:
            n = len(rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise UnsupportedInputError("basis matrices must be square of equal size")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise UnsupportedInputError("basis matrices must be symmetric")
        mats.append(rows)
    if not mats:
        raise UnsupportedInputError("need at least one basis matrix")
    return n, mats


def _rational_rank(rows: list[list[Fraction]]) -> int:
    m = [row[:] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col] / pv
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def symmetric_matrix_of_vars(ring: Sequence[str], n: int) -> PolyMatrix:
    """The symbolic symmetric n x n matrix in the given entry coordinates."""
    ring = tuple(ring)
    pos = _entry_positions(n)
    if len(ring) != len(pos):
        raise ValueError("entry ring size does not match the matrix size")
    index = {p: k for k, p in enumerate(pos)}
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            k = index[(i, j) if i <= j else (j, i)]
            row.append(Polynomial.variable(ring, k))
        rows.append(row)
    return matrix(ring, rows, [f"row{i + 1}" for i in range(n)], ncols=n)


def _adjugate_entries(M: PolyMatrix) -> list[list[Polynomial]]:
    n = M.nrows
    memo: dict = {}
    adj = [[None] * n for _ in range(n)]
    all_rows = tuple(range(n))
    for i in range(n):
        for j in range(n):
            rows = tuple(r for r in all_rows if r != j)
            cols = tuple(c for c in all_rows if c != i)
            minor = _det(M, rows, cols, memo)
            adj[i][j] = minor if (i + j) % 2 == 0 else -minor
    return adj


def inverse_variety(basis: Sequence[Sequence[Sequence[Scalar]]]) -> Ideal:
    """Ideal of the closure of the inverses of invertible matrices in the span.

    In parameters s_1..s_r and entry coordinates, the entry vector of the
    unknown matrix is forced to be proportional to the adjugate entry vector
    of the span's general element (2x2 minors of the stacked 2-row matrix);
    the result is saturated by the ideal of adjugate entries and the
    parameters are eliminated.
    """
    n, mats = _validate_symmetric_basis(basis)
    r = len(mats)
    pos = _entry_positions(n)
    flat = [[m[i][j] for (i, j) in pos] for m in mats]
    if _rational_rank(flat) != r:
        raise UnsupportedInputError("basis matrices are linearly dependent")
    s_names = tuple(f"s{k + 1}" for k in range(r))
    e_names = entry_ring(n)
    ring = s_names + e_names
    span_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = {}
            for k in range(r):
                c = mats[k][i][j]
                if c:
                    exp = [0] * len(ring)
                    exp[k] = 1
                    terms[tuple(exp)] = c
            row.append(Polynomial(ring, terms))
        span_rows.append(row)
    M = matrix(ring, span_rows, [f"row{i + 1}" for i in range(n)], ncols=n)
    if not determinant(M):
        raise UnsupportedInputError("the determinant vanishes identically on the span")
    adj = _adjugate_entries(M)
    w = [adj[i][j] for (i, j) in pos]
    v = [Polynomial.variable(ring, r + k) for k in range(len(pos))]
    props = []
    for a in range(len(pos)):
        for b in range(a + 1, len(pos)):
            p = v[a] * w[b] - v[b] * w[a]
            if p:
                props.append(p)
    nonzero_adj = [p for p in w if p]
    if not nonzero_adj:
        raise UnsupportedInputError("the adjugate vanishes identically on the span")
    cleaned = saturate_by_ideal(ideal(ring, props), nonzero_adj)
    return eliminate(cleaned, s_names)


# ---------------------------------------------------------------------------
# Smoothness preflight
# ---------------------------------------------------------------------------


def smoothness_check(I: Ideal, F: Polynomial) -> bool:
    """True iff the singular locus of V(I) is contained in V(F).

    Uses the Jacobian criterion at the computed codimension and saturates
    the singular-scheme ideal by F; the empty saturation certifies
    smoothness away from V(F).
    """
    if F.ring != I.ring:
        raise RingMismatchError("F lives outside the ideal's ring")
    if not I.generators:
        return True
    nvars = len(I.ring)
    hd = hilbert_data(I)
    c = (nvars - 1) - hd.dimension
    if c <= 0:
        return True
    jac = jacobian(list(I.generators))
    sing = ideal(I.ring, list(I.generators) + minors(jac, c))
    return groebner_basis(saturate(sing, F)).is_unit()
