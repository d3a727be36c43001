"""Maximum likelihood degree computations and their cross-checks.

The central quantity is the number of critical points, for a generic
integer covector eta, of log F(x) - eta(x) on the open cone over X where
F does not vanish.  Four routes to that number are implemented:

* method "a": rank conditions on the gradient of F stacked over the
  gradients of the defining equations (denominator-cleared first row
  grad F - F*eta), saturated by F;
* method "b": rank conditions on the stacked matrix with rows grad F,
  eta and the gradients, plus the affine slice eta(x) = deg F;
* method "dual": degree and multiplicity data of the dual variety of the
  projective closure of V(g_1, ..., g_k, F - 1);
* method "milnor": for plane curves, (d-1)^2 minus the sum of the Milnor
  numbers of the reduced curve.

A fifth evaluator ("chern") consumes a user-supplied intersection table
of a log resolution.  Front ends cover Gaussian ML degrees of linear
concentration models and discrete ML degrees.

Counting semantics: the degree (length) of the saturated critical ideal.
Genericity of the random draws is certified by agreement of two
independent draws, with seeded deterministic retries.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .errors import (
    GenericityError,
    InconsistencyError,
    NotZeroDimensionalError,
    UnsupportedInputError,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    _buchberger,
    _Engine,
    _gb_mod_p,
    _int_terms,
    _make_red,
    _minimal_monomials,
    _standard_bounds,
    _count_standard,
    count_from_basis,
    groebner_basis,
    hilbert_data,
    ideal,
    normal_form,
    saturate,
    zero_dim_count,
)
from .poly import (
    DEGREVLEX,
    MonomialOrder,
    Polynomial,
    Ring,
    Scalar,
    check_ring,
    fresh_name,
    gradient,
    homogeneity_degree,
    is_homogeneous,
    lift,
    parse_polynomial,
    squarefree_part,
)
from .varieties import (
    PolyMatrix,
    determinant,
    dual_variety,
    entry_ring,
    jacobian,
    matrix,
    milnor_sum_plane_curve,
    minors,
    projective_closure,
    smoothness_check,
    symmetric_matrix_of_vars,
)

METHODS = ("a", "b", "dual", "milnor", "chern")


# ---------------------------------------------------------------------------
# Problem specifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProblemSpec:
    """A full ML-degree computation request.

    ``ring`` carries the ambient cone coordinates; for the symmetric-matrix
    ambient, set ``symmetric_n`` and use upper-triangle entry coordinates
    (see :func:`mldeg.varieties.entry_ring`), in which case eta is drawn as
    a symmetric matrix S with eta(M) = tr(SM).
    """

    ring: Ring
    generators: tuple[Polynomial, ...]
    f: Polynomial
    methods: tuple[str, ...] = ("a", "b")
    seed: int = 0
    eta_bound: int = 1000
    retries: int = 5
    symmetric_n: Optional[int] = None
    chern_table: Optional["IntersectionTable"] = None
    check_smoothness: bool = False
    modular: bool = False
    codim: Optional[int] = None

    def __post_init__(self):
        check_ring(self.ring)
        if self.f.ring != self.ring:
            raise ValueError("F lives outside the problem ring")
        d = homogeneity_degree(self.f)
        if d is None or d < 1:
            raise UnsupportedInputError("F must be homogeneous of degree at least 1")
        for g in self.generators:
            if g.ring != self.ring:
                raise ValueError("a generator lives outside the problem ring")
            if not is_homogeneous(g):
                raise UnsupportedInputError("ideal generators must be homogeneous")
        for m in self.methods:
            if m not in METHODS:
                raise ValueError(f"unknown method {m!r}")
        if self.eta_bound < 1 or self.retries < 1:
            raise ValueError("eta_bound and retries must be positive")
        if self.symmetric_n is not None:
            expected = len(entry_ring(self.symmetric_n))
            if len(self.ring) != expected:
                raise ValueError("ring size does not match the symmetric ambient")

    @property
    def degree_f(self) -> int:
        return self.f.total_degree()


def problem(ring: Sequence[str], generators: Sequence[Polynomial], f: Polynomial,
            **kw) -> ProblemSpec:
    return ProblemSpec(tuple(ring), tuple(generators), f, **kw)


@dataclass(frozen=True)
class DiscreteSpec:
    """A discrete ML degree request for X inside projective space."""

    ring: Ring
    generators: tuple[Polynomial, ...]
    seed: int = 0
    u_bound: int = 50
    retries: int = 5

    def __post_init__(self):
        check_ring(self.ring)
        for g in self.generators:
            if g.ring != self.ring:
                raise ValueError("a generator lives outside the problem ring")
            if not is_homogeneous(g):
                raise UnsupportedInputError("ideal generators must be homogeneous")
        if self.u_bound < 1 or self.retries < 1:
            raise ValueError("u_bound and retries must be positive")


@dataclass(frozen=True)
class CurveData:
    """Inputs for the curve count: genus of the normalization, curve degree,
    and the fiber cardinalities over the points of C meeting V(F)."""

    genus: int
    degree: int
    branches: tuple[int, ...]

    def __post_init__(self):
        if self.genus < 0 or self.degree < 1:
            raise ValueError("need genus >= 0 and degree >= 1")
        if any(h < 1 for h in self.branches):
            raise ValueError("branch counts must be positive")


@dataclass(frozen=True)
class IntersectionTable:
    """Intersection data of a log resolution carrying the likelihood divisor.

    For surfaces (dim 2): pairwise products of the boundary divisors B_i
    (symmetric, with self-intersections on the diagonal), their products
    with the canonical class, and the topological Euler characteristic.
    For curves (dim 1): the degrees of the canonical class and of the B_i.
    """

    dim: int
    labels: tuple[str, ...] = ()
    pairings: tuple[tuple[int, ...], ...] = ()
    canonical_products: tuple[int, ...] = ()
    chi_top: Optional[int] = None
    canonical_degree: Optional[int] = None
    divisor_degrees: tuple[int, ...] = ()

    @staticmethod
    def surface(labels: Sequence[str], pairings: Sequence[Sequence[int]],
                canonical_products: Sequence[int], chi_top: int) -> "IntersectionTable":
        labels = tuple(labels)
        mat = tuple(tuple(int(x) for x in row) for row in pairings)
        r = len(labels)
        if len(mat) != r or any(len(row) != r for row in mat):
            raise ValueError("pairing matrix must be square over the labels")
        for i in range(r):
            for j in range(r):
                if mat[i][j] != mat[j][i]:
                    raise ValueError("pairing matrix must be symmetric")
        kp = tuple(int(x) for x in canonical_products)
        if len(kp) != r:
            raise ValueError("need one canonical product per divisor")
        return IntersectionTable(2, labels, mat, kp, int(chi_top), None, ())

    @staticmethod
    def curve(canonical_degree: int, divisor_degrees: Sequence[int]) -> "IntersectionTable":
        return IntersectionTable(1, (), (), (), None, int(canonical_degree),
                                 tuple(int(x) for x in divisor_degrees))


@dataclass(frozen=True)
class EtaVector:
    """A drawn covector: nonzero integer coefficients per cone coordinate.

    For the symmetric ambient, ``s_matrix`` holds the drawn symmetric S and
    ``entries`` are the induced coefficients of tr(SM) in entry coordinates
    (off-diagonal entries doubled).
    """

    entries: tuple[int, ...]
    seed: int
    attempt: int
    s_matrix: Optional[tuple[tuple[int, ...], ...]] = None

    def linear_form(self, ring: Ring) -> Polynomial:
        terms = {}
        n = len(ring)
        for i, c in enumerate(self.entries):
            exp = [0] * n
            exp[i] = 1
            terms[tuple(exp)] = Fraction(c)
        return Polynomial(ring, terms)


@dataclass(frozen=True)
class MethodResult:
    """Outcome of one method: the count, the draws used, and timing."""

    method: str
    count: Optional[int]
    status: str
    attempts: tuple[int, ...] = ()
    draws: tuple = ()
    wall_time: float = 0.0
    detail: tuple = ()


@dataclass(frozen=True)
class MldReport:
    """Cross-checked results of all requested methods."""

    results: tuple[MethodResult, ...]
    cross_check: tuple[tuple[str, str, bool], ...]
    final: Optional[int]
    disagreement: bool


# ---------------------------------------------------------------------------
# Random draws
# ---------------------------------------------------------------------------


def _rng(seed: int, attempt: int, channel: int) -> random.Random:
    # plain integer mixing keeps the stream deterministic across platforms
    return random.Random(seed * 1_000_003 + attempt * 8_191 + channel)


def _draw_nonzero(rng: random.Random, bound: int) -> int:
    while True:
        v = rng.randint(-bound, bound)
        if v:
            return v


def draw_eta(spec: ProblemSpec, attempt: int) -> EtaVector:
    """Deterministic function of (seed, attempt); entries are nonzero
    integers within the configured bound."""
    rng = _rng(spec.seed, attempt, 1)
    if spec.symmetric_n is None:
        entries = tuple(_draw_nonzero(rng, spec.eta_bound) for _ in spec.ring)
        return EtaVector(entries, spec.seed, attempt)
    n = spec.symmetric_n
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = _draw_nonzero(rng, spec.eta_bound)
            s[i][j] = v
            s[j][i] = v
    entries = []
    for i in range(n):
        for j in range(i, n):
            entries.append(s[i][j] if i == j else 2 * s[i][j])
    return EtaVector(tuple(entries), spec.seed, attempt,
                     tuple(tuple(row) for row in s))


def draw_u(dspec: DiscreteSpec, attempt: int) -> tuple[int, ...]:
    """Sampled positive exponent vector for the discrete likelihood."""
    rng = _rng(dspec.seed, attempt, 2)
    return tuple(rng.randint(1, dspec.u_bound) for _ in dspec.ring)


def _draw_prime(seed: int, attempt: int, channel: int) -> int:
    rng = _rng(seed, attempt, 100 + channel)
    while True:
        p = rng.randrange(1 << 30, 1 << 31) | 1
        if _is_prime(p):
            return p


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Critical ideals
# ---------------------------------------------------------------------------


def compute_codim(ring: Ring, generators: Sequence[Polynomial]) -> int:
    """Codimension of V(generators) in projective space, via Hilbert data."""
    n = len(ring) - 1
    if not generators:
        return 0
    hd = hilbert_data(ideal(ring, generators))
    if hd.dimension < 0:
        raise UnsupportedInputError("the ideal generators define an empty variety")
    return n - hd.dimension


def _checked_codim(spec: ProblemSpec) -> int:
    c = compute_codim(spec.ring, spec.generators)
    if spec.codim is not None and spec.codim != c:
        raise UnsupportedInputError(
            f"stated codimension {spec.codim} is inconsistent (computed {c})"
        )
    return c


def stacked_matrix_a(spec: ProblemSpec, eta: EtaVector) -> PolyMatrix:
    """Rows: the cleared gradient row grad F - F*eta, then the gradients."""
    ring = spec.ring
    eta_form = eta.linear_form(ring)
    F = spec.f
    first = tuple(F.partial(i) - F * Fraction(eta.entries[i]) for i in range(len(ring)))
    rows = [first] + [gradient(g) for g in spec.generators]
    labels = ["gradF_minus_F_eta"] + [f"grad_g{i + 1}" for i in range(len(spec.generators))]
    return matrix(ring, rows, labels, ncols=len(ring))


def stacked_matrix_b(spec: ProblemSpec, eta: EtaVector) -> PolyMatrix:
    """Rows: cleared grad F, the constant row eta, then the gradients."""
    ring = spec.ring
    F = spec.f
    first = gradient(F)
    eta_row = tuple(Polynomial.constant(ring, c) for c in eta.entries)
    rows = [first, eta_row] + [gradient(g) for g in spec.generators]
    labels = ["gradF", "eta"] + [f"grad_g{i + 1}" for i in range(len(spec.generators))]
    return matrix(ring, rows, labels, ncols=len(ring))


def _rank_minors(M: PolyMatrix, k: int) -> list[Polynomial]:
    # minors of size beyond the matrix contribute the zero ideal
    if k > min(M.nrows, M.ncols):
        return []
    return [m for m in minors(M, k) if m]


def _critical_gens(spec: ProblemSpec, eta: EtaVector, method: str):
    """Unsaturated critical ideal generators, the saturant F and the slice
    polynomial eta(x) - deg F (a known member of the saturated ideal)."""
    c = _checked_codim(spec)
    trace = eta.linear_form(spec.ring) - spec.degree_f
    if method == "a":
        gens = _rank_minors(stacked_matrix_a(spec, eta), c + 1)
        gens += list(spec.generators)
    elif method == "b":
        gens = _rank_minors(stacked_matrix_b(spec, eta), c + 2)
        gens += list(spec.generators)
        gens.append(trace)
    else:
        raise ValueError(f"no critical ideal for method {method!r}")
    return gens, spec.f, trace


def critical_ideal_a(spec: ProblemSpec, eta: EtaVector) -> Ideal:
    """The saturated critical ideal of method "a", in the cone coordinates."""
    gens, F, _ = _critical_gens(spec, eta, "a")
    return saturate(ideal(spec.ring, gens), F)


def critical_ideal_b(spec: ProblemSpec, eta: EtaVector) -> Ideal:
    """The saturated critical ideal of method "b", in the cone coordinates."""
    gens, F, _ = _critical_gens(spec, eta, "b")
    return saturate(ideal(spec.ring, gens), F)


# ---------------------------------------------------------------------------
# Fast counting of the saturated critical scheme
# ---------------------------------------------------------------------------


def _count_localized(ring: Ring, gens: Sequence[Polynomial], saturant: Polynomial,
                     members: Sequence[Polynomial], prime: Optional[int] = None) -> int:
    """Length of the saturation (gens : saturant^inf), with membership checks.

    Works in the extended ring with an inverse variable u and the relation
    u*saturant = 1, whose quotient is the localization at the saturant; a
    plain degrevlex basis there yields the count and normal forms directly.
    Each polynomial in ``members`` is required to reduce to zero (these are
    theorem-level consequences; failure raises InconsistencyError).
    """
    u = fresh_name("u", ring)
    big = ring + (u,)
    up = Polynomial.variable(big, len(ring))
    lifted = [lift(g, big) for g in gens]
    lifted.append(1 - up * lift(saturant, big))
    I = ideal(big, lifted)
    if prime is None:
        gb = groebner_basis(I)
        if gb.is_unit():
            return 0
        count = count_from_basis(gb)
        for m in members:
            if normal_form(lift(m, big), gb):
                raise InconsistencyError(
                    "a certified member of the critical ideal has nonzero normal form"
                )
        return count
    basis = _gb_mod_p(I, DEGREVLEX, prime)
    nvars = len(big)
    if len(basis) == 1 and not any(basis[0][0][0]):
        return 0
    lts = [t[0][0] for t in basis]
    bounds = [None] * nvars
    for e in lts:
        support = [i for i, x in enumerate(e) if x]
        if len(support) == 1 and (bounds[support[0]] is None or e[support[0]] < bounds[support[0]]):
            bounds[support[0]] = e[support[0]]
    for i, b in enumerate(bounds):
        if b is None:
            raise NotZeroDimensionalError(big[i])
    return _count_standard(_minimal_monomials(lts))


def _single_count(spec: ProblemSpec, eta: EtaVector, method: str) -> int:
    gens, F, trace = _critical_gens(spec, eta, method)
    if spec.modular:
        counts = []
        for channel in (0, 1):
            p = _draw_prime(spec.seed, eta.attempt, channel)
            counts.append(_count_localized(spec.ring, gens, F, (), prime=p))
        if counts[0] != counts[1]:
            raise NotZeroDimensionalError(spec.ring[0])  # unlucky prime: retry round
        return counts[0]
    return _count_localized(spec.ring, gens, F, (trace,))


def mld_count(spec: ProblemSpec, method: str) -> MethodResult:
    """Count critical points by method "a" or "b" with the double-draw policy.

    Two independent eta draws must be zero-dimensional and agree; dimension
    failures or disagreements trigger redraws, up to ``retries`` rounds.
    """
    if method not in ("a", "b"):
        raise ValueError("mld_count handles methods 'a' and 'b'")
    t0 = time.perf_counter()
    failures = []
    for round_idx in range(spec.retries):
        a0, a1 = 2 * round_idx, 2 * round_idx + 1
        eta0, eta1 = draw_eta(spec, a0), draw_eta(spec, a1)
        try:
            c0 = _single_count(spec, eta0, method)
            c1 = _single_count(spec, eta1, method)
        except NotZeroDimensionalError as exc:
            failures.append(f"round {round_idx}: {exc}")
            continue
        if c0 == c1:
            return MethodResult(
                method, c0, "ok", (a0, a1),
                (eta0.entries, eta1.entries),
                time.perf_counter() - t0,
            )
        failures.append(f"round {round_idx}: counts {c0} != {c1}")
    raise GenericityError(
        f"method {method!r} exhausted {spec.retries} redraw rounds: " + "; ".join(failures)
    )


# ---------------------------------------------------------------------------
# Dual-variety and Milnor methods
# ---------------------------------------------------------------------------


def mld_dual(spec: ProblemSpec) -> MethodResult:
    """Count via the dual variety of the projective closure of V(gens, F-1).

    Returns 0 when the dual is not a hypersurface; otherwise
    (degree - multiplicity at [0:...:0:1]) / deg F, asserting divisibility.
    """
    t0 = time.perf_counter()
    if spec.check_smoothness:
        if not smoothness_check(ideal(spec.ring, spec.generators), spec.f):
            raise UnsupportedInputError("X is singular away from V(F)")
    t_name = fresh_name("t", spec.ring)
    affine = ideal(spec.ring, list(spec.generators) + [spec.f - 1])
    closure = projective_closure(affine, t_name)
    dv = dual_variety(closure)
    if not dv.is_hypersurface:
        return MethodResult("dual", 0, "ok (dual is not a hypersurface)",
                            wall_time=time.perf_counter() - t0,
                            detail=(("hypersurface", False),))
    num = dv.degree - dv.multiplicity_at_p
    d = spec.degree_f
    if num % d:
        raise InconsistencyError(
            f"dual degree {dv.degree} minus multiplicity {dv.multiplicity_at_p} "
            f"is not divisible by deg F = {d}; a hypothesis is violated"
        )
    return MethodResult(
        "dual", num // d, "ok",
        wall_time=time.perf_counter() - t0,
        detail=(("hypersurface", True), ("dual_degree", dv.degree),
                ("multiplicity", dv.multiplicity_at_p),
                ("dual_polynomial", str(dv.defining_polynomial))),
    )


def mld_milnor(spec: ProblemSpec) -> MethodResult:
    """Plane-curve count: (d-1)^2 minus the Milnor sum of the reduced curve."""
    t0 = time.perf_counter()
    if len(spec.ring) != 3 or spec.generators:
        raise UnsupportedInputError(
            "the Milnor method needs a plane curve on the full projective plane"
        )
    report = milnor_sum_plane_curve(spec.f)
    d = squarefree_part(spec.f).total_degree()
    count = (d - 1) ** 2 - report.total
    return MethodResult(
        "milnor", count, "ok",
        wall_time=time.perf_counter() - t0,
        detail=(("reduced_degree", d), ("milnor_sum", report.total),
                ("chart_contributions", report.chart_contributions)),
    )


# ---------------------------------------------------------------------------
# Chern-coefficient evaluator and the curve formula
# ---------------------------------------------------------------------------


def chern_coefficient(table: IntersectionTable) -> int:
    """Degree of the top-z coefficient of c(Omega_Y) * prod (1 - z B_i)^-1.

    For surfaces: chi_top + sum K.B_i + sum B_i^2 + sum_{i<j} B_i.B_j.
    For curves: deg K + sum deg B_i.
    """
    if table.dim == 1:
        if table.canonical_degree is None:
            raise ValueError("curve tables need the canonical degree")
        return table.canonical_degree + sum(table.divisor_degrees)
    if table.dim == 2:
        r = len(table.labels)
        if table.chi_top is None or len(table.canonical_products) != r:
            raise ValueError("surface tables need chi_top and all canonical products")
        total = table.chi_top
        total += sum(table.canonical_products)
        total += sum(table.pairings[i][i] for i in range(r))
        total += sum(table.pairings[i][j] for i in range(r) for j in range(i + 1, r))
        return total
    raise ValueError("intersection tables support dim 1 and 2 only")


def mld_chern(spec: ProblemSpec) -> MethodResult:
    t0 = time.perf_counter()
    if spec.chern_table is None:
        raise UnsupportedInputError("the chern method needs an intersection table")
    value = chern_coefficient(spec.chern_table)
    return MethodResult("chern", value, "ok", wall_time=time.perf_counter() - t0)


def curve_formula_mld(data: CurveData) -> int:
    """Count for a curve from normalization data: -2 + 2g + d + sum h_i."""
    return -2 + 2 * data.genus + data.degree + sum(data.branches)


# ---------------------------------------------------------------------------
# Orchestration
# ---------------------------------------------------------------------------


def run_methods(spec: ProblemSpec) -> MldReport:
    """Run every requested method and assemble the cross-checked report."""
    dispatch = {
        "a": lambda: mld_count(spec, "a"),
        "b": lambda: mld_count(spec, "b"),
        "dual": lambda: mld_dual(spec),
        "milnor": lambda: mld_milnor(spec),
        "chern": lambda: mld_chern(spec),
    }
    results = tuple(dispatch[m]() for m in spec.methods)
    checks = []
    for i in range(len(results)):
        for j in range(i + 1, len(results)):
            a, b = results[i], results[j]
            if a.count is not None and b.count is not None:
                checks.append((a.method, b.method, a.count == b.count))
    counts = {r.count for r in results if r.count is not None}
    if len(counts) == 1:
        return MldReport(results, tuple(checks), counts.pop(), False)
    return MldReport(results, tuple(checks), None, True)


# ---------------------------------------------------------------------------
# Gaussian front end
# ---------------------------------------------------------------------------


def _span_polynomial(mats: Sequence[Sequence[Sequence[Fraction]]], ring: Ring) -> Polynomial:
    """det(sum_i x_i A_i) in span coordinates."""
    n = len(mats[0])
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = {}
            for k, A in enumerate(mats):
                c = Fraction(A[i][j])
                if c:
                    exp = [0] * len(ring)
                    exp[k] = 1
                    terms[tuple(exp)] = c
            row.append(Polynomial(ring, terms))
        rows.append(row)
    M = matrix(ring, rows, [f"row{i + 1}" for i in range(n)], ncols=n)
    return determinant(M)


def gaussian_mld(source: Union[Ideal, Sequence], methods: Sequence[str] = ("a", "b"),
                 seed: int = 0, **kw) -> MldReport:
    """Gaussian ML degree: the count for F = det on a subvariety of the
    projectivized symmetric matrices.

    ``source`` is either a basis of symmetric matrices spanning a linear
    space (computed in span coordinates, where restricting det loses
    nothing) or an :class:`Ideal` in upper-triangle entry coordinates of
    some symmetric size n, in which case eta is drawn as tr(SM).
    """
    if isinstance(source, Ideal):
        n = _symmetric_size(len(source.ring))
        M = symmetric_matrix_of_vars(source.ring, n)
        F = determinant(M)
        spec = ProblemSpec(source.ring, source.generators, F,
                           methods=tuple(methods), seed=seed, symmetric_n=n, **kw)
        return run_methods(spec)
    from .varieties import _validate_symmetric_basis, _rational_rank, _entry_positions

    n, mats = _validate_symmetric_basis(source)
    pos = _entry_positions(n)
    flat = [[m[i][j] for (i, j) in pos] for m in mats]
    if _rational_rank(flat) != len(mats):
        raise UnsupportedInputError("basis matrices are linearly dependent")
    r = len(mats)
    ring = tuple(f"x{k + 1}" for k in range(r))
    F = _span_polynomial(mats, ring)
    if not F:
        raise UnsupportedInputError("the determinant vanishes identically on the span")
    spec = ProblemSpec(ring, (), F, methods=tuple(methods), seed=seed, **kw)
    return run_methods(spec)


def _symmetric_size(ring_len: int) -> int:
    n = 1
    while n * (n + 1) // 2 < ring_len:
        n += 1
    if n * (n + 1) // 2 != ring_len:
        raise ValueError("ring size is not a triangular number n(n+1)/2")
    return n


# ---------------------------------------------------------------------------
# Discrete front end
# ---------------------------------------------------------------------------


def _discrete_count(dspec: DiscreteSpec, u: tuple[int, ...]) -> int:
    ring = dspec.ring
    n = len(ring)
    F = Polynomial(ring, {tuple(u): Fraction(1)})
    ones = EtaVector(tuple([1] * n), dspec.seed, 0)
    spec = ProblemSpec(ring, dspec.generators, F, methods=("a",), seed=dspec.seed)
    gens, _, trace = _critical_gens(spec, ones, "a")
    coords_product = Polynomial(ring, {tuple([1] * n): Fraction(1)})
    return _count_localized(ring, gens, coords_product, (trace,))


def discrete_mld(dspec: DiscreteSpec) -> MethodResult:
    """Discrete ML degree: critical points of prod x_i^{u_i} / (sum x_i)^{sum u}.

    The exponent vector u is sampled; the cleared critical ideal of method
    "a" at eta = (1, ..., 1) is saturated by the product of the coordinates.
    Two samples must agree, with the usual retry policy.
    """
    t0 = time.perf_counter()
    failures = []
    for round_idx in range(dspec.retries):
        a0, a1 = 2 * round_idx, 2 * round_idx + 1
        u0, u1 = draw_u(dspec, a0), draw_u(dspec, a1)
        try:
            c0 = _discrete_count(dspec, u0)
            c1 = _discrete_count(dspec, u1)
        except NotZeroDimensionalError as exc:
            failures.append(f"round {round_idx}: {exc}")
            continue
        if c0 == c1:
            return MethodResult("discrete", c0, "ok", (a0, a1), (u0, u1),
                                time.perf_counter() - t0)
        failures.append(f"round {round_idx}: counts {c0} != {c1}")
    raise GenericityError(
        f"discrete ML degree exhausted {dspec.retries} redraw rounds: " + "; ".join(failures)
    )


@dataclass(frozen=True)
class DiscreteGaussianReport:
    discrete: int
    gaussian: int
    inequality_holds: bool


def compare_discrete_gaussian(dspec: DiscreteSpec) -> DiscreteGaussianReport:
    """Discrete vs Gaussian ML degree of X in the diagonal embedding.

    The Gaussian side restricts det to the diagonal, i.e. computes the
    count for F = prod x_i with generic eta.  The inequality
    discrete <= gaussian is asserted.
    """
    disc = discrete_mld(dspec)
    ring = dspec.ring
    F = Polynomial(ring, {tuple([1] * len(ring)): Fraction(1)})
    spec = ProblemSpec(ring, dspec.generators, F, methods=("a",),
                       seed=dspec.seed, retries=dspec.retries)
    gauss = mld_count(spec, "a")
    if disc.count > gauss.count:
        raise InconsistencyError(
            f"discrete ML degree {disc.count} exceeds Gaussian {gauss.count}"
        )
    return DiscreteGaussianReport(disc.count, gauss.count, True)
