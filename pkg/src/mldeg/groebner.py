"""Buchberger-based Groebner bases and the ideal-theoretic toolbox.

The engine keeps polynomials as lists of (exponent, coefficient) pairs
sorted descending in the active monomial order, so leading-term access is
constant time.  Over the rationals, coefficients are scaled to primitive
integer vectors and reduction is fraction-free (pseudo-reduction with
content stripping); a modular variant does the same arithmetic over a
word-size prime field.  Pair handling follows the Gebauer-Moeller update
of Becker & Weispfenning, "Groebner Bases" (1993), p. 230, with the
normal selection strategy and deterministic index tie-breaking.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import NotZeroDimensionalError, RingMismatchError
from .poly import (
    DEGREVLEX,
    Exponent,
    MonomialOrder,
    Polynomial,
    Ring,
    _raw,
    check_ring,
    div_exact,
    divides,
    fresh_name,
    is_homogeneous,
    lift,
    restrict,
    squarefree_part,
)

# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal of a polynomial ring.

    The zero polynomial never appears as a generator; ``homogeneous`` is
    true iff every generator is homogeneous.
    """

    ring: Ring
    generators: tuple[Polynomial, ...]
    homogeneous: bool

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError("generator outside the ideal's ring")


def ideal(ring: Sequence[str], gens: Iterable[Polynomial]) -> Ideal:
    """Build an ideal, dropping zero generators."""
    ring = check_ring(ring)
    cleaned = tuple(g for g in gens if g)
    homog = all(is_homogeneous(g) for g in cleaned)
    return Ideal(ring, cleaned, homog)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis together with its order and source ideal.

    Elements are normalized to primitive integer coefficient vectors with
    positive leading coefficient and sorted by ascending leading monomial.
    """

    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    source: Ideal

    @property
    def ring(self) -> Ring:
        return self.source.ring

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def leading_exponents(self) -> list[Exponent]:
        key = self.order.key_function(len(self.ring))
        return [max(g.terms, key=key) for g in self.elements]


@dataclass(frozen=True)
class HilbertData:
    """Dimension, degree and Hilbert-series numerator of a quotient ring.

    ``dimension`` is the projective dimension for homogeneous input and the
    affine Krull dimension otherwise; the unit ideal reports -1.  The
    numerator is the dense coefficient tuple of the Hilbert series
    numerator over (1-t)^(number of variables).
    """

    dimension: int
    degree: int
    series_numerator: tuple[int, ...]


# ---------------------------------------------------------------------------
# Internal arithmetic helpers
# ---------------------------------------------------------------------------


def _int_terms(p: Polynomial) -> list[tuple[Exponent, int]]:
    """Scale a rational polynomial to a primitive integer term list."""
    if not p:
        return []
    den = math.lcm(*(c.denominator for c in p.terms.values()))
    terms = [(e, int(c * den)) for e, c in p.terms.items()]
    g = math.gcd(*(c for _, c in terms))
    return [(e, c // g) for e, c in terms]


class _Engine:
    """One Buchberger run: fixed ring width, order and coefficient domain.

    ``prime`` is None for exact rational (primitive-integer) arithmetic, or
    a prime p for arithmetic in GF(p).
    """

    def __init__(self, nvars: int, order: MonomialOrder, prime: Optional[int] = None):
        self.nvars = nvars
        self.prime = prime
        self._key = order.key_function(nvars)
        self._kcache: dict[Exponent, tuple] = {}
        self._nkcache: dict[Exponent, tuple] = {}

    def key(self, e: Exponent) -> tuple:
        k = self._kcache.get(e)
        if k is None:
            k = self._key(e)
            self._kcache[e] = k
        return k

    def negkey(self, e: Exponent) -> tuple:
        k = self._nkcache.get(e)
        if k is None:
            k = tuple(-x for x in self.key(e))
            self._nkcache[e] = k
        return k

    # -- normalization ------------------------------------------------------

    def normalize(self, terms: Iterable[tuple[Exponent, int]]) -> list[tuple[Exponent, int]]:
        """Sort descending; make primitive with positive lead (or monic mod p)."""
        p = self.prime
        if p is not None:
            tl = [(e, c % p) for e, c in terms if c % p]
            tl.sort(key=lambda t: self.key(t[0]), reverse=True)
            if not tl:
                return []
            inv = pow(tl[0][1], p - 2, p)
            return [(e, c * inv % p) for e, c in tl]
        tl = [(e, c) for e, c in terms if c]
        tl.sort(key=lambda t: self.key(t[0]), reverse=True)
        if not tl:
            return []
        g = math.gcd(*(c for _, c in tl))
        if tl[0][1] < 0:
            g = -g
        return [(e, c // g) for e, c in tl]

    # -- reduction ------------------------------------------------------------

    def reduce(self, terms, reducers, track=False):
        """Fully reduce ``terms`` by ``reducers``.

        Returns ``((num, den), remainder)`` with ``num/den * input ==
        remainder`` modulo the reducer ideal (den is 1 mod p).  With
        ``track=False`` the remainder is normalized and the scale is
        meaningless.

        Irreducible terms stay in the working dict (reduction steps only
        create strictly smaller monomials, so they are never touched
        again), which lets the whole dict be rescaled or content-stripped
        uniformly; periodic stripping keeps the fraction-free arithmetic
        from blowing up.
        """
        p = self.prime
        work: dict[Exponent, int] = {}
        for e, c in terms:
            v = work.get(e, 0) + c
            if p is not None:
                v %= p
            if v:
                work[e] = v
            else:
                work.pop(e, None)
        heap = [(self.negkey(e), e) for e in work]
        heapq.heapify(heap)
        push = heapq.heappush
        pop = heapq.heappop
        done: set[Exponent] = set()
        num, den = 1, 1
        scale_bits = 0
        nred = len(reducers)
        while heap:
            _, e = pop(heap)
            if e in done:
                continue
            c = work.get(e)
            if not c:
                continue
            hit = None
            for i in range(nred):
                r = reducers[i]
                rlm = r[0]
                ok = True
                for a, b in zip(rlm, e):
                    if a > b:
                        ok = False
                        break
                if ok:
                    hit = r
                    break
            if hit is None:
                done.add(e)
                continue
            rlm, rlc, rtail = hit
            shift = tuple(map(int.__sub__, e, rlm))
            del work[e]
            if p is None:
                d = math.gcd(rlc, c)
                s = rlc // d
                q = c // d
                if s != 1:
                    for k in work:
                        work[k] *= s
                    num *= s
                    scale_bits += s.bit_length()
            else:
                q = c  # reducers are monic mod p
            for ge, gc in rtail:
                ne = tuple(map(int.__add__, ge, shift))
                prev = work.get(ne, 0)
                v = prev - q * gc
                if p is not None:
                    v %= p
                if v:
                    work[ne] = v
                    if not prev:
                        push(heap, (self.negkey(ne), ne))
                else:
                    work.pop(ne, None)
            if scale_bits > 256 and work:
                g = math.gcd(*work.values())
                if g > 1:
                    for k in work:
                        work[k] //= g
                    den *= g
                scale_bits = 0
        out = [(e, work[e]) for e in done if work.get(e)]
        if track:
            out.sort(key=lambda t: self.key(t[0]), reverse=True)
            return (num, den), out
        return (1, 1), self.normalize(out)

    # -- S-polynomials ----------------------------------------------------------

    def spoly(self, f, g):
        flm, flc, _ = f
        glm, glc, _ = g
        lcm_e = tuple(map(max, flm, glm))
        sf = tuple(map(int.__sub__, lcm_e, flm))
        sg = tuple(map(int.__sub__, lcm_e, glm))
        if self.prime is None:
            l = abs(flc * glc) // math.gcd(flc, glc)
            cf, cg = l // flc, l // glc
        else:
            cf, cg = 1, 1  # monic
        out: dict[Exponent, int] = {}
        for e, c in self._full(f):
            ne = tuple(map(int.__add__, e, sf))
            out[ne] = out.get(ne, 0) + cf * c
        for e, c in self._full(g):
            ne = tuple(map(int.__add__, e, sg))
            out[ne] = out.get(ne, 0) - cg * c
        return [(e, c) for e, c in out.items() if c]

    @staticmethod
    def _full(r):
        lm, lc, tail = r
        return [(lm, lc)] + list(tail)


def _make_red(terms):
    """Package a normalized term list as (lm, lc, tail) for the reducer scan."""
    return (terms[0][0], terms[0][1], tuple(terms[1:]))


def _buchberger(engine: _Engine, inputs: list[list[tuple[Exponent, int]]]):
    """Reduced Groebner basis of the input term lists; [[1]] for the unit ideal."""
    key = engine.key
    reds: list = []          # all basis elements ever added, as (lm, lc, tail)
    active: list[int] = []   # indices into reds that are currently in the basis
    pairs: set[tuple[int, int]] = set()
    paircache: dict[tuple[int, int], tuple] = {}

    def lcm_exp(i: int, j: int) -> Exponent:
        return tuple(map(max, reds[i][0], reds[j][0]))

    def pairkey(ij):
        k = paircache.get(ij)
        if k is None:
            k = key(lcm_exp(*ij))
            paircache[ij] = k
        return k

    def add(terms) -> None:
        # Gebauer-Moeller UPDATE: prune new and old pairs, then insert.
        h = len(reds)
        reds.append(_make_red(terms))
        mh = terms[0][0]
        C = sorted(active)
        D: list[int] = []
        while C:
            g = C.pop(0)
            lcm_hg = tuple(map(max, mh, reds[g][0]))
            prod = tuple(map(int.__add__, mh, reds[g][0]))
            if lcm_hg == prod:
                D.append(g)
                continue
            dominated = False
            for x in itertools.chain(C, D):
                lx = tuple(map(max, mh, reds[x][0]))
                if all(a <= b for a, b in zip(lx, lcm_hg)):
                    dominated = True
                    break
            if not dominated:
                D.append(g)
        E = []
        for g in D:
            lcm_hg = tuple(map(max, mh, reds[g][0]))
            prod = tuple(map(int.__add__, mh, reds[g][0]))
            if lcm_hg != prod:
                E.append((min(g, h), max(g, h)))
        surviving = set()
        for (i, j) in pairs:
            lij = lcm_exp(i, j)
            if not all(a <= b for a, b in zip(mh, lij)):
                surviving.add((i, j))
                continue
            if lij == tuple(map(max, reds[i][0], mh)) or lij == tuple(map(max, mh, reds[j][0])):
                surviving.add((i, j))
        pairs.clear()
        pairs.update(surviving)
        pairs.update(E)
        active[:] = [g for g in active if not _divides_exp(mh, reds[g][0])] + [h]

    unit = False
    for terms in inputs:
        if unit:
            break
        _, r = engine.reduce(terms, [reds[i] for i in active])
        if r:
            if not any(r[0][0]):
                unit = True
                break
            add(r)
    while pairs and not unit:
        ij = min(pairs, key=lambda q: (pairkey(q), q))
        pairs.remove(ij)
        s = engine.spoly(reds[ij[0]], reds[ij[1]])
        if not s:
            continue
        _, r = engine.reduce(s, [reds[i] for i in active])
        if r:
            if not any(r[0][0]):
                unit = True
                break
            add(r)
    if unit:
        one = [((0,) * engine.nvars, 1)]
        return [one]
    # minimalize and tail-reduce into the canonical reduced basis
    chosen = sorted(active, key=lambda i: key(reds[i][0]))
    minimal = []
    for i in chosen:
        if not any(_divides_exp(reds[j][0], reds[i][0]) for j in minimal if j != i):
            minimal.append(i)
    final = []
    for i in minimal:
        _, r = engine.reduce(engine._full(reds[i]), [reds[j] for j in minimal if j != i])
        final.append(r)
    final.sort(key=lambda t: key(t[0][0]))
    return final


def _divides_exp(a: Exponent, b: Exponent) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _terms_to_poly(ring: Ring, terms, prime: Optional[int] = None) -> Polynomial:
    return _raw(ring, {e: Fraction(c) for e, c in terms})


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

_GB_CACHE: dict[tuple[Ideal, MonomialOrder], GroebnerBasis] = {}


def groebner_basis(I: Ideal, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of ``I`` w.r.t. ``order``; deterministic."""
    cached = _GB_CACHE.get((I, order))
    if cached is not None:
        return cached
    engine = _Engine(len(I.ring), order)
    inputs = [_int_terms(g) for g in I.generators]
    basis = _buchberger(engine, inputs)
    elements = tuple(_terms_to_poly(I.ring, t) for t in basis)
    gb = GroebnerBasis(order, elements, I)
    _GB_CACHE[(I, order)] = gb
    return gb


def _gb_mod_p(I: Ideal, order: MonomialOrder, p: int) -> list[list[tuple[Exponent, int]]]:
    """Groebner basis term lists over GF(p); raises ValueError on bad primes."""
    engine = _Engine(len(I.ring), order, prime=p)
    inputs = []
    for g in I.generators:
        terms = []
        for e, c in g.terms.items():
            if c.denominator % p == 0:
                raise ValueError(f"prime {p} divides a coefficient denominator")
            terms.append((e, c.numerator * pow(c.denominator, p - 2, p) % p))
        inputs.append(terms)
    return _buchberger(engine, inputs)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """The unique remainder of ``f`` modulo ``G``; zero iff f is in the ideal."""
    if f.ring != G.ring:
        raise RingMismatchError("polynomial and basis live in different rings")
    if not G.elements or not f:
        return f
    engine = _Engine(len(G.ring), G.order)
    reducers = []
    for g in G.elements:
        terms = _int_terms(g)
        terms.sort(key=lambda t: engine.key(t[0]), reverse=True)
        if terms[0][1] < 0:
            terms = [(e, -c) for e, c in terms]
        reducers.append(_make_red(terms))
    den = math.lcm(*(c.denominator for c in f.terms.values()))
    terms = [(e, int(c * den)) for e, c in f.terms.items()]
    (num, sden), rem = engine.reduce(terms, reducers, track=True)
    scale = Fraction(sden, num * den)
    return _raw(f.ring, {e: c * scale for e, c in rem if c})


def in_ideal(f: Polynomial, I: Ideal, order: MonomialOrder = DEGREVLEX) -> bool:
    return not normal_form(f, groebner_basis(I, order))


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True when every generator of J lies in I."""
    G = groebner_basis(I)
    return all(not normal_form(g, G) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Ideal equality via the canonical reduced Groebner bases."""
    return groebner_basis(I).elements == groebner_basis(J).elements


def ideal_quotient(I: Ideal, f: Polynomial) -> Ideal:
    """The ideal quotient (I : f) via intersection with the principal ideal."""
    if f.ring != I.ring:
        raise RingMismatchError("quotient divisor outside the ideal's ring")
    if not f:
        raise ValueError("cannot form an ideal quotient by zero")
    if f.is_constant():
        return ideal(I.ring, I.generators)
    if not I.generators:
        return ideal(I.ring, [])
    meet = intersect(I, ideal(I.ring, [f]))
    return ideal(I.ring, [div_exact(g, f) for g in meet.generators])


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """Ideal intersection via elimination of one auxiliary variable."""
    if I.ring != J.ring:
        raise RingMismatchError("cannot intersect ideals over different rings")
    if not I.generators or not J.generators:
        return ideal(I.ring, [])
    t = fresh_name("t", I.ring)
    big = (t,) + I.ring
    tp = Polynomial.variable(big, 0)
    gens = [tp * lift(g, big) for g in I.generators]
    gens += [(1 - tp) * lift(g, big) for g in J.generators]
    elim = _eliminate_ring(ideal(big, gens), (t,))
    return ideal(I.ring, elim)


def saturate(I: Ideal, f: Polynomial, strategy: str = "variable") -> Ideal:
    """The saturation (I : f^inf).

    ``strategy="variable"`` adjoins an inverse variable and eliminates it;
    ``strategy="quotient"`` iterates ideal quotients until the Groebner
    basis stabilizes.  Both return the same ideal.
    """
    if f.ring != I.ring:
        raise RingMismatchError("saturation divisor outside the ideal's ring")
    if not f:
        raise ValueError("cannot saturate by zero")
    if f.is_constant() or not I.generators:
        return ideal(I.ring, I.generators)
    if strategy == "variable":
        u = fresh_name("u", I.ring)
        big = (u,) + I.ring
        up = Polynomial.variable(big, 0)
        gens = [lift(g, big) for g in I.generators]
        gens.append(1 - up * lift(f, big))
        elim = _eliminate_ring(ideal(big, gens), (u,))
        return ideal(I.ring, elim)
    if strategy == "quotient":
        current = I
        while True:
            nxt = ideal_quotient(current, f)
            if ideal_equal(nxt, current):
                return current
            current = nxt
    raise ValueError(f"unknown saturation strategy {strategy!r}")


def saturate_by_ideal(I: Ideal, saturants: Iterable[Polynomial]) -> Ideal:
    """The saturation (I : J^inf) for J generated by ``saturants``.

    Computed as the intersection of the single-polynomial saturations;
    saturants are replaced by their squarefree parts first (the saturation
    only depends on the radical of J).
    """
    polys = [g for g in saturants if g]
    if any(g.is_constant() for g in polys):
        return ideal(I.ring, I.generators)
    if not polys:
        raise ValueError("cannot saturate by the zero ideal")
    reduced = []
    seen = set()
    for g in sorted((squarefree_part(g) for g in polys), key=_poly_sort_key):
        if g not in seen:
            seen.add(g)
            reduced.append(g)
    kept = [g for i, g in enumerate(reduced)
            if not any(j != i and divides(h, g) for j, h in enumerate(reduced))]
    result = None
    for g in kept:
        s = saturate(I, g)
        result = s if result is None else intersect(result, s)
    return result


def quotient_by_ideal(I: Ideal, J: Ideal) -> Ideal:
    """The ideal quotient (I : J), intersecting (I : g) over generators of J."""
    if not J.generators:
        # (I : 0) is the whole ring
        return ideal(I.ring, [Polynomial.constant(I.ring, 1)])
    result = None
    for g in J.generators:
        q = ideal_quotient(I, g)
        result = q if result is None else intersect(result, q)
    return result


def _poly_sort_key(p: Polynomial):
    return (p.total_degree(), len(p.terms), p.to_str())


def eliminate(I: Ideal, front: Sequence[str]) -> Ideal:
    """The elimination ideal of the front variables, in the remaining ring."""
    front = tuple(front)
    if not front:
        return ideal(I.ring, I.generators)
    for name in front:
        if name not in I.ring:
            raise ValueError(f"cannot eliminate unknown variable {name!r}")
    back_ring = tuple(v for v in I.ring if v not in set(front))
    if not back_ring:
        raise ValueError("cannot eliminate every variable")
    return ideal(back_ring, _eliminate_ring(I, front))


def _eliminate_ring(I: Ideal, front: tuple[str, ...]) -> list[Polynomial]:
    """Shared elimination core: returns generators restricted to the back ring."""
    fidx = tuple(I.ring.index(v) for v in front)
    back_ring = tuple(v for v in I.ring if v not in set(front))
    order = MonomialOrder.block(fidx)
    gb = groebner_basis(I, order)
    out = []
    for g in gb.elements:
        if all(all(e[i] == 0 for i in fidx) for e in g.terms):
            out.append(restrict(g, back_ring))
    return out


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """True iff ``f`` vanishes on the variety of ``I`` (Rabinowitsch trick)."""
    if f.ring != I.ring:
        raise RingMismatchError("polynomial outside the ideal's ring")
    if not f:
        return True
    z = fresh_name("z", I.ring)
    big = (z,) + I.ring
    zp = Polynomial.variable(big, 0)
    gens = [lift(g, big) for g in I.generators]
    gens.append(1 - zp * lift(f, big))
    return groebner_basis(ideal(big, gens)).is_unit()


# ---------------------------------------------------------------------------
# Hilbert data and zero-dimensional counting
# ---------------------------------------------------------------------------


def _minimal_monomials(exps: Iterable[Exponent]) -> list[Exponent]:
    uniq = sorted(set(exps), key=lambda e: (sum(e), e))
    out: list[Exponent] = []
    for e in uniq:
        if not any(_divides_exp(m, e) for m in out):
            out.append(e)
    return out


def _monomial_dimension(gens: list[Exponent], nvars: int) -> int:
    """Affine Krull dimension of R/<gens> via maximal independent variable sets."""
    if not gens:
        return nvars
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in gens]
    for size in range(nvars, 0, -1):
        for S in itertools.combinations(range(nvars), size):
            Sset = frozenset(S)
            if all(not (sup <= Sset) for sup in supports):
                return size
    return 0


def _hilbert_numerator(gens: list[Exponent], nvars: int) -> dict[int, int]:
    """Numerator of the Hilbert series of R/<gens> over (1-t)^nvars."""
    memo: dict[frozenset, dict[int, int]] = {}

    def rec(ms: tuple[Exponent, ...]) -> dict[int, int]:
        if not ms:
            return {0: 1}
        if any(not any(m) for m in ms):
            return {}
        k = frozenset(ms)
        hit = memo.get(k)
        if hit is not None:
            return hit
        pivot = ms[-1]
        rest = ms[:-1]
        colon = _minimal_monomials(
            tuple(max(g[i] - pivot[i], 0) for i in range(nvars)) for g in rest
        )
        a = rec(rest)
        b = rec(tuple(colon))
        d = sum(pivot)
        out = dict(a)
        for deg, c in b.items():
            out[deg + d] = out.get(deg + d, 0) - c
            if not out[deg + d]:
                del out[deg + d]
        memo[k] = out
        return out

    return rec(tuple(gens))


def _divide_numerator(num: dict[int, int], times: int) -> dict[int, int]:
    """Divide a numerator polynomial by (1-t)^times exactly."""
    coeffs = num
    for _ in range(times):
        if not coeffs:
            return {}
        top = max(coeffs)
        q: dict[int, int] = {}
        acc = 0
        for d in range(0, top + 1):
            acc += coeffs.get(d, 0)
            if acc:
                q[d] = acc
        # the division is exact iff the running total ends at zero
        if acc != 0:
            raise ArithmeticError("Hilbert numerator not divisible by (1-t)")
        q.pop(top, None)
        coeffs = q
    return coeffs


def hilbert_data(I: Ideal) -> HilbertData:
    """Dimension, degree and Hilbert numerator from the leading-term ideal."""
    nvars = len(I.ring)
    gb = groebner_basis(I)
    if gb.is_unit():
        return HilbertData(-1, 0, (0,))
    lts = _minimal_monomials(gb.leading_exponents())
    dim_affine = _monomial_dimension(lts, nvars)
    num = _hilbert_numerator(lts, nvars)
    q = _divide_numerator(num, nvars - dim_affine)
    degree = sum(q.values())
    top = max(num) if num else 0
    series = tuple(num.get(d, 0) for d in range(top + 1))
    dimension = dim_affine - 1 if I.homogeneous else dim_affine
    return HilbertData(dimension, degree, series)


def is_zero_dimensional(I: Ideal) -> bool:
    """True iff the quotient ring is a finite-dimensional vector space."""
    try:
        _standard_bounds(groebner_basis(I))
        return True
    except NotZeroDimensionalError:
        return False


def _standard_bounds(gb: GroebnerBasis) -> list[int]:
    """Pure-power bound per variable; raises when one is missing."""
    nvars = len(gb.ring)
    lts = gb.leading_exponents()
    bounds = [None] * nvars
    for e in lts:
        support = [i for i, x in enumerate(e) if x]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
    for i, b in enumerate(bounds):
        if b is None:
            raise NotZeroDimensionalError(gb.ring[i])
    return bounds


def _count_standard(gens: list[Exponent]) -> int:
    """Number of monomials divisible by none of ``gens`` (all variables bounded)."""

    def rec(ms: list[tuple[int, ...]]) -> int:
        if any(not any(m) for m in ms):
            return 0
        if not ms or not ms[0]:
            # no variables left (or no constraints, impossible when bounded)
            return 1
        bound = min(m[0] for m in ms if not any(m[1:]))
        total = 0
        for e in range(bound):
            total += rec([m[1:] for m in ms if m[0] <= e])
        return total

    return rec(list(gens))


def zero_dim_count(I: Ideal) -> int:
    """Vector-space dimension of R/I for zero-dimensional I (0 for the unit ideal).

    Raises :class:`NotZeroDimensionalError` naming a variable with no pure
    power among the leading monomials otherwise.
    """
    gb = groebner_basis(I)
    return count_from_basis(gb)


def count_from_basis(gb: GroebnerBasis) -> int:
    """Standard-monomial count of an already-computed Groebner basis."""
    if not gb.elements:
        raise NotZeroDimensionalError(gb.ring[0])
    if gb.is_unit():
        return 0
    _standard_bounds(gb)
    lts = _minimal_monomials(gb.leading_exponents())
    return _count_standard(lts)
