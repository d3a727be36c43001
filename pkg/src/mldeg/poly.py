"""Exact sparse multivariate polynomials over the rationals.

A polynomial is an immutable mapping from monomial exponent tuples (one
non-negative integer per ring variable) to nonzero ``Fraction``
coefficients.  All arithmetic is exact; no rounding ever occurs.  The
zero polynomial stores no terms.

A ring is just a tuple of distinct variable names; two polynomials can
be combined only when their rings are identical.

The text grammar accepted by :func:`parse_polynomial` (also used by the
CLI problem files) is::

    expr    := term (('+' | '-') term)*
    term    := signed (('*' | '/') signed)*
    signed  := ('+' | '-')* power
    power   := atom ('^' INTEGER)?
    atom    := INTEGER | NAME | '(' expr ')'

where '/' is only allowed between numeric constants (rational literals
such as ``3/4``) and every product needs an explicit '*'.  Printing a
polynomial and re-parsing it reproduces an equal polynomial.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import PolyParseError, RingMismatchError

Exponent = tuple[int, ...]
Ring = tuple[str, ...]
Scalar = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def check_ring(variables: Sequence[str]) -> Ring:
    """Validate a variable-name sequence and return it as a tuple."""
    ring = tuple(variables)
    if not ring:
        raise ValueError("a polynomial ring needs at least one variable")
    seen = set()
    for name in ring:
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise ValueError(f"invalid variable name {name!r}")
        if name in seen:
            raise ValueError(f"duplicate variable name {name!r}")
        seen.add(name)
    return ring


def fresh_name(base: str, taken: Iterable[str]) -> str:
    """Return ``base`` or ``base<k>``, whichever first avoids ``taken``."""
    used = set(taken)
    if base not in used:
        return base
    k = 0
    while f"{base}{k}" in used:
        k += 1
    return f"{base}{k}"


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """A total order on monomials compatible with multiplication.

    ``kind`` is one of ``"lex"``, ``"degrevlex"`` or ``"block"``.  A block
    order carries the tuple of variable positions forming the front block;
    it eliminates exactly those variables: a polynomial's leading monomial
    avoids the front block iff the polynomial lies in the subring of
    back-block variables.  Both blocks are ordered by degrevlex.
    """

    kind: str
    front: tuple[int, ...] = ()

    @staticmethod
    def lex() -> "MonomialOrder":
        return MonomialOrder("lex")

    @staticmethod
    def degrevlex() -> "MonomialOrder":
        return MonomialOrder("degrevlex")

    @staticmethod
    def block(front: Sequence[int]) -> "MonomialOrder":
        front_t = tuple(front)
        if len(set(front_t)) != len(front_t):
            raise ValueError("front block has repeated positions")
        return MonomialOrder("block", front_t)

    def key_function(self, nvars: int) -> Callable[[Exponent], tuple]:
        """Return a sort-key function; larger keys mean larger monomials."""
        if self.kind == "lex":
            return lambda e: e
        if self.kind == "degrevlex":
            return _degrevlex_key
        if self.kind == "block":
            front = self.front
            if any(i < 0 or i >= nvars for i in front):
                raise ValueError("front block position out of range")
            fset = set(front)
            back = tuple(i for i in range(nvars) if i not in fset)
            if not back:
                raise ValueError("block order needs a non-empty back block")

            def key(e: Exponent) -> tuple:
                fe = tuple(e[i] for i in front)
                be = tuple(e[i] for i in back)
                return _degrevlex_key(fe) + _degrevlex_key(be)

            return key
        raise ValueError(f"unknown order kind {self.kind!r}")

    def key(self, exponents: Exponent) -> tuple:
        return self.key_function(len(exponents))(exponents)


def _degrevlex_key(e: Exponent) -> tuple:
    return (sum(e),) + tuple(-x for x in reversed(e))


DEGREVLEX = MonomialOrder.degrevlex()
LEX = MonomialOrder.lex()


# ---------------------------------------------------------------------------
# Polynomial
# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_ring", "_terms", "_hash")

    def __init__(self, ring: Sequence[str], terms: Mapping[Exponent, Scalar]):
        self._ring = check_ring(ring)
        n = len(self._ring)
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in terms.items():
            exp = tuple(exp)
            if len(exp) != n or any(x < 0 or not isinstance(x, int) for x in exp):
                raise ValueError(f"bad exponent tuple {exp!r} for {n} variables")
            c = Fraction(coeff)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: Sequence[str]) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: Sequence[str], value: Scalar) -> "Polynomial":
        ring = check_ring(ring)
        return cls(ring, {(0,) * len(ring): Fraction(value)})

    @classmethod
    def variable(cls, ring: Sequence[str], which: Union[int, str]) -> "Polynomial":
        ring = check_ring(ring)
        idx = ring.index(which) if isinstance(which, str) else which
        exp = [0] * len(ring)
        exp[idx] = 1
        return cls(ring, {tuple(exp): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    @property
    def ring(self) -> Ring:
        return self._ring

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def nvars(self) -> int:
        return len(self._ring)

    def total_degree(self) -> int:
        """Maximal term degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        if not self._terms:
            return Fraction(0)
        return next(iter(self._terms.values()))

    def coefficient(self, exponents: Exponent) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._ring == other._ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._ring, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._ring != self._ring:
                raise RingMismatchError(
                    f"cannot combine polynomials over {self._ring} and {other._ring}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self._ring, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, Fraction(0)) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _raw(self._ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return _raw(self._ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self._ring)
            return _raw(self._ring, {e: k * c for e, k in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return Polynomial.zero(self._ring)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponent, Fraction] = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(int.__add__, ea, eb))
                v = out.get(e, Fraction(0)) + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
        return _raw(self._ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(self._ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    # -- calculus ------------------------------------------------------------

    def partial(self, which: Union[int, str]) -> "Polynomial":
        """Exact formal partial derivative with respect to one variable."""
        idx = self._ring.index(which) if isinstance(which, str) else which
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            k = e[idx]
            if k:
                ne = e[:idx] + (k - 1,) + e[idx + 1:]
                out[ne] = out.get(ne, Fraction(0)) + c * k
        return _raw(self._ring, {e: c for e, c in out.items() if c})

    # -- substitution ---------------------------------------------------------

    def substitute(self, images: Sequence[Union["Polynomial", Scalar]]) -> "Polynomial":
        """Evaluate at one image (a polynomial or scalar) per ring variable.

        Polynomial images must share one common ring, which becomes the ring
        of the result; scalars are coerced into it.
        """
        if len(images) != len(self._ring):
            raise ValueError("need exactly one image per variable")
        target: Ring | None = None
        for img in images:
            if isinstance(img, Polynomial):
                if target is None:
                    target = img.ring
                elif img.ring != target:
                    raise RingMismatchError("substitution images live in different rings")
        if target is None:
            target = self._ring
        imgs = [
            img if isinstance(img, Polynomial) else Polynomial.constant(target, img)
            for img in images
        ]
        powers: list[dict[int, Polynomial]] = [
            {0: Polynomial.constant(target, 1)} for _ in imgs
        ]

        def power(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * imgs[i]
            return cache[k]

        total = Polynomial.zero(target)
        for e, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Evaluate at a rational point."""
        if len(point) != len(self._ring):
            raise ValueError("need exactly one value per variable")
        vals = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(vals, e):
                if k:
                    v *= x**k
            total += v
        return total

    # -- order-dependent views -------------------------------------------------

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Exponent, Fraction]]:
        """Terms sorted descending in the given order."""
        key = order.key_function(len(self._ring))
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Exponent:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        key = order.key_function(len(self._ring))
        return max(self._terms, key=key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    # -- printing ---------------------------------------------------------------

    def to_str(self, order: MonomialOrder = DEGREVLEX) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for e, c in self.sorted_terms(order):
            factors = []
            for name, k in zip(self._ring, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r}, ring={self._ring!r})"


def _raw(ring: Ring, terms: dict[Exponent, Fraction]) -> Polynomial:
    """Build a polynomial from already-clean internals without re-validation."""
    p = Polynomial.__new__(Polynomial)
    p._ring = ring
    p._terms = terms
    p._hash = None
    return p


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()/])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise PolyParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        p = self.sum()
        tok = self.peek()
        if tok is not None:
            raise PolyParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def sum(self) -> Polynomial:
        p = self.term()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if tok[1] == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.signed()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self.take()
                p = p * self.signed()
            elif tok and tok[0] == "op" and tok[1] == "/":
                self.take()
                q = self.signed()
                if not p.is_constant() or not q.is_constant():
                    raise PolyParseError(
                        "'/' is only allowed between numeric constants", tok[2]
                    )
                d = q.constant_value()
                if not d:
                    raise PolyParseError("division by zero", tok[2])
                p = p * (Fraction(1) / d)
            else:
                return p

    def signed(self) -> Polynomial:
        sign = 1
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self.take()
                if tok[1] == "-":
                    sign = -sign
            else:
                break
        p = self.power()
        return p if sign == 1 else -p

    def power(self) -> Polynomial:
        p = self.atom()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.take()
            expo = self.peek()
            if expo and expo[0] == "op" and expo[1] == "-":
                self.take()
                bad = self.peek()
                pos = bad[2] if bad else len(self.text)
                raise PolyExponentError(pos)
            if expo is None or expo[0] != "num":
                pos = expo[2] if expo else len(self.text)
                raise PolyParseError("exponent must be an integer literal", pos)
            self.take()
            p = p ** int(expo[1])
        return p

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            return Polynomial.constant(self.ring, int(value))
        if kind == "name":
            if value not in self.ring:
                raise PolyParseError(f"unknown variable {value!r}", pos)
            return Polynomial.variable(self.ring, value)
        if kind == "op" and value == "(":
            p = self.sum()
            closing = self.peek()
            if closing is None or closing[1] != ")":
                raise PolyParseError("expected ')'", closing[2] if closing else len(self.text))
            self.take()
            return p
        raise PolyParseError(f"unexpected {value!r}", pos)


def PolyExponentError(pos: int) -> PolyParseError:
    return PolyParseError("negative exponents are not allowed", pos)


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse polynomial text over the given variables; whitespace-insensitive."""
    ring = check_ring(variables)
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------------
# Spec operations on single polynomials
# ---------------------------------------------------------------------------


def gradient(f: Polynomial) -> tuple[Polynomial, ...]:
    """All formal partial derivatives of ``f``, one per ring variable."""
    return tuple(f.partial(i) for i in range(f.nvars()))


def homogeneity_degree(f: Polynomial):
    """deg(f) if all terms share one total degree, ``None`` otherwise.

    The zero polynomial reports ``None``.
    """
    degs = {sum(e) for e in f.terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def is_homogeneous(f: Polynomial) -> bool:
    return len({sum(e) for e in f.terms}) <= 1


# ---------------------------------------------------------------------------
# Ring plumbing: lifting, restricting, homogenizing
# ---------------------------------------------------------------------------


def lift(f: Polynomial, big_ring: Sequence[str]) -> Polynomial:
    """Re-express ``f`` in a larger ring containing all of its variables (by name)."""
    big = check_ring(big_ring)
    try:
        slots = [big.index(name) for name in f.ring]
    except ValueError as exc:
        raise RingMismatchError(f"target ring misses a variable: {exc}") from exc
    n = len(big)
    out: dict[Exponent, Fraction] = {}
    for e, c in f.terms.items():
        ne = [0] * n
        for slot, k in zip(slots, e):
            ne[slot] = k
        out[tuple(ne)] = c
    return _raw(big, out)


def restrict(f: Polynomial, small_ring: Sequence[str]) -> Polynomial:
    """Re-express ``f`` in a subring; fails if ``f`` uses a dropped variable."""
    small = check_ring(small_ring)
    keep = []
    for name in small:
        keep.append(f.ring.index(name))
    keepset = set(keep)
    out: dict[Exponent, Fraction] = {}
    for e, c in f.terms.items():
        for i, k in enumerate(e):
            if k and i not in keepset:
                raise RingMismatchError(
                    f"polynomial uses variable {f.ring[i]!r} outside the target ring"
                )
        out[tuple(e[i] for i in keep)] = c
    return _raw(small, out)


def homogenize(f: Polynomial, t_name: str) -> Polynomial:
    """Homogenize with a new last variable ``t_name`` to the total degree of ``f``."""
    if t_name in f.ring:
        raise ValueError(f"homogenizing variable {t_name!r} collides with the ring")
    big = f.ring + (t_name,)
    d = f.total_degree()
    out: dict[Exponent, Fraction] = {}
    for e, c in f.terms.items():
        out[e + (d - sum(e),)] = c
    return _raw(big, out)


def dehomogenize(f: Polynomial, which: Union[int, str]) -> Polynomial:
    """Set one variable to 1 and drop it from the ring."""
    idx = f.ring.index(which) if isinstance(which, str) else which
    small = f.ring[:idx] + f.ring[idx + 1:]
    out: dict[Exponent, Fraction] = {}
    for e, c in f.terms.items():
        ne = e[:idx] + e[idx + 1:]
        v = out.get(ne, Fraction(0)) + c
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return _raw(small, out)


# ---------------------------------------------------------------------------
# Contents, exact division, gcd, squarefree part
# ---------------------------------------------------------------------------


def primitive_part(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Scale ``f`` to integer coefficients with content 1 and positive leading
    coefficient in ``order``; the zero polynomial is returned unchanged."""
    if not f:
        return f
    den = math.lcm(*(c.denominator for c in f.terms.values()))
    nums = [int(c * den) for c in f.terms.values()]
    g = math.gcd(*nums)
    scale = Fraction(den, g)
    out = {e: c * scale for e, c in f.terms.items()}
    p = _raw(f.ring, out)
    if p.leading_coefficient(order) < 0:
        p = -p
    return p


def div_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient f/g; raises ``ValueError`` when g does not divide f."""
    if g.ring != f.ring:
        raise RingMismatchError("ring mismatch in exact division")
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    key = _degrevlex_key
    gterms = sorted(g.terms.items(), key=lambda t: key(t[0]), reverse=True)
    glm, glc = gterms[0]
    rest = gterms[1:]
    work = dict(f.terms)
    quot: dict[Exponent, Fraction] = {}
    while work:
        e = max(work, key=key)
        c = work[e]
        if any(x < y for x, y in zip(e, glm)):
            raise ValueError("polynomials do not divide exactly")
        shift = tuple(map(int.__sub__, e, glm))
        q = c / glc
        quot[shift] = q
        del work[e]
        for ge, gc in rest:
            ne = tuple(map(int.__add__, ge, shift))
            v = work.get(ne, Fraction(0)) - q * gc
            if v:
                work[ne] = v
            else:
                work.pop(ne, None)
    return _raw(f.ring, quot)


def divides(g: Polynomial, f: Polynomial) -> bool:
    """True when g divides f exactly."""
    if not g:
        return not f
    if not f:
        return True
    try:
        div_exact(f, g)
        return True
    except ValueError:
        return False


def _split_by_last(f: Polynomial) -> dict[int, Polynomial]:
    """View f as univariate in its last variable with coefficients below."""
    small = f.ring[:-1]
    coeffs: dict[int, dict[Exponent, Fraction]] = {}
    for e, c in f.terms.items():
        coeffs.setdefault(e[-1], {})[e[:-1]] = c
    return {k: _raw(small, v) for k, v in coeffs.items()}


def _join_by_last(coeffs: dict[int, Polynomial], ring: Ring) -> Polynomial:
    out: dict[Exponent, Fraction] = {}
    for k, p in coeffs.items():
        for e, c in p.terms.items():
            out[e + (k,)] = c
    return _raw(ring, out)


def _gcd_many(polys: list[Polynomial]) -> Polynomial:
    g = polys[0]
    for p in polys[1:]:
        g = polynomial_gcd(g, p)
        if g.is_constant():
            break
    return g


def _pseudo_rem(F: dict[int, Polynomial], G: dict[int, Polynomial], small: Ring):
    """Pseudo-remainder of coefficient-list polynomials in the last variable."""
    dG = max(G)
    lcG = G[dG]
    F = dict(F)
    while F and max(F) >= dG:
        dF = max(F)
        lcF = F[dF]
        shift = dF - dG
        # F <- lcG*F - lcF*x^shift*G
        NF: dict[int, Polynomial] = {}
        for k, p in F.items():
            NF[k] = p * lcG
        for k, p in G.items():
            v = NF.get(k + shift, Polynomial.zero(small)) - p * lcF
            NF[k + shift] = v
        F = {k: p for k, p in NF.items() if p}
    return F


def polynomial_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Greatest common divisor, primitive with positive leading coefficient.

    Uses content/primitive-part recursion over the last variable with a
    primitive pseudo-remainder sequence; intended for small inputs.
    """
    if f.ring != g.ring:
        raise RingMismatchError("ring mismatch in gcd")
    if not f:
        return primitive_part(g)
    if not g:
        return primitive_part(f)
    if f.is_constant() or g.is_constant():
        return Polynomial.constant(f.ring, 1)
    n = f.nvars()
    if n == 1:
        a, b = f, g
        while b:
            a, b = b, _univ_rem(a, b)
        return primitive_part(a)
    fc = _split_by_last(f)
    gc = _split_by_last(g)
    if max(fc) == 0 and max(gc) == 0:
        # the last variable is absent from both
        d = polynomial_gcd(fc[0], gc[0])
        return primitive_part(_join_by_last({0: d}, f.ring))
    small = f.ring[:-1]
    cont_f = _gcd_many(list(fc.values()))
    cont_g = _gcd_many(list(gc.values()))
    pf = {k: div_exact(p, cont_f) for k, p in fc.items()}
    pg = {k: div_exact(p, cont_g) for k, p in gc.items()}
    if max(pf) < max(pg):
        pf, pg = pg, pf
    while True:
        R = _pseudo_rem(pf, pg, small)
        if not R:
            result = pg
            break
        if max(R) == 0:
            result = {0: Polynomial.constant(small, 1)}
            break
        cont_r = _gcd_many(list(R.values()))
        pf, pg = pg, {k: div_exact(p, cont_r) for k, p in R.items()}
    cont = polynomial_gcd(cont_f, cont_g)
    if max(result) > 0:
        rc = _gcd_many(list(result.values()))
        result = {k: div_exact(p, rc) for k, p in result.items()}
    # gcd = (gcd of the contents) * (primitive part of the PRS result)
    joined = _join_by_last({k: p * cont for k, p in result.items()}, f.ring)
    return primitive_part(joined)


def _univ_rem(a: Polynomial, b: Polynomial) -> Polynomial:
    """Univariate remainder of a modulo b over the rationals."""
    db = b.total_degree()
    lb = b.coefficient((db,))
    r = a
    while r and r.total_degree() >= db:
        dr = r.total_degree()
        lr = r.coefficient((dr,))
        shift = Polynomial(r.ring, {(dr - db,): lr / lb})
        r = r - shift * b
    return r


def squarefree_part(f: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of ``f``, up to a scalar.

    Computed as f / gcd(f, all partial derivatives); requires f nonzero.
    """
    if not f:
        raise ValueError("the zero polynomial has no squarefree part")
    if f.is_constant():
        return Polynomial.constant(f.ring, 1)
    d = f
    for i in range(f.nvars()):
        pi = f.partial(i)
        d = polynomial_gcd(d, pi)
        if d.is_constant():
            return primitive_part(f)
    return primitive_part(div_exact(primitive_part(f), d))
