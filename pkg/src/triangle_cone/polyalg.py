"""Exact sparse polynomials, Weyl action, divided differences, invariant-ideal oracle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .linalg import EchelonSpan
from .rootsys import RootSystem
from .weyl import SignedPerm, WeylElement, WeylGroup, parse_word, reflection_perm, weyl_group

Monomial = tuple[int, ...]


class Polynomial:
    """Polynomial in ``nvars`` commuting variables with ``Fraction`` coefficients.

    Immutable; zero coefficients are never stored, so equality is equality of
    the ``terms`` dicts.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if len(m) != nvars:
                    raise ValueError(f"monomial {m} has wrong arity for {nvars} variables")
                clean[tuple(m)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> Polynomial:
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, nvars: int, c) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> Polynomial:
        m = [0] * nvars
        m[i] = 1
        return cls(nvars, {tuple(m): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> Polynomial:
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            m = [0] * n
            m[i] = 1
            terms[tuple(m)] = c
        return cls(n, terms)

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> Polynomial:
        return cls(len(exps), {tuple(exps): c})

    # arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return Polynomial._raw(self.nvars, {})
            return Polynomial._raw(self.nvars, {m: a * c for m, a in self.terms.items()})
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c) -> Polynomial:
        return self * (1 / Fraction(c))

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial.constant(self.nvars, other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial; raises if there is any non-constant term."""
        zero = (0,) * self.nvars
        if any(m != zero for m in self.terms):
            raise ValueError(f"{self} is not constant")
        return self.terms.get(zero, Fraction(0))

    def coefficient(self, m: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def __call__(self, *point) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                v *= Fraction(x) ** e
            total += v
        return total

    def format(self, names: Sequence[str] = ("x", "y", "z", "w")) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                (names[i] if e == 1 else f"{names[i]}^{e}") for i, e in enumerate(m) if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.format()})"

    # structure

    def permute_signed(self, perm: SignedPerm) -> Polynomial:
        """Substitute x_j -> sign * x_k for every ``perm[j] = +-(k+1)``."""
        out = {}
        for m, c in self.terms.items():
            new = [0] * self.nvars
            sign = 1
            for j, e in enumerate(m):
                if e:
                    pj = perm[j]
                    new[abs(pj) - 1] = e
                    if pj < 0 and e % 2:
                        sign = -sign
            out[tuple(new)] = c if sign > 0 else -c
        return Polynomial._raw(self.nvars, out)

    def divide_linear(self, form: Sequence) -> Polynomial:
        """Exact division by the linear form ``sum form[i] x_i``.

        Lex long division with leading variable the first one with a nonzero
        coefficient; a nonzero remainder raises ``ArithmeticError``.
        """
        form = [Fraction(c) for c in form]
        lead = next(i for i, c in enumerate(form) if c)
        lc = form[lead]
        rem = dict(self.terms)
        quot: dict[Monomial, Fraction] = {}
        while rem:
            m = max(rem, key=lambda mm: mm)  # lex leading term
            if m[lead] == 0:
                raise ArithmeticError(f"{self} is not divisible by linear form {form}")
            q = list(m)
            q[lead] -= 1
            q = tuple(q)
            qc = rem[m] / lc
            quot[q] = quot.get(q, 0) + qc
            for i, a in enumerate(form):
                if a:
                    mm = list(q)
                    mm[i] += 1
                    mm = tuple(mm)
                    v = rem.get(mm, 0) - qc * a
                    if v:
                        rem[mm] = v
                    else:
                        rem.pop(mm, None)
        return Polynomial._raw(self.nvars, {m: c for m, c in quot.items() if c})


def grlex_key(m: Monomial) -> tuple:
    return (sum(m), m)


def monomials(nvars: int, degree: int) -> list[Monomial]:
    """All monomials of a given degree, in decreasing graded-lex order (x > y > z > w)."""
    out = []

    def rec(prefix, left, k):
        if k == nvars - 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, k + 1)

    if nvars == 0:
        return [()]
    rec((), degree, 0)
    return out


def ring_variables(rs: RootSystem) -> tuple[Polynomial, ...]:
    return tuple(Polynomial.variable(rs.ambient_dim, i) for i in range(rs.ambient_dim))


def weyl_act(rs: RootSystem, w: WeylElement, f: Polynomial) -> Polynomial:
    """``(w f)(v) = f(w^{-1} v)``: x_j becomes sign_j * x_{pi(j)} where w e_j = sign_j e_{pi(j)}."""
    return f.permute_signed(w.perm)


@lru_cache(maxsize=None)
def _simple_reflection_perms(rs: RootSystem) -> tuple[SignedPerm, ...]:
    return tuple(reflection_perm(a) for a in rs.simple_roots)


def divided_difference(rs: RootSystem, i: int, f: Polynomial) -> Polynomial:
    """``(f - s_i f) / alpha_i`` for the 0-based generator index ``i``."""
    num = f - f.permute_signed(_simple_reflection_perms(rs)[i])
    if not num:
        return Polynomial._raw(f.nvars, {})
    return num.divide_linear(rs.simple_roots[i])


class NotReducedError(ValueError):
    pass


def bgg_operator(rs: RootSystem, W: WeylGroup, word_or_element, f: Polynomial) -> Polynomial:
    """``A_w = A_{s_1} o ... o A_{s_k}`` along a reduced word (rightmost applied first)."""
    if isinstance(word_or_element, WeylElement):
        word = word_or_element.word
    else:
        word = parse_word(word_or_element)
        if W.element(word).length != len(word):
            raise NotReducedError(f"word {word_or_element!r} is not reduced")
    for i in reversed(word):
        if not f:
            break
        f = divided_difference(rs, i, f)
    return f


def root_product(rs: RootSystem) -> Polynomial:
    out = Polynomial.constant(rs.ambient_dim, 1)
    for b in rs.positive_roots:
        out = out * Polynomial.linear(b)
    return out


@lru_cache(maxsize=None)
def top_polynomial(rs: RootSystem) -> Polynomial:
    """Product of the positive roots divided by the order of W."""
    return root_product(rs) / len(weyl_group(rs))


# invariant ideal and its quotient


def elementary_symmetric(polys: Sequence[Polynomial], k: int) -> Polynomial:
    n = polys[0].nvars
    out = Polynomial.constant(n, 0)
    for combo in combinations(polys, k):
        term = Polynomial.constant(n, 1)
        for p in combo:
            term = term * p
        out = out + term
    return out


def fundamental_invariants(rs: RootSystem) -> list[Polynomial]:
    """Generators of the invariant ring: e_k of x_i (type A) or of x_i^2 (types B, C)."""
    xs = ring_variables(rs)
    if rs.family == "A":
        base = list(xs)
    else:
        base = [x * x for x in xs]
    return [elementary_symmetric(base, k) for k in range(1, len(base) + 1)]


@dataclass
class QuotientSlice:
    degree: int
    monomials: list[Monomial]  # decreasing grlex; column order
    ideal: EchelonSpan  # built on reversed columns so free columns = greedy complement
    complement: list[Monomial]


class QuotientBasis:
    """Graded slices of the invariant ideal I and greedy monomial complements of S/I."""

    def __init__(self, rs: RootSystem, max_degree: int | None = None):
        self.rs = rs
        self.nvars = rs.ambient_dim
        self.invariants = fundamental_invariants(rs)
        if max_degree is None:
            max_degree = weyl_group(rs).longest.length
        self.max_degree = max_degree
        self._slices: dict[int, QuotientSlice] = {}

    def slice(self, d: int) -> QuotientSlice:
        if d not in self._slices:
            self._slices[d] = self._build(d)
        return self._slices[d]

    def _build(self, d: int) -> QuotientSlice:
        mons = monomials(self.nvars, d)
        # columns in increasing grlex order: RREF pivots fall on the smallest
        # monomials, leaving as free columns exactly the greedy choice taken
        # from the largest monomial downwards
        cols = list(reversed(mons))
        index = {m: k for k, m in enumerate(cols)}
        span = EchelonSpan(len(cols))
        for g in self.invariants:
            dg = g.degree()
            if dg > d:
                continue
            for m in monomials(self.nvars, d - dg):
                prod = g * Polynomial.monomial(m)
                vec = [0] * len(cols)
                for mm, c in prod.terms.items():
                    vec[index[mm]] = c
                span.add(vec)
        pivots = set(span._rows)
        complement = [cols[k] for k in range(len(cols)) if k not in pivots]
        complement.sort(key=grlex_key, reverse=True)
        return QuotientSlice(d, mons, span, complement)

    def dimension(self, d: int) -> int:
        return len(self.slice(d).complement)

    def normal_form(self, f: Polynomial) -> dict[Monomial, Fraction]:
        """Coordinates of the class of homogeneous ``f`` in the complement basis."""
        if not f:
            return {}
        if not f.is_homogeneous():
            raise ValueError("ideal membership needs a homogeneous polynomial")
        d = f.degree()
        sl = self.slice(d)
        cols = list(reversed(sl.monomials))
        index = {m: k for k, m in enumerate(cols)}
        vec = [0] * len(cols)
        for m, c in f.terms.items():
            vec[index[m]] = c
        red = sl.ideal.reduce(vec)
        return {cols[k]: c for k, c in enumerate(red) if c}

    def reduce(self, f: Polynomial) -> Polynomial:
        """Canonical representative of ``f`` modulo I, supported on complement monomials."""
        if not f:
            return f
        out = Polynomial(self.nvars)
        for d in sorted(f.degrees()):
            part = Polynomial(self.nvars, {m: c for m, c in f.terms.items() if sum(m) == d})
            out = out + Polynomial(self.nvars, self.normal_form(part))
        return out


@lru_cache(maxsize=None)
def quotient_basis(rs: RootSystem) -> QuotientBasis:
    return QuotientBasis(rs)


@dataclass(frozen=True)
class Membership:
    member: bool
    coordinates: dict


def ideal_membership(rs: RootSystem, basis: QuotientBasis | None, f: Polynomial) -> Membership:
    if basis is None:
        basis = quotient_basis(rs)
    coords = basis.normal_form(f)
    return Membership(not coords, coords)


def congruent_mod_ideal(rs: RootSystem, f: Polynomial, g: Polynomial) -> bool:
    return ideal_membership(rs, None, f - g).member


def polynomial_from_terms(rs: RootSystem, terms: Iterable[tuple[Monomial, object]]) -> Polynomial:
    return Polynomial(rs.ambient_dim, dict(terms))
