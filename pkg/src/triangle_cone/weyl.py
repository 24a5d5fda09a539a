"""Weyl groups as signed permutations, parabolic quotients and the duality involution."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .rootsys import GENERATOR_NAMES, RootSystem, reflect_in

# A signed permutation ``p`` encodes w(e_j) = sign(p[j]) * e_{|p[j]| - 1}.
SignedPerm = tuple[int, ...]


@dataclass(frozen=True)
class WeylElement:
    """Group element; equality and hashing use only the signed permutation."""

    perm: SignedPerm
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def name(self) -> str:
        return word_to_str(self.word)

    def __repr__(self) -> str:
        return f"WeylElement({self.name})"


def word_to_str(word: Sequence[int]) -> str:
    return "".join(GENERATOR_NAMES[i] for i in word) or "e"


def parse_word(text: str | Sequence[int]) -> tuple[int, ...]:
    """``"rst"`` -> ``(0, 1, 2)``; ``"e"``/``""`` is the empty word.  Separators ignored."""
    if not isinstance(text, str):
        return tuple(int(i) for i in text)
    letters = [c for c in text if c not in " .·*_-"]
    if letters == ["e"]:
        return ()
    try:
        return tuple(GENERATOR_NAMES.index(c) for c in letters)
    except ValueError:
        raise ValueError(f"bad word {text!r}: letters must be among {GENERATOR_NAMES}") from None


def _compose(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    """(u v)(e_j) = u(v(e_j))."""
    out = []
    for pj in v:
        k = abs(pj) - 1
        q = u[k]
        out.append(q if pj > 0 else -q)
    return tuple(out)


def _invert(u: SignedPerm) -> SignedPerm:
    out = [0] * len(u)
    for j, pj in enumerate(u):
        k = abs(pj) - 1
        out[k] = (j + 1) if pj > 0 else -(j + 1)
    return tuple(out)


def act_on_vector(perm: SignedPerm, v: Sequence) -> tuple:
    out = [Fraction(0)] * len(v)
    for j, pj in enumerate(perm):
        k = abs(pj) - 1
        out[k] = v[j] if pj > 0 else -v[j]
    return tuple(out)


def reflection_perm(root: Sequence) -> SignedPerm:
    """Signed permutation of the reflection in ``root`` (must be a signed permutation)."""
    n = len(root)
    out = []
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        img = reflect_in(root, e)
        (k,) = [i for i, c in enumerate(img) if c != 0]
        if abs(img[k]) != 1:
            raise ValueError("reflection is not a signed permutation")
        out.append((k + 1) if img[k] > 0 else -(k + 1))
    return tuple(out)


class WeylGroup:
    """All elements of W, each carrying its shortlex-first reduced word."""

    def __init__(self, rs: RootSystem, elements: list[WeylElement]):
        self.rs = rs
        self.elements = elements
        self.by_perm = {w.perm: w for w in elements}
        self.identity = elements[0]
        self.longest = max(elements, key=lambda w: w.length)
        self._gen_perm = tuple(reflection_perm(a) for a in rs.simple_roots)
        self._rw_cache: dict = {}
        self.generators = tuple(self.element((i,)) for i in range(rs.rank))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w: WeylElement) -> bool:
        return w.perm in self.by_perm

    def from_perm(self, perm: SignedPerm) -> WeylElement:
        return self.by_perm[perm]

    def element(self, word: str | Sequence[int]) -> WeylElement:
        """Canonical element of an arbitrary (not necessarily reduced) word."""
        perm = tuple(range(1, self.rs.ambient_dim + 1))
        for i in reversed(parse_word(word)):
            perm = _compose(self._gen_perm[i], perm)
        return self.by_perm[perm]

    def mul(self, *ws: WeylElement) -> WeylElement:
        perm = self.identity.perm
        for w in ws:
            perm = _compose(perm, w.perm)
        return self.by_perm[perm]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.by_perm[_invert(w.perm)]

    def act(self, w: WeylElement, v: Sequence) -> tuple:
        return act_on_vector(w.perm, v)

    def reflection(self, root: Sequence) -> WeylElement:
        return self.by_perm[reflection_perm(root)]

    def of_length(self, d: int) -> list[WeylElement]:
        return [w for w in self.elements if w.length == d]

    def inversion_count(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for b in self.rs.positive_roots if not self.rs.is_positive(self.act(w, b)))

    def right_descents(self, w: WeylElement) -> list[int]:
        return [i for i, s in enumerate(self.generators) if self.mul(w, s).length < w.length]

    def left_descents(self, w: WeylElement) -> list[int]:
        return [i for i, s in enumerate(self.generators) if self.mul(s, w).length < w.length]

    def reduced_words(self, w: WeylElement) -> list[tuple[int, ...]]:
        """Every reduced word of ``w``, by recursion on right descents."""
        return list(_reduced_words(self, w.perm))


def _reduced_words(W: WeylGroup, perm: SignedPerm) -> tuple[tuple[int, ...], ...]:
    cache = W._rw_cache
    if perm in cache:
        return cache[perm]
    w = W.by_perm[perm]
    if w.length == 0:
        out: tuple[tuple[int, ...], ...] = ((),)
    else:
        words = []
        for i in W.right_descents(w):
            u = W.mul(w, W.generators[i])
            words.extend(word + (i,) for word in _reduced_words(W, u.perm))
        out = tuple(sorted(words))
    cache[perm] = out
    return out


def enumerate_weyl_group(rs: RootSystem) -> WeylGroup:
    """Breadth-first closure under right multiplication by generators.

    Generators are tried in the order r < s < t and the frontier is kept in
    discovery order, so the stored word of every element is its shortlex-first
    reduced word and BFS depth is the length.
    """
    gens = [reflection_perm(a) for a in rs.simple_roots]
    ident = tuple(range(1, rs.ambient_dim + 1))
    seen = {ident: ()}
    queue = deque([ident])
    order = [ident]
    while queue:
        p = queue.popleft()
        for i, g in enumerate(gens):
            q = _compose(p, g)
            if q not in seen:
                seen[q] = seen[p] + (i,)
                queue.append(q)
                order.append(q)
    return WeylGroup(rs, [WeylElement(p, seen[p]) for p in order])


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> WeylGroup:
    """Cached :func:`enumerate_weyl_group`."""
    return enumerate_weyl_group(rs)


def canonicalize_word(W: WeylGroup, word: str | Sequence[int]) -> WeylElement:
    return W.element(word)


@dataclass(frozen=True)
class ParabolicData:
    """Maximal (or arbitrary) standard parabolic: W_P generated by ``generator_subset``."""

    generator_subset: tuple[int, ...]
    coset_reps: tuple[WeylElement, ...]
    longest_in_parabolic: WeylElement
    longest_rep: WeylElement
    codim_total: int
    index: int | None = None  # i for the maximal parabolic P_i (1-based)

    def __contains__(self, w: WeylElement) -> bool:
        return w in self.coset_reps


def _subgroup(W: WeylGroup, gens: Iterable[int]) -> list[WeylElement]:
    gens = list(gens)
    seen = {W.identity}
    frontier = [W.identity]
    while frontier:
        new = []
        for w in frontier:
            for i in gens:
                u = W.mul(w, W.generators[i])
                if u not in seen:
                    seen.add(u)
                    new.append(u)
        frontier = new
    return sorted(seen, key=lambda w: (w.length, w.word))


def minimal_coset_reps(W: WeylGroup, subset: Iterable[int]) -> ParabolicData:
    """Minimal-length representatives of W/W_P, i.e. no right descent in ``subset``."""
    subset = tuple(sorted(set(subset)))
    reps = tuple(
        sorted(
            (w for w in W if all(W.mul(w, W.generators[i]).length == w.length + 1 for i in subset)),
            key=lambda w: (w.length, w.word),
        )
    )
    sub = _subgroup(W, subset)
    w0p = max(sub, key=lambda w: w.length)
    top = max(reps, key=lambda w: w.length)
    complement = [i for i in range(W.rs.rank) if i not in subset]
    index = complement[0] + 1 if len(complement) == 1 else None
    return ParabolicData(subset, reps, w0p, top, W.longest.length - w0p.length, index)


def maximal_parabolic(W: WeylGroup, k: int) -> ParabolicData:
    """P_k (1-based): the parabolic attached to the k-th fundamental weight."""
    return minimal_coset_reps(W, [i for i in range(W.rs.rank) if i != k - 1])


class DomainError(ValueError):
    pass


def theta_dual(W: WeylGroup, P: ParabolicData, w: WeylElement) -> WeylElement:
    """``w0 * w * w0_P``, the index of the Poincare dual Schubert class."""
    if w not in P:
        raise DomainError(f"{w.name} is not a minimal coset representative")
    return W.mul(W.longest, w, P.longest_in_parabolic)


def generator_multiplicity(w: WeylElement, g: int | str) -> int:
    if isinstance(g, str):
        g = GENERATOR_NAMES.index(g)
    return w.word.count(g)
