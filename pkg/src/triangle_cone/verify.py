"""Comparison of computed results against the published reference tables.

This is the only module that reads ``data/reference_tables.yaml``.  Each check
produces a :class:`Check` holding what was computed and what was expected;
nothing here feeds back into the computation itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable

import sympy
import yaml

from . import notation
from .analysis import analyze
from .cone import cones_equal
from .inequality import (
    PERMUTATIONS,
    Inequality,
    canonical_key,
    coordinate_names,
    inequality_from_triple,
    permute_sides,
    schubert_subsystem,
)
from .polyalg import Polynomial, congruent_mod_ideal
from .rootsys import RootSystem, build_root_system
from .schubert import PointTriple, multiply_classes, schubert_polynomial, triple_coefficient
from .weyl import generator_multiplicity, maximal_parabolic, parse_word, theta_dual, weyl_group


@dataclass(frozen=True)
class Check:
    section: str
    name: str
    passed: bool
    computed: object
    expected: object
    mismatches: tuple = ()

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        text = f"[{mark}] {self.section}: {self.name}: computed {self.computed}, expected {self.expected}"
        for m in self.mismatches:
            text += f"\n       mismatch: {m}"
        return text


def _tally(section: str, name: str, total: int, bad: list, unit: str = "rows") -> Check:
    good = total - len(bad)
    return Check(section, name, not bad, f"{good}/{total} {unit} match", f"{total}/{total}", tuple(bad))


@lru_cache(maxsize=None)
def load_fixtures() -> dict:
    text = resources.files("triangle_cone").joinpath("data/reference_tables.yaml").read_text("utf-8")
    return yaml.safe_load(text)


# ------------------------------------------------------------------ parsing helpers


def class_name(published: str) -> str:
    """"a2''" -> "2''", and the unit "1" -> "0"."""
    return "0" if published == "1" else published[1:]


def _word(W, text: str):
    if text == "w0":
        return W.longest
    w = W.element(text)
    if w.length != len(parse_word(text)):
        raise ValueError(f"{text} is not a reduced word")
    return w


_X, _Y, _Z = sympy.symbols("x y z")


def _poly_locals() -> dict:
    g = {f"g{n}": sum(_X**i * _Y ** (n - i) for i in range(n + 1)) for n in range(2, 5)}
    g["f"] = _X**2 * _Y + _X * _Y**2 + _X**2 * _Z + _X * _Z**2 + _Y**2 * _Z + _Y * _Z**2
    g.update(x=_X, y=_Y, z=_Z)
    return g


def parse_polynomial(text: str) -> Polynomial:
    expr = sympy.expand(sympy.sympify(text, locals=_poly_locals()))
    poly = sympy.Poly(expr, _X, _Y, _Z)
    terms = {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}
    return Polynomial(3, terms)


def parse_inequality(rs: RootSystem, text: str) -> tuple[Fraction, ...]:
    """Covector ``a`` with ``a . v <= 0`` for a published "lhs <= rhs"."""
    names = coordinate_names(rs)
    symbols = {n: sympy.Symbol(n) for n in names}
    lhs, rhs = text.split("<=")
    expr = sympy.expand(sympy.sympify(lhs, locals=symbols) - sympy.sympify(rhs, locals=symbols))
    coeffs = [expr.coeff(symbols[n]) for n in names]
    rest = sympy.expand(expr - sum(c * symbols[n] for c, n in zip(coeffs, names)))
    if rest != 0:
        raise ValueError(f"not a homogeneous linear inequality: {text}")
    return tuple(Fraction(int(c.p), int(c.q)) for c in coeffs)


def parse_product(text: str) -> tuple[str, str, dict[str, int]]:
    """"a1 * a2' = 2 a3' + a3''" -> ("1", "2'", {"3'": 2, "3''": 1})."""
    left, right = text.split("=")
    u, v = (class_name(s.strip()) for s in left.split("*"))
    out: dict[str, int] = {}
    right = right.strip()
    if right != "0":
        for term in right.split("+"):
            parts = term.split()
            c, name = (int(parts[0]), parts[1]) if len(parts) == 2 else (1, parts[0])
            out[class_name(name)] = c
    return u, v, out


def triple_inequality(rs: RootSystem, k: int, label: str) -> Inequality:
    """Inequality of the ordered triple named by a published label such as "(4',2'',1)"."""
    W = weyl_group(rs)
    P = maximal_parabolic(W, k)
    by_label = notation.class_by_label(rs, W, P)
    triple = tuple(by_label[p] for p in label.strip("()").split(","))
    c = triple_coefficient(rs, W, P, triple)
    hom = tuple(theta_dual(W, P, v) for v in triple)
    return inequality_from_triple(rs, W, P, PointTriple(triple, hom, c, label))


def orbit_keys(rs: RootSystem, coeffs) -> set[tuple[int, ...]]:
    return {canonical_key(rs, permute_sides(coeffs, p)) for p in PERMUTATIONS}


# ------------------------------------------------------------------ sections


def check_weyl_structure() -> list[Check]:
    fx = load_fixtures()
    sec = "weyl"
    out = []
    for fam in ("A3", "B3", "C3"):
        W = weyl_group(build_root_system(fam))
        out.append(Check(sec, f"|W({fam})|", len(W) == fx["weyl_order"][fam], len(W), fx["weyl_order"][fam]))
        out.append(
            Check(sec, f"length of w0 ({fam})", W.longest.length == fx["longest_length"][fam],
                  W.longest.length, fx["longest_length"][fam])
        )
    for fam in ("B3", "C3"):
        rs = build_root_system(fam)
        W = weyl_group(rs)
        dims = [maximal_parabolic(W, k).codim_total for k in (1, 2, 3)]
        exp = fx["parabolic_dimensions"][fam]
        out.append(Check(sec, f"dim G/P_k ({fam})", dims == exp, dims, exp))
        for k in (1, 2, 3):
            P = maximal_parabolic(W, k)
            words = fx["coset_representatives"][f"P{k}"]
            # compared as group elements: stored shortlex words may be spelled
            # differently from the published reduced words
            try:
                listed = {_word(W, s) for s in words}
                ok = listed == set(P.coset_reps) and len(words) == len(listed)
                computed = f"{len(P.coset_reps)} elements, {len(listed & set(P.coset_reps))} matched"
            except ValueError as exc:
                ok, computed = False, str(exc)
            out.append(Check(sec, f"W^P{k} list ({fam})", ok, computed, f"{len(words)} published words"))
            labels = notation.class_labels(rs, W, P)
            bad = []
            for word, length, weight, eps, pd in fx["weight_tables"][fam][k]:
                w = _word(W, word)
                got = (
                    w.length,
                    list(W.act(w, rs.weight_representatives[k - 1])),
                    labels.get(w),
                    labels[theta_dual(W, P, w)] if w in P else None,
                )
                exp_row = (length, weight, class_name(eps), class_name(pd))
                if got != exp_row:
                    bad.append((word, got, exp_row))
            out.append(_tally(sec, f"weight and duality table P{k} ({fam})", len(fx["weight_tables"][fam][k]), bad))
    return out


def check_polynomials() -> list[Check]:
    fx = load_fixtures()
    sec = "polynomials"
    out = []
    for fam, text in fx["top_class_mod_ideal"].items():
        rs = build_root_system(fam)
        W = weyl_group(rs)
        ok = congruent_mod_ideal(rs, schubert_polynomial(rs, W, W.longest), parse_polynomial(text))
        out.append(Check(sec, f"top class mod I ({fam})", ok, "p_w0", text))
    for fam, tables in fx["schubert_polynomials"].items():
        rs = build_root_system(fam)
        W = weyl_group(rs)
        for k, rows in tables.items():
            bad = []
            for word, v, wt, text in rows:
                w = _word(W, word)
                if not congruent_mod_ideal(rs, schubert_polynomial(rs, W, w), parse_polynomial(text)):
                    bad.append((word, schubert_polynomial(rs, W, w).format(), text))
                elif v is not None:
                    vv, tt = _word(W, v), _word(W, wt)
                    if W.mul(w, vv) != tt or tt.length != w.length + vv.length:
                        bad.append((word, f"{word}*{v} != {wt}", "length-additive product"))
            out.append(_tally(sec, f"p_w table G/P{k} ({fam})", len(rows), bad))
    return out


def check_multiplication_tables() -> list[Check]:
    fx = load_fixtures()
    sec = "products"
    out = []
    for fam, tables in fx["multiplication_tables"].items():
        rs = build_root_system(fam)
        W = weyl_group(rs)
        for k, entries in tables.items():
            P = maximal_parabolic(W, k)
            labels = notation.class_labels(rs, W, P)
            by_label = {v: u for u, v in labels.items()}
            bad = []
            for text in entries:
                u, v, exp = parse_product(text)
                cls = multiply_classes(rs, W, P, by_label[u], by_label[v])
                got = {labels[w]: int(c) for w, c in cls.coeffs.items()}
                if got != exp:
                    bad.append((text, got))
            out.append(_tally(sec, f"multiplication table H*(G/P{k}) ({fam})", len(entries), bad, "entries"))
    return out


def check_proportionality() -> list[Check]:
    sec = "spin-vs-sp"
    B, C = build_root_system("B3"), build_root_system("C3")
    WB, WC = weyl_group(B), weyl_group(C)
    bad = []
    for w in WC:
        wb = WB.from_perm(w.perm)
        scale = Fraction(1, 2 ** generator_multiplicity(w, "t"))
        if schubert_polynomial(B, WB, wb) != schubert_polynomial(C, WC, w) * scale:
            bad.append(w.name)
    return [_tally(sec, "proportionality p_w(B3) = 2^-n(w,t) p_w(C3)", len(WC), bad, "elements")]


def _system_checks(fam: str) -> list[Check]:
    fx = load_fixtures()
    sec = "inequalities"
    an = analyze(fam)
    rs = an.root_system
    sys_ = an.system
    out = []
    W = weyl_group(rs)
    # counted per parabolic before assembly drops rows repeated across parabolics
    subsystems = {k: schubert_subsystem(rs, W, maximal_parabolic(W, k)) for k in (1, 2, 3)}
    sizes = [len(subsystems[k]) for k in (1, 2, 3)]
    exp = fx["subsystem_sizes"][fam]
    out.append(Check(sec, f"subsystem sizes ({fam})", sizes == exp, sizes, exp))
    n = len(sys_.inequalities)
    out.append(Check(sec, f"assembled system size ({fam})", n == fx["system_size"][fam], n, fx["system_size"][fam]))
    nt = len(an.trivially_redundant)
    out.append(
        Check(sec, f"trivially redundant rows ({fam})", nt == fx["trivially_redundant_count"][fam],
              nt, fx["trivially_redundant_count"][fam])
    )

    trivial_keys = {an.key(i) for i in an.trivially_redundant}
    star_keys: set = set()
    bad = []
    for k, reps in fx["representative_inequalities"][fam].items():
        subsystem_keys = {canonical_key(rs, q.coeffs) for q in subsystems[k]}
        for item in reps:
            published = parse_inequality(rs, item["ineq"])
            pkey = canonical_key(rs, published)
            if "label" in item:
                try:
                    ineq = triple_inequality(rs, k, item["label"])
                except KeyError:
                    bad.append((k, item["label"], "unknown class label"))
                    continue
                if canonical_key(rs, ineq.coeffs) != pkey:
                    bad.append((k, item["label"], ineq.format(rs)))
                    continue
            if pkey not in subsystem_keys:
                bad.append((k, item.get("label", item["ineq"]), "missing from system"))
                continue
            if item.get("mark") == "*":
                star_keys |= orbit_keys(rs, published)
    total = sum(len(r) for r in fx["representative_inequalities"][fam].values())
    out.append(_tally(sec, f"published representatives present with labels ({fam})", total, bad))
    out.append(
        Check(sec, f"(*) rows are exactly the trivially redundant rows ({fam})", star_keys == trivial_keys,
              len(trivial_keys), len(star_keys))
    )
    if fam == "C3":
        names = coordinate_names(rs)
        idx = {nm: i for i, nm in enumerate(names)}
        target = set()
        for i in range(1, 4):
            for j in range(1, 4):
                for l in range(1, 4):
                    v = [Fraction(-1)] * len(names)
                    for nm in (f"x{i}", f"y{j}", f"z{l}"):
                        v[idx[nm]] += 2
                    target.add(canonical_key(rs, v))
        got = {canonical_key(rs, q.coeffs) for q in subsystems[3]}
        out.append(Check(sec, "C3 G/P3 rows are x_i + y_j + z_k <= S/2", got == target, len(got), len(target)))
    return out


def check_inequalities() -> list[Check]:
    out = []
    for fam in ("A3", "C3", "B3"):
        out.extend(_system_checks(fam))
    return out


def check_cone() -> list[Check]:
    fx = load_fixtures()
    sec = "cone"
    out = []
    counts = {}
    for fam in ("A3", "C3", "B3"):
        an = analyze(fam)
        rs = an.root_system
        nf = len(an.facets.inequalities)
        counts[fam] = nf
        out.append(Check(sec, f"facet count ({fam})", nf == fx["facet_count"][fam], nf, fx["facet_count"][fam]))
        nfur = len(an.further_redundant)
        out.append(
            Check(sec, f"further redundant rows ({fam})", nfur == fx["further_redundant_count"][fam],
                  nfur, fx["further_redundant_count"][fam])
        )
        marked: set = set()
        for k, reps in fx["representative_inequalities"][fam].items():
            for item in reps:
                if item.get("mark") == "**":
                    marked |= orbit_keys(rs, parse_inequality(rs, item["ineq"]))
        got = {an.key(i) for i in an.further_redundant}
        stray = sorted(an.system.inequalities[i].label for i in an.further_redundant if an.key(i) not in marked)
        out.append(Check(sec, f"(**) rows are exactly the further redundant rows ({fam})", got == marked,
                         f"{len(got)} rows", f"{len(marked)} rows", tuple(stray)))
    eq = cones_equal(analyze("B3").hrep, analyze("C3").hrep)
    out.append(Check(sec, "cone for B3 equals cone for C3", eq, eq, True))
    return out


def check_generators() -> list[Check]:
    fx = load_fixtures()
    sec = "generators"
    expected = {tuple(g) for g in fx["generators"]}
    out = []
    for fam in ("C3", "B3"):
        rays = set(analyze(fam).rays.rays)
        matched = len(rays & expected)
        ok = rays == expected and len(fx["generators"]) == len(expected)
        out.append(Check(sec, f"extreme rays equal the published generators ({fam})", ok,
                         f"{len(rays)} rays, {matched} matched", f"{len(expected)} generators"))
    return out


SECTIONS: dict[str, Callable[[], list[Check]]] = {
    "weyl": check_weyl_structure,
    "polynomials": check_polynomials,
    "products": check_multiplication_tables,
    "spin-vs-sp": check_proportionality,
    "inequalities": check_inequalities,
    "cone": check_cone,
    "generators": check_generators,
}


def run(sections=None, family: str | None = None) -> list[Check]:
    """Run the named sections (all by default), keeping only checks that mention ``family``."""
    out = []
    for name in sections or SECTIONS:
        out.extend(SECTIONS[name]())
    if family is not None:
        out = [c for c in out if family in c.name]
    return out


def summary_line() -> str:
    fx = load_fixtures()
    f = {fam: len(analyze(fam).facets.inequalities) for fam in ("A3", "C3", "B3")}
    rays = set(analyze("C3").rays.rays)
    expected = {tuple(g) for g in fx["generators"]}
    return (
        f"facets: A3={f['A3']} C3={f['C3']} B3={f['B3']}; "
        f"rays C3: {len(rays & expected)}/{len(expected)} matched"
    )
