"""Display names of Schubert classes.

Classes of H*(G/P) are named by degree, with primes separating classes of
equal degree ("2'" and "2''").  For types B and C the primes follow the
established tables for Sp(6) and Spin(7) (same words in both); they are a
naming convention only, no computation depends on them.  Other cases get
primes in stored-word order.  The unit class is "0".
"""

from __future__ import annotations

from functools import lru_cache

from .rootsys import RootSystem
from .weyl import ParabolicData, WeylElement, WeylGroup

_BC_DECORATIONS: dict[int, dict[str, str]] = {
    1: {"e": "0", "r": "1", "sr": "2", "tsr": "3", "stsr": "4", "rstsr": "5"},
    2: {
        "e": "0",
        "s": "1",
        "rs": "2'",
        "ts": "2''",
        "rts": "3'",
        "sts": "3''",
        "srts": "4'",
        "rsts": "4''",
        "tsrts": "5'",
        "rstrs": "5''",
        "rtsrts": "6",
        "srtsrts": "7",
    },
    3: {
        "e": "0",
        "t": "1",
        "st": "2",
        "rst": "3'",
        "tst": "3''",
        "trst": "4",
        "strst": "5",
        "tstrst": "6",
    },
}


def _auto_labels(P: ParabolicData) -> dict[WeylElement, str]:
    by_len: dict[int, list[WeylElement]] = {}
    for w in P.coset_reps:
        by_len.setdefault(w.length, []).append(w)
    out = {}
    for d, ws in by_len.items():
        ws.sort(key=lambda w: w.word)
        if len(ws) == 1:
            out[ws[0]] = str(d)
        else:
            for k, w in enumerate(ws, start=1):
                out[w] = str(d) + "'" * k
    return out


@lru_cache(maxsize=None)
def _labels(rs: RootSystem, index: int, subset: tuple[int, ...]) -> dict:
    from .weyl import minimal_coset_reps, weyl_group

    W = weyl_group(rs)
    P = minimal_coset_reps(W, subset)
    if rs.family in ("B", "C") and index in _BC_DECORATIONS:
        table = {W.element(word): label for word, label in _BC_DECORATIONS[index].items()}
        if set(table) != set(P.coset_reps):
            raise RuntimeError(f"decoration table does not match W^P for {rs.name} P{index}")
        return table
    return _auto_labels(P)


def class_labels(rs: RootSystem, W: WeylGroup, P: ParabolicData) -> dict[WeylElement, str]:
    """``{w: "4'"}`` for every w in W^P."""
    return dict(_labels(rs, P.index or 0, P.generator_subset))


def class_by_label(rs: RootSystem, W: WeylGroup, P: ParabolicData) -> dict[str, WeylElement]:
    return {label: w for w, label in class_labels(rs, W, P).items()}


def class_prefix(rs: RootSystem, index: int | None) -> str:
    """Letter used in front of class names: b for Spin(7) on G/P2 and G/P3, a otherwise."""
    return "b" if rs.family == "B" and index in (2, 3) else "a"


def label_order(label: str) -> tuple[int, int]:
    return int(label.rstrip("'")), label.count("'")
