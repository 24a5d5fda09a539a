"""Text formats for inequality systems and ray lists.

``.ieq``::

    # comment
    DIM 9
    EQUALITIES
    INEQUALITIES
    -1 1 0 0 0 0 0 0 0
    ...

Rows are space-separated rationals (``p/q``, or ``p`` when q = 1), meaning
``row . x = 0`` in the first section and ``row . x <= 0`` in the second.
Anything after ``#`` on a line is a comment.

``.poi``: a ``DIM d`` line followed by one primitive integer ray per line.

All output uses UTF-8 and LF line endings so that files are byte-for-byte
reproducible.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .cone import HRep, VRep


class FormatError(ValueError):
    pass


def format_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_row(row: Sequence) -> str:
    return " ".join(format_rational(c) for c in row)


def dumps_ieq(
    dimension: int,
    inequalities: Sequence[Sequence],
    equalities: Sequence[Sequence] = (),
    comments: Sequence[str] = (),
    labels: Sequence[str] | None = None,
) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"DIM {dimension}")
    lines.append("EQUALITIES")
    lines.extend(format_row(e) for e in equalities)
    lines.append("INEQUALITIES")
    for k, row in enumerate(inequalities):
        text = format_row(row)
        if labels is not None:
            text += f"  # {labels[k]}"
        lines.append(text)
    return "\n".join(lines) + "\n"


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def loads_ieq(text: str) -> HRep:
    lines = _data_lines(text)
    if not lines or not lines[0].startswith("DIM"):
        raise FormatError("missing DIM line")
    dim = int(lines[0].split()[1])
    eqs, ineqs, section = [], [], None
    for line in lines[1:]:
        if line in ("EQUALITIES", "INEQUALITIES"):
            section = line
            continue
        row = tuple(Fraction(tok) for tok in line.split())
        if len(row) != dim:
            raise FormatError(f"row of length {len(row)} in dimension {dim}: {line}")
        if section == "EQUALITIES":
            eqs.append(row)
        elif section == "INEQUALITIES":
            ineqs.append(row)
        else:
            raise FormatError("row before any section header")
    return HRep.from_rows(dim, ineqs, eqs)


def dumps_poi(V: VRep, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"DIM {V.dimension}")
    lines.extend(" ".join(str(c) for c in r) for r in V.rays)
    return "\n".join(lines) + "\n"


def loads_poi(text: str) -> VRep:
    lines = _data_lines(text)
    if not lines or not lines[0].startswith("DIM"):
        raise FormatError("missing DIM line")
    dim = int(lines[0].split()[1])
    rays = []
    for line in lines[1:]:
        r = tuple(int(tok) for tok in line.split())
        if len(r) != dim:
            raise FormatError(f"ray of length {len(r)} in dimension {dim}: {line}")
        rays.append(r)
    return VRep(dim, tuple(rays))


def rational_pair(c) -> list[int]:
    c = Fraction(c)
    return [c.numerator, c.denominator]


def analysis_json(analysis) -> dict:
    """JSON-ready description of a :class:`~triangle_cone.analysis.ConeAnalysis`."""
    system = analysis.system
    facet_rows = set(analysis.reduction.kept)
    return {
        "family": analysis.root_system.name,
        "dimension": system.dimension,
        "equalities": [[rational_pair(c) for c in e] for e in system.equalities],
        "inequalities": [
            {
                "label": q.label,
                "parabolic": q.parabolic,
                "partition": q.partition,
                "permutation": list(q.permutation),
                "coeffs": [rational_pair(c) for c in q.coeffs],
            }
            for q in system.inequalities
        ],
        "facets": [
            {"label": q.label, "coeffs": [rational_pair(c) for c in q.coeffs]}
            for i, q in enumerate(system.inequalities)
            if i in facet_rows
        ],
        "rays": [list(r) for r in analysis.rays.rays],
    }


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


def write_text(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
