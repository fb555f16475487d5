"""JSON readers and writers for polygons, scaffoldings and results.

Rationals are written as strings "p/q" so nothing passes through floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .catalog import FamilyRecord, Model
from .errors import DegenerateInput, InvalidScaffolding
from .polygon import LatticePolygon, QuotientSingularity, SingularityContent, convex_hull
from .scaffolding import STANDARD_FRAME, GitData, Scaffolding


def _load(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def polygon_from_json(data: Any) -> tuple[LatticePolygon, bool]:
    """Parse {"vertices": [[x, y], ...]}; the flag says whether the input was already its hull."""
    try:
        pts = [(int(x), int(y)) for x, y in data["vertices"]]
        if any(not isinstance(c, int) for v in data["vertices"] for c in v):
            raise TypeError
    except (KeyError, TypeError, ValueError) as e:
        raise DegenerateInput(f'polygon JSON needs {{"vertices": [[x, y], ...]}} with integers ({e!r})') from None
    P = convex_hull(pts)
    return P, len(set(pts)) == len(pts) and set(pts) == set(P.vertices)


def read_polygon(path: str | Path) -> tuple[LatticePolygon, bool]:
    return polygon_from_json(_load(path))


def polygon_to_json(P: LatticePolygon) -> dict:
    return {"vertices": P.as_lists()}


def scaffolding_from_json(data: Any) -> Scaffolding:
    try:
        struts = [
            (list(s["coeffs"]), list(s.get("chi", [])), bool(s.get("uneliminated", False)))
            for s in data["struts"]
        ]
        return Scaffolding.build(data["shape"], int(data.get("splitting_u", 0)), struts,
                                 data.get("frame", STANDARD_FRAME))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidScaffolding(f"malformed scaffolding JSON ({e!r})") from None


def read_scaffolding(path: str | Path) -> Scaffolding:
    return scaffolding_from_json(_load(path))


def scaffolding_to_json(S: Scaffolding) -> dict:
    out: dict[str, Any] = {
        "shape": list(S.shape.factor_dims),
        "splitting_u": S.u,
        "struts": [
            {"coeffs": list(s.divisor.coefficients), "chi": list(s.chi), "uneliminated": s.uneliminated}
            for s in S.struts
        ],
    }
    if S.frame != STANDARD_FRAME:
        out["frame"] = [list(f) for f in S.frame]
    return out


def frac(x: Fraction | int) -> str:
    return str(Fraction(x))


def singularity_to_json(s: QuotientSingularity) -> str:
    return f"1/{s.R}(1,{s.c})"


def content_to_json(c: SingularityContent) -> dict:
    return {"n": c.n, "basket": [singularity_to_json(s) for s in c.basket]}


def git_to_json(g: GitData) -> dict:
    return {
        "weight_matrix": [list(r) for r in g.weight_matrix],
        "stability": list(g.stability),
        "equation_degrees": [list(d) for d in g.equation_degrees],
    }


def model_to_json(m: Model) -> dict:
    return {
        "weights": [list(r) for r in m.weights],
        "degrees": [list(d) for d in m.degrees],
        "binomials": list(m.binomials),
        "note": m.note,
        "description": m.describe(),
    }


def record_to_json(rec: FamilyRecord) -> dict:
    return {
        "id": rec.id,
        "k": rec.k,
        "l": rec.l,
        "polygon": polygon_to_json(rec.polygon),
        "degree": frac(rec.degree),
        "fano_index": rec.fano_index,
        "is_toric": rec.is_toric,
        "singularity_content": content_to_json(rec.basket),
        "model": model_to_json(rec.model),
        "alternative_models": [model_to_json(m) for m in rec.alternative_models],
        "scaffolding": scaffolding_to_json(rec.scaffolding) if rec.scaffolding else None,
        "printed_matrix": git_to_json(rec.paper_matrix) if rec.paper_matrix else None,
        "quasismooth_claim": rec.quasismooth_claim,
        "notes": list(rec.notes),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)
