"""JSON interchange: exact scalars as grammar strings, no floats anywhere.

Parameter files:
    {"field": {"N": .., "q": ..}, "group": {"type": "GL", "n": 2},
     "format": "wd" | "ladic",
     "frobenius": [[scalar]], "inertia": [[[scalar]]], "monodromy": [[scalar]]}

SL2-format files replace the last three keys by "E", "H", "F", "frob0",
"inertia".  An optional "q_eff" records an unramified restriction.
"""

from __future__ import annotations

import json

from .linalg import Mat
from .params import ParamData, SL2Param
from .rootdata import build, dual, split_lgroup
from .scalars import FieldSpec, parse_scalar, render_scalar

PARAM_FORMATS = ("wd", "ladic", "sl2")


class JsonFormatError(ValueError):
    pass


def field_to_json(spec: FieldSpec) -> dict:
    return {"N": spec.N, "q": spec.q}


def field_from_json(data: dict) -> FieldSpec:
    return FieldSpec(int(data["N"]), int(data["q"]))


def matrix_to_json(m: Mat) -> list:
    return [[render_scalar(v) for v in row] for row in m.rows]


def matrix_from_json(data, spec: FieldSpec) -> Mat:
    return Mat(spec, [[parse_scalar(str(v), spec) for v in row] for row in data])


def group_descriptor(lg) -> dict:
    name = (dual(lg.datum).name or "").replace("(", " ").replace(")", "")
    kind, _, n = name.partition(" ")
    if not kind:
        raise JsonFormatError("parameter's group has no descriptor name")
    key = "r" if kind == "Torus" else "n"
    return {"type": kind, key: int(n)}


def param_to_json(p: ParamData, fmt: str = "ladic") -> dict:
    if fmt not in ("wd", "ladic"):
        raise JsonFormatError(f"format {fmt!r} is not a matrix-pair format")
    out = {
        "field": field_to_json(p.field),
        "group": group_descriptor(p.lgroup),
        "format": fmt,
        "frobenius": matrix_to_json(p.frobenius),
        "inertia": [matrix_to_json(g) for g in p.inertia],
        "monodromy": matrix_to_json(p.monodromy),
    }
    if p.q != p.field.q:
        out["q_eff"] = p.q
    return out


def sl2_to_json(sp: SL2Param) -> dict:
    out = {
        "field": field_to_json(sp.field),
        "group": group_descriptor(sp.lgroup),
        "format": "sl2",
        "E": matrix_to_json(sp.e),
        "H": matrix_to_json(sp.h),
        "F": matrix_to_json(sp.f),
        "frob0": matrix_to_json(sp.frob0),
        "inertia": [matrix_to_json(g) for g in sp.inertia],
    }
    if sp.q != sp.field.q:
        out["q_eff"] = sp.q
    return out


def param_from_json(data: dict):
    """Returns (format, ParamData | SL2Param)."""
    fmt = data.get("format", "ladic")
    if fmt not in PARAM_FORMATS:
        raise JsonFormatError(f"unknown parameter format {fmt!r}")
    spec = field_from_json(data["field"])
    group = build(data["group"])
    lg = split_lgroup(dual(group))
    q_eff = int(data.get("q_eff", spec.q))
    if fmt == "sl2":
        sp = SL2Param(
            lg,
            spec,
            matrix_from_json(data["E"], spec),
            matrix_from_json(data["H"], spec),
            matrix_from_json(data["F"], spec),
            matrix_from_json(data["frob0"], spec),
            tuple(matrix_from_json(g, spec) for g in data.get("inertia", [])),
            q_eff,
        )
        return fmt, sp
    p = ParamData(
        lg,
        spec,
        matrix_from_json(data["frobenius"], spec),
        tuple(matrix_from_json(g, spec) for g in data.get("inertia", [])),
        matrix_from_json(data["monodromy"], spec),
        q_eff,
    )
    return fmt, p


def load_param(path: str):
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise JsonFormatError(f"{path}: invalid JSON at line {exc.lineno}, "
                                  f"column {exc.colno}") from exc
    return param_from_json(data)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
