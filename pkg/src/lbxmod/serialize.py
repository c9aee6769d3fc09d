"""JSON (de)serialization for every object the CLI reads or writes.

All scalars are exact: rationals as canonical strings ("3", "-2/5"),
prime-field residues as integers in [0, p).  Structure tables are sparse and
sorted, matrices dense with explicit shapes, so serialization is a bijection
on canonical objects: ``from_json(to_json(x)) == x``.
"""

from __future__ import annotations

from typing import Any, Optional, Sequence

from .action import ActionData, Tensor
from .algebra import LeibnizAlgebra
from .bider import ShortExactSequence
from .fields import Field, InputDataError, Scalar
from .linalg import Matrix, Subspace
from .xaction import ActorMorphism, XModActionData
from .xmod import CrossedModule, XModMorphism


def check_field_tag(obj: Any, field: Field) -> None:
    """Inputs may carry a root "field" key; it must match the active field."""
    if isinstance(obj, dict) and "field" in obj and obj["field"] != field.tag:
        raise InputDataError(
            f"file was written for field {obj['field']!r} but {field.tag!r} was requested")


# -- matrices and vectors -----------------------------------------------


def matrix_to_json(m: Matrix) -> dict:
    f = m.field
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[f.scalar_to_json(x) for x in row] for row in m.entries],
    }


def matrix_from_json(field: Field, obj: Any) -> Matrix:
    if not isinstance(obj, dict) or not {"rows", "cols", "entries"} <= set(obj):
        raise InputDataError("matrix object needs rows, cols and entries")
    rows, cols = obj["rows"], obj["cols"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows >= 0 and cols >= 0):
        raise InputDataError("matrix dimensions must be non-negative integers")
    data = obj["entries"]
    if not isinstance(data, list) or len(data) != rows:
        raise InputDataError("matrix entries do not match the declared row count")
    parsed = []
    for row in data:
        if not isinstance(row, list) or len(row) != cols:
            raise InputDataError("matrix entries do not match the declared column count")
        parsed.append(tuple(field.parse_scalar(x) for x in row))
    return Matrix(field, rows, cols, tuple(parsed))


def vector_to_json(field: Field, v: Sequence[Scalar]) -> list:
    return [field.scalar_to_json(x) for x in v]


def subspace_to_json(s: Subspace) -> dict:
    f = s.field
    return {
        "ambient_dim": s.ambient,
        "dim": s.dim,
        "basis": [[f.scalar_to_json(x) for x in row] for row in s.basis.entries],
    }


# -- algebras -------------------------------------------------------------


def algebra_to_json(a: LeibnizAlgebra) -> dict:
    f = a.field
    brackets = []
    for i in range(a.dim):
        for j in range(a.dim):
            terms = [[k, f.scalar_to_json(c)] for k, c in enumerate(a.table[i][j]) if c]
            if terms:
                brackets.append([i, j, terms])
    out: dict = {"dim": a.dim}
    if a.names is not None:
        out["names"] = list(a.names)
    out["brackets"] = brackets
    return out


def algebra_from_json(field: Field, obj: Any) -> LeibnizAlgebra:
    if not isinstance(obj, dict) or "dim" not in obj or "brackets" not in obj:
        raise InputDataError("algebra object needs dim and brackets")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise InputDataError("algebra dim must be a non-negative integer")
    names = obj.get("names")
    if names is not None:
        if not isinstance(names, list) or len(names) != dim or not all(isinstance(s, str) for s in names):
            raise InputDataError("algebra names must be a list of dim strings")
    sparse: dict[tuple[int, int], dict[int, Scalar]] = {}
    if not isinstance(obj["brackets"], list):
        raise InputDataError("algebra brackets must be a list")
    for item in obj["brackets"]:
        if not (isinstance(item, list) and len(item) == 3 and isinstance(item[0], int)
                and isinstance(item[1], int) and isinstance(item[2], list)):
            raise InputDataError(f"bad bracket entry {item!r}")
        i, j, terms = item
        if (i, j) in sparse:
            raise InputDataError(f"duplicate bracket entry for ({i}, {j})")
        parsed: dict[int, Scalar] = {}
        for term in terms:
            if not (isinstance(term, list) and len(term) == 2 and isinstance(term[0], int)):
                raise InputDataError(f"bad bracket term {term!r}")
            k, c = term
            if k in parsed:
                raise InputDataError(f"duplicate bracket target {k} in entry ({i}, {j})")
            parsed[k] = field.parse_scalar(c)
        sparse[(i, j)] = parsed
    return LeibnizAlgebra.from_brackets(field, dim, sparse, names)


# -- action tensors --------------------------------------------------------


def tensor_to_json(field: Field, t: Tensor) -> list:
    return [[[field.scalar_to_json(x) for x in vec] for vec in row] for row in t]


def tensor_from_json(field: Field, obj: Any, d0: int, d1: int, d2: int) -> Tensor:
    if not isinstance(obj, list) or len(obj) != d0:
        raise InputDataError(f"tensor must have {d0} outer entries")
    out = []
    for row in obj:
        if not isinstance(row, list) or len(row) != d1:
            raise InputDataError(f"tensor rows must have {d1} entries")
        new_row = []
        for vec in row:
            if not isinstance(vec, list) or len(vec) != d2:
                raise InputDataError(f"tensor vectors must have {d2} entries")
            new_row.append(tuple(field.parse_scalar(x) for x in vec))
        out.append(tuple(new_row))
    return tuple(out)


def action_block_to_json(d: ActionData) -> dict:
    f = d.actor.field
    return {"left": tensor_to_json(f, d.left), "right": tensor_to_json(f, d.right)}


def _action_block_from_json(field: Field, obj: Any, actor: LeibnizAlgebra,
                            target: LeibnizAlgebra) -> ActionData:
    if not isinstance(obj, dict) or "left" not in obj or "right" not in obj:
        raise InputDataError("action block needs left and right tensors")
    left = tensor_from_json(field, obj["left"], actor.dim, target.dim, target.dim)
    right = tensor_from_json(field, obj["right"], target.dim, actor.dim, target.dim)
    return ActionData(actor, target, left, right)


def action_to_json(d: ActionData) -> dict:
    f = d.actor.field
    return {
        "actor": algebra_to_json(d.actor),
        "target": algebra_to_json(d.target),
        "left": tensor_to_json(f, d.left),
        "right": tensor_to_json(f, d.right),
    }


def action_from_json(field: Field, obj: Any) -> ActionData:
    if not isinstance(obj, dict) or not {"actor", "target", "left", "right"} <= set(obj):
        raise InputDataError("action object needs actor, target, left, right")
    actor = algebra_from_json(field, obj["actor"])
    target = algebra_from_json(field, obj["target"])
    left = tensor_from_json(field, obj["left"], actor.dim, target.dim, target.dim)
    right = tensor_from_json(field, obj["right"], target.dim, actor.dim, target.dim)
    return ActionData(actor, target, left, right)


# -- crossed modules -------------------------------------------------------


def xmod_to_json(x: CrossedModule) -> dict:
    return {
        "top": algebra_to_json(x.top),
        "base": algebra_to_json(x.base),
        "boundary": matrix_to_json(x.boundary),
        "action": action_block_to_json(x.action),
    }


def xmod_from_json(field: Field, obj: Any) -> CrossedModule:
    if not isinstance(obj, dict) or not {"top", "base", "boundary", "action"} <= set(obj):
        raise InputDataError("crossed module object needs top, base, boundary, action")
    top = algebra_from_json(field, obj["top"])
    base = algebra_from_json(field, obj["base"])
    boundary = matrix_from_json(field, obj["boundary"])
    act = _action_block_from_json(field, obj["action"], base, top)
    return CrossedModule(top, base, boundary, act)


# -- crossed-module actions --------------------------------------------------


def xaction_to_json(d: XModActionData) -> dict:
    f = d.field
    return {
        "actor_xmod": xmod_to_json(d.actor_xmod),
        "target_xmod": xmod_to_json(d.target_xmod),
        "p_on_n": action_block_to_json(d.act_on_top),
        "p_on_q": action_block_to_json(d.act_on_base),
        "xi1": tensor_to_json(f, d.cross_mq),
        "xi2": tensor_to_json(f, d.cross_qm),
    }


def xaction_from_json(field: Field, obj: Any) -> XModActionData:
    needed = {"actor_xmod", "target_xmod", "p_on_n", "p_on_q", "xi1", "xi2"}
    if not isinstance(obj, dict) or not needed <= set(obj):
        raise InputDataError("crossed-module action object needs " + ", ".join(sorted(needed)))
    x = xmod_from_json(field, obj["actor_xmod"])
    y = xmod_from_json(field, obj["target_xmod"])
    pn = _action_block_from_json(field, obj["p_on_n"], x.base, y.top)
    pq = _action_block_from_json(field, obj["p_on_q"], x.base, y.base)
    cross_mq = tensor_from_json(field, obj["xi1"], x.top.dim, y.base.dim, y.top.dim)
    cross_qm = tensor_from_json(field, obj["xi2"], y.base.dim, x.top.dim, y.top.dim)
    return XModActionData(x, y, pn, pq, cross_mq, cross_qm)


# -- morphisms and sequences ---------------------------------------------------


def actor_morphism_to_json(fm: ActorMorphism) -> dict:
    return {
        "source": xmod_to_json(fm.source),
        "actor_of": xmod_to_json(fm.around),
        "top_map": matrix_to_json(fm.top_map),
        "base_map": matrix_to_json(fm.base_map),
    }


def actor_morphism_from_json(field: Field, obj: Any) -> ActorMorphism:
    needed = {"source", "actor_of", "top_map", "base_map"}
    if not isinstance(obj, dict) or not needed <= set(obj):
        raise InputDataError("morphism object needs " + ", ".join(sorted(needed)))
    source = xmod_from_json(field, obj["source"])
    around = xmod_from_json(field, obj["actor_of"])
    top_map = matrix_from_json(field, obj["top_map"])
    base_map = matrix_from_json(field, obj["base_map"])
    return ActorMorphism(source, around, top_map, base_map)


def morphism_maps_to_json(f: XModMorphism) -> dict:
    return {"top_map": matrix_to_json(f.top_map), "base_map": matrix_to_json(f.base_map)}


def sequence_to_json(s: ShortExactSequence) -> dict:
    return {
        "first": xmod_to_json(s.first),
        "middle": xmod_to_json(s.middle),
        "last": xmod_to_json(s.last),
        "include": morphism_maps_to_json(s.include),
        "project": morphism_maps_to_json(s.project),
    }


def sequence_from_json(field: Field, obj: Any) -> ShortExactSequence:
    needed = {"first", "middle", "last", "include", "project"}
    if not isinstance(obj, dict) or not needed <= set(obj):
        raise InputDataError("sequence object needs " + ", ".join(sorted(needed)))
    first = xmod_from_json(field, obj["first"])
    middle = xmod_from_json(field, obj["middle"])
    last = xmod_from_json(field, obj["last"])

    def maps(sub: Any, source: CrossedModule, target: CrossedModule) -> XModMorphism:
        if not isinstance(sub, dict) or "top_map" not in sub or "base_map" not in sub:
            raise InputDataError("sequence morphisms need top_map and base_map")
        return XModMorphism(source, target,
                            matrix_from_json(field, sub["top_map"]),
                            matrix_from_json(field, sub["base_map"]))

    return ShortExactSequence(first, middle, last,
                              maps(obj["include"], first, middle),
                              maps(obj["project"], middle, last))


# -- kind sniffing --------------------------------------------------------------


def sniff_kind(obj: Any) -> str:
    """Classify an input object by its structural keys."""
    if not isinstance(obj, dict):
        raise InputDataError("input must be a JSON object")
    if "xi1" in obj:
        return "xaction"
    if "middle" in obj:
        return "sequence"
    if "actor_of" in obj:
        return "morphism"
    if "boundary" in obj:
        return "xmod"
    if "actor" in obj and "left" in obj:
        return "action"
    if "brackets" in obj:
        return "algebra"
    raise InputDataError("cannot recognize the input object kind from its keys")


def load_any(field: Field, obj: Any):
    """Sniff and parse; returns (kind, parsed object)."""
    check_field_tag(obj, field)
    kind = sniff_kind(obj)
    parser = {
        "algebra": algebra_from_json,
        "xmod": xmod_from_json,
        "action": action_from_json,
        "xaction": xaction_from_json,
        "morphism": actor_morphism_from_json,
        "sequence": sequence_from_json,
    }[kind]
    return kind, parser(field, obj)
