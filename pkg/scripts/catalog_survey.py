#!/usr/bin/env python3
"""Survey every catalog entry over Q, F2 and F3.

Prints one line per (field, entry): validity plus the dimensions that
characterize it (annihilator/commutator for algebras, actor/inner/outer
layers for crossed modules).  Handy as a smoke test and as a quick map of
the built-in examples.
"""
from __future__ import annotations

import argparse

from lbxmod import GF2, GF3, QQ
from lbxmod.action import validate_action
from lbxmod.algebra import annihilator, commutator, validate_leibniz
from lbxmod.bider import actor, inner_xmod, outer_xmod, sequence_problems
from lbxmod.catalog import CATALOG, build_entry
from lbxmod.xaction import validate_xmod_action
from lbxmod.xmod import validate_xmod

FIELDS = {"q": QQ, "f2": GF2, "f3": GF3}


def describe(kind: str, obj) -> tuple[bool, str]:
    if kind == "algebra":
        ok = validate_leibniz(obj).ok
        return ok, f"dim={obj.dim} ann={annihilator(obj).dim} comm={commutator(obj).dim}"
    if kind == "action":
        return validate_action(obj).ok, f"actor_dim={obj.actor.dim} target_dim={obj.target.dim}"
    if kind == "xmod":
        ok = validate_xmod(obj).ok
        a = actor(obj)
        inn = inner_xmod(obj)
        out = outer_xmod(obj)
        return ok, (
            f"layers=({obj.top.dim},{obj.base.dim}) actor=({a.top.dim},{a.base.dim}) "
            f"inner=({inn.top_space.dim},{inn.base_space.dim}) "
            f"outer=({out.xmod.top.dim},{out.xmod.base.dim})"
        )
    if kind == "xaction":
        report = validate_xmod_action(obj)
        note = "clean" if report.ok else ",".join(sorted(set(report.labels())))
        return report.ok, f"labels={note}"
    problems = sequence_problems(obj)
    return not problems, f"exact={'yes' if not problems else '; '.join(problems)}"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", default="q,f2,f3", help="comma-separated field tags")
    args = ap.parse_args()

    for tag in args.fields.split(","):
        f = FIELDS[tag.strip()]
        print(f"== field {f!r} ==")
        for cid, entry in CATALOG.items():
            obj = build_entry(cid, f)
            ok, detail = describe(entry.kind, obj)
            mark = "ok " if ok else "FAIL"
            print(f"  [{mark}] {cid:16s} {entry.kind:8s} {detail}")
        print()


if __name__ == "__main__":
    main()
