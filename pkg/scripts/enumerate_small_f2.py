#!/usr/bin/env python3
"""Exhaustive mod-2 cross-checks of the linear solvers.

Re-runs the enumerations behind the acceptance suite and prints the counts:
for each solved space, every candidate bit vector is tested against the raw
defining identities (implemented independently in tests/oracles.py) and the
verdict is compared with subspace membership.
"""
from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import oracles as O  # noqa: E402

from lbxmod import GF2  # noqa: E402
from lbxmod.action import ActionData, validate_action  # noqa: E402
from lbxmod.bider import bider_algebra, bider_qn, bider_xmod  # noqa: E402
from lbxmod.catalog import build_entry  # noqa: E402


def check_pairs(aid: str) -> None:
    alg = build_entry(aid, GF2)
    space = bider_algebra(alg)
    table = O.ints_of_table(alg)
    n = alg.dim
    members = disagreements = 0
    for bits in itertools.product((0, 1), repeat=2 * n * n):
        d, dd = O.unpack_bits(bits, ((n, n), (n, n)))
        expected = O.is_bider_pair(table, d, dd, n)
        got = space.space.contains(tuple(GF2.coerce(b) for b in bits))
        disagreements += got != expected
        members += expected
    total = 4 ** (n * n)
    print(f"pairs({aid}): {members}/{total} solutions, solver dim {space.dim}, "
          f"{disagreements} disagreements")


def check_inclusion_spaces() -> None:
    x = build_entry("l2-ann-incl", GF2)
    nd, qd = x.top.dim, x.base.dim
    ntab, qtab = O.ints_of_table(x.top), O.ints_of_table(x.base)
    left, right = O.ints_of_action(x.action)
    mu = O.ints_of_matrix(x.boundary)

    space = bider_qn(x)
    members = disagreements = 0
    for bits in itertools.product((0, 1), repeat=2 * nd * qd):
        d, dd = O.unpack_bits(bits, ((nd, qd), (nd, qd)))
        expected = O.is_action_pair(qtab, left, right, d, dd, qd, nd)
        got = space.space.contains(tuple(GF2.coerce(b) for b in bits))
        disagreements += got != expected
        members += expected
    print(f"action pairs(l2-ann-incl): {members}/{2 ** (2 * nd * qd)} solutions, "
          f"solver dim {space.dim}, {disagreements} disagreements")

    space = bider_xmod(x)
    members = disagreements = 0
    width = 2 * nd * nd + 2 * qd * qd
    for bits in itertools.product((0, 1), repeat=width):
        s1, t1, s2, t2 = O.unpack_bits(bits, ((nd, nd), (nd, nd), (qd, qd), (qd, qd)))
        expected = O.is_quadruple(ntab, qtab, left, right, mu, s1, t1, s2, t2, nd, qd)
        got = space.space.contains(tuple(GF2.coerce(b) for b in bits))
        disagreements += got != expected
        members += expected
    print(f"quadruples(l2-ann-incl): {members}/{2 ** width} solutions, "
          f"solver dim {space.dim}, {disagreements} disagreements")


def check_action_validator() -> None:
    p = build_entry("a1", GF2)
    m = build_entry("l2", GF2)
    ptab, mtab = O.ints_of_table(p), O.ints_of_table(m)
    valid = disagreements = 0
    for bits in itertools.product((0, 1), repeat=8):
        lb, rb = bits[:4], bits[4:]
        left = (((lb[0], lb[1]), (lb[2], lb[3])),)
        right = (((rb[0], rb[1]),), ((rb[2], rb[3]),))
        act = ActionData.build(
            p, m,
            left=[[[lb[0], lb[1]], [lb[2], lb[3]]]],
            right=[[[rb[0], rb[1]]], [[rb[2], rb[3]]]],
        )
        got = validate_action(act).ok
        disagreements += got != O.is_action(mtab, ptab, left, right, 2, 1)
        valid += got
    print(f"actions(a1 on l2): {valid}/256 valid fillings, {disagreements} disagreements")


if __name__ == "__main__":
    for aid in ("a2", "l2", "r2"):
        check_pairs(aid)
    check_inclusion_spaces()
    check_action_validator()
