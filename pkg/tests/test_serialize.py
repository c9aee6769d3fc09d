"""JSON round trips for every object kind, plus rejection of bad payloads."""
import json

import pytest
from conftest import FIELDS

from lbxmod import InputDataError
from lbxmod.catalog import CATALOG, build_entry
from lbxmod.fields import GF3, QQ
from lbxmod.serialize import (
    action_from_json,
    action_to_json,
    actor_morphism_from_json,
    actor_morphism_to_json,
    algebra_from_json,
    algebra_to_json,
    load_any,
    matrix_from_json,
    matrix_to_json,
    sequence_from_json,
    sequence_to_json,
    sniff_kind,
    xaction_from_json,
    xaction_to_json,
    xmod_from_json,
    xmod_to_json,
)
from lbxmod.xaction import morphism_from_action

TO_JSON = {
    "algebra": algebra_to_json,
    "action": action_to_json,
    "xmod": xmod_to_json,
    "xaction": xaction_to_json,
    "sequence": sequence_to_json,
}
FROM_JSON = {
    "algebra": algebra_from_json,
    "action": action_from_json,
    "xmod": xmod_from_json,
    "xaction": xaction_from_json,
    "sequence": sequence_from_json,
}


@pytest.mark.parametrize("cid", sorted(CATALOG))
def test_every_catalog_entry_round_trips(cid, field):
    kind = CATALOG[cid].kind
    obj = build_entry(cid, field)
    blob = TO_JSON[kind](obj)
    # force a real serialization pass: through text and back
    blob = json.loads(json.dumps(blob))
    assert sniff_kind(blob) == kind
    again = FROM_JSON[kind](field, blob)
    assert again == obj
    kind2, parsed = load_any(field, blob)
    assert kind2 == kind and parsed == obj


def test_morphism_round_trip():
    fm = morphism_from_action(build_entry("sl2-self", QQ)).morphism
    blob = json.loads(json.dumps(actor_morphism_to_json(fm)))
    assert sniff_kind(blob) == "morphism"
    assert actor_morphism_from_json(QQ, blob) == fm


def test_rational_scalars_serialize_as_strings():
    alg = build_entry("sl2", QQ)
    blob = algebra_to_json(alg)
    flat = json.dumps(blob)
    assert '"-2"' in flat  # the e-h bracket coefficient, as a string
    assert algebra_from_json(QQ, json.loads(flat)) == alg


def test_prime_field_scalars_are_plain_ints():
    alg = build_entry("sl2", GF3)
    blob = algebra_to_json(alg)
    for _, _, cells in blob["brackets"]:
        for _, coeff in cells:
            assert isinstance(coeff, int) and 0 <= coeff < 3


def test_field_tag_mismatch_is_rejected():
    blob = algebra_to_json(build_entry("l2", QQ))
    blob["field"] = "q"  # root tag, honored by load_any and the CLI
    with pytest.raises(InputDataError):
        load_any(GF3, blob)
    assert load_any(QQ, blob)[0] == "algebra"


def test_duplicate_bracket_entries_are_rejected():
    blob = algebra_to_json(build_entry("l2", QQ))
    blob["brackets"].append(blob["brackets"][0])
    with pytest.raises(InputDataError):
        algebra_from_json(QQ, blob)


def test_matrix_shape_mismatch_is_rejected():
    m = build_entry("l2-ann-incl", QQ).boundary
    blob = matrix_to_json(m)
    blob["entries"] = blob["entries"][:1]
    with pytest.raises(InputDataError):
        matrix_from_json(QQ, blob)


def test_bad_scalar_strings_are_rejected():
    blob = algebra_to_json(build_entry("l2", QQ))
    blob["brackets"][0][2][0][1] = "one half"
    with pytest.raises(InputDataError):
        algebra_from_json(QQ, blob)


def test_unrecognizable_payloads_are_rejected():
    with pytest.raises(InputDataError):
        sniff_kind({"field": "q", "surprise": 1})
    with pytest.raises(InputDataError):
        load_any(QQ, ["not", "an", "object"])


def test_tensor_shape_mismatch_is_rejected():
    blob = xaction_to_json(build_entry("sl2-self", QQ))
    blob["xi1"][0] = blob["xi1"][0][:1]
    with pytest.raises(InputDataError):
        xaction_from_json(QQ, blob)


def test_algebra_names_survive_the_round_trip():
    sl2 = build_entry("sl2", QQ)
    assert sl2.names == ("e", "h", "f")
    blob = algebra_to_json(sl2)
    assert blob["names"] == ["e", "h", "f"]
    assert algebra_from_json(QQ, blob).names == ("e", "h", "f")
    from lbxmod.algebra import LeibnizAlgebra

    nameless = LeibnizAlgebra.from_brackets(QQ, 2, {})
    assert "names" not in algebra_to_json(nameless)
