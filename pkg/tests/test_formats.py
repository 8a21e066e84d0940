import json
import re
from pathlib import Path

import pytest

from lattica import is_isomorphic
from lattica.corpus import pbz_corpus, standard_corpus
from lattica.dsl import evaluate
from lattica.errors import InputError
from lattica.formats import FIELDS, dumps, loads, to_dot
from lattica.involution import InvolutionStructure, lattice_of

GOLDEN = Path(__file__).parent / "golden"
CASES = {
    "square": "bool(2)",
    "m3": "m(3)",
    "kleene_step": "step(hsum(bool(2), bool(2)), kleene)",
    "aol_chain3": "aol(chain(3))",
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_json_golden(name):
    assert dumps(evaluate(CASES[name])) == (GOLDEN / f"{name}.json").read_text()


@pytest.mark.parametrize("name", sorted(CASES))
def test_dot_golden(name):
    assert to_dot(evaluate(CASES[name])) == (GOLDEN / f"{name}.dot").read_text()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_json_loads_to_same_structure(name):
    S = loads((GOLDEN / f"{name}.json").read_text())
    assert S == evaluate(CASES[name])


def _all_structures():
    return [e.structure for e in standard_corpus()] + [e.structure for e in pbz_corpus()]


def test_round_trip_identity_map():
    for S in _all_structures():
        T = loads(dumps(S))
        L, M = lattice_of(S), lattice_of(T)
        assert is_isomorphic(L, M) == tuple(range(L.n))
        assert T == S


def test_field_order():
    doc = json.loads(dumps(evaluate("aol(chain(3))")))
    assert list(doc) == [f for f in FIELDS if f in doc]
    assert list(doc) == ["n", "covers", "involution", "brouwer"]


EDGE = re.compile(r"^  n(\d+) -> n(\d+)(.*);$")
NODE = re.compile(r'^  n(\d+) \[label="[^"]*"\];$')


def test_dot_lists_exactly_the_covers():
    for S in _all_structures():
        L = lattice_of(S)
        lines = to_dot(S).splitlines()
        assert lines[0] == "digraph lattice {" and lines[-1] == "}"
        nodes, covers, dashed = [], [], []
        for line in lines[1:-1]:
            if line in ("  rankdir=BT;", "  node [shape=circle];"):
                continue
            m = NODE.match(line)
            if m:
                nodes.append(int(m.group(1)))
                continue
            m = EDGE.match(line)
            assert m, line
            pair = (int(m.group(1)), int(m.group(2)))
            if m.group(3):
                assert m.group(3) == " [style=dashed, dir=none, constraint=false]"
                dashed.append(pair)
            else:
                covers.append(pair)
        assert nodes == list(range(L.n))
        assert covers == list(L.covers())
        if isinstance(S, InvolutionStructure):
            assert {frozenset(p) for p in dashed} == {frozenset((x, S.inv[x])) for x in range(L.n)}
        else:
            assert dashed == []


def test_labels_round_trip():
    text = '{"n": 2, "covers": [[0, 1]], "labels": ["bot", "to\\"p"]}'
    L = loads(text)
    assert L.labels == ("bot", 'to"p')
    assert dumps(L) == text + "\n"
    assert 'label="to\\"p"' in to_dot(L)


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    '{"n": 2}',
    '{"n": 2, "covers": [[0, 1]], "extra": 1}',
    '{"n": "2", "covers": []}',
    '{"n": 2, "covers": [[0]]}',
    '{"n": 2, "covers": [[0, 1]], "brouwer": [1, 0]}',
    '{"n": 2, "covers": [[0, 1]], "involution": [0, 1]}',
    '{"n": 3, "covers": [[0, 1], [1, 2], [2, 0]]}',
])
def test_rejects_bad_documents(text):
    with pytest.raises(InputError):
        loads(text)


def test_field_order_free_on_input():
    S = loads('{"involution": [1, 0], "covers": [[0, 1]], "n": 2}')
    assert S.inv == (1, 0)
