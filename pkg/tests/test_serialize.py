"""Tests for the JSON instance-file formats."""

import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pcolor import (
    AbelianGroup,
    BlockDesign,
    BooleanFunction,
    Coloring,
    HadamardMatrix,
    Hypergraph,
    Multigraph,
    SubspaceDesign,
    enumerate_subspaces,
    fano,
    from_json,
    johnson,
    load,
    save,
    sylvester,
    to_json,
)
from pcolor.serialize import (
    coloring_to_json,
    groupset_to_json,
    multigraph_to_json,
    vertexset_to_json,
)
from pcolor.suites import maiorana_mcfarland


def roundtrip(obj, **kwargs):
    return from_json(json.loads(json.dumps(to_json(obj, **kwargs))))


def test_multigraph_roundtrip_dense_and_sparse():
    G = johnson(5, 2)
    assert roundtrip(G) == G
    assert roundtrip(G, sparse=True) == G
    doc = to_json(G, sparse=True)
    assert "nnz" in doc and "adj" not in doc


def test_multigraph_sparse_upper_triangle_only():
    G = Multigraph([[1, 2], [2, 0]])
    doc = to_json(G, sparse=True)
    assert doc["nnz"] == [[0, 0, 1], [0, 1, 2]]
    assert from_json(doc) == G


def test_multigraph_sparse_duplicate_pair_rejected():
    doc = {"type": "multigraph", "n": 2, "nnz": [[0, 1, 1], [1, 0, 1]]}
    with pytest.raises(ValueError):
        from_json(doc)


def test_multigraph_bad_docs():
    for doc in [
        {"type": "multigraph", "n": 2},
        {"type": "multigraph", "n": 2, "adj": [[0, 1]]},
        {"type": "multigraph", "n": 2, "adj": [[0, -1], [-1, 0]]},
        {"type": "multigraph", "n": 2, "nnz": [[0, 5, 1]]},
        {"type": "multigraph", "n": "2", "adj": [[0]]},
    ]:
        with pytest.raises(ValueError):
            from_json(doc)


def test_hypergraph_roundtrip():
    H = Hypergraph(4, [(0, 1, 2), (1, 2, 3)])
    H2 = roundtrip(H)
    assert H2.n == H.n and H2.edges == H.edges
    with pytest.raises(ValueError):
        from_json({"type": "hypergraph", "n": 3, "edges": [[0, 0]]})


def test_coloring_roundtrip():
    f = Coloring([0, 1, 2, 1, 0])
    assert roundtrip(f) == f
    # entries are plain ints, not numpy scalars
    doc = coloring_to_json(f)
    assert all(type(c) is int for c in doc["colors"])
    with pytest.raises(ValueError):
        from_json({"type": "coloring", "colors": [0, 2]})


def test_design_roundtrip():
    D = fano()
    D2 = roundtrip(D)
    assert (D2.n, D2.k, D2.t, D2.lam) == (7, 3, 2, 1)
    assert D2.blocks == D.blocks
    doc = to_json(D)
    assert doc["lambda"] == 1                    # spelled-out key
    with pytest.raises(ValueError):
        from_json({"type": "design", "n": 7, "k": 3, "t": 2, "blocks": [[0, 1, 2]]})


def test_boolfun_roundtrip():
    b = maiorana_mcfarland(4)
    assert roundtrip(b) == b
    doc = to_json(b)
    assert doc["tt"] == "".join(str(x) for x in b.tt.tolist())
    with pytest.raises(ValueError):
        from_json({"type": "boolfun", "n": 2, "tt": "01x0"})
    with pytest.raises(ValueError):
        from_json({"type": "boolfun", "n": 2, "tt": "010"})


def test_hadamard_roundtrip():
    H = sylvester(8)
    H2 = roundtrip(H)
    assert np.array_equal(H2.mat, H.mat)
    doc = to_json(H)
    assert doc["rows"][0] == "+" * 8
    with pytest.raises(ValueError):
        from_json({"type": "hadamard", "rows": ["+-", "+"]})
    with pytest.raises(ValueError):
        from_json({"type": "hadamard", "rows": ["+x", "-+"]})


def test_qdesign_roundtrip():
    subs = enumerate_subspaces(4, 2, 2)
    D = SubspaceDesign(n=4, k=2, t=1, lam=7, q=2, subspaces=subs)
    D2 = roundtrip(D)
    assert (D2.n, D2.k, D2.t, D2.lam, D2.q) == (4, 2, 1, 7, 2)
    assert [s.key() for s in D2.subspaces] == [s.key() for s in subs]


def test_groupset_roundtrip():
    K = AbelianGroup([2, 4])
    D = [(1, 0), (1, 2)]
    doc = groupset_to_json(K, D)
    K2, D2, params = from_json(doc)
    assert K2.orders == (2, 4) and D2 == D and params is None
    from pcolor import PDSParams
    doc_p = groupset_to_json(K, D, PDSParams(8, 2, 1, 0))
    _, _, params2 = from_json(doc_p)
    assert params2 == PDSParams(8, 2, 1, 0)
    with pytest.raises(ValueError) as exc:
        from_json({"type": "groupset", "orders": [5], "set": [[7]]})
    assert "not in the group" in str(exc.value)


def test_vertexset_roundtrip():
    doc = vertexset_to_json(10, [3, 1, 4])
    n, members = from_json(doc)
    assert n == 10 and members == [1, 3, 4]
    with pytest.raises(ValueError):
        from_json({"type": "vertexset", "n": 3, "set": [0, 0]})
    with pytest.raises(ValueError):
        from_json({"type": "vertexset", "n": 3, "set": [5]})


def test_from_json_dispatch_errors():
    with pytest.raises(ValueError):
        from_json({"type": "widget"})
    with pytest.raises(ValueError):
        from_json({"n": 3})
    with pytest.raises(ValueError):
        from_json([1, 2, 3])


def test_bool_is_not_an_int():
    with pytest.raises(ValueError):
        from_json({"type": "coloring", "colors": [False, True]})


def test_to_json_unknown_object():
    with pytest.raises(TypeError):
        to_json(object())


def test_load_save_identity(tmp_path):
    path = tmp_path / "g.json"
    G = johnson(5, 2)
    save(G, path)
    assert load(path) == G
    # byte-stable: saving the loaded object reproduces the file
    path2 = tmp_path / "g2.json"
    save(load(path), path2)
    assert path.read_bytes() == path2.read_bytes()
    # files end with a newline
    assert path.read_bytes().endswith(b"\n")


def test_save_accepts_plain_documents(tmp_path):
    path = tmp_path / "d.json"
    save({"type": "coloring", "colors": [0, 1]}, path)
    assert load(path) == Coloring([0, 1])


def test_load_rejects_bad_files(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{oops")
    with pytest.raises(ValueError) as exc:
        load(path)
    assert "not valid JSON" in str(exc.value)
    path.write_text('["not", "an", "object"]')
    with pytest.raises(ValueError):
        load(path)
    with pytest.raises(OSError):
        load(tmp_path / "missing.json")


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 6))
def test_random_multigraph_roundtrip(seed, n):
    from pcolor.suites import random_multigraph
    rng = np.random.default_rng(seed)
    G = random_multigraph(rng, n)
    assert roundtrip(G) == G
    assert roundtrip(G, sparse=True) == G


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=12))
def test_coloring_roundtrip_random(raw):
    seen = sorted(set(raw))
    relabel = {c: i for i, c in enumerate(seen)}
    f = Coloring([relabel[c] for c in raw])
    assert roundtrip(f) == f


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**8 - 1))
def test_boolfun_roundtrip_random(code):
    b = BooleanFunction([(code >> i) & 1 for i in range(8)])
    assert roundtrip(b) == b
