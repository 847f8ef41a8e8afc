"""Smoke tests for the python bindings: one pass over every exposed
operation, with the numbers pinned by the C++ test suite."""

import pytest

import mntkit as mk


def test_graph_basics():
    g = mk.Graph(5)
    for u, v in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]:
        g.add_edge(u, v)
    assert g.vertex_count() == 5
    assert g.edge_count() == 5
    assert g.degrees() == [2, 2, 2, 2, 2]
    assert g.girth() == 5
    assert g.is_connected() and g.is_two_connected()
    assert g.neighbors(0) == [1, 4]
    assert (0, 2) in g.nonedges()
    sub, old_to_new = g.delete_vertex(2)
    assert sub.vertex_count() == 4 and old_to_new[2] == -1
    assert "Graph(n=5" in repr(g)
    with pytest.raises(ValueError):
        g.add_edge(0, 9)


def test_graph6_roundtrip():
    pet = mk.petersen().graph
    record = mk.to_graph6(pet)
    assert mk.from_graph6(record) == pet
    with pytest.raises(RuntimeError):
        mk.from_graph6("D?\x7f")


def test_blocks():
    pet = mk.petersen()
    assert pet.graph.vertex_count() == 10 and pet.graph.is_cubic()
    assert sorted(pet.exits) == sorted(pet.graph.neighbors(pet.opened_at))
    assert mk.coxeter().graph.vertex_count() == 28
    j5 = mk.flower_snark(5)
    assert j5.graph.vertex_count() == 20 and j5.graph.girth() == 5
    assert mk.flower_snark(7).graph.girth() == 6
    with pytest.raises(ValueError):
        mk.flower_snark(4)
    square = mk.Graph(4)
    for u, v in [(0, 1), (1, 2), (2, 3), (3, 0)]:
        square.add_edge(u, v)
    with pytest.raises(ValueError):
        mk.make_block("square", square, 0, (1, 2, 3))


def test_solvers_agree():
    g = mk.Graph(6)
    for u, v in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]:
        g.add_edge(u, v)
    for kind in ("path", "cycle"):
        a = mk.solve(g, kind=kind)
        b = mk.oracle_solve(g, kind=kind)
        assert a["verdict"] == b["verdict"] == "found"
        assert mk.validate_witness(g, a["witness"], kind=kind)
    pinned = mk.solve(g, kind="path", start=0, end=3)
    assert pinned["verdict"] == "none" and pinned["completed"]
    assert mk.is_hamiltonian(g) is True
    assert mk.is_traceable(g, budget=0) is None
    with pytest.raises(ValueError):
        mk.solve(g, kind="walk")


def test_mhh_and_construction():
    pet = mk.petersen()
    mhh = mk.is_mhh(pet.graph)
    assert mhh.certified and mhh.record_count == 41
    assert mk.condition_C(pet).certified
    inf = mk.k4_inflate(pet, pet, pet)
    assert inf.graph.vertex_count() == 28
    assert inf.block_names == ["petersen", "petersen", "petersen"]
    assert inf.hub == 0 and inf.graph.degree(inf.hub) == 3
    cert = mk.certify_cubic_mnt(inf.graph, workers=2)
    assert cert.certified and cert.record_count == 342
    assert inf.graph.edge_count() == mk.edge_bound(28, 0) == 42
    assert mk.bound_check(inf.graph, cert)
    sweep = mk.lemma_subgraph_sweep(inf.graph, cert, 3)
    assert sweep["all_hold"] and sweep["counterexample"] == []
    report = mk.deg2_structure_check(inf.graph)
    assert report["ok"] and report["violations"] == []
    orders = mk.achievable_orders(40)
    assert orders[28] == [["petersen", "petersen", "petersen"]]
    assert 38 in orders


def test_certificate_replay():
    pet = mk.petersen().graph
    cert = mk.is_mhh(pet)
    text = cert.to_jsonl()
    parsed = mk.read_jsonl(text)
    assert parsed.claim == cert.claim == "mhh:" + mk.graph_hash(pet)
    assert mk.replay(pet, parsed)["ok"]
    assert len(parsed.witnesses) == 40 and len(parsed.attestations) == 1
    assert parsed.attestations[0]["completed"] is True
    # drop a record: coverage is no longer exact
    clipped = mk.read_jsonl("\n".join(text.splitlines()[:-1]))
    outcome = mk.replay(pet, clipped)
    assert not outcome["ok"] and "missing" in outcome["message"]
    with pytest.raises(RuntimeError):
        mk.read_jsonl("not json\n")


def test_min_search():
    r = mk.exhaustive_min_search(6)
    assert r["min_size"] == 9 and len(r["extremal"]) == 1
    extremal = r["extremal"][0]
    assert mk.is_mnt(extremal).certified
    assert mk.deg2_structure_check(extremal)["ok"]
    assert mk.exhaustive_min_search(5)["min_size"] is None
    with pytest.raises(ValueError):
        mk.exhaustive_min_search(8)


def test_dot_export():
    g = mk.Graph(3)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    text = mk.to_dot(g, name="toy", comments=["hand-made"],
                     fillcolor={1: "gold"}, note={1: "hub"})
    assert "graph toy {" in text
    assert 'fillcolor="gold"' in text and "1 hub" in text
