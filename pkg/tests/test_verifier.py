import random

import pytest

from digraph_subdiv import (Dipath, build_subdivision, extract_core, max_disjoint_paths, parse_certificate,
                            verify_certificate, verify_core, verify_disjoint_family)
from digraph_subdiv.errors import ParseError
from digraph_subdiv.generators import complete_digraph, random_out_regular, two_cliques_bottleneck

from mutations import CLASSES, mutate


@pytest.fixture(scope="module")
def k10_cert():
    g = complete_digraph(10)
    return g, build_subdivision(g, order=3).certificate


@pytest.fixture(scope="module")
def sparse_cert():
    g = random_out_regular(60, 8, 1)
    return g, parse_certificate(build_subdivision(g, order=5).certificate.to_text())


def test_valid_certificate(k10_cert):
    g, cert = k10_cert
    assert verify_certificate(g, cert) == []
    assert verify_certificate(g, cert.to_text()) == []


def test_branch_as_inner(k10_cert):
    g, cert = k10_cert
    parsed = parse_certificate(cert.to_text())
    u, v, _ = parsed.paths[0]
    other = next(b for b in parsed.branch if b not in (u, v))
    parsed.paths[0] = (u, v, [other])
    kinds = {x.kind for x in verify_certificate(g, parsed)}
    assert "branch-as-inner" in kinds


def test_missing_pair(k10_cert):
    g, cert = k10_cert
    parsed = parse_certificate(cert.to_text())
    dropped = parsed.paths.pop()
    found = verify_certificate(g, parsed)
    assert [(x.kind, x.pair) for x in found] == [("missing-pair", dropped[:2])]


def test_order_mismatch(k10_cert):
    g, cert = k10_cert
    parsed = parse_certificate(cert.to_text())
    parsed.graph_order = 11
    assert [x.kind for x in verify_certificate(g, parsed)] == ["order-mismatch"]


def test_all_violations_collected(sparse_cert):
    g, cert = sparse_cert
    broken = mutate(cert, g, "missing-pair", random.Random(1))
    broken = mutate(broken, g, "branch-as-inner", random.Random(2))
    kinds = {x.kind for x in verify_certificate(g, broken)}
    assert {"missing-pair", "branch-as-inner"} <= kinds


@pytest.mark.parametrize("kind", CLASSES)
def test_each_mutation_class_detected(sparse_cert, kind):
    g, cert = sparse_cert
    assert verify_certificate(g, cert) == []
    for seed in range(10):
        broken = mutate(cert, g, kind, random.Random(seed))
        assert kind in {x.kind for x in verify_certificate(g, broken)}


@pytest.mark.parametrize("text, line", [
    ("nope\n", 1),
    ("subdivision-cert v1\ngraph-order x\nbranch 0\n", 2),
    ("subdivision-cert v1\ngraph-order 3\nbranch 2 0\n", 3),
    ("subdivision-cert v1\ngraph-order 3\nbranch 2 0 1\npath 0 1 1\n", 4),
    ("subdivision-cert v1\ngraph-order 3\nbranch 2 0 1\npath 0 1 0\nroute 1 0 0\n", 5),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_certificate(text)
    assert info.value.line == line


def test_disjoint_family():
    k4 = complete_digraph(4)
    _, paths = max_disjoint_paths(k4, 0, 3)
    assert len(paths) == 3 and verify_disjoint_family(k4, 0, 3, paths) == []
    twice = [Dipath(0, 3, (1,)), Dipath(0, 3, (1,))]
    assert [v.kind for v in verify_disjoint_family(k4, 0, 3, twice)] == ["shared-inner"]
    assert verify_disjoint_family(k4, 0, 3, []) == []
    assert verify_disjoint_family(k4, 0, 3, [Dipath(0, 2, ())])[0].kind == "wrong-endpoints"


def test_verify_core_bottleneck():
    g = two_cliques_bottleneck(12)
    report, _ = extract_core(g)
    again = verify_core(g, report.vertices, 25, 11)
    assert again.ok and again.vertices == tuple(range(12))
    # the whole graph fails (ii): B cannot reach A at all
    whole = verify_core(g, range(25), 25, 11)
    assert whole.cond_i and whole.cond_iii and not whole.cond_ii


def test_verify_core_single_vertex():
    g = complete_digraph(5)
    report = verify_core(g, [2], 5, 4)
    assert not report.cond_iii and not report.cond_i
    tiny = verify_core(complete_digraph(3), [0], 3, 1)
    # threshold d^2/(4n) = 1/12 still needs one high-indegree vertex
    assert not tiny.cond_iii


def test_verify_core_complete_400_capped():
    g = complete_digraph(400)
    report = verify_core(g, range(400), 400, 399, sample=300, seed=5)
    assert report.ok and report.uncuttable_pairs == 300 and report.capped_below == 0
    assert 4 * 400 * 398 >= 399 ** 2
