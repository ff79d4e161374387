# Copyright 2026 The conid Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction
from itertools import combinations

import pytest

conid = pytest.importorskip("conid")


def brute_alpha(g):
    n = g.vertex_count
    best = 0
    for size in range(1, n + 1):
        if not any(
            not any(g.adjacent(u, v) for u, v in combinations(subset, 2)) for subset in combinations(range(n), size)
        ):
            break
        best = size
    return best


def test_graph_basics():
    g = conid.family("cycle:5")
    assert g.vertex_count == 5 and g.edge_count == 5
    assert conid.diameter(g) == 2
    assert len(conid.independence_number(g)) == 2
    assert conid.chromatic_number(g)[0] == 3
    assert conid.fractional_chromatic(g) == Fraction(5, 2)
    sq = conid.strong_product(g, g)
    assert len(conid.independence_number(sq)) == 5 == brute_alpha(sq)
    assert conid.diameter(conid.family("edgeless:3")) is None


def test_channel_fractions():
    c = conid.Channel(["a", "b"], ["a", "b"], [["2/3", Fraction(1, 4)], [Fraction(1, 3), "3/4"]])
    assert c.probability(1, 0) == Fraction(1, 3)
    assert all(isinstance(p, Fraction) for row in c.matrix for p in row)
    assert conid.is_snfc(c)
    with pytest.raises(conid.ConidError) as info:
        conid.Channel(["a"], ["a"], [["1/2"]])
    assert info.value.code == "invalid-channel"


def test_table_one_scheme():
    c = conid.canonical_channel(conid.pentagon_variant(1))
    assert conid.ci_unassisted(c) == []
    s = conid.scheme_from_coloring(c, [0, 2, 1, 2, 1])
    report = conid.verify_scheme(c, s)
    assert report["identified_count"] == 5
    assert report["false_accepts"] == []
    inconclusive = sum(
        1 for x in range(5) for y in range(5) if c.probability(y, x) > 0 and s.decision[y][s.partition[x]] is None
    )
    assert inconclusive == 4
    assert conid.min_classical_assistance(c)["oracle"] == 3


def test_simulation_is_seeded():
    c = conid.canonical_channel(conid.pentagon_variant(1))
    s = conid.scheme_from_coloring(c, [0, 2, 1, 2, 1])
    a = conid.simulate(c, s, trials=5000, seed=9)
    b = conid.simulate(c, s, trials=5000, seed=9, workers=3)
    assert a == b
    assert sum(row["false_accepts"] for row in a) == 0
    assert a[1]["expected_conclusive_rate"] == Fraction(2, 3)


def test_quantum_and_contextuality():
    ks = conid.builtin_system("ks18")
    g = conid.orthogonality_graph(ks)
    assert g.edge_count == 63
    assert conid.certify_orthogonal_rank(g, ks) == (4, 4, True)
    assert conid.ks_colorable(ks) is None
    assert conid.parity_obstruction(ks)
    c = conid.canonical_channel(g.with_self_loops(True))
    assert conid.quantum_assisted_ci(c, ks) == 18
    assert conid.quantum_protocol_outcome(ks, 0, 6) == Fraction(1, 4)
    yo = conid.builtin_system("yo13")
    assignment = conid.ks_colorable(yo)
    assert all(sum(assignment[i] for i in ctx) == 1 for ctx in yo.contexts)


def test_complex_vectors():
    vs = conid.VectorSystem(2, [[1, 1j], [1, -1j]])
    assert conid.quantum_protocol_outcome(vs, 0, 1) == 0
    assert conid.orthogonality_graph(vs).edge_count == 1
    with pytest.raises(conid.ConidError):
        conid.VectorSystem(2, [[0.5, 1]])


def test_newman():
    r = conid.newman_qa_bound(8)
    assert r["alpha"] == 8 and r["bound_holds"]
    assert r["qa_lower_bound"] >= r["target"]
    with pytest.raises(conid.ConidError) as info:
        conid.newman_graph(6)
    assert info.value.code == "invalid-parameter"


def test_cli_in_process():
    code, out, err = conid.run_cli(["--no-banner", "channel", "analyze", "--family", "wheel:7"])
    assert code == 0 and err == ""
    assert "| chi (minimal assistance) | 4" in out
    code, _, err = conid.run_cli(["bogus"])
    assert code == 2 and err
