# Copyright 2026 The qaoa-sim Authors
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

import json
import math
import pathlib

import jsonschema
import numpy as np
import pytest

import qaoa_sim as qs

SCHEMA = json.loads(
    (pathlib.Path(__file__).resolve().parents[2] / "docs" / "bench_record.schema.json").read_text()
)


def dense_state(graph, gamma, beta):
    """Reference state from explicit diagonal cost and Kronecker mixer."""
    n = graph.num_nodes
    basis = np.arange(2**n)
    cut = np.zeros(2**n)
    for i, j, w in graph.edges:
        cut += w * (((basis >> i) ^ (basis >> j)) & 1)
    # exp(-i gamma sum w/2 ZZ) differs from exp(+i gamma C) by exp(-i gamma W/2).
    energy = cut - graph.total_weight / 2
    state = np.full(2**n, 2 ** (-n / 2), dtype=complex)
    for g, b in zip(gamma, beta):
        state = state * np.exp(1j * g * energy)
        rx = np.array([[math.cos(b), -1j * math.sin(b)], [-1j * math.sin(b), math.cos(b)]])
        full = np.array([[1.0]])
        for _ in range(n):
            full = np.kron(rx, full)
        state = full @ state
    return state


def test_graph_roundtrip_and_properties():
    g = qs.Graph.parse("0 1\n1 2\n0 2\n")
    assert g.num_nodes == 3
    assert g.tot_edge == 3
    assert g.is_unweighted
    assert g.edges == [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)]
    assert g.row_masks == [0b110, 0b100, 0]
    assert g.cut_value(0b011) == 2.0
    assert g.max_cut() == (0b001, 2.0)
    assert qs.Graph.parse(g.to_edge_list()) == g


def test_errors_map_to_python_exceptions():
    with pytest.raises(qs.ParseError, match="line 1"):
        qs.Graph.parse("0 0\n")
    with pytest.raises(qs.ConfigError):
        qs.Graph.from_edges(3, [(0, 1, 1.0), (1, 0, 1.0)])
    weighted = qs.Graph.generate("w3r:n=6,seed=1")
    with pytest.raises(qs.ConfigError):
        qs.simulate(weighted, [0.1], [0.2], backend=qs.Backend.BITWISE)
    assert issubclass(qs.GuardError, qs.Error)


@pytest.mark.parametrize("backend", [qs.Backend.BASELINE, qs.Backend.COMPRESSED, qs.Backend.BITWISE])
def test_simulate_matches_dense_reference(backend):
    g = qs.Graph.generate("u3r:n=6,seed=4")
    gamma, beta = [0.3, 1.1], [0.7, 0.2]
    amps = qs.simulate(g, gamma, beta, backend=backend)
    assert amps.dtype == np.complex128
    np.testing.assert_allclose(amps, dense_state(g, gamma, beta), atol=1e-12)
    assert math.isclose(np.vdot(amps, amps).real, 1.0, abs_tol=1e-12)


def test_weighted_compressed_matches_dense_reference():
    g = qs.Graph.generate("w3r:n=8,seed=2")
    gamma, beta = [0.9], [0.4]
    amps = qs.simulate(g, gamma, beta)
    np.testing.assert_allclose(amps, dense_state(g, gamma, beta), atol=1e-12)


def test_single_edge_closed_form():
    g = qs.Graph.from_edges(2, [(0, 1, 1.0)])
    for gamma, beta in [(0.4, 0.3), (2.0, 1.2), (5.1, 2.9)]:
        expected = 0.5 * (1 - math.sin(4 * beta) * math.sin(gamma))
        assert math.isclose(qs.expectation(g, [gamma], [beta]), expected, abs_tol=1e-12)


def test_optimize_and_ratio():
    g = qs.Graph.generate("u3r:n=8,seed=1")
    report = qs.optimize(g, p=2, budget=120, seed=3)
    assert report["evaluations"] == 120
    assert len(report["history"]) == 120
    assert report["best_expectation"] == max(e for _, e in report["history"])
    assert report["best_expectation"] > g.total_weight / 2
    ratio = qs.approximation_ratio(g, report["best_expectation"])
    assert 0.5 < ratio <= 1.0


def test_gate_counts():
    g = qs.Graph.generate("u3r:n=10,seed=0")
    assert qs.gate_counts(g, 3) == {"h": 10, "rzz": 45, "rx": 30}


def test_bench_records_validate_against_schema():
    records = qs.bench("simulate", gen="u3r:n=8,seed=1", p=2, backend="bitwise", reps=2, ratio=qs.Ratio.ON)
    rows = qs.bench("compare", gen="u3r:n=8,seed=1", p=1, backend=["compressed", "bitwise"])
    sweep = qs.bench("sweep-p", gen="u3r:n=8,seed=1", p=[1, 2])
    for record in records + rows + sweep:
        jsonschema.validate(record, SCHEMA)
    assert len(records) == 2
    assert all(r["max_abs_diff"] <= 1e-10 for r in rows)
    assert sweep[0]["normalized_time"] == 1.0


def test_gen_text():
    text = qs.bench("gen", gen="cycle:n=5")
    assert text.startswith("# nodes 5 edges 5")
