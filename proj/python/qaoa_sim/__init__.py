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
"""State-vector QAOA max-cut simulator."""

import json

from ._core import (
    Backend,
    ConfigError,
    EquivalenceError,
    Error,
    Format,
    Graph,
    GuardError,
    Init,
    ParseError,
    Popcount,
    Ratio,
    RunConfig,
    approximation_ratio,
    expectation,
    gate_counts,
    num_threads,
    optimize,
    parse_backend,
    run_command,
    set_num_threads,
    simulate,
)

__all__ = [
    "Backend",
    "ConfigError",
    "EquivalenceError",
    "Error",
    "Format",
    "Graph",
    "GuardError",
    "Init",
    "ParseError",
    "Popcount",
    "Ratio",
    "RunConfig",
    "approximation_ratio",
    "bench",
    "expectation",
    "gate_counts",
    "num_threads",
    "optimize",
    "parse_backend",
    "run_command",
    "set_num_threads",
    "simulate",
]


def bench(command, **options):
    """Runs a bench command and returns its JSON records as dicts.

    Keyword names follow the CLI flags; backends may be given as strings.
    """
    cfg = RunConfig()
    cfg.command = command
    backends = options.pop("backend", None)
    if backends is not None:
        if isinstance(backends, (str, Backend)):
            backends = [backends]
        cfg.backends = [parse_backend(b) if isinstance(b, str) else b for b in backends]
    for key, value in options.items():
        if key in ("qubits", "p") and isinstance(value, int):
            value = [value]
        if not hasattr(cfg, key):
            raise TypeError(f"unknown option {key!r}")
        setattr(cfg, key, value)
    cfg.format = Format.JSON
    text = run_command(cfg)
    if command == "gen":
        return text
    return [json.loads(line) for line in text.splitlines() if line]
