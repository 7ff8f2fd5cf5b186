"""Spectral analysis of functions on Z_q^n.

Thin wrapper over the C++ core. Reports come back as parsed JSON documents
with the same layout as the command line tool.
"""

import json

from ._core import (
    DomainError,
    Function,
    InfeasibleCorpusError,
    KindError,
    ParseError,
    degrees,
    eigenvalue,
    format_truth_table,
    forward,
    generate,
    inverse_roundtrip,
    mixed_edges,
    parse_truth_table,
    relevant_variables,
    schema_version,
    spectrum_listing,
)
from . import _core

__all__ = [
    "DomainError",
    "Function",
    "InfeasibleCorpusError",
    "KindError",
    "ParseError",
    "analyze",
    "degrees",
    "eigenvalue",
    "format_truth_table",
    "forward",
    "generate",
    "inverse_roundtrip",
    "mixed_edges",
    "parse_truth_table",
    "relevant_variables",
    "schema_version",
    "spectrum_listing",
    "verify",
]


def analyze(f):
    """Full analysis report of f as a dict."""
    return json.loads(_core.analyze_json(f))


def verify(q, n, kind, laws=(), exhaustive=True, samples=0, seed=0, threads=1, top=10):
    """Sweep summary over an exhaustive (default) or seeded random corpus."""
    return json.loads(
        _core.verify_json(q, n, kind, list(laws), exhaustive, samples, seed, threads, top)
    )
