"""Resource budgets with documented defaults and environment overrides.

Every potentially unbounded computation (Buchberger, exhaustive module
searches, digraph extraction) consults a ``Budgets`` value.  Environment
variables of the form ``NOETHER_BUDGET_<FIELD>`` override the defaults,
e.g. ``NOETHER_BUDGET_MAX_PAIRS=500000``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Budgets:
    # Buchberger: maximum number of S-polynomial pairs processed.
    max_pairs: int = 10**6
    # Maximum total degree of any polynomial seen during a basis computation.
    max_degree: int = 64
    # Exhaustive finite-ring / finite-module operations refuse larger carriers.
    finite_ring_bound: int = 256
    # Subset-stratum iteration is exponential in the node count.
    digraph_node_cap: int = 16
    # Backstop for extraction from a buggy (non-presheaf) oracle.
    extraction_depth: int = 32
    # Deepest etale tower level run_tower_suite accepts.
    tower_max_depth: int = 8
    # Vocabulary size cap for count_digraph_space enumeration.
    digraph_vocab_cap: int = 20000
    # Largest one-step extension module a Baer step may construct (its size
    # after the identification quotient; elements are kept in normal form,
    # never tabulated, so this may exceed finite_ring_bound).
    baer_bound: int = 2**24
    # Largest Baer-step output eagerly tabulated as an explicit FiniteModule.
    baer_materialize_bound: int = 4096

    @staticmethod
    def from_env() -> "Budgets":
        overrides = {}
        for f in fields(Budgets):
            raw = os.environ.get(f"NOETHER_BUDGET_{f.name.upper()}")
            if raw is not None:
                overrides[f.name] = int(raw)
        return Budgets(**overrides)


DEFAULT_BUDGETS = Budgets()
