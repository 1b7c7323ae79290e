"""Lower bounds on the CNOT-gate count of linear reversible circuits.

The package computes the link/middle/cut lower bound on circuit size,
decides linkability, generates provably optimal permutation syntheses,
and reproduces the exhaustive size census for up to five qubits.
"""

from .gf2 import BinMatrix, CnotGate, Synthesis
from .bound import (
    DEFAULT_MIDDLE_TERM,
    MIDDLE_TERMS,
    LmcReport,
    depth_lower_bound,
    lmc_bound,
    strengthened_bound,
)
from .classifier import GateClass, classify_gate, classify_synthesis
from .connectivity import edge_components, vertex_components
from .linkability import LinkabilityResult, decide_linkable
from .permsynth import ConstructionId, Permutation, synth_cycle, synth_permutation
from .rivers import CperfectReport, cperfect, enumerate_rivers

__all__ = [
    "BinMatrix",
    "CnotGate",
    "Synthesis",
    "LmcReport",
    "lmc_bound",
    "strengthened_bound",
    "MIDDLE_TERMS",
    "DEFAULT_MIDDLE_TERM",
    "depth_lower_bound",
    "GateClass",
    "classify_gate",
    "classify_synthesis",
    "vertex_components",
    "edge_components",
    "LinkabilityResult",
    "decide_linkable",
    "ConstructionId",
    "Permutation",
    "synth_cycle",
    "synth_permutation",
    "CperfectReport",
    "cperfect",
    "enumerate_rivers",
]

__version__ = "0.1.0"
