from dataclasses import dataclass
from typing import Optional, Tuple

from veds.graphs.graph import VertexRef


@dataclass(frozen=True)
class TraceStep:
    # first X-position and first Y-position of the subproblem, in the input ordering
    x_start: Optional[int]
    y_start: Optional[int]
    branch: str
    chosen: Optional[VertexRef] = None


@dataclass(frozen=True)
class SolveResult:
    gamma_ve: int
    witness: Tuple[VertexRef, ...]
    algorithm: str
    trace: Tuple[TraceStep, ...] = ()
    # distinct subproblems evaluated, 0 when not applicable
    states: int = 0
    elapsed_ms: float = 0.0
