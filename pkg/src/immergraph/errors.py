"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class HypothesisViolation(Exception):
    """A classifier or verifier precondition failed on the input graph.

    Carries a machine-readable certificate describing the violated
    condition, e.g. a cut witnessing that connectivity is too low.
    """

    def __init__(self, message: str, certificate: dict[str, Any]):
        super().__init__(message)
        self.certificate = certificate


class GraphFormatError(ValueError):
    """A graph list line failed to parse.

    Carries the 1-based line number and the parse failure reason.
    """

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class UnclassifiedGraph(Exception):
    """No classification tag applies to a graph that meets the hypotheses.

    Raising this means the input is a counterexample candidate for the
    structure statement being applied, or the packaged catalog is missing
    an entry.  Carries the offending graph.
    """

    def __init__(self, message: str, graph: Any):
        super().__init__(message)
        self.graph = graph
