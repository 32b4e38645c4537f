"""
Exception hierarchy for map construction, operations, verification and parsing.
"""
from typing import Any, List, Optional


class LopspError(Exception):
    """Base class for every error raised by the library."""

    def __init__(self, message: str = "", line: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.line = line

    def __str__(self) -> str:
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        return self.message


# Map construction and topology

class MapError(LopspError):
    pass


class DisconnectedGraph(MapError):
    pass


class DanglingDart(MapError):
    pass


class DuplicateDart(MapError):
    pass


class EmptyEdgeSet(MapError):
    pass


class RotationNotCyclic(MapError):
    """The darts of one vertex do not form a single sigma cycle."""


class NonOrientableInconsistency(MapError):
    pass


class SubgraphNotConnected(MapError):
    pass


class FaceNotSimple(MapError):
    pass


class UnknownVertex(MapError):
    pass


# Barycentric structures

class BarycentricError(LopspError):
    pass


class NotBarycentric(BarycentricError):
    pass


class WrongType(BarycentricError):
    pass


class NotChamberStructured(BarycentricError):
    pass


# Operations

class OperationError(LopspError):
    pass


class LopspClauseViolation(OperationError):
    """One violated clause of the lopsp definition."""
    clause = "lopsp"


class NotPlane(LopspClauseViolation):
    clause = "genus"


class NotTwoConnected(LopspClauseViolation):
    clause = "2-connectivity"


class NonTriangularFace(LopspClauseViolation):
    clause = "triangle faces"


class SameTypeAdjacency(LopspClauseViolation):
    clause = "type adjacency"


class SpecialVertexType(LopspClauseViolation):
    clause = "special vertex type"


class SpecialVertexDegree(LopspClauseViolation):
    clause = "v1 degree"


class TypeOneDegree(LopspClauseViolation):
    clause = "type-1 degree"


class SpecialVerticesNotDistinct(LopspClauseViolation):
    clause = "distinct special vertices"


class InvalidLopspOperation(OperationError):
    """Raised with every violated clause collected in ``violations``."""

    def __init__(self, violations: List[LopspClauseViolation], line: Optional[int] = None):
        summary = "; ".join(f"{v.clause}: {v.message}" for v in violations)
        super().__init__(f"invalid lopsp-operation ({summary})", line=line)
        self.violations = violations

    def clauses(self) -> List[str]:
        return [v.clause for v in self.violations]


class InvalidCutPath(OperationError):
    pass


class InternalInvariantViolation(OperationError):
    pass


class NotEdgeBreaking(OperationError):
    pass


class DualHasNoCompanion(OperationError):
    pass


class UnknownOperation(OperationError):
    pass


# Verification

class VerificationError(LopspError):
    pass


class TheoremViolation(VerificationError):
    def __init__(self, message: str, record: Any = None):
        super().__init__(message)
        self.record = record


class CellMismatch(VerificationError):
    def __init__(self, message: str, cell: Any = None, witness: Any = None):
        super().__init__(message)
        self.cell = cell
        self.witness = witness


# Text formats

class RotsysSyntaxError(LopspError):
    def __init__(self, line: int, column: int, expected: str):
        super().__init__(f"column {column}: expected {expected}", line=line)
        self.column = column
        self.expected = expected
