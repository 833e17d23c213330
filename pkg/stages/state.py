"""State schema for the membership pipeline"""
from typing import TypedDict, List, Dict, Optional


class StageError(TypedDict):
    """An error reported by a tool; kind is input, capacity or internal"""
    kind: str
    message: str


class WitnessReport(TypedDict, total=False):
    """Separating implication for a non-member"""
    implication: Dict
    text: str
    premise_size: int


class EmbeddingReport(TypedDict, total=False):
    """Strong pointed subproduct embedding of a member"""
    embedding: Dict
    verified: bool
    failed_condition: Optional[str]
    detail: str


class MembershipState(TypedDict, total=False):
    """Main state that flows through the membership pipeline"""
    candidate: Dict           # W as graph JSON
    generators: List[Dict]    # K as graph JSON, in search order
    want_witness: bool
    want_embedding: bool
    standard_vars: bool
    force: bool
    verdict: bool
    evidence: Dict
    witness: WitnessReport
    embedding: EmbeddingReport
    error: Optional[StageError]
    report: str
    next_step: str
