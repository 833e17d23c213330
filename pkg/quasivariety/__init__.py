"""Deciding membership in the quasivariety generated by a finite class of graphs"""

from quasivariety.membership import (
    CONDITION_PAIR,
    CONDITION_VERTEX,
    FailureSite,
    MembershipEvidence,
    SiteMap,
    membership,
    membership_hereditary_check,
)
from quasivariety.witness import witness_implication
from quasivariety.embedding import (
    SpsEmbedding,
    SpsIndex,
    SpsVerification,
    build_sps_embedding,
    verify_sps,
)
from quasivariety.undirected import undirected_membership

__all__ = [
    'CONDITION_PAIR',
    'CONDITION_VERTEX',
    'FailureSite',
    'MembershipEvidence',
    'SiteMap',
    'SpsEmbedding',
    'SpsIndex',
    'SpsVerification',
    'build_sps_embedding',
    'membership',
    'membership_hereditary_check',
    'undirected_membership',
    'verify_sps',
    'witness_implication',
]
