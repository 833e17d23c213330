"""Graph algebras, identities, implications and their satisfaction"""

from logic.algebra import INF, Absorbing, Assignment, Value, assignments, evaluate, mult
from logic.encodings import gamma_e, gamma_n, sigma
from logic.formulas import (
    Identity,
    Implication,
    format_identity,
    format_implication,
    identity_as_implication,
    implication,
    parse_identity,
    parse_implication,
    rename_to_standard,
)
from logic.satisfaction import (
    SatisfactionResult,
    check_identity,
    satisfies_identity,
    satisfies_implication,
)

__all__ = [
    'INF',
    'Absorbing',
    'Assignment',
    'Identity',
    'Implication',
    'SatisfactionResult',
    'Value',
    'assignments',
    'check_identity',
    'evaluate',
    'format_identity',
    'format_implication',
    'gamma_e',
    'gamma_n',
    'identity_as_implication',
    'implication',
    'mult',
    'parse_identity',
    'parse_implication',
    'rename_to_standard',
    'satisfies_identity',
    'satisfies_implication',
    'sigma',
]
