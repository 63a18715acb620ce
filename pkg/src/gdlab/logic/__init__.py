"""The minimal negation logic: syntax, proofs, semantics and countermodel search."""
from .proofs import (
    INITIAL,
    MINIMAL,
    LogicExtension,
    ProofTree,
    ProofVerdict,
    check_proof,
    node_at,
)
from .search import Countermodel, Exhausted, countermodel_search
from .semantics import (
    TooManyValuations,
    UnboundVariable,
    algebra_countermodel,
    algebra_valid,
    evaluate,
    frame_countermodel,
    frame_valid,
    interpret,
)
from .syntax import (
    And,
    Bot,
    Formula,
    FormulaSyntaxError,
    Neg,
    Or,
    Sequent,
    Top,
    Var,
    match,
    parse_formula,
    parse_sequent,
    substitute,
    to_text,
    variables,
)

__all__ = [
    "INITIAL",
    "MINIMAL",
    "And",
    "Bot",
    "Countermodel",
    "Exhausted",
    "Formula",
    "FormulaSyntaxError",
    "LogicExtension",
    "Neg",
    "Or",
    "ProofTree",
    "ProofVerdict",
    "Sequent",
    "Top",
    "TooManyValuations",
    "UnboundVariable",
    "Var",
    "algebra_countermodel",
    "algebra_valid",
    "check_proof",
    "countermodel_search",
    "evaluate",
    "frame_countermodel",
    "frame_valid",
    "interpret",
    "match",
    "node_at",
    "parse_formula",
    "parse_sequent",
    "substitute",
    "to_text",
    "variables",
]
