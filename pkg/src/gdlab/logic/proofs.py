"""Derivations in the minimal negation logic and its axiomatic extensions."""
from __future__ import annotations

from dataclasses import dataclass, field

from .syntax import And, Bot, Neg, Or, Sequent, Top, Var, match, parse_sequent

_P, _Q = Var("_p"), Var("_q")

#: Initial sequents as schemata over the metavariables ``_p`` and ``_q``.
INITIAL = {
    "id": Sequent(_P, _P),
    "top": Sequent(_P, Top()),
    "bot": Sequent(Bot(), _P),
    "and-l1": Sequent(And(_P, _Q), _P),
    "and-l2": Sequent(And(_P, _Q), _Q),
    "or-r1": Sequent(_P, Or(_P, _Q)),
    "or-r2": Sequent(_Q, Or(_P, _Q)),
    "neg-or": Sequent(Neg(Or(_P, _Q)), And(Neg(_P), Neg(_Q))),
    "neg-bot": Sequent(Top(), Neg(Bot())),
}
RULES = ("cut", "antitone", "subst")


@dataclass(frozen=True)
class LogicExtension:
    name: str
    axioms: tuple[Sequent, ...] = ()

    @classmethod
    def parse(cls, name: str, texts) -> LogicExtension:
        return cls(name, tuple(parse_sequent(t) for t in texts))


MINIMAL = LogicExtension("M")


@dataclass(frozen=True)
class ProofTree:
    """``rule`` is an initial-sequent tag, ``cut``, ``antitone``, ``subst`` or ``ext:<i>``
    (the i-th extension axiom, instantiated by substitution)."""

    conclusion: Sequent
    rule: str
    premises: tuple[ProofTree, ...] = ()


@dataclass(frozen=True)
class ProofVerdict:
    valid: bool
    path: tuple[int, ...] | None = None
    reason: str = ""
    checked: int = field(default=0, compare=False)

    def __bool__(self) -> bool:
        return self.valid


def _instance(schema: Sequent, s: Sequent) -> bool:
    sigma = match(schema.left, s.left)
    return sigma is not None and match(schema.right, s.right, sigma) is not None


def _node_ok(t: ProofTree, ext: LogicExtension) -> str | None:
    s, r, prem = t.conclusion, t.rule, t.premises
    if r in INITIAL:
        if prem:
            return f"initial sequent {r} takes no premises"
        return None if _instance(INITIAL[r], s) else f"not an instance of {r}"
    if r.startswith("ext:"):
        try:
            ax = ext.axioms[int(r[4:])]
        except (ValueError, IndexError):
            return f"unknown extension axiom {r}"
        if prem:
            return "extension axioms take no premises"
        return None if _instance(ax, s) else f"not a substitution instance of {ax}"
    if r == "cut":
        if len(prem) != 2:
            return "cut needs two premises"
        a, b = prem[0].conclusion, prem[1].conclusion
        if a.right != b.left or a.left != s.left or b.right != s.right:
            return "premises do not compose to the conclusion"
        return None
    if r == "antitone":
        if len(prem) != 1:
            return "antitonicity needs one premise"
        a = prem[0].conclusion
        return None if s == Sequent(Neg(a.right), Neg(a.left)) else "conclusion is not the negated converse"
    if r == "subst":
        if len(prem) != 1:
            return "substitution needs one premise"
        return None if _instance(prem[0].conclusion, s) else "conclusion is not a substitution instance"
    return f"no rule named {r!r}"


def check_proof(t: ProofTree, ext: LogicExtension = MINIMAL) -> ProofVerdict:
    """Check every node; report the first invalid one in pre-order."""
    count = 0
    stack: list[tuple[ProofTree, tuple[int, ...]]] = [(t, ())]
    while stack:
        node, path = stack.pop()
        count += 1
        why = _node_ok(node, ext)
        if why:
            return ProofVerdict(False, path, why, count)
        for i in reversed(range(len(node.premises))):
            stack.append((node.premises[i], path + (i,)))
    return ProofVerdict(True, None, "", count)


def node_at(t: ProofTree, path: tuple[int, ...]) -> ProofTree:
    for i in path:
        t = t.premises[i]
    return t

