"""Graphviz DOT text for lattices (Hasse diagrams) and frames."""
from __future__ import annotations

from . import bitset
from .frame import Frame
from .lattice import FiniteLattice


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def lattice_dot(lat: FiniteLattice, name: str = "lattice") -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for a in range(lat.n):
        lines.append(f"  n{a} [label={_q(lat.names[a])}];")
    for a, b in sorted(lat.covers()):
        lines.append(f"  n{a} -> n{b} [arrowhead=none];")
    if lat.nu is not None:
        for a in range(lat.n):
            lines.append(f"  n{a} -> n{lat.nu[a]} [style=dotted, color=gray, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def frame_dot(frame: Frame, name: str = "frame") -> str:
    """X on the left, Y on the right; solid edges for the Galois relation, dashed for S."""
    pol = frame.polarity
    lines = [f"digraph {_q(name)} {{", "  rankdir=LR;"]
    lines.append("  subgraph cluster_X { label=\"X\";")
    for x in range(pol.nx):
        lines.append(f"    x{x} [label={_q(pol.x_names[x])}, shape=box];")
    lines.append("  }")
    lines.append("  subgraph cluster_Y { label=\"Y\";")
    for y in range(pol.ny):
        lines.append(f"    y{y} [label={_q(pol.y_names[y])}, shape=ellipse];")
    lines.append("  }")
    for x in range(pol.nx):
        for y in bitset.members(pol.rows[x]):
            lines.append(f"  x{x} -> y{y} [arrowhead=none, style=solid];")
    for y, x in sorted(frame.s_pairs()):
        lines.append(f"  y{y} -> x{x} [style=dashed, label=\"S\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
