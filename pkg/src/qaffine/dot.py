"""Graphviz DOT text for quivers, repetition-quiver windows, Gamma_Q and Gamma^J."""

from __future__ import annotations

from .denominators import GammaJ
from .quiver import DynkinQuiver
from .repetition import ARQuiver, PhiTable, repetition_arrows


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node_id(v) -> str:
    if isinstance(v, tuple):
        return _quote("_".join(str(x) for x in v))
    return _quote(str(v))


def _render(name: str, nodes: list[tuple[object, str]], edges: list[tuple[object, object, str]]) -> str:
    lines = [f"digraph {_quote(name)} {{"]
    for v, label in nodes:
        lines.append(f"  {_node_id(v)} [label={_quote(label)}];")
    for a, b, label in edges:
        attr = f" [label={_quote(label)}]" if label else ""
        lines.append(f"  {_node_id(a)} -> {_node_id(b)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _vec(beta) -> str:
    return "".join(str(c) for c in beta)


def quiver_dot(Q: DynkinQuiver) -> str:
    nodes = [(i, str(i)) for i in Q.type.vertices]
    edges = [(a, b, "") for a, b in Q.sorted_arrows()]
    return _render(f"Q_{Q.type}", nodes, edges)


def ar_quiver_dot(ar: ARQuiver) -> str:
    verts = sorted(ar.vertices, key=lambda v: (v[1], v[0]))
    nodes = [(v, f"({v[0]},{v[1]}) {_vec(ar.dimension_vectors[v])}") for v in verts]
    edges = [(a, b, "") for a, b in sorted(ar.arrows)]
    return _render(f"GammaQ_{ar.quiver.type}", nodes, edges)


def window_dot(phi: PhiTable, Q: DynkinQuiver) -> str:
    """The repetition quiver restricted to the window of a phi table, labelled by phi."""
    verts = sorted(phi.forward, key=lambda v: (v[1], v[0]))
    nodes = [(v, f"({v[0]},{v[1]}) {_vec(phi.forward[v][0])}[{phi.forward[v][1]}]") for v in verts]
    edges = [(a, b, "") for a, b in repetition_arrows(Q.type, verts)]
    return _render(f"Qhat_{Q.type}", nodes, edges)


def gammaJ_dot(g: GammaJ) -> str:
    nodes = [(x.vertex, f"({x.i},{x.p}) alpha_{x.root_index}") for x in g.elements]
    edges = [(a, b, str(d) if d > 1 else "") for a, b, d in g.arrows()]
    return _render("GammaJ", nodes, edges)


def export_dot(obj, quiver: DynkinQuiver | None = None) -> str:
    if isinstance(obj, DynkinQuiver):
        return quiver_dot(obj)
    if isinstance(obj, ARQuiver):
        return ar_quiver_dot(obj)
    if isinstance(obj, GammaJ):
        return gammaJ_dot(obj)
    if isinstance(obj, PhiTable):
        if quiver is None:
            raise ValueError("a phi table window needs its quiver for the arrows")
        return window_dot(obj, quiver)
    raise TypeError(f"no DOT rendering for {type(obj).__name__}")
