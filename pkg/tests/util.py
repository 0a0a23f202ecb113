"""Terse construction helpers shared by the test modules."""

from lgraph import LabelId, LogicalGraph, RawGraph, VertexId, validate


def G(vertices: str, edges: str = "") -> RawGraph:
    """Build a graph from compact text.

    ``G("a:p b:q c", "a>b b>c")`` labels vertex a with p, b with q, and c
    with c (a bare name labels the vertex with its own name).
    """
    labelling = {}
    for token in vertices.split():
        name, _, label = token.partition(":")
        labelling[VertexId(name)] = LabelId(label or name)
    pairs = []
    for token in edges.split():
        src, _, dst = token.partition(">")
        pairs.append((VertexId(src), VertexId(dst)))
    return RawGraph(labelling, pairs)


def LG(vertices: str, edges: str = "") -> LogicalGraph:
    return validate(G(vertices, edges))


def V(name: str) -> VertexId:
    return VertexId(name)


def L(name: str) -> LabelId:
    return LabelId(name)


def names(vs) -> list[str]:
    return [str(v) for v in vs]
