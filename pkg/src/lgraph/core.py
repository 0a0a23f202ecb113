"""Core graph structures and validation for logical graphs.

A logical graph is a finite labelled DAG whose edges read as implication:
multiple edges into a vertex are a conjunction of premises, multiple edges
out of a vertex a conjunction of conclusions.  Not every labelled DAG has
such a reading; ``validate`` checks the shape condition (acyclicity plus a
recursive conclusion-clique decomposition) and promotes a ``RawGraph`` to a
``LogicalGraph``.

Vertices and labels are distinct identifier types on purpose: a vertex is an
*occurrence* of the atom its label names, and the two must never be mixed up.

All values here are immutable after construction and all operations are
pure; returned collections iterate in ascending identifier order so that
every downstream computation (traversal, isomorphism search, printing) is
deterministic.
"""

from __future__ import annotations

import json
import re
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping


class Error(Exception):
    """Base class for all errors raised by this package."""


class UnknownVertex(Error):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex: {vertex!r}")
        self.vertex = vertex


class CyclicEdges(Error):
    """The edge relation has a cycle; its transitive closure is not a strict order."""

    def __init__(self, cycle):
        names = " -> ".join(str(v) for v in cycle)
        super().__init__(f"edge cycle: {names} -> {cycle[0]}")
        self.cycle = tuple(cycle)


class NotWellFormed(Error):
    """The graph is acyclic but has no conjunction/implication reading."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class NotASubgraphByName(Error):
    """The subtrahend mentions a vertex the minuend lacks (or labels disagree)."""


class _Identifier(str):
    """A nonempty name; interning keeps hashing and comparison at str speed
    while equality stays strict about the identifier kind."""

    __slots__ = ()
    _interned: dict[str, "_Identifier"]

    def __new__(cls, name: str):
        cached = cls._interned.get(name)
        if cached is not None:
            return cached
        if not isinstance(name, str) or not name:
            raise ValueError(f"{cls.__name__} needs a nonempty string, got {name!r}")
        made = super().__new__(cls, name)
        cls._interned[name] = made
        return made

    @property
    def name(self) -> str:
        return str.__str__(self)

    def __eq__(self, other):
        return type(other) is type(self) and str.__eq__(self, other)

    def __ne__(self, other):
        return not (type(other) is type(self) and str.__eq__(self, other))

    __hash__ = str.__hash__

    def __repr__(self):
        return f"{type(self).__name__[0]}({str.__str__(self)!r})"


class VertexId(_Identifier):
    """A vertex name; ordered lexicographically."""

    __slots__ = ()
    _interned = {}


class LabelId(_Identifier):
    """An atom name; a separate type from VertexId by design."""

    __slots__ = ()
    _interned = {}


# A finite set of vertices with deterministic (ascending) iteration order.
VSet = tuple[VertexId, ...]


def vset(vertices: Iterable[VertexId]) -> VSet:
    """Deduplicate and sort vertices ascending."""
    return tuple(sorted(set(vertices)))


class RawGraph:
    """An unvalidated labelled digraph.

    ``labelling`` is a total map from vertices to labels (its domain is the
    vertex set, its image the label set, so every label has an instance by
    construction).  ``edges`` is a set of ordered vertex pairs whose
    endpoints must be labelled.  Instances are immutable; derived adjacency
    is precomputed so predecessor/successor queries are O(degree).
    """

    __slots__ = ("labelling", "edges", "_sorted_vertices", "_edge_cache",
                 "_preds", "_succs", "_peel_cache", "_hash")

    def __init__(self, labelling: Mapping[VertexId, LabelId],
                 edges: Iterable[tuple[VertexId, VertexId]] = ()):
        lab = dict(labelling)
        eset = edges if isinstance(edges, frozenset) else frozenset(edges)
        for src, dst in eset:
            if src not in lab or dst not in lab:
                raise UnknownVertex(src if src not in lab else dst)
        self._wire(lab, eset)

    def _wire(self, lab: dict, eset: frozenset):
        """Fill the slots; lab is owned and edge endpoints are labelled."""
        verts = sorted(lab)
        preds: dict[VertexId, list[VertexId]] = {v: [] for v in verts}
        succs: dict[VertexId, list[VertexId]] = {v: [] for v in verts}
        for src, dst in eset:
            preds[dst].append(src)
            succs[src].append(dst)
        for lst in preds.values():
            lst.sort()
        for lst in succs.values():
            lst.sort()
        object.__setattr__(self, "labelling", MappingProxyType(lab))
        object.__setattr__(self, "edges", eset)
        object.__setattr__(self, "_sorted_vertices", tuple(verts))
        object.__setattr__(self, "_edge_cache", None)
        object.__setattr__(self, "_preds", preds)
        object.__setattr__(self, "_succs", succs)
        object.__setattr__(self, "_peel_cache", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def _sorted_edges(self) -> tuple[tuple[VertexId, VertexId], ...]:
        cached = self._edge_cache
        if cached is None:
            cached = tuple(sorted(self.edges))
            object.__setattr__(self, "_edge_cache", cached)
        return cached

    def __contains__(self, v: VertexId) -> bool:
        return v in self.labelling

    def __len__(self) -> int:
        return len(self.labelling)

    def __eq__(self, other):
        if not isinstance(other, RawGraph):
            return NotImplemented
        return self.labelling == other.labelling and self.edges == other.edges

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((frozenset(self.labelling.items()), self.edges))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        kind = type(self).__name__
        if len(self) <= 8:
            labs = ", ".join(f"{v}:{l}" for v, l in
                             sorted(self.labelling.items()))
            edges = ", ".join(f"{s}>{d}" for s, d in self._sorted_edges)
            return f"{kind}({{{labs}}}, [{edges}])"
        return f"{kind}(<{len(self)} vertices, {len(self.edges)} edges>)"

    def vertices(self) -> VSet:
        return self._sorted_vertices

    def label_of(self, v: VertexId) -> LabelId:
        try:
            return self.labelling[v]
        except KeyError:
            raise UnknownVertex(v) from None


class LogicalGraph(RawGraph):
    """A RawGraph that passed ``validate``.

    Construct via ``validate`` (or the operations documented to preserve
    validity: ``empty``, ``singleton``, ``add`` of valid operands,
    ``assumption_graph``/``full_assumption_graph``, ``rename_apart``).
    Equality is structural and compatible with RawGraph.
    """

    __slots__ = ()


def _graph(cls: type, lab: dict, edges) -> RawGraph:
    """Internal constructor for callers that own lab and built the edges
    from lab's own keys; skips the defensive copy and endpoint checks."""
    g = cls.__new__(cls)
    g._wire(lab, edges if isinstance(edges, frozenset) else frozenset(edges))
    return g


def predecessors(g: RawGraph, v: VertexId) -> VSet:
    """Vertices with an edge going to v, ascending."""
    if v not in g:
        raise UnknownVertex(v)
    return tuple(g._preds[v])


def successors(g: RawGraph, v: VertexId) -> VSet:
    """Vertices v has an edge to, ascending."""
    if v not in g:
        raise UnknownVertex(v)
    return tuple(g._succs[v])


def conclusions(g: RawGraph) -> VSet:
    """The minimal vertices: those with no outgoing edge."""
    succs = g._succs
    return tuple(v for v in g._sorted_vertices if not succs[v])


def _find_cycle(g: RawGraph) -> list[VertexId] | None:
    """Return some edge cycle, or None if the graph is acyclic."""
    out_deg = {v: len(g._succs[v]) for v in g._sorted_vertices}
    ready = [v for v, d in out_deg.items() if d == 0]
    seen = len(ready)
    while ready:
        v = ready.pop()
        for w in g._preds[v]:
            out_deg[w] -= 1
            if out_deg[w] == 0:
                ready.append(w)
                seen += 1
    if seen == len(g):
        return None
    # Every remaining vertex has a remaining out-edge; walk until a repeat.
    remaining = {v for v, d in out_deg.items() if d > 0}
    v = min(remaining)
    trail, pos = [], {}
    while v not in pos:
        pos[v] = len(trail)
        trail.append(v)
        v = next(w for w in g._succs[v] if w in remaining)
    return trail[pos[v]:]


# The decomposition tree of a graph, as produced by _peel: a list of
# (clique, children) pairs where clique is an ascending tuple of the
# conclusions sharing one direct-predecessor set and children is the
# tree of that shared predecessor set's own subgraph.
PeelTree = list[tuple[VSet, "PeelTree"]]


def _peel(g: RawGraph) -> PeelTree:
    """Decompose an acyclic graph into nested conclusion cliques.

    Equivalent to the recursive definition -- group the conclusions by
    their direct-predecessor sets, check each predecessor's out-edges hit
    exactly its clique, then recurse on each clique's predecessor closure --
    but runs in one linear pass.  Instead of materialising each nested
    subgraph, vertices are peeled off bottom-up: removing a clique makes
    its predecessor set the conclusion set of the nested subgraph, so the
    recursion can be driven entirely by the out-degree bookkeeping.  Any
    overlap between sibling parts surfaces as a failed out-edge check on
    some descendant level, so the expensive disjointness test on
    materialised closures is never needed.

    Raises NotWellFormed, with leftover vertices (detected by the cover
    check at the end) standing in for cycles; ``validate`` tells the two
    apart.
    """
    preds, succs = g._preds, g._succs
    peeled: set[VertexId] = set()
    root: PeelTree = []
    top = [v for v in g._sorted_vertices if not succs[v]]
    stack: list[tuple[list[VertexId], PeelTree]] = [(top, root)]
    while stack:
        concl, node = stack.pop()
        if not concl:
            continue
        groups: dict[frozenset[VertexId], list[VertexId]] = {}
        for c in concl:  # ascending, so each clique collects ascending
            groups.setdefault(frozenset(preds[c]), []).append(c)
        # Check every clique of this level before peeling any of them:
        # a predecessor must point at its whole clique and nothing else.
        for key, clique in groups.items():
            cset = set(clique)
            for w in key:
                for t in succs[w]:
                    if t not in cset and t not in peeled:
                        raise NotWellFormed(
                            f"vertex {w} implies {t} but also the "
                            f"conclusion set {{{', '.join(clique)}}}",
                            witness=(w, t))
        for clique in groups.values():
            peeled.update(clique)
        for key, clique in groups.items():
            child: PeelTree = []
            node.append((tuple(clique), child))
            if key:
                stack.append((sorted(key), child))
    if len(peeled) != len(g):
        leftover = min(set(g._sorted_vertices) - peeled)
        raise NotWellFormed(f"vertex {leftover} was never decomposed",
                            witness=(leftover,))
    return root


def validate(g: RawGraph) -> LogicalGraph:
    """Check acyclicity and well-formedness; return the promoted graph.

    Raises CyclicEdges with a witness cycle, or NotWellFormed with an
    offending vertex pair, when the graph has no formula reading.
    """
    try:
        tree = _peel(g)
    except NotWellFormed:
        # A cycle also breaks the peel; report it as what it is.
        cycle = _find_cycle(g)
        if cycle is not None:
            raise CyclicEdges(cycle) from None
        raise
    # Promote by sharing the immutable internals; nothing needs recomputing.
    promoted = LogicalGraph.__new__(LogicalGraph)
    for slot in ("labelling", "edges", "_sorted_vertices", "_edge_cache",
                 "_preds", "_succs", "_hash"):
        object.__setattr__(promoted, slot, getattr(g, slot))
    object.__setattr__(promoted, "_peel_cache", tree)
    return promoted


def peel_tree(g: LogicalGraph) -> PeelTree:
    """The conclusion-clique tree of a validated graph (construction order).

    Shared and cached; treat the returned structure as read-only.
    """
    tree = g._peel_cache
    if tree is None:
        tree = _peel(g)
        object.__setattr__(g, "_peel_cache", tree)
    return tree


def _up_closure(g: RawGraph, seeds: Iterable[VertexId]) -> set[VertexId]:
    """seeds plus every vertex with a directed path into seeds."""
    preds = g._preds
    closure = set(seeds)
    frontier = list(closure)
    while frontier:
        v = frontier.pop()
        for w in preds[v]:
            if w not in closure:
                closure.add(w)
                frontier.append(w)
    return closure


def _restrict(g: RawGraph, closure: set[VertexId], cls: type) -> RawGraph:
    # Closure is up-closed, so collecting each member's in-edges is exactly
    # the induced edge set.
    lab = g.labelling
    preds = g._preds
    return _graph(cls, {v: lab[v] for v in closure},
                  [(w, v) for v in closure for w in preds[v]])


def assumption_graph(g: RawGraph, v: VertexId) -> RawGraph:
    """The subgraph proving v: v plus everything with a path into v.

    v is the unique conclusion of the result.  Validity is preserved, so a
    LogicalGraph input yields a LogicalGraph without re-validation.
    """
    if v not in g:
        raise UnknownVertex(v)
    return _restrict(g, _up_closure(g, (v,)), type(g))


def full_assumption_graph(g: RawGraph, v: VertexId) -> RawGraph:
    """The union of the assumption graphs of v's direct predecessors."""
    if v not in g:
        raise UnknownVertex(v)
    return _restrict(g, _up_closure(g, g._preds[v]), type(g))


def induced_subgraph(g: RawGraph, w: Iterable[VertexId]) -> RawGraph:
    """The vertices of w plus the edges of g between them; result is raw."""
    keep = set(w)
    for v in keep:
        if v not in g:
            raise UnknownVertex(v)
    lab = {v: g.labelling[v] for v in keep}
    edges = [(p, v) for v in keep for p in g._preds[v] if p in keep]
    return _graph(RawGraph, lab, edges)


class SubgraphRelation(Enum):
    NOT_SUBGRAPH = "not-subgraph"
    VERTEX_SUBGRAPH = "vertex-subgraph"
    STRICT_VERTEX_SUBGRAPH = "strict-vertex-subgraph"


def subgraph_relation(g: RawGraph, h: RawGraph) -> SubgraphRelation:
    """How g sits inside h, comparing concrete vertex names.

    g is a vertex subgraph of h when h has every g vertex with the same
    label and every g edge; strict when additionally h has no extra edges
    between g's vertices.
    """
    for v, l in g.labelling.items():
        if h.labelling.get(v) != l:
            return SubgraphRelation.NOT_SUBGRAPH
    if not g.edges <= h.edges:
        return SubgraphRelation.NOT_SUBGRAPH
    for (src, dst) in h.edges - g.edges:
        if src in g.labelling and dst in g.labelling:
            return SubgraphRelation.VERTEX_SUBGRAPH
    return SubgraphRelation.STRICT_VERTEX_SUBGRAPH


_TRAILING_DIGITS = re.compile(r"^(.*?)(\d*)$")


def fresh_name(base: str, taken: set[str]) -> str:
    """The first name not in taken: bump/append a numeric suffix on base."""
    stem, digits = _TRAILING_DIGITS.match(base).groups()
    n = int(digits) + 1 if digits else 0
    while f"{stem}{n}" in taken:
        n += 1
    return f"{stem}{n}"


def _renamed_apart(g: RawGraph, avoid: frozenset[VertexId]
                   ) -> tuple[dict[VertexId, LabelId],
                              list[tuple[VertexId, VertexId]],
                              dict[VertexId, VertexId]]:
    """Labelling, edges, and total map of g renamed away from avoid."""
    mapping: dict[VertexId, VertexId] = {}
    if avoid.isdisjoint(g.labelling):
        for v in g._sorted_vertices:
            mapping[v] = v
        return dict(g.labelling), list(g.edges), mapping
    taken = {v.name for v in avoid} | {v.name for v in g.labelling}
    for v in g._sorted_vertices:
        if v in avoid:
            name = fresh_name(v.name, taken)
            taken.add(name)
            mapping[v] = VertexId(name)
        else:
            mapping[v] = v
    lab = {mapping[v]: l for v, l in g.labelling.items()}
    edges = [(mapping[s], mapping[d]) for s, d in g.edges]
    return lab, edges, mapping


def rename_apart(g: RawGraph, avoid: Iterable[VertexId]
                 ) -> tuple[RawGraph, dict[VertexId, VertexId]]:
    """Rename g's vertices that collide with avoid to fresh names.

    Returns the renamed graph and the total renaming map (identity entries
    included).  Fresh names are deterministic: smallest numeric suffix on
    the colliding name not already taken.  Structure is preserved, so the
    result keeps the input's validation status.
    """
    lab, edges, mapping = _renamed_apart(g, frozenset(avoid))
    return _graph(type(g), lab, edges), mapping


def rename_graph(g: RawGraph, mapping: Mapping[VertexId, VertexId]) -> RawGraph:
    """Apply a vertex renaming (identity where unmapped); must not merge."""
    lab = {mapping.get(v, v): l for v, l in g.labelling.items()}
    if len(lab) != len(g.labelling):
        raise ValueError("renaming is not injective on the graph's vertices")
    edges = [(mapping.get(s, s), mapping.get(d, d)) for s, d in g.edges]
    return _graph(type(g), lab, edges)


def to_json(g: RawGraph) -> str:
    """Canonical file form: sorted vertex keys, lexicographically sorted edges."""
    obj = {
        "vertices": {v.name: l.name for v, l in
                     sorted(g.labelling.items())},
        "edges": [[s.name, d.name] for s, d in g._sorted_edges],
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def from_json(text: str) -> RawGraph:
    """Parse the graph file format; key and edge order are not significant."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise Error(f"invalid graph file: {exc}") from None
    if not isinstance(obj, dict):
        raise Error("invalid graph file: top level must be an object")
    unknown = set(obj) - {"vertices", "edges", "formula"}
    if unknown:
        raise Error(f"invalid graph file: unknown keys {sorted(unknown)}")
    vertices = obj.get("vertices", {})
    edges = obj.get("edges", [])
    if not isinstance(vertices, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in vertices.items()):
        raise Error("invalid graph file: \"vertices\" must map names to labels")
    lab = {}
    try:
        for k, v in vertices.items():
            lab[VertexId(k)] = LabelId(v)
    except ValueError as exc:
        raise Error(f"invalid graph file: {exc}") from None
    if not isinstance(edges, list):
        raise Error("invalid graph file: \"edges\" must be a list")
    pairs = []
    for e in edges:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, str) for x in e)):
            raise Error(f"invalid graph file: bad edge {e!r}")
        pairs.append((VertexId(e[0]), VertexId(e[1])))
    return RawGraph(lab, pairs)
