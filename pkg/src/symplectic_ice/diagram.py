"""Generic evaluator for small wiring diagrams of weighted vertices.

A :class:`WiringDiagram` is a finite list of nodes (each a weight-table
family with parameters and 4 or 2 edge slots) wired together by internal
edges, with the remaining slots exposed as numbered boundary stubs.  Its
value at a boundary assignment is the sum over all labelings of the
internal edges of the product of node weights -- exactly the partition
functions appearing in the braid, cap and crossing relations.

This evaluator is for identity checking, not whole lattices: diagrams are
capped at MAX_INTERNAL_EDGES internal edges.  Diagrams are immutable after
construction and evaluation is pure, so distinct boundary assignments may
be evaluated concurrently.

Builders for every named configuration are provided at the bottom so the
relation verifiers never hand-assemble geometry: the two three-vertex
crossing configurations (ybe_left / ybe_right), the four-crossing braid
against two bare caps (caduceus_lhs / caduceus_rhs), the one-crossing cap
collapse (fish_lhs / fish_rhs) and the two cap-decorated double-crossing
configurations (reflection_lhs / reflection_rhs).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .weights import Family, Model, alphabet, vertex_weight

MAX_INTERNAL_EDGES = 12

ZERO = Fraction(0)
ONE = Fraction(1)


class DiagramError(ValueError):
    """Malformed diagram: unattached or doubly-attached slot."""


@dataclass(frozen=True)
class Node:
    family: Family
    params: tuple

    @property
    def nslots(self) -> int:
        return 2 if self.family in (Family.CAP, Family.NEW_CAP) else 4


class WiringDiagram:
    """Nodes, internal edges and boundary stubs over a model's alphabet.

    nodes     list of Node
    edges     list of ((node, slot), (node, slot)) internal connections
    boundary  list of (node, slot), position k = boundary stub k
    """

    def __init__(self, model: Model, n: int, nodes, edges, boundary, letters=None):
        self.model = model
        self.alphabet = tuple(letters) if letters is not None else alphabet(model, n)
        self.nodes = tuple(nodes)
        self.edges = tuple(edges)
        self.boundary = tuple(boundary)
        if len(self.edges) > MAX_INTERNAL_EDGES:
            raise DiagramError(f"too many internal edges ({len(self.edges)} > {MAX_INTERNAL_EDGES})")
        seen = set()
        for end in [e for pair in self.edges for e in pair] + list(self.boundary):
            if end in seen:
                raise DiagramError(f"slot {end} attached twice")
            seen.add(end)
        for i, node in enumerate(self.nodes):
            for s in range(node.nslots):
                if (i, s) not in seen:
                    raise DiagramError(f"slot ({i}, {s}) unattached")
        # slot -> index into the flat label vector (boundary stubs first)
        self._slot_pos = {}
        for k, end in enumerate(self.boundary):
            self._slot_pos[end] = k
        for k, (p, r) in enumerate(self.edges):
            self._slot_pos[p] = len(self.boundary) + k
            self._slot_pos[r] = len(self.boundary) + k

    def restricted(self, letters) -> "WiringDiagram":
        """The same diagram summed over a sub-alphabet (color reduction)."""
        return WiringDiagram(self.model, 1, self.nodes, self.edges,
                             self.boundary, letters=letters)

    def _node_weight(self, node: Node, labels, q) -> Fraction:
        return vertex_weight(self.model, node.family, labels, node.params, q)

    def evaluate(self, boundary_labels, q) -> Fraction:
        """Sum over internal labelings of the product of node weights."""
        if len(boundary_labels) != len(self.boundary):
            raise DiagramError("boundary assignment has wrong length")
        return self.evaluate_all(q, frozen=tuple(boundary_labels)).get(
            tuple(boundary_labels), ZERO)

    def evaluate_all(self, q, frozen=None) -> dict:
        """Map from boundary tuple to value, for all admissible boundaries.

        With ``frozen`` set, only that single boundary assignment is
        explored.  One depth-first sweep over the nodes enumerates every
        labeling with nonzero weight at each node, so the full boundary
        tensor costs barely more than a single evaluation.
        """
        nb = len(self.boundary)
        labels = [None] * (nb + len(self.edges))
        if frozen is not None:
            labels[:nb] = list(frozen)
        out: dict = {}
        letters = self.alphabet
        nodes = self.nodes
        slot_pos = self._slot_pos

        def visit(i: int, acc: Fraction):
            if i == len(nodes):
                key = tuple(labels[:nb])
                out[key] = out.get(key, ZERO) + acc
                return
            node = nodes[i]
            positions = [slot_pos[(i, s)] for s in range(node.nslots)]
            free = [p for p in positions if labels[p] is None]

            def assign(k: int):
                if k == len(free):
                    w = self._node_weight(node, tuple(labels[p] for p in positions), q)
                    if w != 0:
                        visit(i + 1, acc * w)
                    return
                for letter in letters:
                    labels[free[k]] = letter
                    assign(k + 1)
                labels[free[k]] = None

            assign(0)

        visit(0, ONE)
        return out


# ---------------------------------------------------------------------------
# Named configurations.
#
# Boundary stub order follows the figures: the crossing configurations use
# (a, b, c, d, e, f); the cap relations use (eps1, eps2, eps3, eps4) from
# top to bottom on the open side, and the fish relation uses (eps1, eps2).
# ---------------------------------------------------------------------------

_R_KIND = {
    (Family.GAMMA, Family.GAMMA): Family.R_GAMMA_GAMMA,
    (Family.DELTA, Family.GAMMA): Family.R_DELTA_GAMMA,
    (Family.DELTA, Family.DELTA): Family.R_DELTA_DELTA,
    (Family.GAMMA, Family.DELTA): Family.R_GAMMA_DELTA,
}


def ybe_left(model: Model, n: int, X: Family, Y: Family, zi, zj,
             families=None) -> WiringDiagram:
    """S = X(z_i) over T = Y(z_j), crossing R = X-Y(z_i, z_j) on the left.

    Boundary: a, b on the crossing's left legs; c, d on S's top/right;
    e, f on T's right/bottom.  ``families`` may override the three node
    families as (S, T, R) -- used by the free-parameter tables.
    """
    S, T, R = families or (X, Y, _R_KIND[(X, Y)])
    sp = (zi,) if S in (Family.GAMMA, Family.DELTA, Family.LEMMA_S) else (zi, zj)
    tp = (zj,) if T in (Family.GAMMA, Family.DELTA, Family.LEMMA_T) else (zi, zj)
    nodes = [Node(R, (zi, zj)), Node(S, sp), Node(T, tp)]
    # R slots: (sw, nw, ne, se) = (a, b, g, i); S: (g, c, d, h); T: (i, h, e, f)
    edges = [((0, 2), (1, 0)),   # g
             ((1, 3), (2, 1)),   # h
             ((0, 3), (2, 0))]   # i
    boundary = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3)]
    return WiringDiagram(model, n, nodes, edges, boundary)


def ybe_right(model: Model, n: int, X: Family, Y: Family, zi, zj,
              families=None) -> WiringDiagram:
    """T over S with the crossing moved to the right; same boundary order."""
    S, T, R = families or (X, Y, _R_KIND[(X, Y)])
    sp = (zi,) if S in (Family.GAMMA, Family.DELTA, Family.LEMMA_S) else (zi, zj)
    tp = (zj,) if T in (Family.GAMMA, Family.DELTA, Family.LEMMA_T) else (zi, zj)
    nodes = [Node(T, tp), Node(S, sp), Node(R, (zi, zj))]
    # T: (b, c, j, k); S: (a, k, l, f); R: (sw, nw, ne, se) = (l, j, d, e)
    edges = [((0, 2), (2, 1)),   # j
             ((0, 3), (1, 1)),   # k
             ((1, 2), (2, 0))]   # l
    boundary = [(1, 0), (0, 0), (0, 1), (2, 2), (2, 3), (1, 3)]
    return WiringDiagram(model, n, nodes, edges, boundary)


def caduceus_lhs(model: Model, zi, zj) -> WiringDiagram:
    """Four-crossing braid closed by the model's two caps.

    Rising strands carry z_i, falling strands carry z_j.  Uncolored only.
    Boundary stubs (eps1..eps4) are the four open ends, top to bottom.
    """
    nodes = [
        Node(Family.R_GAMMA_DELTA, (zi, zj)),   # 0: D, wires w3 x w4
        Node(Family.R_GAMMA_GAMMA, (zi, zj)),   # 1: A, wires w3 x w2
        Node(Family.R_DELTA_DELTA, (zi, zj)),   # 2: B, wires w1 x w4
        Node(Family.R_DELTA_GAMMA, (zi, zj)),   # 3: C, wires w1 x w2
        Node(Family.CAP, ()),                   # 4: top cap
        Node(Family.CAP, ()),                   # 5: bottom cap
    ]
    edges = [
        ((0, 2), (1, 0)),   # e1: w3 between D and A
        ((1, 2), (4, 0)),   # e2: w3 into top-cap top
        ((0, 3), (2, 1)),   # e3: w4 between D and B
        ((2, 3), (5, 1)),   # e4: w4 into bottom-cap bottom
        ((1, 3), (3, 1)),   # e5: w2 between A and C
        ((3, 3), (5, 0)),   # e6: w2 into bottom-cap top
        ((2, 2), (3, 0)),   # e7: w1 between B and C
        ((3, 2), (4, 1)),   # e8: w1 into top-cap bottom
    ]
    boundary = [(1, 1), (0, 1), (0, 0), (2, 0)]   # eps1..eps4
    return WiringDiagram(model, 1, nodes, edges, boundary)


def caduceus_rhs(model: Model) -> WiringDiagram:
    """Two bare caps: top cap takes (eps1, eps2), bottom cap (eps3, eps4)."""
    nodes = [Node(Family.CAP, ()), Node(Family.CAP, ())]
    boundary = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return WiringDiagram(model, 1, nodes, [], boundary)


def caduceus_scalar(zi, zj, q) -> Fraction:
    """The exact proportionality factor between the two caduceus sides."""
    num = (q * zi * zj - 1) * (1 - (q + 1) * (zi + zj) + (q * q + q + 1) * zi * zj)
    den = q * (zi + zj - (q + 1) * zi * zj) ** 2
    return num / den


def fish_lhs(model: Model, z) -> WiringDiagram:
    """One fish crossing (parameter z) closed by the flipped cap."""
    nodes = [Node(Family.R_FISH, (z,)), Node(Family.NEW_CAP, ())]
    # R: (sw, nw, ne, se) = (eps2, eps1, x, y); cap top = x, bottom = y
    edges = [((0, 2), (1, 0)), ((0, 3), (1, 1))]
    boundary = [(0, 1), (0, 0)]   # eps1, eps2
    return WiringDiagram(model, 1, nodes, edges, boundary)


def fish_rhs(model: Model) -> WiringDiagram:
    """The bare flipped cap with boundary (eps1, eps2) = (top, bottom)."""
    nodes = [Node(Family.NEW_CAP, ())]
    return WiringDiagram(model, 1, nodes, [], [(0, 0), (0, 1)])


def fish_scalar(model: Model, z, q) -> Fraction:
    """Proportionality factor of the fish relation for the given cap choice."""
    from .rationals import zprime
    if model is Model.UNCOLORED_ABSORBING:
        return ONE
    zp = zprime(z, q)
    num = 1 - (q + 1) * z + q * z / zp
    den = 1 - (q + 1) / zp + q * z / zp
    return -num / den


def reflection_lhs(model: Model, n: int, zi, zj) -> WiringDiagram:
    """Crossings S = Gamma-Gamma(z_i, z_j), T = Delta-Gamma(z_i, z_j) braided
    into the two caps.  Boundary (eps1..eps4) top to bottom."""
    nodes = [
        Node(Family.R_GAMMA_GAMMA, (zi, zj)),   # 0: S
        Node(Family.R_DELTA_GAMMA, (zi, zj)),   # 1: T
        Node(Family.CAP, ()),                   # 2: top cap (pair i)
        Node(Family.CAP, ()),                   # 3: bottom cap (pair j)
    ]
    # S: (eps2, eps1, c1, d1); T: (eps3, d1, b1, d2)
    edges = [
        ((0, 2), (2, 0)),   # c1 -> top-cap top
        ((0, 3), (1, 1)),   # d1
        ((1, 2), (2, 1)),   # b1 -> top-cap bottom
        ((1, 3), (3, 0)),   # d2 -> bottom-cap top
    ]
    boundary = [(0, 1), (0, 0), (1, 0), (3, 1)]
    return WiringDiagram(model, n, nodes, edges, boundary)


def reflection_rhs(model: Model, n: int, zi, zj) -> WiringDiagram:
    """Mirror braiding: S' = Delta-Delta(z_j, z_i), T' = Delta-Gamma(z_j, z_i)."""
    nodes = [
        Node(Family.R_DELTA_DELTA, (zj, zi)),   # 0: S'
        Node(Family.R_DELTA_GAMMA, (zj, zi)),   # 1: T'
        Node(Family.CAP, ()),                   # 2: top cap (pair j)
        Node(Family.CAP, ()),                   # 3: bottom cap (pair i)
    ]
    # S': (eps4, eps3, w1, q1); T': (w1, eps2, w2, r1)
    edges = [
        ((0, 2), (1, 0)),   # w1
        ((0, 3), (3, 1)),   # q1 -> bottom-cap bottom
        ((1, 2), (2, 1)),   # w2 -> top-cap bottom
        ((1, 3), (3, 0)),   # r1 -> bottom-cap top
    ]
    boundary = [(2, 0), (1, 1), (0, 1), (0, 0)]
    return WiringDiagram(model, n, nodes, edges, boundary)
