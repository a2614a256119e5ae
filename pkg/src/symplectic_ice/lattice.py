"""The 2n x L U-turn lattice: boundaries, state enumeration, partition functions.

Geometry and conventions (matching the model figures):

* Rows are numbered 1..2n from bottom to top.  Odd rows are Delta rows,
  even rows are Gamma rows; the pair (2i-1, 2i) shares the spectral
  parameter z_i and is joined on the right by a cap whose top edge is the
  Gamma row's right end and whose bottom edge is the Delta row's right end.
* Columns are numbered 1..L from *right to left* (column 1 touches the
  caps, column L the open left boundary).
* Boundary labels: top all "+"; left boundary carries the occupied label
  ("-" or color c_sigma(i)) on each Gamma row and "+" on each Delta row;
  the bottom carries the occupied label (or c_tau(i)) exactly at the
  columns lambda_i + n' + 1 - i and "+" elsewhere.

Internal storage uses 0-based column *indices* ``c-1`` for column ``c``:

    vert[r][c-1]   vertical edge between row r and row r+1 at column c
                   (r = 0 is the bottom boundary, r = 2n the top boundary)
    hor[r][c]      horizontal edge of row r between column c+1 and column c
                   (c = L is the left boundary stub, c = 0 the cap side)

so the vertex in row r, column c reads
``(left, top, right, bottom) = (hor[r][c], vert[r][c-1], hor[r][c-1], vert[r-1][c-1])``.

Enumeration is a column-ordered depth-first search from column L to
column 1, resolving each column top-to-bottom; at every vertex only the
(at most |alphabet|) label completions of nonzero weight are branched, the
bottom boundary is enforced as each column closes, and cap consistency is
enforced at the right end.  ``partition_function_transfer`` computes the
same sum by a sparse column transfer over the 2n horizontal edge labels.

Everything is pure and immutable; distinct specs may be evaluated
concurrently.  The state stream from ``enumerate_states`` is a generator
(single consumer).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .rationals import ParamPoint
from .weights import (Family, Model, admissible_pattern, alphabet, cap_map,
                      vertex_weight)

ZERO = Fraction(0)
ONE = Fraction(1)

#: Transfer is offered while |alphabet|^(2n) stays below this bound.
TRANSFER_STATE_BOUND = 10**6


class SpecError(ValueError):
    """Inconsistent lattice specification."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 0 for p in self.parts):
            raise SpecError("partition parts must be nonnegative")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise SpecError("partition parts must be weakly decreasing")

    @property
    def nparts(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0


class SignedPermutation:
    """Element of the hyperoctahedral group B_n as images of 1..n.

    ``images[k]`` is sigma(k+1) in {-n..-1, 1..n}; the extension
    sigma(-i) = -sigma(i) is implied.  Composition is right-to-left:
    (sigma * tau)(i) = sigma(tau(i)).  Plain permutations (all images
    positive) double as elements of the symmetric group for the
    positive-colored model.
    """

    def __init__(self, images):
        self.images = tuple(int(v) for v in images)
        n = len(self.images)
        if sorted(abs(v) for v in self.images) != list(range(1, n + 1)) or 0 in self.images:
            raise SpecError(f"not a signed permutation of 1..{n}: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(range(1, n + 1))

    def __call__(self, i: int) -> int:
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def times_s(self, i: int) -> "SignedPermutation":
        """Right action by a generator: sigma * s_i.

        For i < n this swaps the images at positions i, i+1; for i = n it
        negates the image at position n.
        """
        images = list(self.images)
        if i == self.n:
            images[-1] = -images[-1]
        else:
            images[i - 1], images[i] = images[i], images[i - 1]
        return SignedPermutation(images)

    @property
    def all_positive(self) -> bool:
        return all(v > 0 for v in self.images)

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"SignedPermutation({list(self.images)})"


def all_signed_permutations(n: int):
    """All 2^n n! elements of B_n."""
    import itertools
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * p for s, p in zip(signs, perm)))


def all_plain_permutations(n: int):
    import itertools
    for perm in itertools.permutations(range(1, n + 1)):
        yield SignedPermutation(perm)


@dataclass(frozen=True)
class LatticeSpec:
    """A fully specified model instance: family, size, boundary data, point."""

    model: Model
    n: int
    L: int
    lam: Partition
    point: ParamPoint
    sigma: Optional[SignedPermutation] = None
    tau: Optional[SignedPermutation] = None

    def __post_init__(self):
        if self.point.n != self.n:
            raise SpecError("point has wrong number of spectral parameters")
        nprime = self.lam.nparts
        if self.L < self.lam.first + nprime:
            raise SpecError("need L >= lambda_1 + n'")
        if self.model is Model.UNCOLORED_REFLECTING and nprime != self.n:
            raise SpecError("reflecting model requires n' = n")
        if self.model.colored:
            if nprime != self.n:
                raise SpecError("colored models require n' = n")
            if self.sigma is None or self.tau is None:
                raise SpecError("colored models require sigma and tau")
            if self.sigma.n != self.n or self.tau.n != self.n:
                raise SpecError("sigma, tau must lie in B_n")
            if self.model is Model.COLORED_POSITIVE:
                if not (self.sigma.all_positive and self.tau.all_positive):
                    raise SpecError("positive-colored model takes plain permutations")
        elif self.sigma is not None or self.tau is not None:
            raise SpecError("uncolored models take no sigma/tau")

    @property
    def nprime(self) -> int:
        return self.lam.nparts

    @property
    def alphabet(self) -> tuple:
        return alphabet(self.model, self.n)

    def with_point(self, point: ParamPoint) -> "LatticeSpec":
        return LatticeSpec(self.model, self.n, self.L, self.lam, point, self.sigma, self.tau)

    def with_sigma(self, sigma: SignedPermutation) -> "LatticeSpec":
        return LatticeSpec(self.model, self.n, self.L, self.lam, self.point, sigma, self.tau)


@dataclass(frozen=True)
class Boundary:
    """Explicit boundary labels: left by row 1..2n, top/bottom by column."""

    left: tuple    # index r-1 -> label on the left stub of row r
    top: tuple     # index c-1 -> label above row 2n at column c
    bottom: tuple  # index c-1 -> label below row 1 at column c


def particle_columns(lam: Partition) -> tuple:
    """Columns lambda_i + n' + 1 - i carrying bottom particles (decreasing)."""
    np = lam.nparts
    return tuple(lam.parts[i - 1] + np + 1 - i for i in range(1, np + 1))


def boundary_assignment(spec: LatticeSpec) -> Boundary:
    """Boundary labels determined by (lambda, sigma, tau) and the family."""
    left = []
    for r in range(1, 2 * spec.n + 1):
        if r % 2 == 1:
            left.append(0)
        else:
            i = r // 2
            left.append(spec.sigma(i) if spec.model.colored else -1)
    top = tuple(0 for _ in range(spec.L))
    bottom = [0] * spec.L
    for i, col in enumerate(particle_columns(spec.lam), start=1):
        bottom[col - 1] = spec.tau(i) if spec.model.colored else -1
    return Boundary(tuple(left), top, tuple(bottom))


@dataclass(frozen=True)
class Configuration:
    """A full admissible edge labeling (see module docstring for indexing)."""

    model: Model
    n: int
    L: int
    vert: tuple   # rows 0..2n, each a tuple of L labels (index c-1)
    hor: tuple    # rows 0..2n (row 0 unused), each a tuple of L+1 labels

    def vertex_edges(self, r: int, c: int) -> tuple:
        return (self.hor[r][c], self.vert[r][c - 1], self.hor[r][c - 1], self.vert[r - 1][c - 1])


def _row_family(r: int) -> Family:
    return Family.GAMMA if r % 2 == 0 else Family.DELTA


def _row_z(spec: LatticeSpec, r: int) -> Fraction:
    return spec.point.z[(r + 1) // 2 - 1]


def _completions(fam: Family, left, top, letters):
    """(right, bottom) candidates allowed by in/out conservation."""
    if fam is Family.GAMMA:
        if left == top:
            return ((left, top),)
        return ((left, top), (top, left))
    # Delta: multiset {right, top} = {left, bottom}
    if left == top:
        return tuple((r, r) for r in letters)
    return ((left, top),)


def enumerate_states(spec: LatticeSpec) -> Iterator[tuple]:
    """Yield every admissible (Configuration, exact weight) exactly once."""
    bnd = boundary_assignment(spec)
    n2, L = 2 * spec.n, spec.L
    letters = spec.alphabet
    q = spec.point.q
    hor = [[None] * (L + 1) for _ in range(n2 + 1)]
    vert = [[None] * L for _ in range(n2 + 1)]
    for r in range(1, n2 + 1):
        hor[r][L] = bnd.left[r - 1]
    vert[n2] = list(bnd.top)

    def close_caps(weight):
        for i in range(1, spec.n + 1):
            if cap_map(spec.model, hor[2 * i][0]) != hor[2 * i - 1][0]:
                return None
        return weight

    def sweep(c: int, r: int, weight: Fraction):
        if c == 0:
            final = close_caps(weight)
            if final is not None:
                yield Configuration(
                    spec.model, spec.n, L,
                    tuple(tuple(row) for row in vert),
                    tuple(tuple(row) for row in hor)), final
            return
        if r == 0:
            yield from sweep(c - 1, n2, weight)
            return
        fam = _row_family(r)
        z = _row_z(spec, r)
        left = hor[r][c]
        top = vert[r][c - 1]
        for right, bottom in _completions(fam, left, top, letters):
            if r == 1 and bottom != bnd.bottom[c - 1]:
                continue
            edges = (left, top, right, bottom)
            if not admissible_pattern(spec.model, fam, edges):
                continue
            w = vertex_weight(spec.model, fam, edges, (z,), q)
            hor[r][c - 1] = right
            vert[r - 1][c - 1] = bottom
            yield from sweep(c, r - 1, weight * w)
        hor[r][c - 1] = None
        if r > 1:
            vert[r - 1][c - 1] = None

    yield from sweep(L, n2, ONE)


def partition_function(spec: LatticeSpec) -> Fraction:
    """Exact sum of state weights over all admissible configurations."""
    return sum((w for _, w in enumerate_states(spec)), ZERO)


def transfer_right_edge_weights(spec: LatticeSpec) -> dict:
    """Column transfer without the final cap contraction.

    Returns the map from the tuple of 2n right-end horizontal labels
    (rows ordered 1..2n) to the exact sum of weights of all column
    fillings producing them -- the lattice with its right boundary left
    open.  Contracting against the cap tables gives partition_function.
    """
    letters = spec.alphabet
    n2, L = 2 * spec.n, spec.L
    bnd = boundary_assignment(spec)
    q = spec.point.q

    states = {tuple(bnd.left): ONE}
    for c in range(L, 0, -1):
        nxt: dict = {}

        def descend(r, top, h, out, weight):
            if r == 0:
                key = tuple(out)
                nxt[key] = nxt.get(key, ZERO) + weight
                return
            fam = _row_family(r)
            z = _row_z(spec, r)
            left = h[r - 1]
            for right, bottom in _completions(fam, left, top, letters):
                if r == 1 and bottom != bnd.bottom[c - 1]:
                    continue
                w = vertex_weight(spec.model, fam, (left, top, right, bottom), (z,), q)
                if w == 0:
                    continue
                out[r - 1] = right
                descend(r - 1, bottom, h, out, weight * w)

        for h, weight in states.items():
            descend(n2, bnd.top[c - 1], h, [None] * n2, weight)
        states = nxt
    return states


def partition_function_transfer(spec: LatticeSpec) -> Fraction:
    """Same value as partition_function via a sparse column transfer.

    Falls back to enumeration when the dense state space |alphabet|^(2n)
    would exceed TRANSFER_STATE_BOUND.
    """
    if len(spec.alphabet) ** (2 * spec.n) > TRANSFER_STATE_BOUND:
        return partition_function(spec)
    total = ZERO
    for h, weight in transfer_right_edge_weights(spec).items():
        if all(cap_map(spec.model, h[2 * i - 1]) == h[2 * i - 2] for i in range(1, spec.n + 1)):
            total += weight
    return total


def bottom_outcome(config: Configuration):
    """(lambda parts, colors) read off the bottom boundary of a state.

    Positions are the particle columns in decreasing order; part i is
    recovered as column - (n' + 1 - i).  colors is None for uncolored
    configurations, else the tuple (tau(1), .., tau(n')).
    """
    cols = [c for c in range(config.L, 0, -1) if config.vert[0][c - 1] != 0]
    np = len(cols)
    parts = tuple(col - (np + 1 - i) for i, col in enumerate(cols, start=1))
    if config.model.colored:
        colors = tuple(config.vert[0][col - 1] for col in cols)
        return parts, colors
    return parts, None
