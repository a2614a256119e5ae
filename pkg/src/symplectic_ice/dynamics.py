"""Seeded Monte Carlo sampling of the stochastic dynamics, and statistics.

The vertex-level sampler is canonical: a sample is one lattice filling
generated row by row from the top (row 2n) down, using the stochastic
orientation of each table.  Gamma rows are swept left to right sampling
(right, bottom) from the conditional law given (left, top); the cap then
maps the row's final right edge deterministically; the Delta row below is
swept right to left sampling (left, bottom) given (right, top).  The
product of the conditional probabilities consumed while generating a
non-escaping sample is exactly the Boltzmann weight of the generated
configuration.

A sample whose Delta-row left output is not "+" corresponds to a particle
leaving the system past column L; such samples are first-class outcomes
binned under ``escape``, not errors.

Randomness is a counter-based generator: each vertex decision consumes one
64-bit word ``mix64(seed, sample_index, row, column)`` (a splitmix64-style
chain), so samples are independent of iteration order, reproducible, and
trivially parallel.  Cumulative weights are compared against the drawn
word through integer thresholds ceil(c * 2^64); the 2^-64 quantization is
far below every statistical tolerance used here.

``exhaustive_distribution`` replaces the random word by a sum over all
branch choices with exact rational probabilities; for small systems it
reproduces every partition function exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from scipy.stats import chi2

from .lattice import (Configuration, LatticeSpec, Partition,
                      all_plain_permutations, all_signed_permutations,
                      boundary_assignment, bottom_outcome, partition_function)
from .rationals import in_stochastic_regime
from .weights import Family, Model, admissible_pattern, cap_map, vertex_weight

ZERO = Fraction(0)
ONE = Fraction(1)

_MASK = (1 << 64) - 1
_TWO64 = 1 << 64

ESCAPE = "escape"


class SamplerSoundnessError(RuntimeError):
    """An outcome with exact probability 0 was sampled: a sampler bug."""


def mix64(*words: int) -> int:
    """Counter-based 64-bit word: a splitmix64 finalizer chained over words."""
    h = 0x9E3779B97F4A7C15
    for w in words:
        h = (h + (w & _MASK)) & _MASK
        h = ((h ^ (h >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        h = ((h ^ (h >> 27)) * 0x94D049BB133111EB) & _MASK
        h ^= h >> 31
    return h


@dataclass(frozen=True)
class SamplerConfig:
    spec: LatticeSpec
    seed: int
    num_samples: int

    def __post_init__(self):
        if not in_stochastic_regime(self.spec.point):
            raise ValueError("sampler requires a point in the stochastic regime")


def _conditional_tables(spec: LatticeSpec):
    """Per row: dict inputs -> (outputs list, integer cumulative thresholds).

    Gamma rows: inputs (left, top), outputs (right, bottom).
    Delta rows: inputs (right, top), outputs (left, bottom).
    Rows sum to exactly 1; thresholds are ceil(cum * 2^64).
    """
    letters = spec.alphabet
    q = spec.point.q
    tables = []
    for r in range(1, 2 * spec.n + 1):
        fam = Family.GAMMA if r % 2 == 0 else Family.DELTA
        z = spec.point.z[(r + 1) // 2 - 1]
        table = {}
        for a in letters:
            for b in letters:
                if fam is Family.GAMMA:
                    cands = [(a, b), (b, a)] if a != b else [(a, a)]
                    patterns = [(a, b, r_, b_) for r_, b_ in cands]
                else:
                    cands = [(a, b), (b, a)] if a != b else [(a, a)]
                    patterns = [(l_, b, a, b_) for l_, b_ in cands]
                outs, weights = [], []
                for cand, pat in zip(cands, patterns):
                    if not admissible_pattern(spec.model, fam, pat):
                        continue
                    w = vertex_weight(spec.model, fam, pat, (z,), q)
                    outs.append(cand)
                    weights.append(w)
                total = sum(weights, ZERO)
                assert total == 1, (fam, a, b, total)
                cum, thresholds = ZERO, []
                for w in weights:
                    cum += w
                    thresholds.append(-(-(cum.numerator * _TWO64) // cum.denominator))
                table[(a, b)] = (outs, thresholds)
        tables.append(table)
    return tables


@dataclass
class SampleOutcome:
    config: Configuration
    escaped: bool
    key: object   # ESCAPE, or (lambda parts, colors-or-None)


class Sampler:
    """Reusable sampler for one spec (precomputes conditional tables)."""

    def __init__(self, config: SamplerConfig):
        self.config = config
        self.spec = config.spec
        self.tables = _conditional_tables(self.spec)
        self.bnd = boundary_assignment(self.spec)

    def sample(self, index: int) -> SampleOutcome:
        """Deterministic function of (seed, index)."""
        spec, bnd = self.spec, self.bnd
        n2, L = 2 * spec.n, spec.L
        seed = self.config.seed
        vert = [[None] * L for _ in range(n2 + 1)]
        hor = [[None] * (L + 1) for _ in range(n2 + 1)]
        vert[n2] = list(bnd.top)
        escaped = False
        for i in range(spec.n, 0, -1):
            r = 2 * i
            table = self.tables[r - 1]
            cur = bnd.left[r - 1]
            hor[r][L] = cur
            for c in range(L, 0, -1):
                u = mix64(seed, index, r, c)
                outs, thresholds = table[(cur, vert[r][c - 1])]
                k = 0
                while u >= thresholds[k]:
                    k += 1
                right, bottom = outs[k]
                hor[r][c - 1] = right
                vert[r - 1][c - 1] = bottom
                cur = right
            r = 2 * i - 1
            table = self.tables[r - 1]
            cur = cap_map(spec.model, cur)
            hor[r][0] = cur
            for c in range(1, L + 1):
                u = mix64(seed, index, r, c)
                outs, thresholds = table[(cur, vert[r][c - 1])]
                k = 0
                while u >= thresholds[k]:
                    k += 1
                left, bottom = outs[k]
                hor[r][c] = left
                vert[r - 1][c - 1] = bottom
                cur = left
            if cur != 0:
                escaped = True
        config = Configuration(spec.model, spec.n, L,
                               tuple(tuple(row) for row in vert),
                               tuple(tuple(row) for row in hor))
        key = ESCAPE if escaped else outcome_key(config)
        return SampleOutcome(config, escaped, key)


def outcome_key(config: Configuration):
    parts, colors = bottom_outcome(config)
    return (parts, colors)


def sample_configuration(config: SamplerConfig, index: int) -> SampleOutcome:
    """One seeded sample; see Sampler for the sweep description."""
    return Sampler(config).sample(index)


@dataclass
class SampleSummary:
    num_samples: int
    histogram: dict = field(default_factory=dict)   # key -> count
    escape_count: int = 0

    def record(self, outcome: SampleOutcome):
        if outcome.escaped:
            self.escape_count += 1
        self.histogram[outcome.key] = self.histogram.get(outcome.key, 0) + 1

    def check(self):
        assert sum(self.histogram.values()) == self.num_samples


def run_sampler(config: SamplerConfig) -> SampleSummary:
    """SampleSummary over num_samples draws; pure in (spec, seed, num_samples)."""
    sampler = Sampler(config)
    summary = SampleSummary(config.num_samples)
    for index in range(config.num_samples):
        summary.record(sampler.sample(index))
    summary.check()
    return summary


# ---------------------------------------------------------------------------
# Trajectories
# ---------------------------------------------------------------------------

def trajectory_from_configuration(config: Configuration):
    """Particle positions at times t = 0..2n.

    Entry t is the list of (column, label) for the occupied vertical edges
    crossed by the sweep line after t row updates (top boundary at t = 0,
    bottom boundary at t = 2n), ordered left to right (decreasing column
    number).
    """
    out = []
    for t in range(0, 2 * config.n + 1):
        layer = config.vert[2 * config.n - t]
        occ = [(c, layer[c - 1]) for c in range(config.L, 0, -1) if layer[c - 1] != 0]
        out.append(occ)
    return out


# ---------------------------------------------------------------------------
# Exact reference distributions
# ---------------------------------------------------------------------------

def configuration_weight(spec: LatticeSpec, config: Configuration) -> Fraction:
    """Product of vertex weights of a (not necessarily admissible) filling."""
    q = spec.point.q
    w = ONE
    for r in range(1, 2 * spec.n + 1):
        fam = Family.GAMMA if r % 2 == 0 else Family.DELTA
        z = spec.point.z[(r + 1) // 2 - 1]
        for c in range(1, spec.L + 1):
            w *= vertex_weight(spec.model, fam, config.vertex_edges(r, c), (z,), q)
    return w


def exhaustive_distribution(spec: LatticeSpec) -> dict:
    """Exact law of the sampler: key -> probability, summing to 1.

    Walks every branch of the sampling process with its exact conditional
    probability (no randomness).  Non-escaping leaves carry exactly the
    Boltzmann weight of their configuration, so the mass of an outcome key
    equals the partition function with that bottom boundary.
    """
    bnd = boundary_assignment(spec)
    n2, L = 2 * spec.n, spec.L
    q = spec.point.q
    letters = spec.alphabet
    dist: dict = {}
    vert = [[None] * L for _ in range(n2 + 1)]
    vert[n2] = list(bnd.top)

    def bottom_key(bottom_row):
        cols = [c for c in range(L, 0, -1) if bottom_row[c - 1] != 0]
        np_ = len(cols)
        parts = tuple(col - (np_ + 1 - i) for i, col in enumerate(cols, start=1))
        if spec.model.colored:
            return (parts, tuple(bottom_row[col - 1] for col in cols))
        return (parts, None)

    def pair(i: int, prob: Fraction, escaped: bool):
        if i == 0:
            key = ESCAPE if escaped else bottom_key(vert[0])
            dist[key] = dist.get(key, ZERO) + prob
            return
        r = 2 * i
        z = spec.point.z[i - 1]

        def gamma(c, cur, p):
            if c == 0:
                delta(1, cap_map(spec.model, cur), p)
                return
            top = vert[r][c - 1]
            cands = [(cur, top), (top, cur)] if cur != top else [(cur, cur)]
            for right, bottom in cands:
                w = vertex_weight(spec.model, Family.GAMMA, (cur, top, right, bottom), (z,), q)
                if w == 0:
                    continue
                vert[r - 1][c - 1] = bottom
                gamma(c - 1, right, p * w)

        def delta(c, cur, p):
            rr = 2 * i - 1
            if c == L + 1:
                pair(i - 1, p, escaped or cur != 0)
                return
            top = vert[rr][c - 1]
            cands = [(cur, top), (top, cur)] if cur != top else [(cur, cur)]
            for left, bottom in cands:
                w = vertex_weight(spec.model, Family.DELTA, (left, top, cur, bottom), (z,), q)
                if w == 0:
                    continue
                vert[rr - 1][c - 1] = bottom
                delta(c + 1, left, p * w)

        gamma(L, bnd.left[r - 1], prob)

    pair(spec.n, ONE, False)
    return dist


# ---------------------------------------------------------------------------
# Outcome spaces and empirical-vs-exact comparison
# ---------------------------------------------------------------------------

def _partitions(nparts: int, maxpart: int):
    """Weakly decreasing tuples of length nparts with parts in 0..maxpart."""
    if nparts == 0:
        yield ()
        return
    def rec(k, hi):
        if k == 0:
            yield ()
            return
        for first in range(hi, -1, -1):
            for rest in rec(k - 1, first):
                yield (first,) + rest
    yield from rec(nparts, maxpart)


def reachable_outcomes(model: Model, n: int, L: int):
    """All bottom outcome keys that can carry probability.

    Reflecting and colored families conserve particles (n' = n); the
    absorbing family's caps absorb or emit one particle each, so n' is
    even and at most 2n.  Colored outcomes range over all color words
    (tau in B_n for the signed family, S_n for the positive one).
    """
    if model is Model.UNCOLORED_ABSORBING:
        for np_ in range(0, 2 * n + 1, 2):
            for parts in _partitions(np_, L - np_):
                yield (parts, None), Partition(parts), None
        return
    taus: list = [None]
    if model is Model.COLORED_SIGNED:
        taus = list(all_signed_permutations(n))
    elif model is Model.COLORED_POSITIVE:
        taus = list(all_plain_permutations(n))
    for parts in _partitions(n, L - n):
        for tau in taus:
            colors = tuple(tau(i) for i in range(1, n + 1)) if tau else None
            yield (parts, colors), Partition(parts), tau


def exact_outcome_probabilities(spec: LatticeSpec) -> dict:
    """key -> exact probability for every reachable outcome, plus ESCAPE.

    Probabilities are the partition functions with the corresponding bottom
    boundary (valid in the stochastic regime); the escape mass is the
    complement.  Zero-probability outcomes are dropped.
    """
    out = {}
    total = ZERO
    for key, lam, tau in reachable_outcomes(spec.model, spec.n, spec.L):
        z = partition_function(LatticeSpec(spec.model, spec.n, spec.L, lam,
                                           spec.point, spec.sigma, tau))
        if z != 0:
            out[key] = z
            total += z
    if total > 1:
        raise SamplerSoundnessError(f"outcome probabilities sum to {total} > 1")
    if total != 1:
        out[ESCAPE] = 1 - total
    return out


@dataclass
class OutcomeStat:
    key: object
    count: int
    probability: Fraction
    z_score: float


POOLED = "(pooled rare outcomes)"

#: Outcomes with expected count below this are pooled into one bucket; the
#: normal approximation behind z-scores and the chi-square distribution of
#: the aggregate statistic are both invalid for near-empty cells (a single
#: observation of a probability-1e-7 outcome is unremarkable but would blow
#: past any z cutoff), so the stated tolerances are applied at the
#: resolution where they mean something.  Soundness of rare outcomes is
#: still fully checked: a sampled outcome with exact probability 0 is a
#: hard error regardless of pooling.
POOL_MIN_EXPECTED = 10.0


@dataclass
class StatReport:
    """Per-outcome z-scores and an aggregate chi-square test.

    Outcomes with expected count under POOL_MIN_EXPECTED appear as one
    pooled row.  The chi-square statistic runs over the pooled table
    (including rows never sampled) with num_rows - 1 degrees of freedom;
    ``chi2_quantile`` is the 0.999 quantile of that distribution.
    """

    num_samples: int
    rows: list
    chi2_stat: float
    dof: int
    chi2_quantile: float

    @property
    def max_z(self) -> float:
        return max((row.z_score for row in self.rows), default=0.0)

    def within(self, z_limit: float = 5.0) -> bool:
        return self.max_z < z_limit and self.chi2_stat < self.chi2_quantile


def compare_empirical_to_exact(summary: SampleSummary, exact: dict) -> StatReport:
    """Statistics report; raises SamplerSoundnessError on impossible outcomes."""
    N = summary.num_samples
    for key, count in summary.histogram.items():
        if count > 0 and exact.get(key, ZERO) == 0:
            raise SamplerSoundnessError(f"sampled outcome {key} has exact probability 0")
    cells = []
    pooled_p, pooled_count = ZERO, 0
    for key, p in sorted(exact.items(), key=repr):
        count = summary.histogram.get(key, 0)
        if float(p) * N < POOL_MIN_EXPECTED:
            pooled_p += p
            pooled_count += count
        else:
            cells.append((key, count, p))
    if pooled_p > 0:
        cells.append((POOLED, pooled_count, pooled_p))
    rows = []
    chi = 0.0
    for key, count, p in cells:
        pf = float(p)
        se = math.sqrt(pf * (1 - pf) / N)
        zscore = abs(count / N - pf) / se if se > 0 else 0.0
        chi += (count - N * pf) ** 2 / (N * pf)
        rows.append(OutcomeStat(key, count, p, zscore))
    dof = max(len(cells) - 1, 1)
    return StatReport(N, rows, chi, dof, float(chi2.ppf(0.999, dof)))
