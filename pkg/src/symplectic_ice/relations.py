"""Machine verification of the local identities satisfied by the models.

Every verifier sweeps all boundary label combinations of a pair of wiring
diagrams at one exact parameter point and compares the two sides by exact
rational equality; there is no tolerance anywhere in this module.  A
report collects the sweep size and every failing boundary with both
values, so a single failure yields a minimal counterexample.

Color reductions follow the structure of the identities: crossing weights
depend only on the relative order of the labels, and color conservation
bounds how many distinct colors can meet any one configuration, so the
crossing identities are checked over a 4-label alphabet, the cap-braid
identity of the signed family over 5 labels and of the positive family
over 3 labels.  A ``paranoid`` flag widens each alphabet by one label.

Boundary sweeps are embarrassingly parallel across points; reports merge
associatively via ``RelationReport.merge``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import diagram as dg
from .rationals import ParamPoint, SamplingError, zprime
from .weights import Family, Model, UsageError

ZERO = Fraction(0)


@dataclass
class RelationReport:
    relation: str
    points_tested: int = 0
    combos_tested: int = 0
    failures: list = field(default_factory=list)   # (point, boundary, lhs, rhs)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "RelationReport") -> "RelationReport":
        assert self.relation == other.relation
        return RelationReport(self.relation,
                              self.points_tested + other.points_tested,
                              self.combos_tested + other.combos_tested,
                              self.failures + other.failures)

    def add_sweep(self, point, lhs: dict, rhs: dict, n_combos: int, scale=1):
        """Compare two boundary->value maps; record mismatches."""
        self.points_tested += 1
        self.combos_tested += n_combos
        for key in sorted(set(lhs) | set(rhs)):
            a = lhs.get(key, ZERO)
            b = rhs.get(key, ZERO)
            if a != scale * b:
                self.failures.append((point, key, a, scale * b))


def _sweep(diag_l, diag_r, q, report, point, scale=1):
    lhs = diag_l.evaluate_all(q)
    rhs = diag_r.evaluate_all(q)
    combos = len(diag_l.alphabet) ** len(diag_l.boundary)
    report.add_sweep(point, lhs, rhs, combos, scale)


def _check_not_singular(value, what):
    if value == 0:
        raise SamplingError(f"singular point: {what} vanishes")


def verify_ybe_uncolored(X: Family, Y: Family, point: ParamPoint,
                         model: Model = Model.UNCOLORED_REFLECTING) -> RelationReport:
    """The crossing identity for ordinary vertices X(z_1), Y(z_2): all 64
    boundary spin combinations agree between the left and right braidings."""
    zi, zj = point.z[0], point.z[1]
    q = point.q
    _check_denominator(X, Y, zi, zj, q)
    name = f"ybe-{_letter(X)}{_letter(Y)}"
    report = RelationReport(name)
    left = dg.ybe_left(model, 1, X, Y, zi, zj)
    right = dg.ybe_right(model, 1, X, Y, zi, zj)
    _sweep(left, right, q, report, point)
    return report


def _letter(fam: Family) -> str:
    return {Family.GAMMA: "g", Family.DELTA: "d"}[fam]


def _check_denominator(X, Y, zi, zj, q):
    zpi, zpj = zprime(zi, q), zprime(zj, q)
    dens = {
        (Family.GAMMA, Family.GAMMA): 1 - (q + 1) * zj + q * zi * zj,
        (Family.DELTA, Family.GAMMA): 1 - zpi * zj,
        (Family.DELTA, Family.DELTA): q - (q + 1) * zpi + zpi * zpj,
        (Family.GAMMA, Family.DELTA): zi * zpj - 1,
    }
    _check_not_singular(dens[(X, Y)], f"{_letter(X)}-{_letter(Y)} crossing denominator")


def verify_ybe_lemma(t1: Fraction, t2: Fraction, q: Fraction) -> RelationReport:
    """The free-parameter crossing identity: tables S(t1), T(t2) and their
    crossing agree on all 64 boundary combinations."""
    _check_not_singular(1 - (q + 1) * t1 + q * t1 * t2, "free-parameter crossing denominator")
    report = RelationReport("ybe-lemma")
    fams = (Family.LEMMA_S, Family.LEMMA_T, Family.R_LEMMA)
    model = Model.UNCOLORED_REFLECTING
    left = dg.ybe_left(model, 1, Family.GAMMA, Family.GAMMA, t1, t2, families=fams)
    right = dg.ybe_right(model, 1, Family.GAMMA, Family.GAMMA, t1, t2, families=fams)
    _sweep(left, right, q, report, (t1, t2, q))
    return report


def verify_caduceus(point: ParamPoint, cap: str) -> RelationReport:
    """Four-crossing braid against two bare caps, proportionality factor

        (q z_i z_j - 1)(1 - (q+1)(z_i+z_j) + (q^2+q+1) z_i z_j)
        -----------------------------------------------------------
                   q (z_i + z_j - (q+1) z_i z_j)^2

    for both cap choices, over all 16 boundary combinations.
    """
    model = _cap_model(cap)
    zi, zj = point.z[0], point.z[1]
    q = point.q
    _check_not_singular(zi + zj - (q + 1) * zi * zj, "caduceus denominator")
    for pair in ((zi, zj), (zj, zi)):
        _check_denominator(Family.GAMMA, Family.GAMMA, *pair, q)
        _check_denominator(Family.DELTA, Family.GAMMA, *pair, q)
        _check_denominator(Family.DELTA, Family.DELTA, *pair, q)
        _check_denominator(Family.GAMMA, Family.DELTA, *pair, q)
    report = RelationReport(f"caduceus-{cap}")
    lhs = dg.caduceus_lhs(model, zi, zj)
    rhs = dg.caduceus_rhs(model)
    _sweep(lhs, rhs, q, report, point, scale=dg.caduceus_scalar(zi, zj, q))
    return report


def _cap_model(cap: str) -> Model:
    try:
        return {"reflecting": Model.UNCOLORED_REFLECTING,
                "absorbing": Model.UNCOLORED_ABSORBING}[cap]
    except KeyError:
        raise UsageError(f"cap must be 'reflecting' or 'absorbing', got {cap!r}")


def verify_fish(point: ParamPoint, cap: str) -> RelationReport:
    """One crossing collapsing against the flipped cap.  The reflecting
    factor is -(1-(q+1)z_n+q z_n/z_n')/(1-(q+1)/z_n'+q z_n/z_n'); the
    absorbing factor is 1."""
    model = _cap_model(cap)
    z = point.z[-1]
    q = point.q
    zp = zprime(z, q)
    _check_not_singular(q * z + zp - (q + 1), "fish crossing denominator")
    report = RelationReport(f"fish-{cap}")
    lhs = dg.fish_lhs(model, z)
    rhs = dg.fish_rhs(model)
    _sweep(lhs, rhs, q, report, point, scale=dg.fish_scalar(model, z, q))
    return report


def _colored_model(name: str) -> Model:
    try:
        return {"signed": Model.COLORED_SIGNED,
                "positive": Model.COLORED_POSITIVE}[name]
    except KeyError:
        raise UsageError(f"model must be 'signed' or 'positive', got {name!r}")


def _reduction_alphabet(model: Model, size: int) -> tuple:
    """``size`` consecutive labels around 0 (only relative order matters):
    {-1, 0, 1, 2} at size 4 signed, {-2..2} at size 5, {0..size-1} positive."""
    if model is Model.COLORED_POSITIVE:
        return tuple(range(0, size))
    neg = (size - 1) // 2
    return tuple(range(-neg, size - neg))


def verify_ybe_colored(model_name: str, X: Family, Y: Family, point: ParamPoint,
                       paranoid: bool = False) -> RelationReport:
    """Colored crossing identity for (X, Y) in {(Delta,Gamma), (Gamma,Gamma),
    (Delta,Delta)} over a 4-label alphabet (4^6 boundary combinations)."""
    model = _colored_model(model_name)
    if (X, Y) == (Family.GAMMA, Family.DELTA):
        raise UsageError("the colored families have no Gamma-Delta crossing")
    zi, zj = point.z[0], point.z[1]
    q = point.q
    _check_denominator(X, Y, zi, zj, q)
    size = 5 if paranoid else 4
    letters = _reduction_alphabet(model, size)
    n_big = max(abs(l) for l in letters)
    report = RelationReport(f"ybe-colored-{model_name}-{_letter(X)}{_letter(Y)}")
    left = dg.ybe_left(model, n_big, X, Y, zi, zj).restricted(letters)
    right = dg.ybe_right(model, n_big, X, Y, zi, zj).restricted(letters)
    _sweep(left, right, q, report, point)
    return report


def verify_reflection(model_name: str, point: ParamPoint,
                      paranoid: bool = False) -> RelationReport:
    """Cap-braid identity: the two double-crossing configurations agree for
    every boundary word (5 labels signed, 3 labels positive).

    The signed alphabet must stay closed under the cap's color negation,
    so the paranoid widening adds a +/- pair there (5 -> 7 labels) and a
    single label for the positive family (3 -> 4).
    """
    model = _colored_model(model_name)
    zi, zj = point.z[0], point.z[1]
    q = point.q
    for pair in ((zi, zj), (zj, zi)):
        _check_denominator(Family.GAMMA, Family.GAMMA, *pair, q)
        _check_denominator(Family.DELTA, Family.GAMMA, *pair, q)
        _check_denominator(Family.DELTA, Family.DELTA, *pair, q)
    if model is Model.COLORED_SIGNED:
        size = 7 if paranoid else 5
    else:
        size = 4 if paranoid else 3
    letters = _reduction_alphabet(model, size)
    n_big = max(abs(l) for l in letters)
    report = RelationReport(f"reflection-{model_name}")
    lhs = dg.reflection_lhs(model, n_big, zi, zj).restricted(letters)
    rhs = dg.reflection_rhs(model, n_big, zi, zj).restricted(letters)
    _sweep(lhs, rhs, q, report, point)
    return report
