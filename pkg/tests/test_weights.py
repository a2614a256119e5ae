import itertools
import random
from fractions import Fraction as F

import pytest

from symplectic_ice.rationals import sample_point, sample_regime_point, zprime
from symplectic_ice.weights import (Family, Model, STOCHASTIC_INPUT_SLOTS,
                                    UsageError, admissible_pattern, alphabet,
                                    cap_weight, stochastic_row_check,
                                    vertex_weight)

UR, UA = Model.UNCOLORED_REFLECTING, Model.UNCOLORED_ABSORBING
CS, CP = Model.COLORED_SIGNED, Model.COLORED_POSITIVE

Q = F(7, 3)
Z = F(2, 5)
MINUS = -1


def w(model, fam, edges, params=(Z,), q=Q):
    return vertex_weight(model, fam, edges, params, q)


class TestOrdinaryTables:
    def test_gamma_table_values(self):
        zp = None
        # (left, top, right, bottom); '-' encoded as -1
        assert w(UR, Family.GAMMA, (0, 0, 0, 0)) == 1
        assert w(UR, Family.GAMMA, (-1, -1, -1, -1)) == 1
        assert w(UR, Family.GAMMA, (0, -1, 0, -1)) == Z
        assert w(UR, Family.GAMMA, (-1, 0, -1, 0)) == Q * Z
        assert w(UR, Family.GAMMA, (-1, 0, 0, -1)) == 1 - Q * Z
        assert w(UR, Family.GAMMA, (0, -1, -1, 0)) == 1 - Z

    def test_delta_table_values(self):
        zp = zprime(Z, Q)
        assert w(UR, Family.DELTA, (0, 0, 0, 0)) == 1
        assert w(UR, Family.DELTA, (-1, -1, -1, -1)) == 1
        assert w(UR, Family.DELTA, (0, -1, 0, -1)) == zp
        assert w(UR, Family.DELTA, (-1, 0, -1, 0)) == zp / Q
        assert w(UR, Family.DELTA, (-1, -1, 0, 0)) == 1 - zp
        assert w(UR, Family.DELTA, (0, 0, -1, -1)) == 1 - zp / Q

    def test_unlisted_patterns_are_zero(self):
        assert w(UR, Family.GAMMA, (0, 0, -1, -1)) == 0
        assert w(UR, Family.DELTA, (-1, 0, 0, -1)) == 0
        assert w(CS, Family.GAMMA, (1, 2, 2, 2), (Z,)) == 0

    def test_colored_relative_order(self):
        # same relative order -> same weight, for any strictly increasing relabeling
        rng = random.Random(0)
        letters = alphabet(CS, 3)
        for _ in range(300):
            edges = tuple(rng.choice(letters) for _ in range(4))
            # order-preserving relabeling: add a shift toward the positives
            shift = {c: i for i, c in enumerate(sorted(set(edges)))}
            mapped = tuple(shift[c] + 1 for c in edges)  # lives in colored-positive range
            for fam in (Family.GAMMA, Family.DELTA):
                assert w(CS, fam, edges) == w(CS, fam, mapped)

    def test_uncolored_specialization(self):
        # restricting either colored table to {c_0, c_1} and reading c_1 as
        # '-' reproduces the uncolored tables entry by entry
        relabel = {0: 0, 1: -1}
        for fam in (Family.GAMMA, Family.DELTA):
            for edges in itertools.product((0, 1), repeat=4):
                mapped = tuple(relabel[e] for e in edges)
                assert w(CS, fam, edges) == w(UR, fam, mapped)
                assert w(CP, fam, edges) == w(UR, fam, mapped)

    def test_param_arity_checked(self):
        with pytest.raises(UsageError):
            vertex_weight(UR, Family.GAMMA, (0, 0, 0, 0), (Z, Z), Q)
        with pytest.raises(UsageError):
            vertex_weight(UR, Family.R_GAMMA_GAMMA, (0, 0, 0, 0), (Z,), Q)


class TestCaps:
    def test_cap_tables(self):
        assert cap_weight(UR, 0, 0) == 1
        assert cap_weight(UR, -1, -1) == 1
        assert cap_weight(UR, 0, -1) == 0
        assert cap_weight(UA, 0, -1) == 1
        assert cap_weight(UA, -1, 0) == 1
        assert cap_weight(UA, 0, 0) == 0
        # signed: c_a -> c_{-a}, '+' -> '+'
        assert cap_weight(CS, 2, -2) == 1
        assert cap_weight(CS, -1, 1) == 1
        assert cap_weight(CS, 0, 0) == 1
        assert cap_weight(CS, 2, 2) == 0
        # positive: identity
        assert cap_weight(CP, 2, 2) == 1
        assert cap_weight(CP, 2, 1) == 0

    def test_new_cap_is_flip_of_model_cap(self):
        assert vertex_weight(UR, Family.NEW_CAP, (0, -1), (), Q) == 1
        assert vertex_weight(UR, Family.NEW_CAP, (-1, 0), (), Q) == 1
        assert vertex_weight(UR, Family.NEW_CAP, (0, 0), (), Q) == 0
        assert vertex_weight(UA, Family.NEW_CAP, (0, 0), (), Q) == 1
        with pytest.raises(UsageError):
            vertex_weight(CS, Family.NEW_CAP, (0, 0), (), Q)


class TestRMatrices:
    def test_gamma_gamma_values(self):
        zi, zj = F(2, 5), F(3, 7)
        den = 1 - (Q + 1) * zj + Q * zi * zj
        p = (zi, zj)
        assert w(UR, Family.R_GAMMA_GAMMA, (0, -1, 0, -1), p) == (zi - zj) / den
        assert w(UR, Family.R_GAMMA_GAMMA, (-1, 0, -1, 0), p) == Q * (zi - zj) / den
        assert w(UR, Family.R_GAMMA_GAMMA, (-1, 0, 0, -1), p) == (1 - Q * zi) * (1 - zj) / den
        assert w(UR, Family.R_GAMMA_GAMMA, (0, -1, -1, 0), p) == (1 - zi) * (1 - Q * zj) / den

    def test_delta_gamma_values(self):
        zi, zj = F(2, 5), F(3, 7)
        zpi = zprime(zi, Q)
        den = 1 - zpi * zj
        p = (zi, zj)
        assert w(UR, Family.R_DELTA_GAMMA, (0, -1, 0, -1), p) == \
            (zpi + Q * zj - (Q + 1) * zpi * zj) / den
        assert w(UR, Family.R_DELTA_GAMMA, (-1, 0, -1, 0), p) == \
            (zpi / Q + zj - (1 + 1 / Q) * zpi * zj) / den
        # the exchange patterns are d-type: both left legs equal
        assert w(UR, Family.R_DELTA_GAMMA, (-1, -1, 0, 0), p) == (1 - zpi) * (1 - Q * zj) / den
        assert w(UR, Family.R_DELTA_GAMMA, (0, 0, -1, -1), p) == (1 - zpi / Q) * (1 - zj) / den
        assert w(UR, Family.R_DELTA_GAMMA, (-1, 0, 0, -1), p) == 0

    def test_delta_delta_values(self):
        zi, zj = F(2, 5), F(3, 7)
        zpi, zpj = zprime(zi, Q), zprime(zj, Q)
        den = Q - (Q + 1) * zpi + zpi * zpj
        p = (zi, zj)
        assert w(UR, Family.R_DELTA_DELTA, (0, -1, 0, -1), p) == (zpj - zpi) / den
        assert w(UR, Family.R_DELTA_DELTA, (-1, 0, 0, -1), p) == (1 - zpi) * (Q - zpj) / den

    def test_gamma_delta_values(self):
        zi, zj = F(2, 5), F(3, 7)
        zpj = zprime(zj, Q)
        den = zi * zpj - 1
        p = (zi, zj)
        assert w(UR, Family.R_GAMMA_DELTA, (0, -1, 0, -1), p) == (Q * zi + zpj - (1 + Q)) / den
        assert w(UR, Family.R_GAMMA_DELTA, (-1, -1, 0, 0), p) == (1 - Q * zi) * (1 - zpj) / den
        assert w(UR, Family.R_GAMMA_DELTA, (0, 0, -1, -1), p) == (1 - zi) * (Q - zpj) / (Q * den)
        with pytest.raises(UsageError):
            vertex_weight(CS, Family.R_GAMMA_DELTA, (0, 0, 0, 0), p, Q)

    def test_fish_equals_lemma_specialization(self):
        pt = sample_point(1, 4)
        z, q = pt.z[0], pt.q
        t1, t2 = 1 / (q * z), zprime(z, q) / q
        for edges in itertools.product((0, -1), repeat=4):
            assert vertex_weight(UR, Family.R_FISH, edges, (z,), q) == \
                vertex_weight(UR, Family.R_LEMMA, edges, (t1, t2), q)

    def test_fish_table_values(self):
        pt = sample_point(1, 4)
        z, q = pt.z[0], pt.q
        zp = zprime(z, q)
        den = q * z + zp - (q + 1)
        assert vertex_weight(UR, Family.R_FISH, (0, -1, 0, -1), (z,), q) == (z * zp - 1) / den
        assert vertex_weight(UR, Family.R_FISH, (-1, 0, 0, -1), (z,), q) == \
            -(z - 1) * (q - zp) / den


class TestStochasticity:
    def test_row_sums_from_figures(self):
        # qz + (1-qz) = 1 and z'/q + (1 - z'/q) = 1
        assert stochastic_row_check(UR, Family.GAMMA, (-1, 0), (Z,), Q) == 1
        assert stochastic_row_check(UR, Family.DELTA, (-1, 0), (Z,), Q) == 1
        assert stochastic_row_check(UR, Family.CAP, (0,), (), Q) == 1

    @pytest.mark.parametrize("model", list(Model))
    def test_all_stochastic_rows_sum_to_one(self, model):
        # exact unit rows witnessed at 20 random points
        n = 2
        letters = alphabet(model, n)
        for seed in range(20):
            pt = sample_point(2, 11 + seed)
            q = pt.q
            for fam, slots in STOCHASTIC_INPUT_SLOTS.items():
                if fam is Family.NEW_CAP and model.colored:
                    continue
                if fam in (Family.CAP, Family.NEW_CAP):
                    params, inputs_list = (), [(a,) for a in letters]
                elif fam in (Family.GAMMA, Family.DELTA):
                    params, inputs_list = (pt.z[0],), list(itertools.product(letters, repeat=2))
                else:
                    params = (pt.z[0], pt.z[1])
                    inputs_list = list(itertools.product(letters, repeat=2))
                for inputs in inputs_list:
                    assert stochastic_row_check(model, fam, inputs, params, q, n) == 1, \
                        (model, fam, inputs)

    def test_gamma_delta_crossing_not_stochastic(self):
        with pytest.raises(UsageError):
            stochastic_row_check(UR, Family.R_GAMMA_DELTA, (0, -1), (Z, Z), Q)

    def test_weights_in_unit_interval_at_regime_points(self):
        for seed in range(20):
            pt = sample_regime_point(2, seed)
            for model in Model:
                letters = alphabet(model, 2)
                for fam in (Family.GAMMA, Family.DELTA):
                    for edges in itertools.product(letters, repeat=4):
                        val = vertex_weight(model, fam, edges, (pt.z[0],), pt.q)
                        assert 0 <= val <= 1


class TestConservation:
    @pytest.mark.parametrize("model", list(Model))
    def test_color_conservation(self, model):
        # Gamma conserves {left, top} -> {right, bottom};
        # Delta conserves {right, top} -> {left, bottom}
        pt = sample_point(2, 3)
        letters = alphabet(model, 2)
        for fam in (Family.GAMMA, Family.DELTA):
            for edges in itertools.product(letters, repeat=4):
                if vertex_weight(model, fam, edges, (pt.z[0],), pt.q) == 0:
                    continue
                l, t, r, b = edges
                if fam is Family.GAMMA:
                    assert sorted((l, t)) == sorted((r, b))
                else:
                    assert sorted((r, t)) == sorted((l, b))

    @pytest.mark.parametrize("model", list(Model))
    def test_cap_conservation(self, model):
        letters = alphabet(model, 2)
        for top in letters:
            for bottom in letters:
                if cap_weight(model, top, bottom) == 0:
                    continue
                if model is UR or model is CP:
                    assert bottom == top
                elif model is UA:
                    assert bottom == -1 - top
                else:
                    assert bottom == -top


def test_admissible_pattern_vs_weight():
    # admissible <-> weight not identically zero (checked at two points)
    pts = [sample_point(2, s) for s in (5, 6)]
    for model in Model:
        letters = alphabet(model, 2)
        fams = [Family.GAMMA, Family.DELTA]
        for fam in fams:
            for edges in itertools.product(letters, repeat=4):
                vals = [vertex_weight(model, fam, edges, (pt.z[0],), pt.q) for pt in pts]
                if admissible_pattern(model, fam, edges):
                    assert any(v != 0 for v in vals), (model, fam, edges)
                else:
                    assert all(v == 0 for v in vals)
