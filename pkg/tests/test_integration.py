"""Cross-module integration: braid tensors glued onto open lattices.

These tests couple the diagram builders to the lattice transfer sweep:
the lattice's right boundary is left open (2n free edge labels) and
contracted against cap / braid tensors evaluated by the diagram module.
Any disagreement between the two modules' orientation conventions (cap
top vs bottom, crossing slot order, parameter roles) would break them.
"""

from fractions import Fraction as F

import pytest

from symplectic_ice import diagram as dg
from symplectic_ice.diagram import caduceus_scalar
from symplectic_ice.lattice import (LatticeSpec, Partition, SignedPermutation,
                                    partition_function,
                                    transfer_right_edge_weights)
from symplectic_ice.rationals import sample_point
from symplectic_ice.weights import Model

UR, UA = Model.UNCOLORED_REFLECTING, Model.UNCOLORED_ABSORBING


@pytest.mark.parametrize("model,lam", [(UR, (2, 1)), (UA, (2, 0))])
def test_cap_tensor_contraction_reproduces_z(model, lam):
    # contracting the open right boundary with the two-cap tensor is the
    # partition function
    pt = sample_point(2, 61)
    spec = LatticeSpec(model, 2, 4, Partition(lam), pt)
    open_weights = transfer_right_edge_weights(spec)
    caps = dg.caduceus_rhs(model).evaluate_all(pt.q)
    # boundary order of the cap stack is (eps1..eps4) top to bottom =
    # lattice rows (4, 3, 2, 1)
    total = sum(w * caps.get((h[3], h[2], h[1], h[0]), F(0))
                for h, w in open_weights.items())
    assert total == partition_function(spec)


@pytest.mark.parametrize("model,lam", [(UR, (2, 1)), (UA, (2, 0))])
def test_braid_tensor_contraction_gives_scalar_times_z(model, lam):
    # gluing the four-crossing braid (rising strands z_2, falling z_1)
    # onto the lattice at swapped parameters reproduces the scalar times
    # the partition function -- the composite form of the braid collapse
    pt = sample_point(2, 62)
    q = pt.q
    z1, z2 = pt.z
    swapped = LatticeSpec(model, 2, 4, Partition(lam), pt.swap_z(1, 2))
    open_weights = transfer_right_edge_weights(swapped)
    braid = dg.caduceus_lhs(model, z2, z1).evaluate_all(q)
    total = sum(w * braid.get((h[3], h[2], h[1], h[0]), F(0))
                for h, w in open_weights.items())
    scalar = caduceus_scalar(z1, z2, q)
    assert total == scalar * partition_function(swapped)
    # and by permutation invariance the original lattice gives the same
    assert total == scalar * partition_function(
        LatticeSpec(model, 2, 4, Partition(lam), pt))


def test_colored_cap_tensor_contraction():
    pt = sample_point(2, 63)
    spec = LatticeSpec(Model.COLORED_SIGNED, 2, 4, Partition((1, 0)), pt,
                       SignedPermutation((-2, 1)), SignedPermutation((1, 2)))
    open_weights = transfer_right_edge_weights(spec)
    caps = dg.caduceus_rhs(Model.COLORED_SIGNED)
    caps = dg.WiringDiagram(Model.COLORED_SIGNED, 2, caps.nodes, caps.edges,
                            caps.boundary)
    tensor = caps.evaluate_all(pt.q)
    total = sum(w * tensor.get((h[3], h[2], h[1], h[0]), F(0))
                for h, w in open_weights.items())
    assert total == partition_function(spec)
