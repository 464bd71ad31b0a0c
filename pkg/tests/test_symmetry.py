"""Unit tests for qubit-permutation groups and Pauli orbits.

Orbit and Burnside literals were frozen from the dense-matrix oracle in
tests/oracles/dense_oracle.py.
"""

import pytest

from dla_lab.graphs import Graph
from dla_lab.paulis import PauliString, PauliVector
from dla_lab.symmetry import (
    GroupTooLarge,
    PermGroup,
    Permutation,
    apply_perm,
    apply_perm_vector,
    compress,
    decompress,
    graph_automorphisms,
    orbit_count,
    orbit_strings,
    orbit_sum,
)


def test_permutation_compose_inverse():
    p = Permutation((1, 2, 0))  # j -> images[j]
    q = p.inverse()
    assert p.compose(q).images == (0, 1, 2)
    assert q.compose(p).images == (0, 1, 2)
    assert Permutation.identity(4).images == (0, 1, 2, 3)


def test_cycle_count():
    assert Permutation((1, 2, 0)).cycle_count() == 1
    assert Permutation((0, 1, 2)).cycle_count() == 3
    assert Permutation((1, 0, 3, 2)).cycle_count() == 2


def test_apply_perm_pushforward():
    """A permutation moves the letter on qubit j to qubit pi(j)."""
    p = PauliString.from_label("XYI")
    rot = Permutation((1, 2, 0))
    assert apply_perm(rot, p).label() == "IXY"
    v = PauliVector(3, {p: 5})
    assert apply_perm_vector(rot, v).entries == {
        PauliString.from_label("IXY"): 5
    }


def test_group_orders():
    assert PermGroup.trivial(5).order() == 1
    assert PermGroup.symmetric(4).order() == 24
    assert PermGroup.dihedral(3).order() == 6
    assert PermGroup.dihedral(8).order() == 16
    assert PermGroup.reversal(6).order() == 2


def test_dihedral_orbit_of_yz():
    """Orbit of Y0 Z1 under the n=3 ring symmetries: six strings."""
    orbit = orbit_strings(PauliString.from_label("YZI"), PermGroup.dihedral(3))
    assert sorted(p.label() for p in orbit) == [
        "IYZ",
        "IZY",
        "YIZ",
        "YZI",
        "ZIY",
        "ZYI",
    ]


def test_orbit_sum_coefficients():
    v = orbit_sum(PauliString.from_label("XII"), PermGroup.dihedral(3))
    assert len(v) == 3
    assert all(c == 1 for _, c in v.terms())


def test_burnside_orbit_count():
    """|P_4 / D_4| = 55, frozen from the oracle's Burnside count."""
    assert orbit_count(4, PermGroup.dihedral(4)) == 55
    assert orbit_count(2, PermGroup.trivial(2)) == 16


def test_compress_decompress_round_trip():
    group = PermGroup.dihedral(5)
    v = orbit_sum(PauliString.from_label("YZIII"), group) + orbit_sum(
        PauliString.from_label("XIIII"), group
    ).scaled(-3)
    packed = compress(v, group)
    assert len(packed) == 2
    assert decompress(packed, group, 5) == v


def test_compress_rejects_non_invariant():
    group = PermGroup.dihedral(4)
    lopsided = PauliVector.single_term(PauliString.from_label("YZII"))
    with pytest.raises(ValueError):
        compress(lopsided, group)


def test_graph_automorphisms_path():
    """The path graph has exactly identity + reversal."""
    group = graph_automorphisms(Graph.path(3))
    images = sorted(p.images for p in group.elements())
    assert images == [(0, 1, 2), (2, 1, 0)]


def test_graph_automorphisms_cycle():
    assert graph_automorphisms(Graph.cycle(4)).order() == 8
    assert graph_automorphisms(Graph.complete(4)).order() == 24


def test_automorphism_search_cap():
    with pytest.raises(GroupTooLarge):
        graph_automorphisms(Graph.path(12), cap=10)
