from __future__ import annotations

import numpy as np
import pytest

from lcmlat.errors import CyclicCovers, NotALattice, NotBounded, NotComparable
from lcmlat.lattice import (
    atoms,
    coatoms,
    dual,
    height,
    is_graded,
    is_isomorphic,
    is_lower_semimodular,
    is_upper_semimodular,
    lattice_from_covers,
    meet_irreducibles,
    mi_width,
    mobius,
    open_interval_order_complex,
    product,
    property_report,
)
from lcmlat.constructions import fano_lattice, mn_lattice, subspace_lattice
from lcmlat.graphs import edge_ideal_lattice, path, star

B2_COVERS = [(0, 1), (0, 2), (1, 3), (2, 3)]


def b2():
    return lattice_from_covers(4, B2_COVERS)


def test_one_point_lattice():
    L = lattice_from_covers(1, [])
    assert L.bottom == L.top == 0
    assert height(L) == 0
    rep = property_report(L)
    assert all(v.verdict for v in rep.entries.values())


def test_b2_structure():
    L = b2()
    assert L.bottom == 0 and L.top == 3
    assert atoms(L) == [1, 2]
    assert coatoms(L) == [1, 2]
    assert meet_irreducibles(L) == [1, 2]
    ok, rf = is_graded(L)
    assert ok and rf.ranks == (0, 1, 1, 2) and rf.height == 2
    assert mi_width(L) == 2


def test_b2_all_properties_true():
    rep = property_report(b2())
    assert all(v.verdict for v in rep.entries.values())


def test_two_maximal_elements_rejected():
    with pytest.raises(NotBounded):
        lattice_from_covers(4, [(0, 1), (1, 2), (0, 3)])


def test_cyclic_covers_rejected():
    with pytest.raises(CyclicCovers):
        lattice_from_covers(3, [(0, 1), (1, 2), (2, 0)])


def test_no_unique_meet_rejected():
    # 0 < a,b < c,d < 1: the pair (c, d) has no unique meet
    covers = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)]
    with pytest.raises(NotALattice):
        lattice_from_covers(6, covers)


def test_unsorted_cover_input_is_supported():
    # bottom gets the largest index; results must match the sorted copy
    L = lattice_from_covers(4, [(3, 1), (3, 2), (1, 0), (2, 0)])
    assert L.bottom == 3 and L.top == 0
    assert sorted(atoms(L)) == [1, 2]
    assert is_isomorphic(L, b2())


def test_mn_lattice_properties():
    M3 = mn_lattice(3)
    assert meet_irreducibles(M3) == atoms(M3)
    assert mi_width(M3) == 3
    rep = property_report(M3)
    assert rep.verdict("modular")
    assert not rep.verdict("distributive")
    assert not rep.verdict("uniquely_complemented")
    x, c1, c2 = rep["uniquely_complemented"].witness
    assert c1 != c2


def test_fano_lattice_counts():
    F = fano_lattice()
    assert F.n == 16
    assert len(atoms(F)) == len(coatoms(F)) == 7
    assert meet_irreducibles(F) == coatoms(F)
    assert height(F) == 3
    assert mi_width(F) == 7
    assert is_graded(F)[0]


def test_heights():
    assert height(lattice_from_covers(1, [])) == 0
    assert height(edge_ideal_lattice(path(5))) == 4
    assert height(fano_lattice()) == 3


def test_graded_examples():
    assert not is_graded(edge_ideal_lattice(path(5)))[0]
    ok, rf = is_graded(fano_lattice())
    assert ok and rf.height == 3


def test_mobius_values():
    L = b2()
    assert mobius(L, 1, 1) == 1
    assert mobius(L, L.bottom, L.top) == 1
    F = fano_lattice()
    assert abs(mobius(F, F.bottom, F.top)) == 8
    with pytest.raises(NotComparable):
        mobius(L, 1, 2)


def test_mobius_row_sums_vanish(lattice_pool):
    for L in lattice_pool.values():
        for y in range(L.n):
            for x in range(L.n):
                if x != y and L.leq(x, y):
                    total = sum(
                        mobius(L, x, z)
                        for z in range(L.n)
                        if L.leq(x, z) and L.leq(z, y)
                    )
                    assert total == 0


def test_open_interval_complexes():
    L = b2()
    K = open_interval_order_complex(L, L.bottom, 1)
    assert K.faces_by_dim == {-1: [()]}
    K2 = open_interval_order_complex(L, L.bottom, L.top)
    assert K2.n_faces(0) == 2 and K2.n_faces(1) == 0
    F = fano_lattice()
    KF = open_interval_order_complex(F, F.bottom, F.top)
    assert KF.n_faces(0) == 14 and KF.n_faces(1) == 21
    assert KF.dim == 1
    KF.validate()
    with pytest.raises(NotComparable):
        open_interval_order_complex(L, 1, 1)
    with pytest.raises(NotComparable):
        open_interval_order_complex(L, 1, 2)


def test_dual_is_involutive(lattice_pool):
    for L in lattice_pool.values():
        assert is_isomorphic(dual(dual(L)), L)


def test_graded_and_semimodularity_dualities(lattice_pool):
    for L in lattice_pool.values():
        D = dual(L)
        assert is_graded(L)[0] == is_graded(D)[0]
        assert is_upper_semimodular(L)[0] == is_lower_semimodular(D)[0]
        assert is_lower_semimodular(L)[0] == is_upper_semimodular(D)[0]


def test_products():
    B2 = b2()
    P = product(B2, B2)
    assert P.n == 16
    assert is_isomorphic(P, edge_ideal_lattice(star(5)))  # Boolean on 4 atoms
    one = lattice_from_covers(1, [])
    assert is_isomorphic(product(mn_lattice(3), one), mn_lattice(3))


def test_isomorphism_basics():
    B2 = b2()
    assert is_isomorphic(B2, B2)
    assert not is_isomorphic(B2, mn_lattice(3))
    assert is_isomorphic(subspace_lattice(2, 3), fano_lattice())
    # same size, same degree data, different order: M3 vs chain of 5
    C5 = lattice_from_covers(5, [(i, i + 1) for i in range(4)])
    assert not is_isomorphic(C5, mn_lattice(3))


def test_meet_join_algebra(lattice_pool):
    for L in lattice_pool.values():
        if L.n > 64:
            continue
        m, j = L.meet, L.join
        assert (m == m.T).all() and (j == j.T).all()
        # absorption: x ^ (x v y) == x == x v (x ^ y)
        idx = np.arange(L.n)[:, None]
        assert (m[idx, j] == idx).all()
        assert (j[idx, m] == idx).all()
        # associativity: (x ^ y) ^ z == x ^ (y ^ z), same for joins
        for x in range(L.n):
            assert (m[m[x], :] == m[x, m]).all()
            assert (j[j[x], :] == j[x, j]).all()


def test_implication_diagram(lattice_pool):
    for name, L in lattice_pool.items():
        rep = property_report(L)
        v = rep.verdict
        assert not v("boolean") or v("distributive"), name
        assert not v("distributive") or v("modular"), name
        assert not v("modular") or (
            v("upper_semimodular") and v("lower_semimodular") and v("supersolvable")
        ), name
        for p in ("modular", "upper_semimodular", "lower_semimodular",
                  "supersolvable"):
            assert not v(p) or v("graded"), (name, p)
        assert v("geometric") == (v("atomic") and v("upper_semimodular")), name
        assert not v("geometric") or (v("complemented") and v("coatomic")), name
        assert not v("boolean") or v("uniquely_complemented"), name
        assert not v("uniquely_complemented") or v("complemented"), name
        assert not v("strongly_complemented") or v("complemented"), name


def test_supersolvable_witness_is_modular_chain():
    F = fano_lattice()
    verdict = property_report(F)["supersolvable"]
    assert verdict.verdict
    chain = verdict.witness
    assert chain[0] == F.bottom and chain[-1] == F.top
    ranks = is_graded(F)[1].ranks
    assert [ranks[c] for c in chain] == list(range(len(chain)))


def test_witnesses_violate_definitions():
    L = edge_ideal_lattice(path(5))
    rep = property_report(L)
    assert rep["modular"].witness == "not graded"
    M3 = mn_lattice(3)
    x, y, z = property_report(M3)["distributive"].witness
    meet, join = M3.meet_of, M3.join_of
    assert meet(x, join(y, z)) != join(meet(x, y), meet(x, z))


def test_from_below_masks_handles_shuffled_indices(lattice_pool):
    import random

    from lcmlat.lattice import FiniteLattice

    rng = random.Random(17)
    for name in ("B2", "M5", "fano", "L(P5)", "L(C4)"):
        L = lattice_pool[name]
        perm = list(range(L.n))
        rng.shuffle(perm)
        shuffled = [0] * L.n
        for j in range(L.n):
            m = 0
            mask = L.below[j]
            while mask:
                low = mask & -mask
                m |= 1 << perm[low.bit_length() - 1]
                mask ^= low
            shuffled[perm[j]] = m
        R = FiniteLattice.from_below_masks(shuffled)
        assert R.bottom == perm[L.bottom] and R.top == perm[L.top]
        assert is_isomorphic(R, L), name
        for x in range(L.n):
            for y in range(L.n):
                assert R.meet[perm[x], perm[y]] == perm[L.meet[x, y]]
                assert R.join[perm[x], perm[y]] == perm[L.join[x, y]]


def test_false_witnesses_violate_definitions_exactly(lattice_pool):
    from lcmlat.lattice import (
        is_complemented,
        is_modular,
        is_upper_semimodular,
    )

    for name, L in lattice_pool.items():
        ok, rf = is_graded(L)
        if ok:
            rk = rf.ranks
            verdict, w = is_modular(L)
            if not verdict:
                x, y = w
                assert rk[x] + rk[y] != rk[L.meet_of(x, y)] + rk[L.join_of(x, y)]
            verdict, w = is_upper_semimodular(L)
            if not verdict:
                x, y = w
                assert rk[x] + rk[y] < rk[L.meet_of(x, y)] + rk[L.join_of(x, y)]
            verdict, w = is_lower_semimodular(L)
            if not verdict:
                x, y = w
                assert rk[x] + rk[y] > rk[L.meet_of(x, y)] + rk[L.join_of(x, y)]
        verdict, w = is_complemented(L)
        if not verdict:
            (x,) = w
            assert all(
                L.meet_of(x, y) != L.bottom or L.join_of(x, y) != L.top
                for y in range(L.n)
            )
