from itertools import combinations

import pytest

from chainmat.enumgeo import (
    ModuleShape,
    count_cyclic_submodules,
    cyc_antichain_bound,
    cyclic_submodules,
    max_antichain,
    projective_line,
    simple_size_bound,
    uniform_rank2_representation,
)
from chainmat.errors import BadTorsionIndexError, NotChainRingError
from chainmat.indepsys import build_from_matrix, is_isomorphic, uniform_system
from chainmat.modindep import is_modular_independent
from chainmat.oracle import cyclic_submodule_census, cyclic_submodule_census_by_sets
from chainmat.rings import make_ring

Z4 = make_ring("z:4")
Z8 = make_ring("z:8")


def test_counting_examples():
    assert count_cyclic_submodules(ModuleShape((2, 0)), Z4, 1) == 3
    assert count_cyclic_submodules(ModuleShape((2, 0)), Z4, 2) == 6
    assert count_cyclic_submodules(ModuleShape((2, 0, 0)), Z8, 3) == 12
    with pytest.raises(BadTorsionIndexError):
        count_cyclic_submodules(ModuleShape((1, 0)), Z4, 3)
    with pytest.raises(NotChainRingError):
        count_cyclic_submodules(ModuleShape((1,)), make_ring("table:f2xy_xx_xy_yy"), 1)


def test_counting_matches_both_censuses():
    cases = [
        (Z4, (2, 0)), (Z4, (1, 1)), (Z4, (0, 3)), (Z4, (2, 1)),
        (Z8, (1, 0, 0)), (Z8, (1, 1, 1)), (Z8, (0, 2, 0)),
        (make_ring("z:9"), (2, 0)), (make_ring("fpu:2,2"), (1, 2)),
        (make_ring("fpu:2,3"), (1, 0, 1)),
    ]
    for ring, mult in cases:
        shape = ModuleShape(mult)
        vals = shape.component_valuations()
        fast = cyclic_submodule_census(ring, vals)
        slow = cyclic_submodule_census_by_sets(ring, vals)
        assert fast == slow
        for s in range(1, ring.nilpotency_index + 1):
            assert fast.get(s, 0) == count_cyclic_submodules(shape, ring, s)


def test_projective_line_sizes():
    assert len(projective_line(Z4)) == 6
    assert len(projective_line(Z8)) == 12
    assert len(projective_line(make_ring("z:2"))) == 3
    assert len(projective_line(make_ring("fpu:3,2"))) == 12


def test_projective_line_pairs_and_triples():
    for ring in (Z4, make_ring("fpu:2,2"), make_ring("z:3")):
        line = projective_line(ring)
        for pair in combinations(line, 2):
            assert is_modular_independent(ring, list(pair))
        for triple in combinations(line, 3):
            assert not is_modular_independent(ring, list(triple))


def test_uniform_rank2_representation():
    m = uniform_rank2_representation(Z4, 6)
    assert is_isomorphic(build_from_matrix(m), uniform_system(2, 6)) is not None
    assert uniform_rank2_representation(Z4, 7) is None
    m5 = uniform_rank2_representation(Z4, 5)
    assert is_isomorphic(build_from_matrix(m5), uniform_system(2, 5)) is not None
    m1 = uniform_rank2_representation(Z4, 1)
    assert build_from_matrix(m1).rank() == 1


def test_simple_size_bound():
    assert simple_size_bound(Z4, 2) == 6
    assert simple_size_bound(Z8, 2) == 12
    f5 = make_ring("z:5")
    assert simple_size_bound(f5, 3) == 31  # projective plane point count over F5
    assert simple_size_bound(make_ring("z:3"), 2) == 4


def test_antichain_bounds():
    assert cyc_antichain_bound(Z4, 1) == 1
    assert cyc_antichain_bound(Z4, 2) == 6
    assert cyc_antichain_bound(make_ring("z:2"), 2) == 3
    assert simple_size_bound(Z8, 2) <= cyc_antichain_bound(Z8, 2)
    assert simple_size_bound(Z4, 2) <= cyc_antichain_bound(Z4, 2)


def test_max_antichain_bruteforce():
    sets = [frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")]
    assert max_antichain(sets) == 2
    chain = [frozenset(range(i)) for i in range(5)]
    assert max_antichain(chain) == 1


def test_cyclic_submodules_count():
    mods = cyclic_submodules(Z4, 2)
    # 1 zero + 3 of size 2 + 6 of size 4
    assert len(mods) == 10
    sizes = sorted(len(m) for m in mods)
    assert sizes == [1, 2, 2, 2, 4, 4, 4, 4, 4, 4]
