import json

import pytest

from chainmat.errors import NotChainRingError, NotLocalError, NotPrimeError
from chainmat.rings import make_ring

from helpers import CHAIN_SPECS, TABLE_SPECS


def test_z4_basic_data():
    z4 = make_ring("z:4")
    assert z4.size == 4
    assert z4.is_chain
    assert z4.residue_field_size == 2
    assert z4.nilpotency_index == 2
    assert z4.uniformizer == 2
    assert z4.maximal_ideal == frozenset({0, 2})


def test_spec_aliases():
    assert make_ring("z:8") is make_ring("z:8")
    assert make_ring("zpn:2,3").size == 8
    assert make_ring("fpu:2,2").size == 4


def test_units():
    z4 = make_ring("z:4")
    assert z4.is_unit(3)
    assert not z4.is_unit(2)
    t16 = make_ring("table:f2xy_xx_yy")
    assert t16.is_unit(t16.parse_element("1+x"))
    assert not t16.is_unit(t16.parse_element("x"))


def test_valuation():
    z8 = make_ring("z:8")
    assert z8.valuation(6) == 1
    assert z8.valuation(4) == 2
    assert z8.valuation(0) == 3
    with pytest.raises(NotChainRingError):
        make_ring("table:f2xy_xx_xy_yy").valuation(1)


def test_annihilators():
    z4 = make_ring("z:4")
    assert z4.annihilator(2) == frozenset({0, 2})
    assert z4.annihilator(1) == frozenset({0})
    t8 = make_ring("table:f2xy_xx_xy_yy")
    x = t8.parse_element("x")
    assert t8.annihilator(x) == t8.maximal_ideal
    # chain rings: Ann(a) = <theta^(nu - ord a)>
    for spec in CHAIN_SPECS:
        r = make_ring(spec)
        for a in range(r.size):
            assert r.annihilator(a) == r.ideal_of_valuation(r.nilpotency_index - r.valuation(a))


def test_residue_map():
    z4, z9 = make_ring("z:4"), make_ring("z:9")
    assert z4.residue(3) == 1
    assert z9.residue(6) == 0
    f2u = make_ring("fpu:2,2")
    assert f2u.residue(f2u.parse_element("1+u")) == 1
    # kernel of the residue map is exactly m
    for spec in CHAIN_SPECS + TABLE_SPECS:
        r = make_ring(spec)
        for a in range(r.size):
            assert (r.residue(a) == 0) == (a in r.maximal_ideal)


def test_unit_group_closure():
    for spec in CHAIN_SPECS + TABLE_SPECS:
        r = make_ring(spec)
        for a in r.units:
            for b in r.units:
                assert r.mul(a, b) in r.units
        for a in r.maximal_ideal:
            for b in range(r.size):
                assert r.mul(a, b) in r.maximal_ideal


def test_chain_factorization_and_ord_counts():
    for spec in CHAIN_SPECS:
        r = make_ring(spec)
        q, nu = r.residue_field_size, r.nilpotency_index
        assert r.size == q**nu
        assert len(r.maximal_ideal) == q ** (nu - 1)
        for t in range(nu):
            count = sum(1 for a in range(1, r.size) if r.valuation(a) == t)
            assert count == q ** (nu - t - 1) * (q - 1)
        for a in range(1, r.size):
            u = r.unit_part(a)
            assert u in r.units
            assert r.mul(u, r.uniformizer_power(r.valuation(a))) == a


def test_uniformizer_powers():
    for spec in CHAIN_SPECS:
        r = make_ring(spec)
        nu = r.nilpotency_index
        assert r.uniformizer_power(nu) == 0
        if nu > 1:
            assert r.uniformizer_power(nu - 1) != 0


def test_nonchain_rings_have_incomparable_ideals():
    for spec in TABLE_SPECS:
        r = make_ring(spec)
        assert not r.is_chain
        ideals = {r.principal_ideal(a) for a in range(r.size)}
        found = any(
            not (a <= b or b <= a) for a in ideals for b in ideals
        )
        assert found


def test_builtin_table_rings():
    t8 = make_ring("table:f2xy_xx_xy_yy")
    assert t8.size == 8
    assert len(t8.maximal_ideal) == 4
    x, y = t8.parse_element("x"), t8.parse_element("y")
    assert t8.mul(x, y) == 0
    assert t8.mul(x, x) == 0
    t16 = make_ring("table:f2xy_xx_yy")
    assert t16.size == 16
    x, y = t16.parse_element("x"), t16.parse_element("y")
    assert t16.mul(x, y) == t16.parse_element("xy")
    assert t16.mul(t16.mul(x, y), x) == 0


def test_not_prime_power_rejected():
    with pytest.raises(NotPrimeError):
        make_ring("z:6")
    with pytest.raises(NotPrimeError):
        make_ring("zpn:4,1")
    with pytest.raises(NotPrimeError):
        make_ring("z:1")


def test_table_ring_from_json_rejects_nonlocal(tmp_path):
    # Z2 x Z2 written as a table: two maximal ideals, hence rejected.
    pairs = [(0, 0), (1, 1), (1, 0), (0, 1)]
    index = {p: i for i, p in enumerate(pairs)}
    size = 4
    add = [[index[(a[0] ^ b[0], a[1] ^ b[1])] for b in pairs] for a in pairs]
    mul = [[index[(a[0] & b[0], a[1] & b[1])] for b in pairs] for a in pairs]
    path = tmp_path / "z2z2.json"
    blob = {"size": size, "add": add, "mul": mul, "names": ["0", "1", "e1", "e2"]}
    path.write_text(json.dumps(blob))
    with pytest.raises(NotLocalError):
        make_ring(f"table:{path}")


def test_table_ring_local_json_accepted(tmp_path):
    # Z4 shipped as a table ring should round-trip the chain structure.
    add = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    mul = [[(a * b) % 4 for b in range(4)] for a in range(4)]
    path = tmp_path / "z4.json"
    path.write_text(json.dumps({"size": 4, "add": add, "mul": mul, "names": ["0", "1", "2", "3"]}))
    r = make_ring(f"table:{path}")
    assert r.is_chain
    assert r.uniformizer == 2
    assert r.nilpotency_index == 2
