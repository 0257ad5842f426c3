from fractions import Fraction

import pytest

from conftest import s3_group
from fusionring.cyclotomic import Cyc, CycSqrt, cyclotomic_poly
from fusionring.groups import (
    FiniteGroup,
    abelian_group,
    character_exponents,
    is_automorphism,
    parse_group_factors,
)


def test_abelian_group_structure():
    g = abelian_group((2, 3))
    assert g.order == 6
    assert g.exponent == 6
    assert g.is_abelian
    assert g.element_order(1) == 3  # (0,1)
    assert g.inverse[1] == 2  # (0,1) + (0,2) = 0
    trivial = abelian_group(())
    assert trivial.order == 1


def test_from_table_relocates_identity():
    # cyclic C3 with identity at position 2
    table = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    g = FiniteGroup.from_table(table)
    assert g.table[0] == (0, 1, 2)
    assert g.order == 3


def test_s3_nonabelian_and_quotient():
    g = s3_group()
    assert g.order == 6
    assert not g.is_abelian
    # normal subgroup of order 3
    norm = next(
        s for s in (g.subgroup_generated([i]) for i in range(6)) if len(s) == 3
    )
    assert g.is_normal(norm)
    q, proj = g.quotient(list(norm))
    assert q.order == 2
    assert proj[0] == 0
    two = next(s for s in (g.subgroup_generated([i]) for i in range(6)) if len(s) == 2)
    assert not g.is_normal(two)


def test_character_exponents_c4():
    g = abelian_group((4,))
    chars = character_exponents(g)
    assert len(chars) == 4
    # values on the generator (index 1) exhaust Z/4
    assert sorted(ch[1] for ch in chars) == [0, 1, 2, 3]
    for ch in chars:
        for a in range(4):
            for b in range(4):
                assert (ch[a] + ch[b]) % 4 == ch[g.mult(a, b)] % 4


def test_character_exponents_klein():
    g = abelian_group((2, 2))
    chars = character_exponents(g)
    assert len(chars) == 4
    assert g.exponent == 2
    nontrivial = [ch for ch in chars if any(e % 2 for e in ch)]
    assert len(nontrivial) == 3


def test_character_exponents_rejects_nonabelian():
    with pytest.raises(ValueError):
        character_exponents(s3_group())


def test_is_automorphism():
    g = abelian_group((4,))
    assert is_automorphism(g, g.inverse)
    assert is_automorphism(g, (0, 1, 2, 3))
    assert not is_automorphism(g, (0, 2, 1, 3))


def test_parse_group_factors():
    assert parse_group_factors("2,2") == (2, 2)
    assert parse_group_factors("") == ()
    assert parse_group_factors("1") == ()


def test_cyclotomic_poly():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyc_arithmetic():
    z = Cyc.root(3, 1)
    assert z * z * z == Cyc.one(3)
    assert z + z * z == Cyc.rational(3, -1)  # 1 + z + z^2 = 0
    total = Cyc.zero(5)
    for k in range(5):
        total = total + Cyc.root(5, k)
    assert total.is_zero
    assert Cyc.root(8, 1).conjugate() == Cyc.root(8, 7)
    assert (Cyc.root(12, 3) * Cyc.root(12, 3)) == Cyc.rational(12, -1)  # i^2


def test_cyc_lift():
    z3 = Cyc.root(3, 1)
    z6 = z3.lift(6)
    assert z6 == Cyc.root(6, 2)
    assert z6 * Cyc.root(6, 1) == Cyc.root(6, 3)


def test_cyc_rationality():
    c = Cyc.root(4, 2)  # zeta_4^2 = -1
    assert c.is_rational and c.as_fraction() == -1
    assert not Cyc.root(4, 1).is_rational


def test_cycsqrt():
    one = CycSqrt.of(1, 5, u=Fraction(1, 2), v=Fraction(1, 2))  # golden ratio
    prod = one * one
    assert prod.u.as_fraction() == Fraction(3, 2)
    assert prod.v.as_fraction() == Fraction(1, 2)  # phi^2 = phi + 1
    z = CycSqrt.of(4, 2, u=0, v=1)  # sqrt(2) over Q(i)
    assert (z * z).u.as_fraction() == 2
    assert (z * z).v.is_zero
