from fractions import Fraction

import numpy as np
import pytest

import fusionring as fr
from conftest import charpoly_oracle, numeric_eigs
from fusionring import Quadratic, alg_cmp
from fusionring.cyclotomic import Cyc
from fusionring.errors import HypothesisError
from fusionring.represent import (
    SOURCE_D_MINUS,
    SOURCE_D_PLUS,
    SOURCE_IRR_H,
    SOURCE_SEMIDIRECT,
    abelian_characters,
)
from fusionring.ring import global_multiplication_matrix


def test_codegrees_group_ring():
    for factors in ((2,), (2, 2), (3,)):
        ring = fr.group_ring(factors)
        spec = fr.codegree_spectrum(ring)
        assert len(spec) == 1
        assert spec[0].value == ring.rank
        assert spec[0].eigen_multiplicity == ring.rank
        assert spec[0].dim_hint == 1


def test_codegrees_near_group_c2_2():
    spec = fr.codegree_spectrum(fr.near_group((2,), 2))
    values = [e.value for e in spec]
    assert values == [Quadratic(6, 2, 3), Quadratic(6, -2, 3), Quadratic(2)]
    assert all(e.eigen_multiplicity == 1 and e.dim_hint == 1 for e in spec)


def test_codegrees_haagerup():
    spec = fr.codegree_spectrum(fr.haagerup_izumi((3,)))
    # multiplicity-4 eigenvalue 6 = (dim 2) * (codegree 3) for the 2-dim irrep
    mult4 = [e for e in spec if e.eigen_multiplicity == 4]
    assert len(mult4) == 1 and mult4[0].value == 6
    assert mult4[0].dim_hint is None  # ring is noncommutative
    top = spec[0].value
    d = fr.fpdim_basis(fr.haagerup_izumi((3,)), 3)
    assert top == 3 + 3 * d * d


def test_codegree_sum_matches_rank(small_corpus):
    for name, ring in small_corpus.items():
        spec = fr.codegree_spectrum(ring)
        assert sum(e.eigen_multiplicity for e in spec) == ring.rank, name


def test_codegree_lower_bound(small_corpus):
    # dim(psi) f_psi >= |G_R| on every eigenvalue of M
    for name, ring in small_corpus.items():
        order = fr.invertibles(ring).order
        for e in fr.codegree_spectrum(ring):
            assert alg_cmp(e.value, order) >= 0, name


def test_irr_H_of_G_counts():
    assert len(fr.irr_H_of_G((2,), [0, 1])) == 1
    assert len(fr.irr_H_of_G((4,), [0, 2])) == 2
    assert fr.irr_H_of_G((4,), [0]) == []
    assert len(fr.irr_H_of_G((2, 2), [0, 1, 2, 3])) == 3


def test_irr0_codegrees():
    entries = fr.irr0_codegrees(fr.near_group((3,), 3))
    assert len(entries) == 2
    assert all(e.value == 3 and e.dim_hint == 1 for e in entries)
    assert fr.irr0_codegrees(fr.haagerup_izumi((3,))) == []
    entries = fr.irr0_codegrees(fr.near_group((2, 2), 4))
    assert len(entries) == 3
    assert all(e.value == 4 for e in entries)


def test_semidirect_irr_dims():
    assert sorted(r.dim for r in fr.semidirect_irr((3,), "inversion")) == [1, 1, 2]
    assert sorted(r.dim for r in fr.semidirect_irr((), "identity")) == [1, 1]
    assert sorted(r.dim for r in fr.semidirect_irr((4,), "inversion")) == [1, 1, 1, 1, 2]
    assert sorted(r.dim for r in fr.semidirect_irr((5,), "inversion")) == [1, 1, 2, 2]


def test_semidirect_irr_is_representation():
    from fusionring.construct import as_group

    k = as_group((4,))
    phi = k.inverse
    for rep in fr.semidirect_irr((4,), "inversion"):
        # multiplication law of K x| C2: (a,s)(b,t) = (a + theta^s b, s+t)
        for a in range(4):
            for b in range(4):
                for s in (0, 1):
                    for t in (0, 1):
                        ab = k.mult(a, phi[b] if s else b)
                        lhs = _mat_mult(rep.matrix(a, s), rep.matrix(b, t))
                        rhs = rep.matrix(ab, (s + t) % 2)
                        assert lhs == rhs


def _mat_mult(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(m)), start=Cyc.zero(a[0][0].N)) for j in range(p))
        for i in range(n)
    )


def test_uniform_irreps_haagerup_c3():
    ring = fr.haagerup_izumi((3,))
    models = fr.uniform_irreps(ring)
    assert sorted(m.dim for m in models) == [1, 1, 2]
    assert {m.source_tag for m in models} == {SOURCE_SEMIDIRECT, SOURCE_D_PLUS, SOURCE_D_MINUS}
    for m in models:
        assert fr.verify_irrep(ring, m) == []


def test_uniform_irreps_near_group_c2_2():
    ring = fr.near_group((2,), 2)
    models = fr.uniform_irreps(ring)
    assert sorted(m.dim for m in models) == [1, 1, 1]
    tags = sorted(m.source_tag for m in models)
    assert tags == sorted([SOURCE_IRR_H, SOURCE_D_PLUS, SOURCE_D_MINUS])
    for m in models:
        assert fr.verify_irrep(ring, m) == []


def test_uniform_irreps_haagerup_c2():
    ring = fr.haagerup_izumi((2,))
    models = fr.uniform_irreps(ring)
    assert sorted(m.dim for m in models) == [1, 1, 1, 1]
    for m in models:
        assert fr.verify_irrep(ring, m) == []


def test_uniform_irreps_dimension_characters():
    ring = fr.near_group((2,), 2)
    profile = fr.dimension_profile(ring)
    d_plus = profile.d
    for m in fr.uniform_irreps(ring):
        if m.source_tag == SOURCE_D_PLUS:
            entry = m.matrices[2][0][0]  # value at rho
            assert entry.u.as_fraction() == d_plus.a
            got_b = entry.v.as_fraction()
            assert Quadratic(entry.u.as_fraction(), got_b, m.radicand) == d_plus


def test_uniform_irreps_bijection_with_parts(two_orbit_corpus):
    for name, ring in two_orbit_corpus.items():
        data = fr.two_orbit_data(ring)
        if (
            data.uniform_coeff is None
            or not data.invertible.group.is_abelian
            or not data.noninv_selfdual
        ):
            continue
        models = fr.uniform_irreps(ring)
        assert sum(m.dim**2 for m in models) == ring.rank, name
        g = data.invertible.group
        pos = {b: p for p, b in enumerate(data.group_indices)}
        sub = [pos[s] for s in data.stabilizer]
        quotient, _ = g.quotient(sub)
        irr_h = fr.irr_H_of_G(g, sub)
        semi = fr.semidirect_irr(quotient, data.theta)
        expected = sorted([1] * len(irr_h) + [r.dim for r in semi])
        assert sorted(m.dim for m in models) == expected, name


def test_uniform_irreps_refuses_nonselfdual():
    ring = fr.uniform_two_orbit((3,), "trivial", "identity", 1)
    with pytest.raises(HypothesisError, match="self-dual"):
        fr.uniform_irreps(ring)


def test_uniform_irreps_refuses_nonuniform():
    ring = fr.dihedral_character_ring(9)
    with pytest.raises(Exception):
        fr.uniform_irreps(ring)  # not even two-orbit


def test_characters_commutative_group_ring():
    chars = fr.characters_commutative(fr.group_ring((2,)))
    vals = sorted(tuple(round(float(re)) for re, im in ch.values) for ch in chars)
    assert vals == [(1, -1), (1, 1)]


def test_characters_commutative_near_group():
    chars = fr.characters_commutative(fr.near_group((2,), 1))
    rho_vals = sorted(round(float(ch.values[2][0]), 6) for ch in chars)
    assert rho_vals == [-1.0, 0.0, 2.0]
    chars = fr.characters_commutative(fr.near_group((2,), 2))
    rho_vals = sorted(round(float(ch.values[2][0]), 6) for ch in chars)
    import math

    assert rho_vals == [round(1 - math.sqrt(3), 6), 0.0, round(1 + math.sqrt(3), 6)]


def test_characters_square_sum_matches_codegrees():
    ring = fr.near_group((2,), 2)
    chars = fr.characters_commutative(ring)
    eigs = sorted(float(e.value) for e in fr.codegree_spectrum(ring))
    sums = []
    for ch in chars:
        total = 0.0
        for i in range(ring.rank):
            re, im = ch.values[i]
            rd, imd = ch.values[ring.dual[i]]
            total += float(re) * float(rd) - float(im) * (-float(imd))
        sums.append(round(total, 6))
    assert sorted(sums) == [round(e, 6) for e in eigs]


def test_characters_vanishing_count_matches_irr0(two_orbit_corpus):
    for name, ring in two_orbit_corpus.items():
        if not fr.is_commutative(ring):
            continue
        data = fr.two_orbit_data(ring)
        if not data.invertible.group.is_abelian:
            continue
        expected = len(fr.irr0_codegrees(ring))
        chars = fr.characters_commutative(ring)
        noninv = [i for i in range(ring.rank) if i not in set(data.group_indices)]
        vanishing = 0
        for ch in chars:
            if all(abs(complex(float(r), float(im))) < 1e-6 for r, im in (ch.values[i] for i in noninv)):
                vanishing += 1
        assert vanishing == expected, name


def test_characters_commutative_rejects_noncommutative():
    with pytest.raises(HypothesisError):
        fr.characters_commutative(fr.haagerup_izumi((3,)))


def test_characters_commutative_tight_width_escalates():
    # beyond float64 resolution: the multiprecision fallback must certify
    width = Fraction(1, 2**60)
    chars = fr.characters_commutative(fr.near_group((2,), 2), width=width)
    assert len(chars) == 3
    assert all(c.residual_bound < width for c in chars)


def test_abelian_characters_orthogonality():
    from fusionring.construct import as_group

    g = as_group((2, 3))
    chars = abelian_characters(g)
    assert len(chars) == 6
    for ch in chars:
        total = Cyc.zero(ch.N)
        for e in range(g.order):
            total = total + ch.value(e)
        if ch.is_trivial:
            assert total.as_fraction() == g.order
        else:
            assert total.is_zero


def test_spectrum_against_oracle_small():
    for build in (lambda: fr.near_group((3,), 2), lambda: fr.haagerup_izumi((2,))):
        ring = build()
        m = global_multiplication_matrix(ring)
        assert charpoly_oracle(m.tolist()) == tuple(
            int(c) for c in __import__("fusionring.intpoly", fromlist=["charpoly"]).charpoly(m.tolist())
        )
        approx = sorted(float(e.value) for e in fr.codegree_spectrum(ring) for _ in range(e.eigen_multiplicity))
        assert np.allclose(approx, numeric_eigs(m), atol=1e-8)
