"""Shared corpus fixtures and independent oracles.

The oracles here are deliberately implemented by different algorithms than
the library paths they check: characteristic polynomials via the
Faddeev-LeVerrier trace recursion (the library interpolates fraction-free
determinants), numeric eigenvalues via numpy.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np
import pytest

import fusionring as fr
from fusionring.groups import FiniteGroup


# -- explicit nonabelian groups ------------------------------------------


def _mulclose_table(gens: list[tuple[int, ...]]) -> list[list[int]]:
    """Cayley table of the permutation group generated by gens."""

    def compose(p, q):  # p after q
        return tuple(p[i] for i in q)

    n = len(gens[0])
    ident = tuple(range(n))
    elems = [ident]
    frontier = [ident]
    while frontier:
        e = frontier.pop()
        for g in gens:
            h = compose(g, e)
            if h not in elems:
                elems.append(h)
                frontier.append(h)
    pos = {e: i for i, e in enumerate(elems)}
    return [[pos[compose(a, b)] for b in elems] for a in elems]


def s3_group() -> FiniteGroup:
    return FiniteGroup.from_table(_mulclose_table([(1, 0, 2), (1, 2, 0)]))


def d4_group() -> FiniteGroup:
    return FiniteGroup.from_table(_mulclose_table([(1, 2, 3, 0), (0, 3, 2, 1)]))


def q8_group() -> FiniteGroup:
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
        ("i", "1"): "i", ("j", "1"): "j", ("k", "1"): "k",
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def mul(a: str, b: str) -> str:
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        c = base[(a, b)]
        if c.startswith("-"):
            sign, c = -sign, c[1:]
        return c if sign == 1 else "-" + c

    table = [[units.index(mul(a, b)) for b in units] for a in units]
    return FiniteGroup.from_table(table, names=units)


# -- independent oracles ---------------------------------------------------


def charpoly_oracle(matrix) -> tuple:
    """det(xI - A) by the Faddeev-LeVerrier recursion, ascending integer
    coefficients; independent of the library's interpolation route."""
    a = [[Fraction(int(x)) for x in row] for row in matrix]
    n = len(a)
    coeffs_desc = [Fraction(1)]
    mk = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        # M_k = A * (M_{k-1} + c_{k-1} I); here mk already includes the shift
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        ck = -sum(am[i][i] for i in range(n)) / k
        coeffs_desc.append(ck)
        mk = [[am[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    asc = list(reversed(coeffs_desc))
    assert all(c.denominator == 1 for c in asc)
    return tuple(int(c) for c in asc)


def numeric_eigs(matrix) -> list[float]:
    return sorted(float(x) for x in np.linalg.eigvalsh(np.asarray(matrix, dtype=float)))


def brute_force_associator_violations(ring) -> list[tuple]:
    """Direct triple-product enumeration: coefficients of (b_i b_j) b_k and
    b_i (b_j b_k) computed by plain loops, no einsum."""
    t = ring.tensor
    n = ring.rank
    bad = []
    for i, j, k in product(range(n), repeat=3):
        left = [0] * n
        right = [0] * n
        for m in range(n):
            cij = int(t[i, j, m])
            cjk = int(t[j, k, m])
            for l in range(n):
                left[l] += cij * int(t[m, k, l])
                right[l] += cjk * int(t[i, m, l])
        if left != right:
            bad.append((i, j, k))
    return bad


# -- corpora ---------------------------------------------------------------

ABELIAN_LE8 = [
    (),
    (2,),
    (3,),
    (4,),
    (2, 2),
    (5,),
    (6,),
    (7,),
    (8,),
    (2, 4),
    (2, 2, 2),
]

ABELIAN_LE16 = ABELIAN_LE8 + [
    (9,),
    (3, 3),
    (10,),
    (11,),
    (12,),
    (2, 6),
    (13,),
    (14,),
    (15,),
    (16,),
    (2, 8),
    (4, 4),
    (2, 2, 4),
    (2, 2, 2, 2),
]

NEAR_GROUP_SMALL = [(), (2,), (3,), (4,), (2, 2)]  # |G| <= 4


@pytest.fixture(scope="session")
def small_corpus():
    """Rings of rank <= 8: group rings of order <= 8 (including S3, D4, Q8),
    near-groups with |G| <= 4 and level <= 12, Haagerup-Izumi with |G| <= 4,
    dihedral character rings n <= 9."""
    rings = {}
    for factors in ABELIAN_LE8:
        rings[f"Z[{factors or 'C1'}]"] = fr.group_ring(factors)
    rings["Z[S3]"] = fr.group_ring([list(r) for r in s3_group().table])
    rings["Z[D4]"] = fr.group_ring([list(r) for r in d4_group().table])
    rings["Z[Q8]"] = fr.group_ring([list(r) for r in q8_group().table])
    for factors in NEAR_GROUP_SMALL:
        for level in range(13):
            rings[f"NG({factors},{level})"] = fr.near_group(factors, level)
    for factors in NEAR_GROUP_SMALL:
        rings[f"HI({factors})"] = fr.haagerup_izumi(factors)
    for n in range(3, 10):
        rings[f"chD{n}"] = fr.dihedral_character_ring(n)
    return rings


def cubic_chain_ring() -> fr.FusionRing:
    """Rank-3 commutative ring with a cubic Perron root (x^2 = 1 + y,
    x y = x + y, y^2 = 1 + x + y); dimensions are 2cos(pi/7)-type."""
    t = np.zeros((3, 3, 3), dtype=np.int64)
    t[0, 0, 0] = t[0, 1, 1] = t[0, 2, 2] = t[1, 0, 1] = t[2, 0, 2] = 1
    t[1, 1, 0] = t[1, 1, 2] = 1
    t[1, 2, 1] = t[1, 2, 2] = 1
    t[2, 1, 1] = t[2, 1, 2] = 1
    t[2, 2, 0] = t[2, 2, 1] = t[2, 2, 2] = 1
    return fr.FusionRing(["1", "x", "y"], [0, 1, 2], t)


def s3_two_orbit_ring() -> fr.FusionRing:
    """Two-orbit ring with nonabelian invertibles S3, stabilizer C3, and two
    self-dual noninvertibles of dimension 3 (uniform coefficient 1)."""
    g = s3_group()
    rot = [i for i in range(6) if g.element_order(i) in (1, 3)]
    ref = [i for i in range(6) if g.element_order(i) == 2]
    t = np.zeros((8, 8, 8), dtype=np.int64)
    for a in range(6):
        for b in range(6):
            t[a, b, g.mult(a, b)] = 1
    x, y = 6, 7
    for a in rot:
        t[a, x, x] = t[a, y, y] = t[x, a, x] = t[y, a, y] = 1
    for a in ref:
        t[a, x, y] = t[a, y, x] = t[x, a, y] = t[y, a, x] = 1
    for u, v, lead in ((x, x, rot), (y, y, rot), (x, y, ref), (y, x, ref)):
        for h in lead:
            t[u, v, h] = 1
        t[u, v, x] += 1
        t[u, v, y] += 1
    dual = list(g.inverse) + [x, y]
    return fr.FusionRing(list(g.names) + ["x", "y"], dual, t)


@pytest.fixture(scope="session")
def two_orbit_corpus():
    rings = {}
    for factors in NEAR_GROUP_SMALL:
        for level in (0, 1, 2, 3, 4, 6, 8):
            if factors == () and level == 0:
                continue  # rho^2 = 1 makes rho invertible: pointed, one orbit
            rings[f"NG({factors},{level})"] = fr.near_group(factors, level)
    for factors in NEAR_GROUP_SMALL + [(5,), (6,)]:
        rings[f"HI({factors})"] = fr.haagerup_izumi(factors)
    rings["U(C4,C2,id,1)"] = fr.uniform_two_orbit((4,), [2], "identity", 1)
    rings["U(C4,triv,inv,1)"] = fr.uniform_two_orbit((4,), "trivial", "inversion", 1)
    rings["U(C2xC2,triv,id,1)"] = fr.uniform_two_orbit((2, 2), "trivial", "identity", 1)
    rings["U(C3,triv,id,1)"] = fr.uniform_two_orbit((3,), "trivial", "identity", 1)
    rings["U(C6,C3,inv,2)"] = fr.uniform_two_orbit((6,), [2], "inversion", 2)
    rings["U(S3,C3)"] = s3_two_orbit_ring()
    return rings
