"""Builders for the fusion-ring families under study.

Group rings, near-group rings R(G, level), Haagerup-Izumi rings, general
uniform two-orbit rings, and character rings of finite groups (with a
closed-form dihedral table generator).  Every builder runs the axiom checker
on its output; uniform_two_orbit treats an associativity failure as a
legitimate result and reports it, since not every parameter choice yields a
fusion ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cyclotomic import Cyc
from .errors import MalformedRingError
from .groups import FiniteGroup, abelian_group, is_automorphism
from .ring import FusionRing


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Finite abelian group as a product of cyclic factors (mixed-radix
    element encoding); an empty factor list is the trivial group."""

    cyclic_factors: tuple[int, ...]

    def __init__(self, cyclic_factors: Sequence[int]):
        object.__setattr__(self, "cyclic_factors", tuple(int(f) for f in cyclic_factors))
        if any(f < 2 for f in self.cyclic_factors):
            raise ValueError("cyclic factors must be >= 2")

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_factors) if self.cyclic_factors else 1

    def group(self) -> FiniteGroup:
        return abelian_group(self.cyclic_factors)


def as_group(spec) -> FiniteGroup:
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, AbelianGroupSpec):
        return spec.group()
    return abelian_group(tuple(spec))


def group_ring(spec) -> FusionRing:
    """Integral group ring of a finite group (pointed fusion ring).

    Accepts an abelian spec, a FiniteGroup, a factor list, or an explicit
    Cayley table (identity located automatically).
    """
    if isinstance(spec, (list, tuple)) and spec and isinstance(spec[0], (list, tuple)):
        g = FiniteGroup.from_table(spec)
    else:
        g = as_group(spec)
    n = g.order
    tensor = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            tensor[i, j, g.mult(i, j)] = 1
    ring = FusionRing(g.names, g.inverse, tensor)
    ring.require_verified()
    return ring


def near_group(spec, level: int) -> FusionRing:
    """Near-group ring: invertibles G plus one extra self-dual element rho
    with rho^2 = level*rho + sum_G g.  Valid for every (G, level)."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    g = as_group(spec)
    n = g.order
    rho = n
    tensor = np.zeros((n + 1, n + 1, n + 1), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            tensor[i, j, g.mult(i, j)] = 1
        tensor[i, rho, rho] = 1
        tensor[rho, i, rho] = 1
        tensor[rho, rho, i] = 1
    tensor[rho, rho, rho] = level
    labels = list(g.names) + ["rho"]
    dual = list(g.inverse) + [rho]
    ring = FusionRing(labels, dual, tensor)
    ring.require_verified()
    return ring


def haagerup_izumi(spec) -> FusionRing:
    """Two-orbit ring on G + Gx with trivial stabilizer, x g = g^{-1} x and
    (g x)(h x) = g h^{-1} + sum_f (f x).  Requires abelian G; commutative
    iff |G| <= 2."""
    g = as_group(spec)
    if not g.is_abelian:
        raise ValueError("Haagerup-Izumi rings need an abelian group")
    n = g.order
    rank = 2 * n
    t = np.zeros((rank, rank, rank), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            t[a, b, g.mult(a, b)] = 1  # g * h
            t[a, n + b, n + g.mult(a, b)] = 1  # g * (h x)
            t[n + b, a, n + g.mult(b, g.inv(a))] = 1  # (h x) * g = (h g^-1) x
            t[n + a, n + b, g.mult(a, g.inv(b))] = 1  # invertible part of (gx)(hx)
            for c in range(n):
                t[n + a, n + b, n + c] += 1
    labels = list(g.names) + [f"x({name})" for name in g.names]
    dual = list(g.inverse) + [n + a for a in range(n)]
    ring = FusionRing(labels, dual, t)
    ring.require_verified()
    return ring


def _resolve_theta(quotient: FiniteGroup, theta) -> tuple[int, ...]:
    if theta == "identity" or theta is None:
        phi = tuple(range(quotient.order))
    elif theta == "inversion":
        phi = quotient.inverse
    elif callable(theta):
        phi = tuple(theta(i) for i in range(quotient.order))
    else:
        phi = tuple(int(x) for x in theta)
    if not is_automorphism(quotient, phi):
        raise ValueError("theta is not an automorphism of G/H")
    if any(phi[phi[i]] != i for i in range(quotient.order)):
        raise ValueError("theta must be an involution of G/H")
    return phi


def uniform_two_orbit(spec, stabilizer_gens: Sequence, theta, k: int) -> FusionRing:
    """Uniform two-orbit ring on basis G + {rep x : rep in G/H}.

    Fusion rules: x g = theta(gH) x and x^2 = sum_H h + (k*|H|) * sum_y y,
    so k is the level divisor (H = G reproduces the near-group ring at level
    k*|G|).  Associativity is NOT automatic: the result is checked, and a
    failing parameter choice raises NotAFusionRingError with the witnessing
    indices, which is a legitimate outcome rather than a bug.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    g = as_group(spec)
    if not g.is_abelian:
        raise ValueError("uniform_two_orbit needs an abelian group")
    sub = _resolve_subgroup(g, stabilizer_gens)
    quotient, proj = g.quotient(sub)
    phi = _resolve_theta(quotient, theta)
    cosets = g.left_cosets(sub)
    reps = [min(c) for c in cosets]  # lexicographically least under the encoding
    coset_of = {e: idx for idx, c in enumerate(cosets) for e in c}
    kappa = k * len(sub)

    n = g.order
    m = len(reps)
    rank = n + m
    t = np.zeros((rank, rank, rank), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            t[a, b, g.mult(a, b)] = 1
    for a in range(n):
        for i in range(m):
            t[a, n + i, n + coset_of[g.mult(a, reps[i])]] = 1  # g . (rep x)
            # (rep x) . g  =  rep * theta-lift(g) * x
            t[n + i, a, n + coset_of[g.mult(reps[i], reps[phi[proj[a]]])]] = 1
    for i in range(m):
        for j in range(m):
            base = g.mult(reps[i], reps[phi[j]])  # rep_i * theta(rep_j), up to H
            for h in sub:
                t[n + i, n + j, g.mult(base, h)] += 1
            if kappa:
                for c in range(m):
                    t[n + i, n + j, n + c] += kappa

    labels = list(g.names) + [f"x({g.names[r]})" for r in reps]
    dual = list(g.inverse)
    for i in range(m):
        # (rep_i x)* = rep_j x with coset(rep_j) = theta(coset(rep_i))^{-1}
        jq = quotient.inv(phi[i])
        dual.append(n + jq)
    ring = FusionRing(labels, dual, t)
    ring.require_verified()
    return ring


def _resolve_subgroup(g: FiniteGroup, gens) -> tuple[int, ...]:
    """Subgroup from generator indices, element-name strings, or 'all'/'trivial'."""
    if gens == "all":
        return tuple(range(g.order))
    if gens == "trivial" or gens is None:
        return (0,)
    idx = []
    name_pos = {name: i for i, name in enumerate(g.names)}
    for item in gens:
        if isinstance(item, str):
            if item not in name_pos:
                raise ValueError(f"unknown group element {item!r}")
            idx.append(name_pos[item])
        else:
            idx.append(int(item))
    return g.subgroup_generated(idx)


@dataclass(frozen=True)
class CharacterTable:
    """Exact character table: rows are characters, columns conjugacy classes.

    Values live in Q(zeta_N) with N = root_order.  The identity class comes
    first (size 1) and the trivial character is row 0.
    """

    group_order: int
    root_order: int
    class_sizes: tuple[int, ...]
    values: tuple[tuple[Cyc, ...], ...]

    def validate(self) -> None:
        k = len(self.class_sizes)
        if len(self.values) != k:
            raise MalformedRingError("character table must be square")
        if any(len(row) != k for row in self.values):
            raise MalformedRingError("ragged character table")
        if sum(self.class_sizes) != self.group_order:
            raise MalformedRingError("class sizes must sum to the group order")
        if self.class_sizes[0] != 1:
            raise MalformedRingError("identity class (size 1) must come first")
        if any(not v.is_rational or v.as_fraction() != 1 for v in self.values[0]):
            raise MalformedRingError("row 0 must be the trivial character")
        dims = []
        for row in self.values:
            d = row[0]
            if not d.is_rational or d.as_fraction().denominator != 1 or d.as_fraction() <= 0:
                raise MalformedRingError("character degrees must be positive integers")
            dims.append(int(d.as_fraction()))
        if sum(d * d for d in dims) != self.group_order:
            raise MalformedRingError("sum of squared degrees must equal the group order")
        for i in range(k):
            for j in range(i, k):
                ip = Cyc.zero(self.root_order)
                for c in range(k):
                    ip = ip + self.values[i][c] * self.values[j][c].conjugate() * self.class_sizes[c]
                want = Fraction(self.group_order if i == j else 0)
                if not ip.is_rational or ip.as_fraction() != want:
                    raise MalformedRingError(f"orthogonality fails for rows ({i},{j})")

    def degrees(self) -> tuple[int, ...]:
        return tuple(int(row[0].as_fraction()) for row in self.values)


def character_ring(table: CharacterTable) -> FusionRing:
    """Fusion ring of a character table: structure constants are the inner
    products <chi_i chi_j, chi_k>, which must land in nonnegative integers."""
    table.validate()
    k = len(table.class_sizes)
    n = table.group_order
    tensor = np.zeros((k, k, k), dtype=np.int64)
    conj_rows = [tuple(v.conjugate() for v in row) for row in table.values]
    dual = []
    for i in range(k):
        matches = [j for j in range(k) if table.values[j] == conj_rows[i]]
        if len(matches) != 1:
            raise MalformedRingError(f"conjugate of character {i} missing from table")
        dual.append(matches[0])
    for i in range(k):
        for j in range(k):
            for l in range(k):
                ip = Cyc.zero(table.root_order)
                for c in range(k):
                    ip = ip + (
                        table.values[i][c] * table.values[j][c] * conj_rows[l][c] * table.class_sizes[c]
                    )
                if not ip.is_rational:
                    raise MalformedRingError(f"non-rational multiplicity at ({i},{j},{l})")
                mult = ip.as_fraction() / n
                if mult.denominator != 1 or mult < 0:
                    raise MalformedRingError(f"non-integral multiplicity {mult} at ({i},{j},{l})")
                tensor[i, j, l] = int(mult)
    labels = [f"chi{i}" for i in range(k)]
    ring = FusionRing(labels, dual, tensor)
    ring.require_verified()
    return ring


def dihedral_character_table(n: int) -> CharacterTable:
    """Closed-form character table of the dihedral group of order 2n."""
    if n < 3:
        raise ValueError("need n >= 3")
    N = n if n % 2 else n  # zeta_n suffices; -1 is rational
    one = Cyc.one(N)

    def rot(m: int, j: int) -> Cyc:
        return Cyc.root(N, m * j) + Cyc.root(N, -m * j)

    rows: list[tuple[Cyc, ...]] = []
    if n % 2:
        sizes = [1] + [2] * ((n - 1) // 2) + [n]
        rows.append(tuple(one for _ in sizes))
        rows.append(tuple([one] * (1 + (n - 1) // 2) + [Cyc.rational(N, -1)]))
        for m in range(1, (n - 1) // 2 + 1):
            row = [Cyc.rational(N, 2)]
            row += [rot(m, j) for j in range(1, (n - 1) // 2 + 1)]
            row.append(Cyc.zero(N))
            rows.append(tuple(row))
    else:
        half = n // 2
        sizes = [1, 1] + [2] * (half - 1) + [half, half]
        # classes: e, r^half, r^j (j=1..half-1), reflections (even), reflections (odd)
        for a, b in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            row = [Cyc.rational(N, 1), Cyc.rational(N, a**half)]
            row += [Cyc.rational(N, a**j) for j in range(1, half)]
            row += [Cyc.rational(N, b), Cyc.rational(N, a * b)]
            rows.append(tuple(row))
        for m in range(1, half):
            row = [Cyc.rational(N, 2), Cyc.rational(N, 2 * (-1) ** m)]
            row += [rot(m, j) for j in range(1, half)]
            row += [Cyc.zero(N), Cyc.zero(N)]
            rows.append(tuple(row))
    return CharacterTable(2 * n, N, tuple(sizes), tuple(rows))


def dihedral_character_ring(n: int) -> FusionRing:
    """Character ring of the dihedral group of order 2n; rank 2+(n-1)/2 for
    odd n and 4+(n-2)/2 for even n."""
    return character_ring(dihedral_character_table(n))
