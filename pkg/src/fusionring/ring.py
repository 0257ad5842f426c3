"""Fusion rings as exact combinatorial objects.

A fusion ring is a finite basis with nonnegative integer structure constants
c[i,j,k], a unit at index 0, and a duality involution making the pairing
c[i,j,0] = delta(j, dual(i)) hold.  This module verifies those axioms,
computes Frobenius-Perron data exactly, and extracts the invertible-group /
orbit structure that the obstruction layer consumes.

All objects are immutable after construction and every operation is a pure
function, so concurrent use needs no locking.  Caches only memoize pure
results.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import intpoly
from .algebraic import (
    DEFAULT_WIDTH,
    AlgebraicReal,
    Quadratic,
    alg_cmp,
    largest_real_root,
)
from .errors import (
    MalformedRingError,
    NotAFusionRingError,
    NotTwoOrbitError,
    ThetaInconsistentError,
)
from .groups import FiniteGroup


@dataclass(frozen=True)
class Violation:
    """One broken axiom, with the indices witnessing it."""

    axiom: str
    indices: tuple
    detail: str = ""

    def __str__(self):
        msg = f"{self.axiom} at {self.indices}"
        return f"{msg}: {self.detail}" if self.detail else msg


class FusionRing:
    """Basis labels, duality involution, and structure-constant tensor."""

    def __init__(self, labels: Sequence[str], dual: Sequence[int], tensor):
        labels = tuple(str(x) for x in labels)
        rank = len(labels)
        if rank < 1:
            raise MalformedRingError("rank must be at least 1")
        try:
            dual = tuple(int(x) for x in dual)
        except (TypeError, ValueError) as exc:
            raise MalformedRingError(f"dual must be a list of integers: {exc}")
        if len(dual) != rank:
            raise MalformedRingError("dual length must equal rank")
        arr = np.asarray(tensor)
        if arr.shape != (rank, rank, rank):
            raise MalformedRingError(f"tensor shape {arr.shape} != {(rank, rank, rank)}")
        if not np.issubdtype(arr.dtype, np.integer):
            if np.issubdtype(arr.dtype, np.floating) or arr.dtype == object:
                asint = arr.astype(np.int64)
                if not np.array_equal(asint, arr):
                    raise MalformedRingError("tensor entries must be integers")
                arr = asint
            else:
                raise MalformedRingError(f"tensor dtype {arr.dtype} is not integral")
        arr = arr.astype(np.int64).copy()
        arr.setflags(write=False)
        self.labels = labels
        self.rank = rank
        self.dual = dual
        self._tensor = arr
        self._cache: dict = {}

    @property
    def tensor(self) -> np.ndarray:
        return self._tensor

    def c(self, i: int, j: int, k: int) -> int:
        return int(self._tensor[i, j, k])

    def fusion_matrix(self, i: int) -> np.ndarray:
        """N_i = [c(i, j, k)]_{j,k}, the matrix of left multiplication by i."""
        if not 0 <= i < self.rank:
            raise IndexError(f"basis index {i} out of range")
        m = self._tensor[i].copy()
        m.setflags(write=False)
        return m

    def same_fusion_rules(self, other: "FusionRing") -> bool:
        return (
            self.rank == other.rank
            and self.dual == other.dual
            and np.array_equal(self._tensor, other._tensor)
        )

    def __repr__(self):
        return f"FusionRing(rank={self.rank}, labels={list(self.labels)})"

    # memoized axiom check; pure, so races at worst recompute
    def violations(self) -> list[Violation]:
        if "violations" not in self._cache:
            self._cache["violations"] = verify_axioms(self)
        return self._cache["violations"]

    def require_verified(self):
        v = self.violations()
        if v:
            raise NotAFusionRingError(v)


def verify_axioms(ring: FusionRing) -> list[Violation]:
    """Every violated fusion-ring axiom, with witnesses; empty iff valid."""
    t = ring.tensor
    n = ring.rank
    out: list[Violation] = []

    neg = np.argwhere(t < 0)
    for i, j, k in neg[:20]:
        out.append(Violation("nonnegativity", (int(i), int(j), int(k)), f"c={int(t[i, j, k])}"))

    eye = np.eye(n, dtype=np.int64)
    bad = np.argwhere(t[0] != eye)
    for j, k in bad[:20]:
        out.append(Violation("unit-left", (0, int(j), int(k)), f"c={int(t[0, j, k])}"))
    bad = np.argwhere(t[:, 0, :] != eye)
    for i, k in bad[:20]:
        out.append(Violation("unit-right", (int(i), 0, int(k)), f"c={int(t[i, 0, k])}"))

    d = ring.dual
    if sorted(d) != list(range(n)):
        out.append(Violation("dual-permutation", tuple(d), "not a permutation"))
        return out  # the remaining checks need a valid involution
    for i in range(n):
        if d[d[i]] != i:
            out.append(Violation("dual-involution", (i,), f"dual(dual({i}))={d[d[i]]}"))
    if d[0] != 0:
        out.append(Violation("dual-fixes-unit", (0,), f"dual(0)={d[0]}"))

    # pairing c[i,j,0] = 1 iff j = dual(i)
    expected = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        expected[i, d[i]] = 1
    bad = np.argwhere(t[:, :, 0] != expected)
    for i, j in bad[:20]:
        out.append(
            Violation("duality-pairing", (int(i), int(j), 0), f"c={int(t[i, j, 0])}")
        )

    # anti-involution c[i,j,k] = c[dual(j),dual(i),dual(k)]
    dd = np.asarray(d)
    star = t[np.ix_(dd, dd, dd)].transpose(1, 0, 2)
    bad = np.argwhere(t != star)
    for i, j, k in bad[:20]:
        out.append(
            Violation(
                "anti-involution",
                (int(i), int(j), int(k)),
                f"c={int(t[i, j, k])} vs dual {int(star[i, j, k])}",
            )
        )

    # guard against int64 overflow on adversarial inputs: fall back to exact
    # Python integers when products could exceed the dtype
    if int(t.max(initial=0)) ** 2 * n >= 2**62:
        t = t.astype(object)
    left = np.einsum("ijm,mkl->ijkl", t, t)
    right = np.einsum("jkm,iml->ijkl", t, t)
    bad = np.argwhere(left != right)
    for i, j, k, l in bad[:20]:
        out.append(
            Violation(
                "associativity",
                (int(i), int(j), int(k), int(l)),
                f"{int(left[i, j, k, l])} != {int(right[i, j, k, l])}",
            )
        )
    return out


def fusion_matrix(ring: FusionRing, i: int) -> np.ndarray:
    return ring.fusion_matrix(i)


def fpdim_basis(ring: FusionRing, i: int, width: Fraction = DEFAULT_WIDTH) -> AlgebraicReal:
    """Frobenius-Perron dimension of basis element i: the largest real
    eigenvalue of N_i, exact (Quadratic when its minimal polynomial has
    degree <= 2, IsolatedRoot otherwise)."""
    ring.require_verified()
    key = ("fpdim", i)
    if key in ring._cache and width == DEFAULT_WIDTH:
        return ring._cache[key]
    if is_invertible(ring, i):
        result: AlgebraicReal = Quadratic(1)
    else:
        cp = intpoly.charpoly(ring.fusion_matrix(i).tolist())
        result = largest_real_root(cp, width)
    assert alg_cmp(result, 1) >= 0, "FP dimension below 1"
    if width == DEFAULT_WIDTH:
        ring._cache[key] = result
    return result


def fpdim_all(ring: FusionRing) -> list[AlgebraicReal]:
    return [fpdim_basis(ring, i) for i in range(ring.rank)]


def fpdim_total(ring: FusionRing, width: Fraction = DEFAULT_WIDTH) -> AlgebraicReal:
    """Sum of squared FP dimensions, computed exactly as the largest
    eigenvalue of M = sum_i N_i N_i^T (the global FP character value)."""
    ring.require_verified()
    key = "fpdim_total"
    if key in ring._cache and width == DEFAULT_WIDTH:
        return ring._cache[key]
    m = global_multiplication_matrix(ring)
    result = largest_real_root(intpoly.charpoly(m.tolist()), width)
    if width == DEFAULT_WIDTH:
        ring._cache[key] = result
    return result


def global_multiplication_matrix(ring: FusionRing) -> np.ndarray:
    """Matrix of multiplication by sum_x x x* (symmetric, PSD)."""
    t = ring.tensor
    if int(t.max(initial=0)) ** 2 * ring.rank >= 2**62:
        t = t.astype(object)  # exact Python integers, no overflow
        m = np.zeros((ring.rank, ring.rank), dtype=object)
    else:
        m = np.zeros((ring.rank, ring.rank), dtype=np.int64)
    for i in range(ring.rank):
        m += t[i] @ t[i].T
    return m


def is_invertible(ring: FusionRing, i: int) -> bool:
    """x invertible iff x x* = 1 on the nose."""
    row = ring.tensor[i, ring.dual[i]]
    return bool(row[0] == 1 and not row[1:].any())


@dataclass(frozen=True)
class InvertibleGroup:
    """The group of invertible basis elements, carried on basis indices."""

    indices: tuple[int, ...]
    group: FiniteGroup  # table positions follow `indices`

    @property
    def order(self) -> int:
        return len(self.indices)


def invertibles(ring: FusionRing) -> InvertibleGroup:
    ring.require_verified()
    if "invertibles" in ring._cache:
        return ring._cache["invertibles"]
    idx = tuple(i for i in range(ring.rank) if is_invertible(ring, i))
    pos = {g: p for p, g in enumerate(idx)}
    t = ring.tensor
    table = []
    for g in idx:
        row = []
        for h in idx:
            prods = np.flatnonzero(t[g, h])
            if len(prods) != 1 or int(prods[0]) not in pos:
                raise NotAFusionRingError(
                    [Violation("invertible-closure", (g, h), "product not invertible")]
                )
            row.append(pos[int(prods[0])])
        table.append(row)
    for g in idx:
        if ring.dual[g] not in pos:
            raise NotAFusionRingError(
                [Violation("invertible-dual-closure", (g,), "dual not invertible")]
            )
    result = InvertibleGroup(idx, FiniteGroup(table, names=[ring.labels[g] for g in idx]))
    ring._cache["invertibles"] = result
    return result


@dataclass(frozen=True)
class OrbitStructure:
    """Orbits of the invertible group acting on the basis by multiplication."""

    left_orbits: tuple[tuple[int, ...], ...]
    right_orbits: tuple[tuple[int, ...], ...]
    stabilizers: tuple[tuple[int, ...] | None, ...]  # common left stabilizer per left orbit
    element_stabilizers: dict[int, tuple[int, ...]]

    @property
    def orbit_count(self) -> int:
        return len(self.left_orbits)


def _action_permutation(ring: FusionRing, g: int, side: str) -> list[int]:
    """Permutation of the basis given by left (g.x) or right (x.g) product."""
    t = ring.tensor
    perm = []
    for x in range(ring.rank):
        row = t[g, x] if side == "left" else t[x, g]
        nz = np.flatnonzero(row)
        if len(nz) != 1 or row[nz[0]] != 1:
            raise NotAFusionRingError(
                [Violation("invertible-action", (g, x), "product by invertible not a basis element")]
            )
        perm.append(int(nz[0]))
    return perm


def orbit_structure(ring: FusionRing) -> OrbitStructure:
    ring.require_verified()
    if "orbits" in ring._cache:
        return ring._cache["orbits"]
    inv = invertibles(ring)
    left = {g: _action_permutation(ring, g, "left") for g in inv.indices}
    right = {g: _action_permutation(ring, g, "right") for g in inv.indices}

    def orbits_of(perms):
        seen: set[int] = set()
        orbits = []
        for x in range(ring.rank):
            if x in seen:
                continue
            orb = sorted({perm[x] for perm in perms.values()} | {x})
            # invertible action partitions the basis; orbit of x is its images
            seen.update(orb)
            orbits.append(tuple(orb))
        return tuple(orbits)

    left_orbits = orbits_of(left)
    right_orbits = orbits_of(right)
    elem_stab = {
        x: tuple(g for g in inv.indices if left[g][x] == x) for x in range(ring.rank)
    }
    stabs: list[tuple[int, ...] | None] = []
    for orb in left_orbits:
        common = {elem_stab[x] for x in orb}
        stabs.append(elem_stab[orb[0]] if len(common) == 1 else None)
    result = OrbitStructure(left_orbits, right_orbits, tuple(stabs), elem_stab)
    ring._cache["orbits"] = result
    return result


@dataclass(frozen=True)
class DimensionProfile:
    """Shape of the FP-dimension spectrum when it is {1} or {1, d}."""

    is_two_dimension: bool
    d: AlgebraicReal | None = None
    r: int | None = None
    s: int | None = None
    d_is_rational: bool | None = None


def dimension_profile(ring: FusionRing) -> DimensionProfile | None:
    """Profile (d, r, s) with d*d = r*d + s read off x x* for the smallest
    noninvertible x.  Returns a profile with is_two_dimension=False for
    pointed rings, and None when three or more distinct dimensions occur."""
    ring.require_verified()
    if "profile" in ring._cache:
        return ring._cache["profile"]
    noninv = [i for i in range(ring.rank) if not is_invertible(ring, i)]
    if not noninv:
        result: DimensionProfile | None = DimensionProfile(False)
    else:
        dims = {i: fpdim_basis(ring, i) for i in noninv}
        d0 = dims[noninv[0]]
        if any(alg_cmp(dims[i], d0) != 0 for i in noninv[1:]):
            result = None
        else:
            x = noninv[0]
            row = ring.tensor[x, ring.dual[x]]
            s = int(sum(row[g] for g in range(ring.rank) if is_invertible(ring, g)))
            r = int(sum(row[y] for y in noninv))
            # d solves d^2 = r d + s, so it is quadratic and the Perron
            # promotion must have produced an exact Quadratic
            if not isinstance(d0, Quadratic):
                raise AssertionError("two-dimension Perron root not promoted")
            assert (d0 * d0 - r * d0 - s).sign() == 0
            result = DimensionProfile(True, d0, r, s, d0.is_rational)
    ring._cache["profile"] = result
    return result


@dataclass(frozen=True)
class TwoOrbitData:
    """Extracted structure of a two-orbit ring: the invertible group G, the
    common stabilizer H of the noninvertible orbit, the coset involution
    theta, and the uniform coefficient when the rules are uniform."""

    invertible: InvertibleGroup
    stabilizer: tuple[int, ...]  # basis indices, subset of invertible.indices
    cosets: tuple[tuple[int, ...], ...]  # G/H as basis-index cosets, rep = min
    theta: tuple[int, ...] | None  # permutation of coset positions (abelian G/H)
    theta_family: dict[int, tuple[int, ...]] | None  # per noninvertible x otherwise
    uniform_coeff: int | None  # kappa in  x x* = sum_H h + kappa * sum_y y
    uniform_k: int | None  # kappa / |H| when integral (level divisor)
    noninv_selfdual: bool

    @property
    def group_indices(self) -> tuple[int, ...]:
        return self.invertible.indices

    @property
    def quotient_abelian(self) -> bool:
        return self.theta is not None


def _theta_for(ring: FusionRing, inv: InvertibleGroup, cosets, x: int) -> tuple[int, ...]:
    """theta_x on coset positions: g' x = x g defines theta_x(coset g) = coset g'."""
    t = ring.tensor
    coset_of = {}
    for pos, coset in enumerate(cosets):
        for g in coset:
            coset_of[g] = pos
    theta = [None] * len(cosets)
    for pos, coset in enumerate(cosets):
        g = coset[0]
        xg_row = t[x, g]
        nz = np.flatnonzero(xg_row)
        assert len(nz) == 1
        xg = int(nz[0])
        gprime = None
        for h in inv.indices:
            if t[h, x, xg] == 1:
                gprime = h
                break
        if gprime is None:
            raise NotTwoOrbitError("right action leaves the left orbit")
        theta[pos] = coset_of[gprime]
    return tuple(theta)


def two_orbit_data(ring: FusionRing) -> TwoOrbitData:
    ring.require_verified()
    if "two_orbit" in ring._cache:
        return ring._cache["two_orbit"]
    orbits = orbit_structure(ring)
    if orbits.orbit_count != 2:
        raise NotTwoOrbitError(f"{orbits.orbit_count} orbits, need exactly 2")
    inv = invertibles(ring)
    noninv_orbit = next(o for o in orbits.left_orbits if o[0] not in inv.indices)
    stab = orbits.stabilizers[orbits.left_orbits.index(noninv_orbit)]
    if stab is None:
        raise ThetaInconsistentError("noninvertible stabilizers differ across the orbit")

    pos = {g: p for p, g in enumerate(inv.indices)}
    stab_pos = [pos[g] for g in stab]
    cosets_pos = inv.group.left_cosets(stab_pos)
    cosets = tuple(tuple(inv.indices[p] for p in c) for c in cosets_pos)
    quotient, _ = inv.group.quotient(stab_pos)

    thetas = {x: _theta_for(ring, inv, cosets, x) for x in noninv_orbit}
    x0 = noninv_orbit[0]
    theta0 = thetas[x0]
    if quotient.is_abelian:
        for x, th in thetas.items():
            if th != theta0:
                raise ThetaInconsistentError(
                    f"coset involution differs between elements {x0} and {x}"
                )
        comp = tuple(theta0[theta0[p]] for p in range(len(theta0)))
        if comp != tuple(range(len(theta0))):
            raise ThetaInconsistentError("coset involution does not square to identity")
        theta: tuple[int, ...] | None = theta0
        family = None
    else:
        theta = None
        family = thetas

    # uniform test: x x* = sum_{h in H} h + kappa * sum_{noninv} y, single kappa,
    # same for every x in the orbit; requires abelian G/H
    uniform_coeff: int | None = None
    if quotient.is_abelian:
        kappas = set()
        ok = True
        for x in noninv_orbit:
            row = ring.tensor[x, ring.dual[x]]
            for g in inv.indices:
                if row[g] != (1 if g in stab else 0):
                    ok = False
            vals = {int(row[y]) for y in noninv_orbit}
            if len(vals) != 1:
                ok = False
            else:
                kappas.update(vals)
        if ok and len(kappas) == 1:
            uniform_coeff = kappas.pop()
    uniform_k = None
    if uniform_coeff is not None and uniform_coeff % len(stab) == 0:
        uniform_k = uniform_coeff // len(stab)

    selfdual = all(ring.dual[x] == x for x in noninv_orbit)
    result = TwoOrbitData(
        invertible=inv,
        stabilizer=stab,
        cosets=cosets,
        theta=theta,
        theta_family=family,
        uniform_coeff=uniform_coeff,
        uniform_k=uniform_k,
        noninv_selfdual=selfdual,
    )
    ring._cache["two_orbit"] = result
    return result


def noninvertible_indices(ring: FusionRing) -> list[int]:
    ring.require_verified()
    return [i for i in range(ring.rank) if not is_invertible(ring, i)]


def is_commutative(ring: FusionRing) -> bool:
    t = ring.tensor
    return bool(np.array_equal(t, t.transpose(1, 0, 2)))
