"""Characters, formal codegrees, and exact irreducible representations of
structured two-orbit rings.

The codegree spectrum is read off the matrix M of multiplication by
sum_x x x*: its eigenvalues are dim(psi) * f_psi over the irreducible
representations psi.  For commutative rings every eigenvalue is itself a
formal codegree.  Explicit matrix models exist exactly for uniform two-orbit
rings with abelian invertibles and self-dual noninvertibles: the
irreducibles match the characters of G nontrivial on H together with the
irreducibles of (G/H) x| C_2 twisted by the coset involution, with the
noninvertible basis elements acting through sqrt(|H|).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import intpoly
from .algebraic import AlgebraicReal, Quadratic, alg_cmp, all_real_roots
from .cyclotomic import Cyc, CycSqrt
from .errors import CertificationError, HypothesisError, InternalInvariantError
from .groups import FiniteGroup, character_exponents
from .numtheory import squarefree_part
from .ring import (
    FusionRing,
    dimension_profile,
    global_multiplication_matrix,
    invertibles,
    is_commutative,
    two_orbit_data,
)


@dataclass(frozen=True)
class Codegree:
    """One eigenvalue class of M.

    value is the formal codegree f_psi when dim_hint is set (commutative
    rings have dim_hint == 1, so eigenvalue == codegree); when dim_hint is
    None the value is the raw eigenvalue dim(psi) * f_psi.
    eigen_multiplicity is the multiplicity of that eigenvalue in M.
    """

    value: AlgebraicReal
    eigen_multiplicity: int
    dim_hint: int | None = None


def codegree_spectrum(ring: FusionRing) -> list[Codegree]:
    """Exact eigenvalue multiset of M = sum_x N_x N_x^T, largest first.

    Multiplicities come from the square-free decomposition of the
    characteristic polynomial; M is symmetric, so every root is real and
    algebraic equals geometric multiplicity.
    """
    ring.require_verified()
    if "codegrees" in ring._cache:
        return ring._cache["codegrees"]
    m = global_multiplication_matrix(ring)
    cp = intpoly.charpoly(m.tolist())
    commutative = is_commutative(ring)
    order = invertibles(ring).order
    entries: list[Codegree] = []
    counted = 0
    root_sum = Fraction(0)
    for factor, mult in intpoly.squarefree_decomposition(cp):
        roots = all_real_roots(factor)
        if len(roots) != intpoly.degree(factor):
            raise InternalInvariantError("symmetric M produced non-real eigenvalues")
        counted += mult * len(roots)
        root_sum += mult * Fraction(-factor[-2], factor[-1]) if intpoly.degree(factor) >= 1 else 0
        for root in roots:
            entries.append(Codegree(root, mult, 1 if commutative else None))
    if counted != ring.rank:
        raise InternalInvariantError("eigenvalue count does not match rank")
    if root_sum != int(np.trace(m)):
        raise InternalInvariantError("eigenvalue sum does not match trace of M")
    for e in entries:
        if alg_cmp(e.value, order) < 0:
            raise InternalInvariantError(
                f"eigenvalue {e.value!r} of M below the invertible count {order}"
            )
    entries.sort(key=lambda e: _DescKey(e.value))
    ring._cache["codegrees"] = entries
    return entries


class _DescKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return alg_cmp(self.v, other.v) > 0


@dataclass(frozen=True)
class AbelianCharacter:
    """Character of an abelian group as an exponent vector: the value at
    element g is zeta_N^exponents[g]."""

    N: int
    exponents: tuple[int, ...]

    def value(self, g: int) -> Cyc:
        return Cyc.root(self.N, self.exponents[g])

    def is_trivial_on(self, elements) -> bool:
        return all(self.exponents[g] % self.N == 0 for g in elements)

    @property
    def is_trivial(self) -> bool:
        return all(e % self.N == 0 for e in self.exponents)


def abelian_characters(group: FiniteGroup) -> list[AbelianCharacter]:
    N = group.exponent
    return [AbelianCharacter(N, exps) for exps in character_exponents(group)]


def irr_H_of_G(group, subgroup_elements) -> list[AbelianCharacter]:
    """Characters of an abelian group G whose restriction to the subgroup H
    is nontrivial; there are exactly |G| - [G:H] of them."""
    from .construct import as_group

    g = as_group(group)
    if not g.is_abelian:
        raise HypothesisError("irr_H_of_G needs an abelian group")
    sub = set(int(x) for x in subgroup_elements)
    out = [ch for ch in abelian_characters(g) if not ch.is_trivial_on(sub)]
    expected = g.order - g.order // len(sub)
    if len(out) != expected:
        raise InternalInvariantError("character count off in irr_H_of_G")
    return out


def irr0_codegrees(ring: FusionRing) -> list[Codegree]:
    """Codegrees of the representations vanishing on the noninvertibles:
    one per character of G nontrivial on H, each equal to |G|."""
    data = two_orbit_data(ring)
    if not data.invertible.group.is_abelian:
        raise HypothesisError("irr0_codegrees needs abelian invertibles")
    order = data.invertible.order
    count = order - order // len(data.stabilizer)
    if count == 0:
        return []
    spectrum = codegree_spectrum(ring)
    match = [e for e in spectrum if alg_cmp(e.value, order) == 0]
    if not match:
        raise InternalInvariantError("|G| missing from the spectrum of M")
    mult = match[0].eigen_multiplicity
    return [Codegree(Quadratic(order), mult, 1) for _ in range(count)]


@dataclass(frozen=True)
class SemidirectIrrep:
    """Irreducible of K x| C_2 (K abelian, involution theta), either a sign
    extension of a theta-fixed character or the induction of a swapped pair."""

    dim: int
    kind: str  # "extension" | "induced"
    chi: AbelianCharacter  # character of K (pair representative when induced)
    sign: int  # +-1 for extensions, 0 for induced
    N: int  # cyclotomic order of the matrix entries
    theta: tuple[int, ...]

    def matrix(self, k: int, t: int) -> tuple[tuple[Cyc, ...], ...]:
        """Representing matrix of the element (k, t), t in {0, 1}."""
        chi_k = self.chi.value(k).lift(self.N) if self.chi.N != self.N else self.chi.value(k)
        if self.kind == "extension":
            entry = chi_k if t == 0 else chi_k * self.sign
            return ((entry,),)
        chi_tk = (
            self.chi.value(self.theta[k]).lift(self.N)
            if self.chi.N != self.N
            else self.chi.value(self.theta[k])
        )
        zero = Cyc.zero(self.N)
        if t == 0:
            return ((chi_k, zero), (zero, chi_tk))
        return ((zero, chi_k), (chi_tk, zero))


def semidirect_irr(group, theta) -> list[SemidirectIrrep]:
    """Irreducibles of K x| C_2: theta-fixed characters of K extend in two
    ways (dim 1), swapped pairs induce (dim 2); sum of dim^2 is 2|K|."""
    from .construct import _resolve_theta, as_group

    k = as_group(group)
    if not k.is_abelian:
        raise HypothesisError("semidirect_irr needs an abelian group")
    phi = _resolve_theta(k, theta)
    N = k.exponent if k.exponent % 2 == 0 else 2 * k.exponent
    chars = abelian_characters(k)
    out: list[SemidirectIrrep] = []
    seen_pairs = set()
    for ch in chars:
        twisted = tuple(ch.exponents[phi[g]] for g in range(k.order))
        if twisted == ch.exponents:
            for sign in (1, -1):
                out.append(SemidirectIrrep(1, "extension", ch, sign, N, phi))
        else:
            key = min(ch.exponents, twisted)
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
            out.append(SemidirectIrrep(2, "induced", ch, 0, N, phi))
    if sum(r.dim**2 for r in out) != 2 * k.order:
        raise InternalInvariantError("semidirect irreps do not fill the group algebra")
    return out


@dataclass(frozen=True)
class IrrepModel:
    """Exact matrix model of one irreducible representation of a uniform
    two-orbit ring; entries live in Q(zeta_N, sqrt(D))."""

    dim: int
    matrices: tuple  # one dim x dim matrix of CycSqrt per basis element
    source_tag: str
    root_order: int  # N
    radicand: int  # D


SOURCE_IRR_H = "from_Irr_H(G)"
SOURCE_SEMIDIRECT = "from_semidirect"
SOURCE_D_PLUS = "one_dimensional_d_plus"
SOURCE_D_MINUS = "one_dimensional_d_minus"


def _mat_mul(a, b, zero):
    n, m, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(m)), start=zero) for j in range(p))
        for i in range(n)
    )


def _mat_scale(a, c):
    return tuple(tuple(x * c for x in row) for row in a)


def _mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def uniform_irreps(ring: FusionRing) -> list[IrrepModel]:
    """All irreducible representations of a uniform two-orbit ring with
    abelian invertibles and self-dual noninvertibles, as exact matrices.

    Characters of G nontrivial on H vanish on the noninvertibles; the
    remaining models come from the quotient semidirect product, with the
    noninvertible basis acting through sqrt(|H|); the two one-dimensional
    models send every noninvertible to a root of the dimension relation.
    """
    data = two_orbit_data(ring)
    if data.uniform_coeff is None:
        raise HypothesisError("hypothesis failed: ring is not uniform")
    if not data.invertible.group.is_abelian:
        raise HypothesisError("hypothesis failed: invertible group is not abelian")
    if not data.noninv_selfdual:
        raise HypothesisError("hypothesis failed: noninvertibles are not self-dual")

    inv = data.invertible
    g = inv.group
    h_positions = [inv.indices.index(s) for s in data.stabilizer]
    h_size = len(data.stabilizer)
    quotient, proj = g.quotient(h_positions)
    # coset position of each invertible basis index
    coset_pos = {}
    for pos, coset in enumerate(data.cosets):
        for idx in coset:
            coset_pos[idx] = pos

    noninv = [i for i in range(ring.rank) if i not in coset_pos]
    x0 = noninv[0]
    # coset tag of each noninvertible: y = g*x0 for g in a unique coset
    noninv_coset = {}
    for y in noninv:
        gs = [gi for gi in inv.indices if ring.tensor[gi, x0, y] == 1]
        if not gs:
            raise InternalInvariantError("orbit labelling failed")
        noninv_coset[y] = coset_pos[gs[0]]

    profile = dimension_profile(ring)
    assert profile is not None and profile.is_two_dimension
    disc = profile.r * profile.r + 4 * profile.s
    dec = squarefree_part(disc)

    models: list[IrrepModel] = []

    # characters of G nontrivial on H: vanish off the group
    g_chars = abelian_characters(g)
    ng = g.exponent
    for ch in g_chars:
        if ch.is_trivial_on(set(h_positions)):
            continue
        mats = []
        for b in range(ring.rank):
            if b in coset_pos:
                val = ch.value(inv.indices.index(b))
                mats.append(((CycSqrt(val, Cyc.zero(ng), h_size),),))
            else:
                mats.append(((CycSqrt.of(ng, h_size),),))
        models.append(IrrepModel(1, tuple(mats), SOURCE_IRR_H, ng, h_size))

    # quotient semidirect models
    theta = data.theta
    assert theta is not None
    for rep in semidirect_irr(quotient, theta):
        if rep.kind == "extension" and rep.chi.is_trivial:
            continue  # replaced by the two dimension characters below
        nq = rep.N
        zero = Cyc.zero(nq)
        sqrt_h = CycSqrt(zero, Cyc.one(nq), h_size)
        mats = []
        for b in range(ring.rank):
            if b in coset_pos:
                base = rep.matrix(coset_pos[b], 0)
                mats.append(tuple(tuple(CycSqrt(v, zero, h_size) for v in row) for row in base))
            else:
                base = rep.matrix(noninv_coset[b], 1)
                lifted = tuple(tuple(CycSqrt(v, zero, h_size) for v in row) for row in base)
                mats.append(_mat_scale(lifted, sqrt_h))
        models.append(IrrepModel(rep.dim, tuple(mats), SOURCE_SEMIDIRECT, nq, h_size))

    # the two one-dimensional characters sending x to the roots of
    # d^2 = r d + s
    for sign, tag in ((1, SOURCE_D_PLUS), (-1, SOURCE_D_MINUS)):
        u = Fraction(profile.r, 2)
        v = Fraction(sign * dec.y, 2)
        mats = []
        for b in range(ring.rank):
            if b in coset_pos:
                mats.append(((CycSqrt.of(1, dec.x, u=1),),))
            else:
                mats.append(((CycSqrt.of(1, dec.x, u=u, v=v),),))
        models.append(IrrepModel(1, tuple(mats), tag, 1, dec.x))

    if sum(m.dim**2 for m in models) != ring.rank:
        raise InternalInvariantError("irrep dimensions do not fill the ring")
    return models


def verify_irrep(ring: FusionRing, model: IrrepModel) -> list[tuple[int, int]]:
    """Exact homomorphism check; returns the basis pairs (i, j) where
    psi(i) psi(j) != sum_k c[i,j,k] psi(k) (empty list = model is valid)."""
    failures = []
    zero = model.matrices[0][0][0] * 0
    zero_mat = tuple(tuple(zero for _ in range(model.dim)) for _ in range(model.dim))
    t = ring.tensor
    for i in range(ring.rank):
        for j in range(ring.rank):
            lhs = _mat_mul(model.matrices[i], model.matrices[j], zero)
            rhs = zero_mat
            for k in range(ring.rank):
                c = int(t[i, j, k])
                if c:
                    rhs = _mat_add(rhs, _mat_scale(model.matrices[k], c))
            if lhs != rhs:
                failures.append((i, j))
    return failures


@dataclass(frozen=True)
class CertifiedCharacter:
    """Approximate character vector with an exact residual certificate:
    every ||N_i v - chi_i v||_inf is at most residual_bound, computed in
    exact rational arithmetic from the dyadic approximations."""

    values: tuple[tuple[Fraction, Fraction], ...]  # (re, im) per basis element
    vector: tuple[tuple[Fraction, Fraction], ...]
    residual_bound: Fraction

    def complex_values(self) -> tuple[complex, ...]:
        return tuple(complex(float(re), float(im)) for re, im in self.values)


def characters_commutative(ring: FusionRing, width: Fraction = Fraction(1, 2**30)) -> list[CertifiedCharacter]:
    """Simultaneous-eigenvector characters of a commutative ring.

    Joint eigenvectors are extracted numerically from a deterministic random
    integer combination of the fusion matrices (float64 first, escalating to
    multiprecision when the requested width demands it), then certified by an
    exact rational residual bound below 'width' for every character.  Used
    for cross-checks only; obstruction verdicts never consume these.
    """
    import random

    ring.require_verified()
    if not is_commutative(ring):
        raise HypothesisError("characters_commutative needs a commutative ring")
    n = ring.rank
    mats = [np.asarray(ring.fusion_matrix(i), dtype=np.int64) for i in range(n)]
    for attempt in range(10):
        rng = random.Random(1000 + attempt)
        weights = [rng.randrange(1, 997) for _ in range(n)]
        if attempt < 4:
            columns = _eig_columns_numpy(mats, weights)
        else:
            columns = _eig_columns_mpmath(mats, weights, dps=30 * (attempt - 3))
        if columns is None:
            continue
        chars = []
        ok = True
        for vec in columns:
            pivot = max(range(n), key=lambda r: vec[r][0] * vec[r][0] + vec[r][1] * vec[r][1])
            # normalize exactly so vec[pivot] == 1
            pr, pi = vec[pivot]
            norm = pr * pr + pi * pi
            vec = tuple(
                (
                    (re * pr + im * pi) / norm,
                    (im * pr - re * pi) / norm,
                )
                for re, im in vec
            )
            values = []
            worst = Fraction(0)
            for m in mats:
                prod = [_cx_dot(m[row], vec) for row in range(n)]
                chi = prod[pivot]  # vec[pivot] == 1 exactly
                for row in range(n):
                    dre = prod[row][0] - (chi[0] * vec[row][0] - chi[1] * vec[row][1])
                    dim = prod[row][1] - (chi[0] * vec[row][1] + chi[1] * vec[row][0])
                    worst = max(worst, abs(dre), abs(dim))
                values.append(chi)
            if worst >= width:
                ok = False
                break
            chars.append(CertifiedCharacter(tuple(values), vec, worst))
        if ok and len(chars) == n and _pairwise_distinct(chars):
            return chars
    raise CertificationError(f"could not certify {n} characters at width {width}")


def _eig_columns_numpy(mats, weights):
    a = sum(w * m for w, m in zip(weights, mats)).astype(float)
    try:
        _, vecs = np.linalg.eig(a)
    except np.linalg.LinAlgError:  # pragma: no cover
        return None
    n = len(mats)
    return [
        tuple((Fraction(float(np.real(z))), Fraction(float(np.imag(z)))) for z in vecs[:, col])
        for col in range(n)
    ]


def _eig_columns_mpmath(mats, weights, dps: int):
    import mpmath

    n = len(mats)
    with mpmath.workdps(dps):
        a = mpmath.matrix(n)
        for i in range(n):
            for j in range(n):
                a[i, j] = sum(int(w) * int(m[i, j]) for w, m in zip(weights, mats))
        try:
            _, vecs = mpmath.eig(a)
        except Exception:  # pragma: no cover
            return None
        scale = 1 << mpmath.mp.prec
        out = []
        for col in range(n):
            column = []
            for row in range(n):
                z = vecs[row, col]
                column.append(
                    (
                        Fraction(int(mpmath.floor(mpmath.re(z) * scale)), scale),
                        Fraction(int(mpmath.floor(mpmath.im(z) * scale)), scale),
                    )
                )
            out.append(tuple(column))
    return out


def _cx_dot(int_row, vec) -> tuple[Fraction, Fraction]:
    re = Fraction(0)
    im = Fraction(0)
    for c, (vr, vi) in zip(int_row, vec):
        if c:
            re += int(c) * vr
            im += int(c) * vi
    return re, im


def _pairwise_distinct(chars: list[CertifiedCharacter]) -> bool:
    seen = set()
    for ch in chars:
        key = tuple((round(float(re), 6), round(float(im), 6)) for re, im in ch.values)
        if key in seen:
            return False
        seen.add(key)
    return True
