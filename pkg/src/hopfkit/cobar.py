"""Cochain complexes on tensor powers of a Hopf algebra.

Degree n holds flattened coordinates of H^(x)n (row-major: the leftmost
tensor factor is the most significant index, matching np.kron).  The
differential, acting on column coordinate vectors, is

    d^n = 1 (x) I_n + sum_{i=0}^{n-1} (-1)^(i+1) I_i (x) Delta (x) I_(n-1-i)
          + (-1)^(n+1) I_n (x) 1,

with d^0 = 0.  Products of differential matrices go through exact_tensordot
so the float fast path stays provably exact.

Degree-0 convention: the formula forces d^0 = 0, which would make the
0-th quotient the full scalar line; but the scalars sit inside H as
multiples of 1 and d^1(1) = 1 (x) 1 != 0, so no scalar is a cocycle once
embedded.  We report dimension 0 as the primary value and expose both
readings through h0_variants.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, ResourceLimitError, TheoremViolation, UnsupportedOperation
from .hopf import HopfPresentation, coradical_filtration, is_connected, primitives
from .inclusions import first_order, is_hopf_subalgebra, restrict_to_subalgebra, subalgebra_generated
from .linalg import Subspace, as_field, exact_tensordot, kernel, matrix_power, rref, solve
from .rlie import RestrictedLie, enveloping, omega_coefficients

DEFAULT_MAX_TENSOR = 20000


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


def omega(h: HopfPresentation, x) -> np.ndarray:
    """sum_i c_i x^i (x) x^(p-i) as a flattened vector in H (x) H."""
    p = h.p
    x = as_field(x, p)
    coeffs = omega_coefficients(p)
    out = np.zeros(h.dim * h.dim, dtype=np.int64)
    powers = [h.algebra.power(x, i) for i in range(p)]
    for i in range(1, p):
        out = (out + coeffs[i - 1] * np.kron(powers[i], powers[p - i])) % p
    return out


@dataclass(frozen=True, eq=False)
class CochainComplex:
    """Differential matrices d^0 .. d^max_degree of the tensor-power tower."""

    hopf: HopfPresentation
    max_degree: int
    differentials: tuple[np.ndarray, ...]

    @property
    def p(self) -> int:
        return self.hopf.p


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    degree: int
    representative: np.ndarray


def _d_matrix(h: HopfPresentation, n: int) -> np.ndarray:
    p, dim = h.p, h.dim
    if n == 0:
        return np.zeros((dim, 1), dtype=np.int64)
    unit_col = h.algebra.unit.reshape(dim, 1)
    dmat = h.comult_matrix()
    total = np.kron(unit_col, np.eye(dim**n, dtype=np.int64))
    for i in range(n):
        sign = 1 if (i + 1) % 2 == 0 else p - 1
        inner = np.kron(dmat, np.eye(dim ** (n - 1 - i), dtype=np.int64))
        total = total + sign * np.kron(np.eye(dim**i, dtype=np.int64), inner)
    sign = 1 if (n + 1) % 2 == 0 else p - 1
    total = total + sign * np.kron(np.eye(dim**n, dtype=np.int64), unit_col)
    return total % p


def build_complex(h: HopfPresentation, max_degree: int) -> CochainComplex:
    """Materialize d^0 .. d^max_degree and verify d.d = 0.

    The guard keeps the largest matrix at dim^(max_degree+1) rows, capped
    by the HOPFKIT_MAX_TENSOR environment variable (default 20000), and
    max_degree at 3.

    Raises:
        ResourceLimitError: when the requested tower exceeds the cap.
    """
    if max_degree < 1:
        raise InputError("max_degree must be at least 1")
    cap = int(os.environ.get("HOPFKIT_MAX_TENSOR", DEFAULT_MAX_TENSOR))
    if max_degree > 3 or h.dim ** (max_degree + 1) > cap:
        raise ResourceLimitError(
            f"tensor tower needs dim^{max_degree + 1} = {h.dim ** (max_degree + 1)} "
            f"coordinates, above the cap {cap} (and degree is limited to 3)"
        )
    ds = [_d_matrix(h, n) for n in range(max_degree + 1)]
    for n in range(max_degree):
        comp = exact_tensordot(ds[n + 1], ds[n], ([1], [0]), h.p)
        if comp.any():
            raise TheoremViolation(f"d^{n + 1} d^{n} != 0; comultiplication is not coassociative")
    return CochainComplex(h, max_degree, tuple(_frozen(d) for d in ds))


def h0_variants(c: CochainComplex) -> tuple[int, int]:
    """Both degree-0 readings: (scalars embedded via the unit, literal d^0).

    The embedded reading applies d^1 to the unit line of H and counts
    surviving scalars; the literal reading takes ker of the zero map d^0.
    """
    p = c.p
    unit_image = (c.differentials[1] @ c.hopf.algebra.unit) % p
    embedded = 0 if unit_image.any() else 1
    literal = len(kernel(c.differentials[0], p))
    return embedded, literal


def cohomology(c: CochainComplex, n: int) -> tuple[int, tuple[CohomologyClass, ...]]:
    """(dimension, representative classes) of the degree-n quotient.

    Representatives are the canonical completion of the image inside the
    kernel, so they are reproducible across runs.
    """
    if not 0 <= n < c.max_degree:
        raise InputError(f"degree must lie in [0, {c.max_degree}), got {n}")
    if n == 0:
        return 0, ()
    p = c.p
    ker = Subspace(kernel(c.differentials[n], p), p)
    image = Subspace(c.differentials[n - 1].T, p)
    reps = image.complement_in(ker)
    classes = tuple(CohomologyClass(n, _frozen(r)) for r in reps)
    return ker.dim - image.dim, classes


def is_coboundary(c: CochainComplex, t) -> np.ndarray | None:
    """Preimage of t under d^1, or None when t is not a coboundary.

    Raises:
        InputError: if t is not even a cocycle in degree 2.
    """
    p = c.p
    t = as_field(t, p)
    if ((c.differentials[2] @ t) % p).any():
        raise InputError("target is not a degree-2 cocycle")
    return solve(c.differentials[1], t, p)


def adjoint_T(h: HopfPresentation, x, n: int) -> np.ndarray:
    """Matrix of sum_i I_i (x) ad(x) (x) I_(n-1-i) on degree-n columns.

    Raises:
        InputError: if x is not primitive.
    """
    p, dim = h.p, h.dim
    x = as_field(x, p)
    expected = (np.kron(x, h.algebra.unit) + np.kron(h.algebra.unit, x)) % p
    if not np.array_equal(h.comult_flat(x), expected):
        raise InputError("adjoint chain map needs a primitive element")
    ad = (h.algebra.left_mult_matrix(x) - h.algebra.right_mult_matrix(x)) % p
    total = np.zeros((dim**n, dim**n), dtype=np.int64)
    for i in range(n):
        inner = np.kron(ad, np.eye(dim ** (n - 1 - i), dtype=np.int64))
        total = total + np.kron(np.eye(dim**i, dtype=np.int64), inner)
    return total % p


def chain_map_check(h: HopfPresentation, x) -> bool:
    """d^n T^n == T^(n+1) d^n as exact matrices for n = 1, 2."""
    c = build_complex(h, 2)
    p = h.p
    for n in (1, 2):
        lhs = exact_tensordot(c.differentials[n], adjoint_T(h, x, n), ([1], [0]), p)
        rhs = exact_tensordot(adjoint_T(h, x, n + 1), c.differentials[n], ([1], [0]), p)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def module_laws_check(h: HopfPresentation, x, y) -> bool:
    """[T_x, T_y] == T_[x,y] and (T_x)^p == T_(x^p) on degrees 1 and 2."""
    p = h.p
    x = as_field(x, p)
    y = as_field(y, p)
    alg = h.algebra
    lie = (alg.multiply(x, y) - alg.multiply(y, x)) % p
    xp = alg.power(x, p)
    for n in (1, 2):
        tx = adjoint_T(h, x, n)
        ty = adjoint_T(h, y, n)
        if not np.array_equal((tx @ ty - ty @ tx) % p, adjoint_T(h, lie, n)):
            return False
        if not np.array_equal(matrix_power(tx, p, p), adjoint_T(h, xp, n)):
            return False
    return True


@dataclass(frozen=True)
class H2BasisReport:
    ok: bool
    dimension: int
    classes: tuple[CohomologyClass, ...]
    failures: tuple[str, ...] = field(default_factory=tuple)


def h2_basis_enveloping(g: RestrictedLie) -> H2BasisReport:
    """The omega(x_i) and x_j (x) x_k classes as a degree-2 basis for u(g).

    Verifies each candidate is a cocycle, that they are independent
    modulo coboundaries, and that together with the coboundaries they
    exhaust the cocycles; the count is n(n+1)/2 for n generators.
    """
    h = enveloping(g)
    p, n = g.p, g.dim
    c = build_complex(h, 3)
    gens = [np.zeros(h.dim, dtype=np.int64) for _ in range(n)]
    for i in range(n):
        gens[i][p ** (n - 1 - i)] = 1
    rows = [omega(h, gens[i]) for i in range(n)]
    labels = [f"omega(x{i})" for i in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            rows.append(np.kron(gens[j], gens[k]) % p)
            labels.append(f"x{j} (x) x{k}")
    failures = []
    ker = Subspace(kernel(c.differentials[2], p), p)
    for row, label in zip(rows, labels):
        if not ker.contains_vector(row):
            failures.append(f"{label} is not a cocycle")
    image = Subspace(c.differentials[1].T, p)
    stacked = Subspace(np.vstack([image.basis, np.array(rows)]), p)
    expected = n * (n + 1) // 2
    if stacked.dim != image.dim + expected:
        failures.append("candidate classes are dependent modulo coboundaries")
    if stacked != ker:
        failures.append("candidate classes do not span the degree-2 quotient")
    classes = tuple(CohomologyClass(2, _frozen(np.asarray(r))) for r in rows)
    return H2BasisReport(not failures, expected, classes, tuple(failures))


@dataclass(frozen=True)
class InducedMapReport:
    ok: bool
    order: int
    classes: tuple[CohomologyClass, ...]
    injective: bool
    equivariant: bool
    failures: tuple[str, ...] = field(default_factory=tuple)


def _tensor_square_coords(k: Subspace, flat_rows: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of rows of H(x)H in the K(x)K basis, with membership check.

    Works off the RREF pivots of k: the kron of two pivot basis rows has
    its own pivot at the kron of the pivot positions.

    Raises:
        TheoremViolation: if a row does not lie in K (x) K.
    """
    n = k.ambient_dim
    piv = np.array(k.pivots, dtype=np.int64)
    cols = (piv[:, None] * n + piv[None, :]).reshape(-1)
    coords = flat_rows[:, cols] % p
    kk = np.kron(k.basis, k.basis) % p
    if ((flat_rows - coords @ kk) % p).any():
        raise TheoremViolation("differential image escapes the tensor square of the subalgebra")
    return coords


def induced_injection(h: HopfPresentation, k: Subspace, order: int | None = None) -> InducedMapReport:
    """The degree-1 differential from a coradical complement into H^2 of K.

    For an inclusion of first order n >= 2 with K containing every
    primitive, d^1 of a complement of K_n in H_n lands in K (x) K; the
    induced classes must be independent modulo coboundaries of K and
    compatible with the adjoint action of each primitive.

    Raises:
        InputError: if k is not a Hopf subalgebra or misses a primitive.
        UnsupportedOperation: if h is not connected or the first order is
            below 2.
    """
    p = h.p
    if not is_connected(h):
        raise UnsupportedOperation("induced map is only defined for a connected Hopf algebra")
    if not is_hopf_subalgebra(h, k):
        raise InputError("expected a Hopf subalgebra")
    prim = primitives(h)
    if not k.contains(prim):
        raise InputError("subalgebra must contain all primitive elements")
    if order is None:
        order = first_order(h, k)
    if order < 2 or order == float("inf"):
        raise UnsupportedOperation("induced map needs a finite first order >= 2")
    sub, _ = restrict_to_subalgebra(h, k)
    c = build_complex(sub, 3)
    terms = coradical_filtration(h).terms
    h_n = terms[order]
    k_n = k.intersect(h_n)
    comp = k_n.complement_in(h_n)
    if len(comp) == 0:
        raise InputError("the subalgebra already contains the full filtration term at this order")
    d1_rows = []
    for x in comp:
        flat = (np.kron(h.algebra.unit, x) - h.comult_flat(x) + np.kron(x, h.algebra.unit)) % p
        d1_rows.append(flat)
    coords = _tensor_square_coords(k, np.array(d1_rows).reshape(len(d1_rows), -1), p)
    failures = []
    ker = Subspace(kernel(c.differentials[2], p), p)
    for i, row in enumerate(coords):
        if not ker.contains_vector(row):
            failures.append(f"image of complement row {i} is not a cocycle")
    image = Subspace(c.differentials[1].T, p)
    stacked = Subspace(np.vstack([image.basis, coords]), p)
    injective = stacked.dim == image.dim + len(comp)
    if not injective:
        failures.append("induced map has a kernel beyond K_n")
    equivariant = True
    for v in prim.basis:
        v_k = k.coords_of(v)
        t2 = adjoint_T(sub, v_k, 2)
        adv = h.algebra.left_mult_matrix(v) - h.algebra.right_mult_matrix(v)
        moved = comp @ adv.T % p
        moved_flat = []
        for x in moved:
            moved_flat.append(
                (np.kron(h.algebra.unit, x) - h.comult_flat(x) + np.kron(x, h.algebra.unit)) % p
            )
        lhs = _tensor_square_coords(k, np.array(moved_flat).reshape(len(moved), -1), p)
        rhs = coords @ t2.T % p
        for i in range(len(lhs)):
            if not image.contains_vector((lhs[i] - rhs[i]) % p):
                equivariant = False
                failures.append(f"adjoint action does not commute with the induced map on row {i}")
    return InducedMapReport(not failures, order, tuple(CohomologyClass(2, _frozen(r)) for r in coords), injective, equivariant, tuple(failures))


@dataclass(frozen=True)
class ExtensionElement:
    """An element outside K whose coproduct has the normal-form shape.

    Delta(x) = x(x)1 + 1(x)x + omega(sum_i alpha[i] g_i)
               + sum_{j<k} pair_coeffs[j,k] g_j (x) g_k
    over the primitive generators g_i of K (rows of `generators`).
    """

    vector: np.ndarray
    alpha: tuple[int, ...]
    pair_coeffs: tuple[tuple[int, int, int], ...]
    generators: np.ndarray
    order: int


def extension_element(h: HopfPresentation, k: Subspace) -> ExtensionElement:
    """Find x in H outside K with the classified coproduct shape.

    Follows the degree split: first order 1 yields a primitive outside K;
    otherwise the class of d^1 on a complement element is rewritten in the
    omega / pure-tensor basis, the surplus is a coboundary, and the
    corrected element has the literal normal form.  The first order must
    come out as 1, 2, or p.

    Raises:
        InputError: if K = H or K is not primitively generated.
        UnsupportedOperation: if h is not connected.
        TheoremViolation: if any classified claim fails numerically.
    """
    p = h.p
    if not is_connected(h):
        raise UnsupportedOperation("extension elements are only defined for a connected Hopf algebra")
    if not is_hopf_subalgebra(h, k):
        raise InputError("expected a Hopf subalgebra")
    if k.dim == h.dim:
        raise InputError("subalgebra is the whole algebra; nothing extends it")
    prim_h = primitives(h)
    gens = k.intersect(prim_h)
    if subalgebra_generated(h, gens) != k:
        raise InputError("subalgebra is not generated by its primitives")
    if k.dim != p**gens.dim:
        raise InputError("primitively generated subalgebra must have p-power dimension")
    order = first_order(h, k)
    if order not in (1, 2, p):
        raise TheoremViolation(f"first order {order} outside the classified set {{1, 2, {p}}}")
    if order == 1:
        outside = gens.complement_in(prim_h)
        x = outside[0]
        return ExtensionElement(_frozen(x), (0,) * gens.dim, (), _frozen(gens.basis.copy()), 1)
    sub, _ = restrict_to_subalgebra(h, k)
    c = build_complex(sub, 3)
    n_g = gens.dim
    gen_rows_k = np.array([k.coords_of(v) for v in gens.basis])
    omega_cols = np.array([omega(sub, g) for g in gen_rows_k])
    pure, pairs = [], []
    for j in range(n_g):
        for t in range(j + 1, n_g):
            pure.append(np.kron(gen_rows_k[j], gen_rows_k[t]) % p)
            pairs.append((j, t))
    terms = coradical_filtration(h).terms
    comp = k.intersect(terms[order]).complement_in(terms[order])
    x0 = comp[0]
    flat = (np.kron(h.algebra.unit, x0) - h.comult_flat(x0) + np.kron(x0, h.algebra.unit)) % p
    target = _tensor_square_coords(k, flat[None, :], p)[0]
    blocks = [c.differentials[1].T, omega_cols]
    if pairs:
        blocks.append(np.array(pure))
    system = np.vstack(blocks)
    sol = solve(system.T, target, p)
    if sol is None:
        raise TheoremViolation("differential class escapes the classified degree-2 basis")
    theta_k = sol[: k.dim]
    beta = sol[k.dim : k.dim + n_g]
    gamma = sol[k.dim + n_g :]
    # sign convention: d1(x0 - theta) = -sum alpha_i^p omega - sum alpha_jk pure,
    # and alpha^p = alpha over the prime field
    alpha = tuple(int((-b) % p) for b in beta)
    pair_coeffs = tuple((j, t, int((-g) % p)) for (j, t), g in zip(pairs, gamma))
    if not any(alpha) and not any(cc for _, _, cc in pair_coeffs):
        raise TheoremViolation("all coefficients vanish for a first order >= 2")
    mix = np.zeros(k.dim, dtype=np.int64)
    for a, g in zip(alpha, gen_rows_k):
        mix = (mix + a * g) % p
    surplus = np.zeros(k.dim**2, dtype=np.int64)
    for a, g in zip(alpha, gen_rows_k):
        surplus = (surplus + a * omega(sub, g)) % p  # alpha^p = alpha
    surplus = (surplus - omega(sub, mix)) % p
    y_k = is_coboundary(c, surplus)
    if y_k is None:
        raise TheoremViolation("omega surplus is not a coboundary")
    x = (x0 - theta_k @ k.basis + y_k @ k.basis) % p
    expected = (np.kron(x, h.algebra.unit) + np.kron(h.algebra.unit, x)) % p
    mix_h = (mix @ k.basis) % p
    expected = (expected + omega(h, mix_h)) % p
    for j, t, cc in pair_coeffs:
        gj = gen_rows_k[j] @ k.basis % p
        gt = gen_rows_k[t] @ k.basis % p
        expected = (expected + cc * np.kron(gj, gt)) % p
    if not np.array_equal(h.comult_flat(x), expected):
        raise TheoremViolation("constructed element does not have the normal-form coproduct")
    if any(alpha):
        want = p
    else:
        want = 2
    if order != want:
        raise TheoremViolation(f"first order {order} disagrees with coefficient shape ({want})")
    return ExtensionElement(_frozen(x), alpha, pair_coeffs, _frozen((gen_rows_k @ k.basis) % p), order)
