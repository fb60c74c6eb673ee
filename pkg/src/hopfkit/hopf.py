"""Hopf algebra presentations over GF(p) and their structural invariants.

A presentation couples an :class:`~hopfkit.algebra.AlgebraData` with a
comultiplication tensor, a counit vector and (optionally) an antipode
matrix.  Everything is exact integer arithmetic on residues.

Conventions:
    * ``comult[i, a, b]`` is the coefficient of ``e_a (x) e_b`` in
      ``Delta(e_i)``; tensors flatten row-major, so the pair ``(a, b)``
      sits at position ``a*dim + b``.
    * ``antipode`` stores row coordinates: row ``i`` holds ``S(e_i)``, so
      applying S to a coefficient row vector ``v`` is ``v @ antipode``.
    * All checker functions return reports, never raise on mathematical
      failure; constructors raise :class:`InputError` only for malformed
      shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import AlgebraData, check_algebra, is_commutative
from .errors import (
    InputError,
    NotHopfError,
    OperationCancelled,
    UnsupportedOperation,
)
from .linalg import Subspace, as_field, exact_tensordot, inverse, kernel, quotient_basis, solve


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class HopfPresentation:
    """Structure constants of a (candidate) Hopf algebra.

    Attributes:
        algebra: the underlying associative algebra.
        comult: (dim, dim, dim) tensor, Delta(e_i) = sum comult[i,a,b] e_a(x)e_b.
        counit: (dim,) coefficient vector of the counit functional.
        antipode: optional (dim, dim) matrix with row i the coordinates of
            S(e_i), or None when no antipode is attached.

    The constructor validates shapes and residue ranges only; use
    :func:`check_hopf` for the axioms.
    """

    algebra: AlgebraData
    comult: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray | None = None

    def __post_init__(self):
        p = self.algebra.p
        n = self.algebra.dim
        comult = as_field(self.comult, p)
        if comult.shape != (n, n, n):
            raise InputError("comult must be a (dim, dim, dim) tensor")
        counit = as_field(self.counit, p)
        if counit.shape != (n,):
            raise InputError("counit vector has wrong length")
        object.__setattr__(self, "comult", _frozen(comult))
        object.__setattr__(self, "counit", _frozen(counit))
        if self.antipode is not None:
            s = as_field(self.antipode, p)
            if s.shape != (n, n):
                raise InputError("antipode matrix must be (dim, dim)")
            object.__setattr__(self, "antipode", _frozen(s))

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def comult_flat(self, v) -> np.ndarray:
        """Delta(v) as a flattened length dim*dim row vector."""
        v = as_field(v, self.p)
        return (v @ self.comult.reshape(self.dim, -1)) % self.p

    def comult_matrix(self) -> np.ndarray:
        """Delta as a (dim*dim, dim) matrix acting on column coordinates."""
        return np.ascontiguousarray(self.comult.reshape(self.dim, -1).T)

    def apply_antipode(self, v) -> np.ndarray:
        if self.antipode is None:
            raise InputError("presentation carries no antipode")
        return (as_field(v, self.p) @ self.antipode) % self.p

    def same_as(self, other: "HopfPresentation") -> bool:
        """Bitwise equality of all structure constants (labels ignored)."""
        if self.p != other.p or self.dim != other.dim:
            return False
        if not (
            np.array_equal(self.algebra.mult, other.algebra.mult)
            and np.array_equal(self.algebra.unit, other.algebra.unit)
            and np.array_equal(self.comult, other.comult)
            and np.array_equal(self.counit, other.counit)
        ):
            return False
        if (self.antipode is None) != (other.antipode is None):
            return False
        return self.antipode is None or np.array_equal(self.antipode, other.antipode)


@dataclass(frozen=True)
class HopfReport:
    ok: bool
    failures: tuple[str, ...] = ()


def tensor_square_product(alg: AlgebraData, t, s) -> np.ndarray:
    """Product of two flattened tensors in H (x) H, componentwise.

    Arguments are length dim*dim row vectors in the e_a (x) e_b basis; the
    result is the flattened product under (u (x) v)(u' (x) v') = uu' (x) vv'.
    """
    p = alg.p
    n = alg.dim
    tm = as_field(t, p).reshape(n, n)
    sm = as_field(s, p).reshape(n, n)
    # a[d, e, x] = sum_c tm[c, d] mult[c, e, x]
    a = exact_tensordot(tm, alg.mult, ([0], [0]), p)
    # b[d, x, f] = sum_e a[d, e, x] sm[e, f]
    b = exact_tensordot(a, sm, ([1], [0]), p)
    # out[x, y] = sum_{d,f} b[d, x, f] mult[d, f, y]
    out = exact_tensordot(b, alg.mult, ([0, 2], [0, 1]), p)
    return out.reshape(n * n)


def check_hopf(h: HopfPresentation) -> HopfReport:
    """Verify all algebra, coalgebra, bialgebra and antipode axioms.

    Antipode axioms are only checked when an antipode is attached; absence
    of one is not a failure.
    """
    p = h.p
    n = h.dim
    mult = h.algebra.mult
    comult = h.comult
    counit = h.counit
    eye = np.eye(n, dtype=np.int64)
    failures = list(check_algebra(h.algebra).failures)

    # coassociativity: (Delta x id) Delta = (id x Delta) Delta
    lhs = exact_tensordot(comult, comult, ([1], [0]), p).transpose(0, 2, 3, 1)
    rhs = exact_tensordot(comult, comult, ([2], [0]), p)
    if not np.array_equal(lhs, rhs):
        i = int(np.argwhere((lhs - rhs) % p)[0][0])
        failures.append(f"coassociativity fails on basis index {i}")

    # counit axioms: (eps x id) Delta = id = (id x eps) Delta
    left = exact_tensordot(comult, counit, ([1], [0]), p)
    right = exact_tensordot(comult, counit, ([2], [0]), p)
    if not np.array_equal(left, eye):
        failures.append("counit is not left neutral for the comultiplication")
    if not np.array_equal(right, eye):
        failures.append("counit is not right neutral for the comultiplication")

    # bialgebra axioms
    unit_tensor = np.kron(h.algebra.unit, h.algebra.unit) % p
    if not np.array_equal(h.comult_flat(h.algebra.unit), unit_tensor):
        failures.append("comultiplication does not send the unit to unit (x) unit")
    if int(counit @ h.algebra.unit % p) != 1:
        failures.append("counit does not send the unit to 1")
    eps_prod = exact_tensordot(mult, counit, ([2], [0]), p)
    if not np.array_equal(eps_prod, np.outer(counit, counit) % p):
        i, j = (int(v) for v in np.argwhere((eps_prod - np.outer(counit, counit)) % p)[0])
        failures.append(f"counit is not multiplicative on basis pair ({i}, {j})")

    # Delta(e_i e_j) = Delta(e_i) Delta(e_j), contracted without forming the
    # dim^2 x dim^2 product tensor explicitly
    dm = exact_tensordot(mult, comult, ([2], [0]), p)  # (i, j, a, b)
    t1 = exact_tensordot(comult, mult, ([1], [0]), p)  # (i, d, e, a)
    t2 = exact_tensordot(comult, mult, ([2], [1]), p)  # (j, e, d, b)
    left_flat = t1.transpose(0, 3, 1, 2).reshape(n * n, n * n)
    right_flat = t2.transpose(2, 1, 0, 3).reshape(n * n, n * n)
    md = exact_tensordot(left_flat, right_flat, ([1], [0]), p)
    md = md.reshape(n, n, n, n).transpose(0, 2, 1, 3)  # (i, j, a, b)
    if not np.array_equal(dm, md):
        i, j = (int(v) for v in np.argwhere(np.any((dm - md) % p, axis=(2, 3)))[0])
        failures.append(f"comultiplication is not multiplicative on basis pair ({i}, {j})")

    if h.antipode is not None:
        conv_target = np.outer(counit, h.algebra.unit) % p
        s_left = exact_tensordot(h.antipode, mult, ([1], [0]), p)  # (a, b, k): S(e_a) e_b
        got = exact_tensordot(comult.reshape(n, n * n), s_left.reshape(n * n, n), ([1], [0]), p)
        if not np.array_equal(got, conv_target):
            i = int(np.argwhere((got - conv_target) % p)[0][0])
            failures.append(f"antipode fails the left convolution identity on basis index {i}")
        s_right = exact_tensordot(h.antipode, mult, ([1], [1]), p).transpose(1, 0, 2)
        got = exact_tensordot(comult.reshape(n, n * n), s_right.reshape(n * n, n), ([1], [0]), p)
        if not np.array_equal(got, conv_target):
            i = int(np.argwhere((got - conv_target) % p)[0][0])
            failures.append(f"antipode fails the right convolution identity on basis index {i}")

    return HopfReport(not failures, tuple(failures))


def compute_antipode(h: HopfPresentation) -> HopfPresentation:
    """Solve the convolution identity for S and attach it.

    Sets up the linear system sum_{a,c} S[a,c] * comult[i,a,b] mult[c,b,m]
    = counit[i] unit[m] and solves it exactly; the right identity is then
    verified independently.

    Raises:
        NotHopfError: if no solution exists or the solution fails the
            right convolution identity.
    """
    p = h.p
    n = h.dim
    coef = exact_tensordot(h.comult, h.algebra.mult, ([2], [1]), p)  # (i, a, c, m)
    system = coef.transpose(0, 3, 1, 2).reshape(n * n, n * n)
    rhs = np.kron(h.counit, h.algebra.unit) % p
    x = solve(system, rhs, p)
    if x is None:
        raise NotHopfError("convolution identity for the antipode has no solution")
    s_rows = x.reshape(n, n)
    candidate = HopfPresentation(h.algebra, h.comult, h.counit, antipode=s_rows)
    s_right = exact_tensordot(s_rows, h.algebra.mult, ([1], [1]), p).transpose(1, 0, 2)
    got = exact_tensordot(h.comult.reshape(n, n * n), s_right.reshape(n * n, n), ([1], [0]), p)
    if not np.array_equal(got, np.outer(h.counit, h.algebra.unit) % p):
        raise NotHopfError("left antipode exists but fails the right convolution identity")
    return candidate


def dual(h: HopfPresentation) -> HopfPresentation:
    """The dual presentation on the dual basis.

    Multiplication and comultiplication swap roles by transposing their
    structure tensors; applying dual twice returns the original constants.
    """
    labels = None
    if h.algebra.labels is not None:
        labels = tuple(f"{name}*" for name in h.algebra.labels)
    dual_alg = AlgebraData(
        p=h.p,
        mult=np.moveaxis(h.comult, 0, 2),
        unit=h.counit,
        labels=labels,
    )
    s = None if h.antipode is None else h.antipode.T
    return HopfPresentation(
        algebra=dual_alg,
        comult=np.moveaxis(h.algebra.mult, 2, 0),
        counit=h.algebra.unit,
        antipode=s,
    )


def primitives(h: HopfPresentation) -> Subspace:
    """Subspace of x with Delta(x) = x (x) 1 + 1 (x) x."""
    n = h.dim
    eye = np.eye(n, dtype=np.int64)
    defect = h.comult.astype(np.int64).copy()
    defect -= np.einsum("ia,b->iab", eye, h.algebra.unit)
    defect -= np.einsum("a,ib->iab", h.algebra.unit, eye)
    m = (defect % h.p).reshape(n, n * n).T
    return Subspace(kernel(m, h.p), h.p, n)


def is_subcoalgebra(h: HopfPresentation, d: Subspace) -> bool:
    """Whether Delta(D) lands inside D (x) D.

    Uses the fact that the pairwise Kronecker products of an RREF basis
    are themselves a pivoted basis (pivot of kron(row_u, row_v) is at
    p_u*dim + p_v), so membership needs no elimination: read candidate
    coordinates off the pivot columns and compare the reconstruction.
    """
    if d.ambient_dim != h.dim:
        raise InputError("subspace has wrong ambient dimension")
    n = h.dim
    k = d.dim
    flat = (d.basis @ h.comult.reshape(n, n * n)) % h.p
    if k == 0:
        return not flat.any()
    piv = np.asarray(d.pivots, dtype=np.int64)
    cols = (piv[:, None] * n + piv[None, :]).reshape(-1)
    coords = flat[:, cols].reshape(k, k, k)
    recon = exact_tensordot(coords, d.basis, ([1], [0]), h.p)
    recon = exact_tensordot(recon, d.basis, ([1], [0]), h.p)
    return np.array_equal(recon.reshape(k, n * n), flat)


def wedge(h: HopfPresentation, d: Subspace, e: Subspace) -> Subspace:
    """The wedge D ^ E = Delta^{-1}(D (x) H + H (x) E).

    Both arguments must be subcoalgebras; the result then is one as well.
    """
    if not is_subcoalgebra(h, d):
        raise InputError("wedge requires the first argument to be a subcoalgebra")
    if not is_subcoalgebra(h, e):
        raise InputError("wedge requires the second argument to be a subcoalgebra")
    p = h.p
    n = h.dim
    full = Subspace.full(p, n)
    _, proj_d = quotient_basis(d, full)
    _, proj_e = quotient_basis(e, full)
    # x is in the wedge iff (pi_D (x) pi_E) Delta(x) = 0
    m = np.kron(proj_d, proj_e) % p
    system = (m @ h.comult_matrix()) % p
    return Subspace(kernel(system, p), p, n)


@dataclass(frozen=True)
class FiltrationResult:
    """Ascending chain of subcoalgebras from repeated wedging with k*unit."""

    terms: tuple[Subspace, ...]
    exhausts: bool

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)


def coradical_filtration(
    h: HopfPresentation, cancel: Callable[[], bool] | None = None
) -> FiltrationResult:
    """Wedge powers of the span of the unit, up to stabilization.

    For a connected presentation this is the coradical filtration and the
    last term is the whole space; otherwise the chain stabilizes strictly
    below it and ``exhausts`` is False.

    Args:
        cancel: optional callback polled once per wedge step; returning
            True aborts with OperationCancelled.
    """
    base = Subspace(h.algebra.unit[None, :], h.p, h.dim)
    terms = [base]
    while True:
        if cancel is not None and cancel():
            raise OperationCancelled("coradical filtration aborted by cancel callback")
        nxt = wedge(h, base, terms[-1])
        if nxt == terms[-1]:
            break
        if not nxt.contains(terms[-1]):
            raise NotHopfError("wedge filtration failed to grow monotonically")
        terms.append(nxt)
    return FiltrationResult(tuple(terms), terms[-1].dim == h.dim)


def is_connected(h: HopfPresentation) -> bool:
    """True when the unit filtration exhausts the whole space."""
    return coradical_filtration(h).exhausts


def is_cocommutative(h: HopfPresentation) -> bool:
    """True when the coproduct tensor is symmetric in its two output slots."""
    return np.array_equal(h.comult, h.comult.transpose(0, 2, 1))


@dataclass(frozen=True)
class GradedHopf:
    """Associated graded presentation plus the degree of each basis vector."""

    presentation: HopfPresentation
    degrees: tuple[int, ...]


def assoc_graded(h: HopfPresentation) -> GradedHopf:
    """Associated graded Hopf algebra of the coradical filtration.

    The new basis stacks, degree by degree, the canonical complement of
    each filtration term in the next; structure constants are computed in
    that basis and truncated to the grading.

    Raises:
        UnsupportedOperation: if the presentation is not connected.
    """
    filt = coradical_filtration(h)
    if not filt.exhausts:
        raise UnsupportedOperation("associated graded needs a connected presentation")
    p = h.p
    n = h.dim
    terms = filt.terms
    blocks = [terms[0].basis]
    degrees = [0]
    for level in range(1, len(terms)):
        comp = terms[level - 1].complement_in(terms[level])
        blocks.append(comp)
        degrees.extend([level] * comp.shape[0])
    t = np.vstack(blocks)
    t_inv = inverse(t, p)
    deg = np.array(degrees)

    prod = exact_tensordot(t, h.algebra.mult, ([1], [0]), p)
    prod = exact_tensordot(prod, t, ([1], [1]), p).transpose(0, 2, 1)
    coords = exact_tensordot(prod, t_inv, ([2], [0]), p)
    keep = deg[:, None, None] + deg[None, :, None] == deg[None, None, :]
    mult_gr = np.where(keep, coords, 0)

    flat = (t @ h.comult.reshape(n, n * n)) % p
    basis_change = np.kron(t_inv, t_inv) % p
    cflat = exact_tensordot(flat, basis_change, ([1], [0]), p)
    cfull = cflat.reshape(n, n, n)
    keep = deg[None, :, None] + deg[None, None, :] == deg[:, None, None]
    comult_gr = np.where(keep, cfull, 0)

    unit_gr = (h.algebra.unit @ t_inv) % p
    counit_gr = np.zeros(n, dtype=np.int64)
    counit_gr[0] = int(h.counit @ t[0] % p)

    alg_gr = AlgebraData(p=p, mult=mult_gr, unit=unit_gr)
    graded = HopfPresentation(alg_gr, comult_gr, counit_gr)
    return GradedHopf(compute_antipode(graded), tuple(degrees))


def check_graded_truncated(g: GradedHopf) -> HopfReport:
    """Hopf axioms plus commutativity and vanishing p-th powers.

    The p-th power condition applies to every basis vector of positive
    degree, which for a graded connected Hopf algebra of finite dimension
    pins down the truncated polynomial shape.
    """
    h = g.presentation
    failures = list(check_hopf(h).failures)
    if not is_commutative(h.algebra):
        failures.append("graded algebra is not commutative")
    for k, degree in enumerate(g.degrees):
        if degree > 0:
            e_k = np.zeros(h.dim, dtype=np.int64)
            e_k[k] = 1
            if h.algebra.power(e_k, h.p).any():
                failures.append(f"p-th power of positive-degree basis index {k} is nonzero")
    return HopfReport(not failures, tuple(failures))
