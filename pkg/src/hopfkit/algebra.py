"""Finite-dimensional associative unital algebras over GF(p).

An algebra is a dense structure-constant tensor ``mult`` with
``e_i * e_j = sum_k mult[i, j, k] e_k`` plus a unit vector.  All checks are
vectorized tensor identities; contractions stay in int64 (entries are < p
and the largest contraction sums at most dim^2 products of residues, far
below 2^63), except one large bialgebra-style contraction elsewhere that is
documented where it happens.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, UnsupportedOperation
from .linalg import Subspace, as_field, check_prime, kernel, matrix_power


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class AlgebraData:
    """Structure constants of an associative unital algebra.

    Attributes:
        p: field characteristic (prime).
        mult: (dim, dim, dim) int64 tensor, e_i e_j = sum_k mult[i,j,k] e_k.
        unit: (dim,) coefficient vector of the two-sided identity.
        labels: optional basis labels for readable serialization.
    """

    p: int
    mult: np.ndarray
    unit: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        p = check_prime(self.p)
        mult = as_field(self.mult, p)
        if mult.ndim != 3 or len(set(mult.shape)) != 1:
            raise InputError("mult must be a cubic (dim, dim, dim) tensor")
        unit = as_field(self.unit, p)
        if unit.shape != (mult.shape[0],):
            raise InputError("unit vector has wrong length")
        if self.labels is not None and len(self.labels) != mult.shape[0]:
            raise InputError("labels length must match dim")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "mult", _frozen(mult))
        object.__setattr__(self, "unit", _frozen(unit))

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    def multiply(self, u, v) -> np.ndarray:
        """Bilinear product of coefficient vectors."""
        u = as_field(u, self.p)
        v = as_field(v, self.p)
        return np.einsum("i,j,ijk->k", u, v, self.mult) % self.p

    def power(self, u, n: int) -> np.ndarray:
        """u^n by binary powering; u^0 is the unit."""
        if n < 0:
            raise InputError("negative powers are not defined")
        out = self.unit.copy()
        base = as_field(u, self.p)
        while n > 0:
            if n & 1:
                out = self.multiply(out, base)
            base = self.multiply(base, base)
            n >>= 1
        return out

    def left_mult_matrix(self, v) -> np.ndarray:
        """Matrix of w -> v*w acting on column coordinates."""
        v = as_field(v, self.p)
        # L[k, j] = sum_i v_i mult[i, j, k]
        return np.tensordot(v, self.mult, axes=([0], [0])).T % self.p

    def right_mult_matrix(self, v) -> np.ndarray:
        """Matrix of w -> w*v acting on column coordinates."""
        v = as_field(v, self.p)
        # R[k, i] = sum_j v_j mult[i, j, k]
        return np.tensordot(self.mult, v, axes=([1], [0])).T % self.p


@dataclass(frozen=True)
class AlgebraReport:
    ok: bool
    failures: tuple[str, ...] = field(default_factory=tuple)


def check_algebra(a: AlgebraData) -> AlgebraReport:
    """Verify associativity on all basis triples and the unit axioms."""
    failures = []
    m = a.mult
    p = a.p
    left = np.tensordot(m, m, axes=([2], [0])) % p  # (i,j,k,l): (e_i e_j) e_k
    right = np.tensordot(m, m, axes=([2], [1])) % p  # (j,k,i,l): e_i (e_j e_k)
    right = right.transpose(2, 0, 1, 3)
    if not np.array_equal(left, right):
        i, j, k, _ = np.argwhere((left - right) % p)[0]
        failures.append(f"associativity fails on basis triple ({i}, {j}, {k})")
    lm = np.tensordot(a.unit, m, axes=([0], [0])) % p  # unit * e_j
    rm = np.tensordot(a.unit, m, axes=([0], [1])) % p  # e_i * unit
    eye = np.eye(a.dim, dtype=np.int64)
    if not np.array_equal(lm, eye):
        failures.append("unit is not a left identity")
    if not np.array_equal(rm, eye):
        failures.append("unit is not a right identity")
    return AlgebraReport(not failures, tuple(failures))


def is_commutative(a: AlgebraData) -> bool:
    return np.array_equal(a.mult, a.mult.transpose(1, 0, 2))


def subspace_product(a: AlgebraData, u: Subspace, w: Subspace) -> Subspace:
    """Span of all products u_i * w_j of basis vectors."""
    if u.dim == 0 or w.dim == 0:
        return Subspace.zero(a.p, a.dim)
    # t[x, j, k] = sum_i U[x, i] mult[i, j, k]; then contract with W rows
    t = np.tensordot(u.basis, a.mult, axes=([1], [0]))
    prods = np.tensordot(t, w.basis, axes=([1], [1])) % a.p  # (x, k, y)
    rows = prods.transpose(0, 2, 1).reshape(-1, a.dim)
    return Subspace(rows, a.p, a.dim)


def unital_closure(a: AlgebraData, s: Subspace) -> Subspace:
    """Smallest unital subalgebra containing s."""
    cur = s.sum(Subspace(a.unit[None, :], a.p, a.dim))
    while True:
        nxt = cur.sum(subspace_product(a, cur, cur))
        if nxt == cur:
            return cur
        cur = nxt


def ideal_generated(a: AlgebraData, s: Subspace) -> Subspace:
    """Smallest two-sided ideal containing s, by closure iteration."""
    cur = s
    full = Subspace.full(a.p, a.dim)
    while True:
        if cur.dim == 0:
            return cur
        left = subspace_product(a, full, cur)
        right = subspace_product(a, cur, full)
        nxt = cur.sum(left).sum(right)
        if nxt == cur:
            return cur
        cur = nxt


def is_nilpotent_subspace(a: AlgebraData, v: Subspace) -> tuple[bool, int | None]:
    """Whether the subspace powers V, V^2, ... reach zero.

    Returns (True, index) with the least index k such that V^k = 0, or
    (False, None).  If V is nilpotent its index is at most dim + 1, so the
    loop below always terminates with the correct answer.
    """
    if v.dim == 0:
        return True, 1
    cur = v
    k = 1
    while k <= a.dim + 1:
        nxt = subspace_product(a, cur, v)
        k += 1
        if nxt.dim == 0:
            return True, k
        if nxt == cur:
            return False, None
        cur = nxt
    return False, None


def is_nilpotent_element(a: AlgebraData, v) -> bool:
    """v^dim = 0 iff v is nilpotent (powers 1, v, ..., v^{m-1} are independent)."""
    return not a.power(v, a.dim).any()


def center(a: AlgebraData) -> Subspace:
    """Kernel of the stacked commutator maps v -> v e_i - e_i v."""
    # L[i][k, j] = mult[i, j, k] (left mult by e_i), R[i][k, j] = mult[j, i, k]
    left = np.einsum("ijk->ikj", a.mult)
    right = np.einsum("jik->ikj", a.mult)
    stacked = ((left - right) % a.p).reshape(-1, a.dim)
    return Subspace(kernel(stacked, a.p), a.p, a.dim)


def p_power_matrix(a: AlgebraData) -> np.ndarray:
    """Matrix of v -> v^p, linear when a is commutative over GF(p)."""
    if not is_commutative(a):
        raise UnsupportedOperation("p-power map is linear only for commutative algebras")
    cols = np.empty((a.dim, a.dim), dtype=np.int64)
    eye = np.eye(a.dim, dtype=np.int64)
    for j in range(a.dim):
        cols[:, j] = a.power(eye[j], a.p)
    return cols


def commutative_nilradical(a: AlgebraData) -> Subspace:
    """Nilpotent elements of a commutative algebra.

    Over GF(p) the Frobenius v -> v^p is linear, and v is nilpotent iff its
    p^m-th power vanishes once p^m >= dim, so the nilradical is the kernel
    of an iterated linear map.
    """
    if not is_commutative(a):
        raise UnsupportedOperation("nilradical shortcut requires a commutative algebra")
    f = p_power_matrix(a)
    m = max(1, math.ceil(math.log(max(a.dim, 2), a.p)))
    it = matrix_power(f, m, a.p)
    return Subspace(kernel(it, a.p), a.p, a.dim)


def check_augmentation(a: AlgebraData, aug) -> np.ndarray:
    """Validate that aug is a unital algebra map onto GF(p); returns it."""
    aug = as_field(aug, a.p)
    if aug.shape != (a.dim,):
        raise InputError("augmentation has wrong length")
    vals = np.tensordot(a.mult, aug, axes=([2], [0])) % a.p
    if not np.array_equal(vals, np.outer(aug, aug) % a.p):
        raise InputError("augmentation is not multiplicative on basis pairs")
    if int(aug @ a.unit % a.p) != 1:
        raise InputError("augmentation does not send the unit to 1")
    return aug


def augmentation_ideal(a: AlgebraData, aug) -> Subspace:
    aug = check_augmentation(a, aug)
    return Subspace(kernel(aug[None, :], a.p), a.p, a.dim)


def is_local(a: AlgebraData, aug) -> bool:
    """True iff the augmentation ideal is nilpotent.

    The kernel of an algebra map is automatically a two-sided ideal; a
    codimension-one nilpotent ideal is the unique maximal one.
    """
    j = augmentation_ideal(a, aug)
    nil, _ = is_nilpotent_subspace(a, j)
    return nil
