"""Exact linear algebra over prime fields GF(p).

Everything in this module works on plain ``numpy.int64`` arrays whose entries
are residues in ``[0, p)``.  All arithmetic is exact: elimination stays in
int64, and ``exact_tensordot`` only routes through float64 when every partial
sum provably fits in the 53-bit integer range.  Subspaces are kept in reduced
row-echelon form so that equal subspaces have bit-identical representations.

Conventions:
    * Matrices act on column vectors: ``kernel(m)`` is the right null space.
    * ``rref`` uses deterministic pivoting (first nonzero entry in column
      order), so every derived object is reproducible.
    * Free variables are set to zero in ``solve``.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError, ResourceLimitError

MAX_PRIME = 65521


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the supported range."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    """Validate the field characteristic; returns p for chaining.

    Raises:
        InputError: if p is not a prime in [2, 65521].
    """
    if not isinstance(p, (int, np.integer)):
        raise InputError(f"field characteristic must be an integer, got {type(p).__name__}")
    p = int(p)
    if p < 2 or p > MAX_PRIME:
        raise InputError(f"field characteristic {p} outside supported range [2, {MAX_PRIME}]")
    if not is_prime(p):
        raise InputError(f"field characteristic {p} is not prime")
    return p


def as_field(arr, p: int) -> np.ndarray:
    """Coerce to an int64 array of residues mod p."""
    a = np.asarray(arr, dtype=np.int64)
    return np.mod(a, p)


def inv_mod(a: int, p: int) -> int:
    """Inverse of a nonzero residue via Fermat's little theorem."""
    a = int(a) % p
    if a == 0:
        raise InputError("zero has no inverse")
    return pow(a, p - 2, p)


def rref(m, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form with deterministic pivoting.

    Args:
        m: 2-d array-like over GF(p).
        p: prime modulus.

    Returns:
        (R, pivots): R is the RREF of m, pivots the tuple of pivot columns.
        rank(m) == len(pivots).
    """
    r = as_field(m, p).copy()
    if r.ndim != 2:
        raise InputError(f"rref expects a 2-d array, got ndim={r.ndim}")
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        lead = row + int(nz[0])
        if lead != row:
            r[[row, lead]] = r[[lead, row]]
        r[row] = (r[row] * inv_mod(int(r[row, col]), p)) % p
        # eliminate the pivot column from every other row in one pass
        factors = r[:, col].copy()
        factors[row] = 0
        if factors.any():
            r -= np.outer(factors, r[row])
            r %= p
        pivots.append(col)
        row += 1
    return r, tuple(pivots)


def rank(m, p: int) -> int:
    return len(rref(m, p)[1])


def kernel(m, p: int) -> np.ndarray:
    """Canonical basis (RREF rows) of the right null space of m."""
    a = as_field(m, p)
    if a.ndim != 2:
        raise InputError(f"kernel expects a 2-d array, got ndim={a.ndim}")
    ncols = a.shape[1]
    r, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return np.zeros((0, ncols), dtype=np.int64)
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        for j, c in enumerate(pivots):
            basis[idx, c] = (-r[j, f]) % p
    canon, _ = rref(basis, p)
    return canon[: len(free)]


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution of a·x = b with free variables fixed to 0, or None."""
    a = as_field(a, p)
    b = as_field(b, p)
    if b.ndim != 1 or a.shape[0] != b.shape[0]:
        raise InputError("solve: incompatible shapes")
    aug = np.hstack([a, b[:, None]])
    r, pivots = rref(aug, p)
    ncols = a.shape[1]
    if pivots and pivots[-1] == ncols:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for j, c in enumerate(pivots):
        x[c] = r[j, ncols]
    return x


def solve_matrix(a, bs, p: int) -> np.ndarray | None:
    """Simultaneous solve for several right-hand sides (columns of bs).

    Returns X with a·X = bs (free variables 0), or None if any system is
    inconsistent.
    """
    a = as_field(a, p)
    bs = as_field(bs, p)
    if bs.ndim != 2 or a.shape[0] != bs.shape[0]:
        raise InputError("solve_matrix: incompatible shapes")
    ncols = a.shape[1]
    aug = np.hstack([a, bs])
    r, pivots = rref(aug, p)
    if pivots and pivots[-1] >= ncols:
        return None
    x = np.zeros((ncols, bs.shape[1]), dtype=np.int64)
    for j, c in enumerate(pivots):
        x[c] = r[j, ncols:]
    return x


def inverse(m, p: int) -> np.ndarray:
    """Inverse of a square matrix; raises InputError if singular."""
    a = as_field(m, p)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError("inverse expects a square matrix")
    n = a.shape[0]
    x = solve_matrix(a, np.eye(n, dtype=np.int64), p)
    if x is None or rank(a, p) != n:
        raise InputError("matrix is singular")
    return x


def matrix_power(m, k: int, p: int) -> np.ndarray:
    """m^k mod p by binary powering (k >= 0)."""
    a = as_field(m, p)
    n = a.shape[0]
    out = np.eye(n, dtype=np.int64)
    while k > 0:
        if k & 1:
            out = (out @ a) % p
        a = (a @ a) % p
        k >>= 1
    return out


def exact_tensordot(a, b, axes, p: int) -> np.ndarray:
    """tensordot of mod-p reduced int arrays, exact and fast.

    Inputs must already be reduced mod p.  When the contraction cannot
    overflow the float64 integer range (every partial sum is at most
    (p-1)^2 * K with K the contracted volume), the product runs through
    BLAS; otherwise it falls back to int64.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if isinstance(axes, (int, np.integer)):
        contracted = a.shape[a.ndim - int(axes):] if axes else ()
    else:
        contracted = tuple(a.shape[i] for i in np.atleast_1d(axes[0]))
    k = 1
    for s in contracted:
        k *= int(s)
    bound = (p - 1) * (p - 1) * max(k, 1)
    if bound < 2**53:
        out = np.tensordot(a.astype(np.float64), b.astype(np.float64), axes)
        return np.mod(out, p).astype(np.int64)
    if bound < 2**63:
        return np.tensordot(a.astype(np.int64), b.astype(np.int64), axes) % p
    raise ResourceLimitError("contraction too large for exact machine arithmetic")


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


class Subspace:
    """A subspace of GF(p)^n held in canonical (RREF) form.

    Two Subspace objects are equal exactly when they describe the same
    subspace of the same ambient space; the canonical basis makes the
    comparison a bit-identical array check.

    Attributes:
        p: field characteristic.
        ambient_dim: n.
        basis: (dim, n) int64 RREF rows, read-only.
        pivots: pivot columns of the basis.
    """

    __slots__ = ("p", "ambient_dim", "basis", "pivots")

    def __init__(self, rows, p: int, ambient_dim: int | None = None):
        p = check_prime(p)
        if rows is None:
            rows = np.zeros((0, 0 if ambient_dim is None else ambient_dim), dtype=np.int64)
        a = as_field(rows, p)
        if a.ndim == 1:
            a = a[None, :]
        if a.ndim != 2:
            raise InputError("Subspace expects a 2-d array of spanning rows")
        if ambient_dim is None:
            ambient_dim = a.shape[1]
        if a.shape[1] != ambient_dim:
            raise InputError(
                f"ambient dimension mismatch: rows have {a.shape[1]}, expected {ambient_dim}"
            )
        r, piv = rref(a, p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "ambient_dim", int(ambient_dim))
        object.__setattr__(self, "basis", _freeze(r[: len(piv)]))
        object.__setattr__(self, "pivots", piv)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, p: int, ambient_dim: int) -> "Subspace":
        return cls(np.zeros((0, ambient_dim), dtype=np.int64), p, ambient_dim)

    @classmethod
    def full(cls, p: int, ambient_dim: int) -> "Subspace":
        return cls(np.eye(ambient_dim, dtype=np.int64), p, ambient_dim)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim or self.p != other.p:
            raise InputError("subspace ambient spaces do not match")

    def coords_of(self, v) -> np.ndarray | None:
        """Coefficients of v in the canonical basis, or None if v is outside."""
        v = as_field(v, self.p)
        if v.shape != (self.ambient_dim,):
            raise InputError("vector has wrong ambient dimension")
        coeffs = v[list(self.pivots)] if self.pivots else np.zeros(0, dtype=np.int64)
        residue = (v - coeffs @ self.basis) % self.p if self.dim else v
        if residue.any():
            return None
        return coeffs

    def contains_vector(self, v) -> bool:
        return self.coords_of(v) is not None

    def contains_rows(self, rows) -> bool:
        """Vectorized membership test for a stack of row vectors."""
        rows = as_field(rows, self.p)
        if rows.ndim != 2 or rows.shape[1] != self.ambient_dim:
            raise InputError("rows have wrong ambient dimension")
        if rows.shape[0] == 0:
            return True
        if self.dim == 0:
            return not rows.any()
        coeffs = rows[:, list(self.pivots)]
        return not ((rows - coeffs @ self.basis) % self.p).any()

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(row) for row in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        stacked = np.vstack([self.basis, other.basis])
        return Subspace(stacked, self.p, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.p, self.ambient_dim)
        stacked = np.vstack([self.basis, other.basis])
        # left null space of the stacked bases: alpha·A + beta·B = 0 means
        # alpha·A = -beta·B lies in both spaces, and every intersection
        # vector arises this way.
        null = kernel(stacked.T, self.p)
        vecs = (null[:, : self.dim] @ self.basis) % self.p
        return Subspace(vecs, self.p, self.ambient_dim)

    def annihilator(self) -> "Subspace":
        """Functionals vanishing on self, in dual coordinates."""
        if self.dim == 0:
            return Subspace.full(self.p, self.ambient_dim)
        return Subspace(kernel(self.basis, self.p), self.p, self.ambient_dim)

    def complement_in(self, other: "Subspace") -> np.ndarray:
        """Canonical complement rows of self inside other (self must lie in other).

        The rows are those of other's RREF basis whose pivot column is not a
        pivot of self; they always exist because pivots(self) is a subset of
        pivots(other) whenever self is contained in other.
        """
        self._check_ambient(other)
        if not other.contains(self):
            raise InputError("complement_in requires containment")
        own = set(self.pivots)
        rows = [row for row, c in zip(other.basis, other.pivots) if c not in own]
        if not rows:
            return np.zeros((0, self.ambient_dim), dtype=np.int64)
        return np.array(rows, dtype=np.int64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.p == other.p
            and self.ambient_dim == other.ambient_dim
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.p, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.p})"


def quotient_basis(sub: Subspace, amb: Subspace) -> tuple[np.ndarray, np.ndarray]:
    """Complement basis and quotient projection for sub inside amb.

    Returns:
        (comp, proj): comp is a (d, n) array of complement rows with
        d = amb.dim - sub.dim; proj is a (d, n) matrix such that for any
        v in amb, proj @ v gives the coefficients of v's class in the
        complement basis.  proj is the identity on the complement rows and
        zero on sub.
    """
    if not amb.contains(sub):
        raise InputError("quotient_basis requires sub to lie inside amb")
    p = sub.p
    n = sub.ambient_dim
    comp = sub.complement_in(amb)
    stacked = np.vstack([sub.basis, comp]) if sub.dim else comp
    # complete to an invertible matrix with standard vectors at non-pivot
    # columns of the ambient space
    missing = [c for c in range(n) if c not in amb.pivots]
    blocks = [stacked]
    if missing:
        extra = np.zeros((len(missing), n), dtype=np.int64)
        for i, c in enumerate(missing):
            extra[i, c] = 1
        blocks.append(extra)
    full = np.vstack(blocks)
    inv_t = inverse(full, p).T
    proj = inv_t[sub.dim : sub.dim + comp.shape[0]]
    return comp, np.ascontiguousarray(proj)
