"""Inclusions of Hopf subalgebras: normality, quotients, freeness, series.

All subalgebras are passed as :class:`~hopfkit.linalg.Subspace` objects in
the coordinates of the ambient presentation.  Operations that need an
antipode compute one on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraData,
    center,
    ideal_generated,
    is_local,
    is_nilpotent_element,
    p_power_matrix,
    subspace_product,
    unital_closure,
)
from .errors import InputError, TheoremViolation, UnsupportedOperation
from .hopf import (
    HopfPresentation,
    compute_antipode,
    coradical_filtration,
    dual,
    is_subcoalgebra,
    primitives,
)
from .linalg import (
    Subspace,
    as_field,
    exact_tensordot,
    kernel,
    matrix_power,
    quotient_basis,
    rank,
    solve,
)


def _with_antipode(h: HopfPresentation) -> HopfPresentation:
    return h if h.antipode is not None else compute_antipode(h)


def subalgebra_generated(h: HopfPresentation, s: Subspace) -> Subspace:
    """Unital multiplicative closure of S inside the ambient algebra."""
    return unital_closure(h.algebra, s)


def is_hopf_subalgebra(h: HopfPresentation, k: Subspace) -> bool:
    """Unit, products, comultiplication and antipode all stay inside K."""
    if not k.contains_vector(h.algebra.unit):
        return False
    if not k.contains(subspace_product(h.algebra, k, k)):
        return False
    if not is_subcoalgebra(h, k):
        return False
    s = _with_antipode(h).antipode
    return k.contains_rows((k.basis @ s) % h.p)


def is_normal(h: HopfPresentation, k: Subspace) -> bool:
    """Both adjoint actions of H map K into itself.

    Left action of a basis vector e_i on v is sum comult[i,a,b] e_a v S(e_b),
    the right action is sum comult[i,a,b] S(e_a) v e_b; K is normal when
    every basis vector of H sends every basis vector of K inside K.
    """
    h = _with_antipode(h)
    p = h.p
    n = h.dim
    mult = h.algebra.mult
    s = h.antipode
    if k.dim == 0:
        return True
    # ev[x, a, m] = (e_a * v_x)_m
    ev = exact_tensordot(k.basis, mult, ([1], [1]), p)
    # sm[b, m, l] = (e_m * S(e_b))_l
    sm = exact_tensordot(s, mult, ([1], [1]), p)
    left = exact_tensordot(ev, sm, ([2], [1]), p)  # (x, a, b, l)
    rows = exact_tensordot(
        left.reshape(k.dim, n * n, n), h.comult.reshape(n, n * n), ([1], [1]), p
    ).transpose(0, 2, 1)
    if not k.contains_rows(rows.reshape(-1, n)):
        return False
    # sv[x, a, m] = (S(e_a) * v_x)_m
    sv = exact_tensordot(s, ev, ([1], [1]), p).transpose(1, 0, 2)
    right = exact_tensordot(sv, mult, ([2], [0]), p)  # (x, a, b, l)
    rows = exact_tensordot(
        right.reshape(k.dim, n * n, n), h.comult.reshape(n, n * n), ([1], [1]), p
    ).transpose(0, 2, 1)
    return k.contains_rows(rows.reshape(-1, n))


def _coords_rows(k: Subspace, rows: np.ndarray, what: str) -> np.ndarray:
    """Coordinates of several vectors known to lie in K (validated)."""
    if not k.contains_rows(rows):
        raise InputError(f"{what} escapes the subalgebra")
    if k.dim == 0:
        return np.zeros((rows.shape[0], 0), dtype=np.int64)
    return rows[:, list(k.pivots)]


def restrict_to_subalgebra(h: HopfPresentation, k: Subspace) -> tuple[HopfPresentation, np.ndarray]:
    """Presentation of a Hopf subalgebra in its own canonical basis.

    Returns the restricted presentation together with the inclusion matrix
    whose row i gives the ambient coordinates of the i-th new basis vector.

    Raises:
        InputError: if K is not a Hopf subalgebra.
    """
    if not is_hopf_subalgebra(h, k):
        raise InputError("restriction requires a Hopf subalgebra")
    h = _with_antipode(h)
    p = h.p
    n = h.dim
    b = k.basis
    d = k.dim
    prod = exact_tensordot(b, h.algebra.mult, ([1], [0]), p)
    prod = exact_tensordot(prod, b, ([1], [1]), p).transpose(0, 2, 1)  # (i, j, m)
    mult_sub = _coords_rows(k, prod.reshape(d * d, n), "product").reshape(d, d, d)
    flat = (b @ h.comult.reshape(n, n * n)) % p
    piv = np.asarray(k.pivots, dtype=np.int64)
    cols = (piv[:, None] * n + piv[None, :]).reshape(-1)
    comult_sub = flat[:, cols].reshape(d, d, d)
    unit_sub = k.coords_of(h.algebra.unit)
    counit_sub = (b @ h.counit) % p
    s_sub = _coords_rows(k, (b @ h.antipode) % p, "antipode image")
    restricted = HopfPresentation(
        AlgebraData(p, mult_sub, unit_sub), comult_sub, counit_sub, antipode=s_sub
    )
    return restricted, b


def quotient_by(h: HopfPresentation, k: Subspace) -> HopfPresentation:
    """Quotient Hopf algebra H / K⁺H for a normal Hopf subalgebra K.

    Verifies that the ideal generated by K⁺ is a coideal killed by the
    counit and stable under the antipode, then checks the freeness
    identity dim H = dim K * dim(H/K⁺H).

    Raises:
        InputError: if the ideal fails a Hopf-ideal condition (K was not
            a normal Hopf subalgebra).
        TheoremViolation: if the freeness dimension identity fails.
    """
    h = _with_antipode(h)
    p = h.p
    n = h.dim
    eps_kernel = Subspace(kernel(h.counit[None, :], p), p, n)
    k_plus = k.intersect(eps_kernel)
    ideal = ideal_generated(h.algebra, k_plus)
    full = Subspace.full(p, n)
    comp, proj = quotient_basis(ideal, full)
    flat = (ideal.basis @ h.comult.reshape(n, n * n)) % p
    two_sided = np.kron(proj, proj) % p
    if flat.size and ((flat @ two_sided.T) % p).any():
        raise InputError("quotient ideal is not a coideal; the subalgebra is not normal")
    if ((ideal.basis @ h.counit) % p).any():
        raise InputError("quotient ideal is not killed by the counit")
    if not ideal.contains_rows((ideal.basis @ h.antipode) % p):
        raise InputError("quotient ideal is not antipode-stable")
    q = comp.shape[0]
    if k.dim * q != n:
        raise TheoremViolation(
            f"freeness identity fails: dim H = {n}, dim K = {k.dim}, dim H/K+H = {q}"
        )
    prod = exact_tensordot(comp, h.algebra.mult, ([1], [0]), p)
    prod = exact_tensordot(prod, comp, ([1], [1]), p).transpose(0, 2, 1)
    mult_q = exact_tensordot(prod, proj, ([2], [1]), p)
    unit_q = (proj @ h.algebra.unit) % p
    flat_c = (comp @ h.comult.reshape(n, n * n)) % p
    comult_q = exact_tensordot(flat_c, two_sided, ([1], [1]), p).reshape(q, q, q)
    counit_q = (comp @ h.counit) % p
    s_q = (((comp @ h.antipode) % p) @ proj.T) % p
    return HopfPresentation(AlgebraData(p, mult_q, unit_q), comult_q, counit_q, antipode=s_q)


def _p_exponent(m: int, p: int) -> int:
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise TheoremViolation(f"dimension {m * p**e} is not a power of {p}")
    return e


def p_index(h: HopfPresentation, k: Subspace) -> int:
    """log_p(dim H) - log_p(dim K); both dims must be p-powers."""
    return _p_exponent(h.dim, h.p) - _p_exponent(k.dim, h.p)


def first_order(h: HopfPresentation, k: Subspace):
    """Minimal n with K ∩ H_n a proper subspace of H_n, or math.inf."""
    filt = coradical_filtration(h)
    for idx in range(1, len(filt.terms)):
        term = filt.terms[idx]
        if k.intersect(term) != term:
            return idx
    return math.inf


def ladder_subspaces(h: HopfPresentation, k: Subspace, x, top: int) -> tuple[Subspace, ...]:
    """The K-module ladder L_n = K + Kx + ... + Kx^n for n = 0..top."""
    x = as_field(x, h.p)
    ladders = [k]
    for i in range(1, top + 1):
        xi = h.algebra.power(x, i)
        rows = (k.basis @ h.algebra.right_mult_matrix(xi).T) % h.p
        ladders.append(ladders[-1].sum(Subspace(rows, h.p, h.dim)))
    return tuple(ladders)


@dataclass(frozen=True)
class FreeModuleRelation:
    """Free K-module basis of H together with the minimal p-polynomial of x.

    The relation reads x^(p^degree) + sum_i scalars[i] * x^(p^i) + constant = 0
    with the constant a vector lying in K.
    """

    degree: int
    module_basis: np.ndarray
    scalars: tuple[int, ...]
    constant: np.ndarray


def free_basis_minrel(h: HopfPresentation, k: Subspace, x) -> FreeModuleRelation:
    """Free K-module basis {k_b x^i} and the p-polynomial relation for x.

    Preconditions (checked): K and x generate H as an algebra, the
    comultiplication defect of x lies in K (x) K, and [K, x] ⊆ K + Kx.

    Raises:
        UnsupportedOperation: if a precondition fails.
        TheoremViolation: if the module basis is not free or no relation
            of the predicted shape exists.
    """
    p = h.p
    n = h.dim
    x = as_field(x, p)
    span_x = Subspace(x[None, :], p, n)
    if subalgebra_generated(h, k.sum(span_x)).dim != n:
        raise UnsupportedOperation("K and x do not generate the ambient algebra")
    defect = (h.comult_flat(x) - np.kron(x, h.algebra.unit) - np.kron(h.algebra.unit, x)) % p
    piv = np.asarray(k.pivots, dtype=np.int64)
    cols = (piv[:, None] * n + piv[None, :]).reshape(-1)
    coords = defect[cols].reshape(k.dim, k.dim)
    recon = (k.basis.T @ coords @ k.basis) % p
    if not np.array_equal(recon.reshape(-1), defect):
        raise UnsupportedOperation("comultiplication defect of x does not lie in K (x) K")
    rx = h.algebra.right_mult_matrix(x)
    lx = h.algebra.left_mult_matrix(x)
    kx_rows = (k.basis @ rx.T) % p
    commutators = (kx_rows - (k.basis @ lx.T)) % p
    if not k.sum(Subspace(kx_rows, p, n)).contains_rows(commutators):
        raise UnsupportedOperation("[K, x] does not lie in K + Kx")
    d = p_index(h, k)
    powers = [h.algebra.unit.copy()]
    for _ in range(p**d - 1):
        powers.append(h.algebra.multiply(powers[-1], x))
    module_rows = np.vstack([(k.basis @ h.algebra.right_mult_matrix(v).T) % p for v in powers])
    if rank(module_rows, p) != n:
        raise TheoremViolation("the products k_b x^i do not form a free module basis")
    x_pd = h.algebra.power(x, p**d)
    p_powers = np.array([h.algebra.power(x, p**i) for i in range(d)], dtype=np.int64)
    columns = np.vstack([p_powers.reshape(d, n), k.basis]) if d else k.basis
    sol = solve(columns.T, (-x_pd) % p, p)
    if sol is None:
        raise TheoremViolation("x satisfies no p-polynomial relation over K")
    scalars = tuple(int(c) for c in sol[:d])
    constant = (sol[d:] @ k.basis) % p if k.dim else np.zeros(n, dtype=np.int64)
    return FreeModuleRelation(d, module_rows, scalars, constant)


@dataclass(frozen=True)
class NormalSeriesResult:
    """Normal series k = N_0 ⊂ ... ⊂ N_n = H with its verification report.

    primitive_quotient_dims[m] is dim P(H / N_m⁺H) for m = 0..n; the
    layer_dims entry m (starting at 1) is dim N_m / N_{m-1}⁺N_m.
    """

    series: tuple[Subspace, ...]
    ok: bool
    failures: tuple[str, ...]
    primitive_quotient_dims: tuple[int, ...]
    layer_dims: tuple[int, ...]


def normal_series_cocomm(h: HopfPresentation) -> NormalSeriesResult:
    """Normal series of a cocommutative connected presentation.

    Constructs the dual (a commutative local algebra), pushes the
    augmentation ideal through iterated p-power maps, and pulls the
    annihilators back as the series terms.  The report verifies
    normality of every term, that the first term is generated by the
    primitives, and both monotonicity statements for the quotients.

    Raises:
        UnsupportedOperation: if not cocommutative or not connected.
    """
    if not np.array_equal(h.comult, h.comult.transpose(0, 2, 1)):
        raise UnsupportedOperation("normal series needs a cocommutative presentation")
    filt = coradical_filtration(h)
    if not filt.exhausts:
        raise UnsupportedOperation("normal series needs a connected presentation")
    h = _with_antipode(h)
    p = h.p
    n = h.dim
    a = dual(h)
    j = Subspace(kernel(a.counit[None, :], p), p, n)
    frobenius = p_power_matrix(a.algebra)
    series = [Subspace(h.algebra.unit[None, :], p, n)]
    failures = []
    m = 1
    while series[-1].dim < n:
        image_rows = (j.basis @ matrix_power(frobenius, m, p).T) % p
        image = Subspace(image_rows, p, n)
        if image.dim == 0:
            series.append(Subspace.full(p, n))
            break
        ideal_m = ideal_generated(a.algebra, image)
        series.append(ideal_m.annihilator())
        m += 1
        if m > n + 1:
            failures.append("p-power ideals failed to vanish")
            break
    length = len(series) - 1
    for idx in range(1, length + 1):
        term = series[idx]
        if not term.contains(series[idx - 1]) or (idx > 1 and term.dim <= series[idx - 1].dim):
            failures.append(f"series term {idx} does not strictly contain term {idx - 1}")
        if not is_hopf_subalgebra(h, term):
            failures.append(f"series term {idx} is not a Hopf subalgebra")
        elif not is_normal(h, term):
            failures.append(f"series term {idx} is not normal")
    generated = subalgebra_generated(h, primitives(h))
    if series[min(1, length)] != generated:
        failures.append("first series term differs from the subalgebra generated by primitives")

    primitive_quotient_dims = [primitives(h).dim]
    for idx in range(1, length + 1):
        quotient = quotient_by(h, series[idx])
        primitive_quotient_dims.append(primitives(quotient).dim)
    drops = np.diff(primitive_quotient_dims)
    if (drops > 0).any() or primitive_quotient_dims[-1] != 0:
        failures.append("primitive dimensions of the quotients are not non-increasing to zero")

    layer_dims = []
    for idx in range(1, length + 1):
        restricted, _ = restrict_to_subalgebra(h, series[idx])
        inner_rows = _coords_rows(series[idx], series[idx - 1].basis, "previous series term")
        inner = Subspace(inner_rows, p, series[idx].dim)
        layer_dims.append(quotient_by(restricted, inner).dim)
    if (np.diff(layer_dims) > 0).any():
        failures.append("layer quotient dimensions are not non-increasing")

    return NormalSeriesResult(
        tuple(series),
        not failures,
        tuple(failures),
        tuple(int(v) for v in primitive_quotient_dims),
        tuple(int(v) for v in layer_dims),
    )


@dataclass(frozen=True)
class LocalityReport:
    """The three equivalent locality statements and whether they agree."""

    algebra_local: bool
    primitive_subalgebra_local: bool
    primitives_nilpotent: bool
    ok: bool


def locality_criterion(h: HopfPresentation) -> LocalityReport:
    """Evaluate the three locality statements independently.

    Raises:
        UnsupportedOperation: if not cocommutative or not connected.
    """
    if not np.array_equal(h.comult, h.comult.transpose(0, 2, 1)):
        raise UnsupportedOperation("locality criterion needs a cocommutative presentation")
    if not coradical_filtration(h).exhausts:
        raise UnsupportedOperation("locality criterion needs a connected presentation")
    algebra_local = is_local(h.algebra, h.counit)
    prim = primitives(h)
    restricted, _ = restrict_to_subalgebra(h, subalgebra_generated(h, prim))
    sub_local = is_local(restricted.algebra, restricted.counit)
    nilpotent = all(is_nilpotent_element(h.algebra, row) for row in prim.basis)
    ok = algebra_local == sub_local == nilpotent
    return LocalityReport(algebra_local, sub_local, nilpotent, ok)


def center_contains_primitives(h: HopfPresentation) -> bool:
    """Whether the center contains the (one-dimensional) primitive space.

    Raises:
        UnsupportedOperation: if dim P(H) is not 1.
    """
    prim = primitives(h)
    if prim.dim != 1:
        raise UnsupportedOperation("center criterion applies to one-dimensional primitive spaces")
    return center(h.algebra).contains(prim)
