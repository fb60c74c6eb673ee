"""Restricted Lie algebras over GF(p) and their enveloping Hopf algebras.

A restricted Lie algebra is a bracket tensor plus a p-operation given on
basis elements.  The p-operation extends to arbitrary vectors through

    (a x)^[p] = a^p x^[p]        and
    (x + y)^[p] = x^[p] + y^[p] + sum_{i=1}^{p-1} s_i(x, y),

where i * s_i(x, y) is the coefficient of t^(i-1) in the Lie word
x (ad(t x + y))^(p-1); brackets are right actions, x (ad y) = [x, y].
The enveloping algebra uses the ordered-monomial basis x_0^{a_0} ... with
all exponents below p, indexed by the base-p digit string (a_0, ..., a_(n-1)).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraData
from .errors import InputError, ResourceLimitError
from .hopf import HopfPresentation, compute_antipode
from .linalg import as_field, check_prime, inv_mod, matrix_power


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


def omega_coefficients(p: int) -> tuple[int, ...]:
    """Coefficients (c_1, ..., c_(p-1)) with c_i = binomial(p, i)/p mod p.

    Computed with exact integer binomials, then reduced.  These drive both
    the symmetric tensor omega(x) = sum c_i x^i (x) x^(p-i) and the p-power
    expansions shared with the cochain machinery.
    """
    p = check_prime(p)
    return tuple(int(math.comb(p, i) // p % p) for i in range(1, p))


@dataclass(frozen=True, eq=False)
class RestrictedLie:
    """A restricted Lie algebra by structure constants.

    Attributes:
        p: field characteristic (prime).
        bracket: (dim, dim, dim) tensor, [e_i, e_j] = sum_k bracket[i,j,k] e_k.
        pmap: (dim, dim) rows, pmap[i] = coordinates of e_i^[p].
        labels: optional generator names.
    """

    p: int
    bracket: np.ndarray
    pmap: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        p = check_prime(self.p)
        bracket = as_field(self.bracket, p)
        if bracket.ndim != 3 or len(set(bracket.shape)) != 1:
            raise InputError("bracket must be a cubic (dim, dim, dim) tensor")
        pmap = as_field(self.pmap, p)
        if pmap.shape != bracket.shape[:2]:
            raise InputError("pmap must be a (dim, dim) row table")
        if self.labels is not None and len(self.labels) != bracket.shape[0]:
            raise InputError("labels length must match dim")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "bracket", _frozen(bracket))
        object.__setattr__(self, "pmap", _frozen(pmap))

    @property
    def dim(self) -> int:
        return self.bracket.shape[0]

    def bracket_of(self, u, v) -> np.ndarray:
        """[u, v] for coefficient vectors."""
        u = as_field(u, self.p)
        v = as_field(v, self.p)
        return np.einsum("i,j,ijk->k", u, v, self.bracket) % self.p

    def ad_matrix(self, v) -> np.ndarray:
        """Matrix A with w @ A = [w, v] (right action of ad v on rows)."""
        v = as_field(v, self.p)
        return np.tensordot(self.bracket, v, axes=([1], [0])) % self.p


def jacobson_s(g: RestrictedLie, x, y, i: int) -> np.ndarray:
    """The correction term s_i(x, y) of the p-operation sum formula.

    Iterates t <- [t, lam*x + y] starting from t = x, carrying t as a
    polynomial in lam with vector coefficients, then reads off the
    lam^(i-1) coefficient divided by i.
    """
    p = g.p
    if not 1 <= i <= p - 1:
        raise InputError(f"index must lie in [1, {p - 1}], got {i}")
    x = as_field(x, p)
    y = as_field(y, p)
    # poly[d] = coefficient vector of lam^d
    poly = np.zeros((p, g.dim), dtype=np.int64)
    poly[0] = x
    for _ in range(p - 1):
        new = np.zeros_like(poly)
        for d in range(p - 1):
            new[d] = (new[d] + g.bracket_of(poly[d], y)) % p
            new[d + 1] = (new[d + 1] + g.bracket_of(poly[d], x)) % p
        poly = new
    return (inv_mod(i, p) * poly[i - 1]) % p


def pmap_eval(g: RestrictedLie, v) -> np.ndarray:
    """v^[p] for an arbitrary vector, via the scaling and sum axioms.

    Folds the nonzero coordinate terms of v in ascending index order, so
    the result is the axiom-mandated value whenever the axioms hold.
    """
    p = g.p
    v = as_field(v, p)
    prefix = np.zeros(g.dim, dtype=np.int64)
    acc = np.zeros(g.dim, dtype=np.int64)
    for idx in np.flatnonzero(v):
        term = np.zeros(g.dim, dtype=np.int64)
        term[idx] = v[idx]
        # (c e_idx)^[p] = c^p e_idx^[p]
        acc = (acc + pow(int(v[idx]), p, p) * g.pmap[idx]) % p
        if prefix.any():
            for i in range(1, p):
                acc = (acc + jacobson_s(g, prefix, term, i)) % p
        prefix = (prefix + term) % p
    return acc


@dataclass(frozen=True)
class LieReport:
    ok: bool
    failures: tuple[str, ...] = field(default_factory=tuple)


def verify_restricted(g: RestrictedLie) -> LieReport:
    """Check the Lie axioms and the three p-operation axioms.

    Alternating + antisymmetry and Jacobi run on basis tuples; the
    p-operation checks are ad(e_i^[p]) = ad(e_i)^p on basis pairs, the
    scaling axiom over all field scalars, and the sum formula on basis
    pairs (nontrivial for i > j, where the fold order is reversed).
    """
    p, n, b = g.p, g.dim, g.bracket
    failures = []
    for i in range(n):
        if b[i, i].any():
            failures.append(f"[e_{i}, e_{i}] is nonzero")
    if not np.array_equal(b, (-b.transpose(1, 0, 2)) % p):
        i, j = np.argwhere((b + b.transpose(1, 0, 2)) % p)[0][:2]
        failures.append(f"bracket is not antisymmetric on pair ({i}, {j})")
    # Jacobi: [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
    jac = np.tensordot(b, b, axes=([2], [0])) % p  # (i,j,k,l)
    total = (jac + jac.transpose(1, 2, 0, 3) + jac.transpose(2, 0, 1, 3)) % p
    if total.any():
        i, j, k, _ = np.argwhere(total)[0]
        failures.append(f"Jacobi identity fails on triple ({i}, {j}, {k})")
    for i in range(n):
        lhs = g.ad_matrix(g.pmap[i])
        rhs = matrix_power(g.ad_matrix(np.eye(n, dtype=np.int64)[i]), p, p)
        if not np.array_equal(lhs, rhs):
            failures.append(f"ad(e_{i}^[p]) differs from ad(e_{i})^p")
    eye = np.eye(n, dtype=np.int64)
    for i in range(n):
        for a in range(p):
            got = pmap_eval(g, (a * eye[i]) % p)
            want = (pow(a, p, p) * g.pmap[i]) % p
            if not np.array_equal(got, want):
                failures.append(f"scaling axiom fails on {a} e_{i}")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            want = (g.pmap[i] + g.pmap[j]).astype(np.int64)
            for s in range(1, p):
                want = want + jacobson_s(g, eye[i], eye[j], s)
            if not np.array_equal(pmap_eval(g, (eye[i] + eye[j]) % p), want % p):
                failures.append(f"sum formula fails on pair ({i}, {j})")
    return LieReport(not failures, tuple(failures))


def _monomial_labels(g: RestrictedLie, exps) -> tuple[str, ...]:
    names = g.labels or tuple(f"x{i}" for i in range(g.dim))
    out = []
    for a in exps:
        parts = [
            names[i] if e == 1 else f"{names[i]}^{e}"
            for i, e in enumerate(a)
            if e
        ]
        out.append(" ".join(parts) if parts else "1")
    return tuple(out)


def straighten_word(g: RestrictedLie, word, guard_steps: int | None = None) -> dict[tuple, int]:
    """Rewrite a generator word into the ordered-monomial basis.

    Returns {exponent tuple: coefficient}.  Rewrites the leftmost event:
    an adjacent inversion x_a x_b with a > b becomes x_b x_a + [x_a, x_b],
    and a run of p equal letters becomes the p-operation expansion.  Swaps
    lower the inversion count at fixed length and every other rule shortens
    the word, so the system terminates; the guard is a safety net.

    Raises:
        ResourceLimitError: if the rewrite budget is exhausted.
    """
    p, n = g.p, g.dim
    if guard_steps is None:
        guard_steps = 10 * p**n
    result: dict[tuple, int] = {}
    stack = [(1, tuple(word))]
    steps = 0
    while stack:
        coeff, w = stack.pop()
        coeff %= p
        if coeff == 0:
            continue
        event = None
        for t in range(len(w) - 1):
            if w[t] > w[t + 1]:
                event = ("swap", t)
                break
            if t + p <= len(w) and len(set(w[t : t + p])) == 1:
                event = ("reduce", t)
                break
        if event is None:
            exps = tuple(w.count(i) for i in range(n))
            result[exps] = (result.get(exps, 0) + coeff) % p
            continue
        steps += 1
        if steps > guard_steps:
            raise ResourceLimitError(
                f"straightening exceeded {guard_steps} rewrite steps"
            )
        kind, t = event
        if kind == "swap":
            a, b = w[t], w[t + 1]
            stack.append((coeff, w[:t] + (b, a) + w[t + 2 :]))
            for k in np.flatnonzero(g.bracket[a, b]):
                stack.append((coeff * int(g.bracket[a, b, k]), w[:t] + (int(k),) + w[t + 2 :]))
        else:
            i = w[t]
            for k in np.flatnonzero(g.pmap[i]):
                stack.append((coeff * int(g.pmap[i][k]), w[:t] + (int(k),) + w[t + p :]))
    return {e: c for e, c in result.items() if c}


def enveloping(g: RestrictedLie) -> HopfPresentation:
    """The restricted enveloping Hopf algebra u(g), dim p^(dim g).

    Multiplication comes from straightening; the coproduct makes the
    generators primitive, which on ordered monomials is the closed form
    Delta(m(a)) = sum over a = b + c of prod_i binom(a_i, b_i) m(b) (x) m(c)
    (exponentwise, already ordered, so no straightening is needed there).
    The counit kills every positive monomial and the antipode is solved
    from the convolution identity.

    Raises:
        InputError: if the restricted-Lie axioms fail.
    """
    report = verify_restricted(g)
    if not report.ok:
        raise InputError(f"not a restricted Lie algebra: {report.failures[0]}")
    p, n = g.p, g.dim
    dim = p**n
    exps = list(itertools.product(range(p), repeat=n))
    index = {a: i for i, a in enumerate(exps)}

    def word_of(a):
        return tuple(i for i in range(n) for _ in range(a[i]))

    gen_left = np.zeros((n, dim, dim), dtype=np.int64)
    for i in range(n):
        for b, a_idx in index.items():
            for e, c in straighten_word(g, (i,) + word_of(b)).items():
                gen_left[i, a_idx, index[e]] = c
    mult = np.zeros((dim, dim, dim), dtype=np.int64)
    for a, a_idx in index.items():
        rows = np.eye(dim, dtype=np.int64)
        for letter in reversed(word_of(a)):
            rows = rows @ gen_left[letter] % p
        mult[a_idx] = rows
    comult = np.zeros((dim, dim, dim), dtype=np.int64)
    for a, a_idx in index.items():
        for b in itertools.product(*(range(e + 1) for e in a)):
            c = tuple(e - f for e, f in zip(a, b))
            coeff = 1
            for e, f in zip(a, b):
                coeff = coeff * math.comb(e, f) % p
            comult[a_idx, index[b], index[c]] = coeff
    counit = np.zeros(dim, dtype=np.int64)
    counit[0] = 1
    unit = np.zeros(dim, dtype=np.int64)
    unit[0] = 1
    alg = AlgebraData(p, mult, unit, labels=_monomial_labels(g, exps))
    return compute_antipode(HopfPresentation(alg, comult, counit))


def dim2_catalog(p: int, case: int) -> RestrictedLie:
    """The five two-generator restricted structures, in a fixed order.

    1: abelian, trivial p-operation;  2: abelian, x^[p] = x;
    3: abelian, x^[p] = y;  4: abelian, x^[p] = x and y^[p] = y;
    5: [x, y] = y with x^[p] = x.
    """
    p = check_prime(p)
    if case not in (1, 2, 3, 4, 5):
        raise InputError(f"case must be in 1..5, got {case}")
    bracket = np.zeros((2, 2, 2), dtype=np.int64)
    pmap = np.zeros((2, 2), dtype=np.int64)
    if case == 2:
        pmap[0, 0] = 1
    elif case == 3:
        pmap[0, 1] = 1
    elif case == 4:
        pmap[0, 0] = 1
        pmap[1, 1] = 1
    elif case == 5:
        bracket[0, 1, 1] = 1
        bracket[1, 0, 1] = p - 1
        pmap[0, 0] = 1
    return RestrictedLie(p, bracket, pmap, labels=("x", "y"))


def lemma_palgebra_check(a: AlgebraData, x, y) -> bool:
    """Jacobson's two p-power identities inside an associative algebra.

    Checks (x+y)^p = x^p + y^p + sum_i s_i(x, y) with s_i computed from
    commutator brackets, and [x^p, y] = (ad x)^p applied to y.  Both hold
    in every associative algebra over GF(p); a False return means the
    structure constants are not associative in characteristic p.
    """
    p = a.p
    x = as_field(x, p)
    y = as_field(y, p)

    def brk(u, v):
        return (a.multiply(u, v) - a.multiply(v, u)) % p

    poly = np.zeros((p, a.dim), dtype=np.int64)
    poly[0] = x
    for _ in range(p - 1):
        new = np.zeros_like(poly)
        for d in range(p - 1):
            new[d] = (new[d] + brk(poly[d], y)) % p
            new[d + 1] = (new[d + 1] + brk(poly[d], x)) % p
        poly = new
    total = (a.power(x, p) + a.power(y, p)) % p
    for i in range(1, p):
        total = (total + inv_mod(i, p) * poly[i - 1]) % p
    first = np.array_equal(a.power((x + y) % p, p), total)
    ad_iter = y
    for _ in range(p):
        ad_iter = brk(x, ad_iter)
    second = np.array_equal(brk(a.power(x, p), y), ad_iter)
    return bool(first and second)
