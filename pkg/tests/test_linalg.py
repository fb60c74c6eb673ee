"""Exact GF(p) linear algebra: frozen fixtures plus randomized properties.

Expected values here were computed by hand (row reduction on paper) or by
the brute-force enumeration oracles defined below, never by running the
library and pasting its output back.
"""

import itertools

import numpy as np
import pytest

from hopfkit import linalg
from hopfkit.errors import InputError
from hopfkit.linalg import Subspace


def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 13, 65521}
    for n in list(primes) + [0, 1, 4, 9, 15, 65520]:
        assert linalg.is_prime(n) == (n in primes)


def test_check_prime_rejects_bad_values():
    for bad in [1, 4, 6, 65522, -3]:
        with pytest.raises(InputError):
            linalg.check_prime(bad)
    assert linalg.check_prime(5) == 5


def test_rref_identity_fixed_point():
    m = np.eye(3, dtype=np.int64)
    r, piv = linalg.rref(m, 5)
    assert np.array_equal(r, m)
    assert piv == (0, 1, 2)


def test_rref_zero_matrix():
    r, piv = linalg.rref(np.zeros((2, 4), dtype=np.int64), 3)
    assert not r.any()
    assert piv == ()


def test_rref_rank_one_example_gf5():
    # hand reduction: second row is twice the first over GF(5)
    r, piv = linalg.rref([[1, 2], [2, 4]], 5)
    assert np.array_equal(r, [[1, 2], [0, 0]])
    assert piv == (0,)


def test_kernel_identity_and_zero():
    assert linalg.kernel(np.eye(4, dtype=np.int64), 3).shape == (0, 4)
    k = linalg.kernel(np.zeros((2, 3), dtype=np.int64), 3)
    assert np.array_equal(k, np.eye(3, dtype=np.int64))


def test_kernel_line_example_gf3():
    # x + y = 0 over GF(3): solutions spanned by (1, 2) after canonicalizing
    k = linalg.kernel([[1, 1]], 3)
    assert np.array_equal(k, [[1, 2]])


def test_solve_identity_and_free_variable_convention():
    b = np.array([2, 1, 0], dtype=np.int64)
    x = linalg.solve(np.eye(3, dtype=np.int64), b, 3)
    assert np.array_equal(x, b)
    # underdetermined: free variable pinned to zero
    x = linalg.solve([[1, 1]], [0], 2)
    assert np.array_equal(x, [0, 0])


def test_solve_inconsistent_reports_none():
    assert linalg.solve([[0]], [1], 2) is None


def test_subspace_gf2_square_enumeration_oracle():
    # U = span{(1,0)}, V = span{(1,1)} inside GF(2)^2: enumerate all four
    # vectors to get the expected sum and intersection
    u = Subspace([[1, 0]], 2)
    v = Subspace([[1, 1]], 2)
    vectors = list(itertools.product(range(2), repeat=2))
    in_u = {w for w in vectors if w in {(0, 0), (1, 0)}}
    in_v = {w for w in vectors if w in {(0, 0), (1, 1)}}
    union_span = {(0, 0), (1, 0), (1, 1), (0, 1)}
    assert {tuple(r) for r in u.sum(v).basis} <= union_span
    assert u.sum(v) == Subspace.full(2, 2)
    assert u.intersect(v) == Subspace.zero(2, 2)
    assert in_u & in_v == {(0, 0)}


def test_subspace_intersect_self_is_identity():
    s = Subspace([[1, 2, 0], [0, 0, 1]], 3)
    assert s.intersect(s) == s


def test_annihilator_of_zero_is_full():
    z = Subspace.zero(5, 3)
    assert z.annihilator() == Subspace.full(5, 3)


def test_dimension_formula_on_random_pairs():
    rng = np.random.default_rng(20260815)
    for p in (2, 3, 5):
        for _ in range(40):
            n = int(rng.integers(1, 7))
            u = Subspace(rng.integers(0, p, size=(int(rng.integers(0, 4)), n)), p, n)
            v = Subspace(rng.integers(0, p, size=(int(rng.integers(0, 4)), n)), p, n)
            s = u.sum(v)
            i = u.intersect(v)
            assert u.dim + v.dim == s.dim + i.dim
            assert s.contains(u) and s.contains(v)
            assert u.contains(i) and v.contains(i)


def test_rank_transpose_and_kernel_dimension_properties():
    rng = np.random.default_rng(7)
    for p in (2, 3, 5):
        for _ in range(40):
            rows = int(rng.integers(1, 6))
            cols = int(rng.integers(1, 6))
            m = rng.integers(0, p, size=(rows, cols))
            r = linalg.rank(m, p)
            assert r == linalg.rank(m.T, p)
            assert linalg.kernel(m, p).shape[0] + r == cols


def test_canonical_basis_independent_of_spanning_set():
    rng = np.random.default_rng(99)
    for p in (2, 3, 5):
        for _ in range(30):
            n = int(rng.integers(2, 6))
            base = rng.integers(0, p, size=(2, n))
            u = Subspace(base, p, n)
            # rescramble: random invertible combinations of the same rows
            mixed = np.vstack(
                [
                    (base[0] + base[1]) % p,
                    (2 * base[0] + base[1]) % p,
                    base[1],
                ]
            )
            w = Subspace(mixed, p, n)
            # the mixed rows span the same space (b1 is present and the
            # difference of the first two recovers b0), so the canonical
            # representations must be bit-identical
            assert w == u
            assert np.array_equal(u.basis, Subspace(u.basis[::-1].copy(), p, n).basis)


def test_annihilator_round_trip():
    rng = np.random.default_rng(1234)
    for p in (2, 3, 5):
        for _ in range(30):
            n = int(rng.integers(1, 6))
            u = Subspace(rng.integers(0, p, size=(int(rng.integers(0, n + 1)), n)), p, n)
            assert u.annihilator().annihilator() == u
            assert u.annihilator().dim == n - u.dim


def test_annihilator_pairing_vanishes():
    rng = np.random.default_rng(55)
    for p in (2, 3, 5):
        u = Subspace(rng.integers(0, p, size=(2, 5)), p, 5)
        a = u.annihilator()
        prods = (a.basis @ u.basis.T) % p
        assert not prods.any()


def test_complement_and_projection_contract():
    rng = np.random.default_rng(4321)
    for p in (2, 3, 5):
        for _ in range(25):
            n = int(rng.integers(2, 7))
            amb = Subspace(rng.integers(0, p, size=(n, n)), p, n)
            pick = rng.integers(0, 2, size=amb.dim).astype(bool)
            sub = Subspace(amb.basis[pick] if pick.any() else None, p, n)
            comp, proj = linalg.quotient_basis(sub, amb)
            assert comp.shape[0] == amb.dim - sub.dim
            assert sub.sum(Subspace(comp, p, n)) == amb
            # projection kills sub and is the identity on complement rows
            if sub.dim:
                assert not ((proj @ sub.basis.T) % p).any()
            if comp.shape[0]:
                assert np.array_equal(
                    (proj @ comp.T) % p, np.eye(comp.shape[0], dtype=np.int64)
                )


def test_complement_requires_containment():
    u = Subspace([[1, 0]], 2)
    w = Subspace([[0, 1]], 2)
    with pytest.raises(InputError):
        u.complement_in(w)


def test_inverse_and_matrix_power():
    m = np.array([[1, 1], [0, 1]], dtype=np.int64)
    inv = linalg.inverse(m, 5)
    assert np.array_equal((m @ inv) % 5, np.eye(2, dtype=np.int64))
    # unipotent shear has order p: m^5 = [[1,5],[0,1]] = identity mod 5
    assert np.array_equal(linalg.matrix_power(m, 5, 5), np.eye(2, dtype=np.int64))
    with pytest.raises(InputError):
        linalg.inverse([[1, 2], [2, 4]], 5)


def test_subspace_is_immutable():
    s = Subspace([[1, 0]], 3)
    with pytest.raises(AttributeError):
        s.p = 5
    with pytest.raises(ValueError):
        s.basis[0, 0] = 2
