"""End-to-end acceptance gate.

Twelve numbered checks, one per guaranteed behavior of the package, each
printing a single PASS/FAIL line with its runtime.  All comparisons are
exact; there are no tolerances anywhere.
"""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from hopfkit import catalog
from hopfkit.algebra import is_local, is_nilpotent_element
from hopfkit.catalog import CatalogId, all_ids, build, dual_match, fingerprint
from hopfkit.cobar import (
    build_complex,
    chain_map_check,
    cohomology,
    h2_basis_enveloping,
    is_coboundary,
    module_laws_check,
    omega,
)
from hopfkit.hopf import (
    assoc_graded,
    check_graded_truncated,
    check_hopf,
    coradical_filtration,
    dual,
    is_cocommutative,
    is_connected,
    primitives,
)
from hopfkit.inclusions import (
    first_order,
    free_basis_minrel,
    locality_criterion,
    normal_series_cocomm,
    p_index,
    restrict_to_subalgebra,
    subalgebra_generated,
)
from hopfkit.linalg import Subspace
from hopfkit.rlie import RestrictedLie, dim2_catalog, enveloping, lemma_palgebra_check

ALL_PRIMES = (2, 3, 5)
SMALL_PRIMES = (2, 3)


def _emit(capsys, line):
    with capsys.disabled():
        print(line, flush=True)


@contextmanager
def criterion(capsys, number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        _emit(capsys, f"[acceptance {number:2d}] FAIL  {title}")
        raise
    elapsed = time.perf_counter() - start
    _emit(capsys, f"[acceptance {number:2d}] PASS  {title} ({elapsed:.1f}s)")


def basis_vector(dim, index, coeff=1):
    v = np.zeros(dim, dtype=np.int64)
    v[index] = coeff
    return v


def d2(p, case):
    return build(p, CatalogId("D2", case))


def one_dim_lie(p, pmap_coeff):
    return RestrictedLie(p, np.zeros((1, 1, 1), dtype=np.int64), [[pmap_coeff]])


def test_criterion_01_catalog_integrity(capsys):
    with criterion(capsys, 1, "all 20 entries pass the full axiom suite at p = 2, 3, 5"):
        catalog._build_checked.cache_clear()
        start = time.perf_counter()
        for p in ALL_PRIMES:
            for cid in all_ids():
                h = build(p, cid)
                assert h.antipode is not None, f"{cid.label} at p={p} carries no antipode"
                report = check_hopf(h)
                assert report.ok, f"{cid.label} at p={p}: {report.failures}"
        assert time.perf_counter() - start < 30.0


def test_criterion_02_primitive_dimensions(capsys):
    with criterion(capsys, 2, "primitive dimension is 2 for cases 1-5 and 1 for cases 6-8"):
        for p in ALL_PRIMES:
            for case in range(1, 9):
                expected = 2 if case <= 5 else 1
                assert primitives(d2(p, case)).dim == expected, (p, case)


def test_criterion_03_duality_exchanges_connected_and_local(capsys):
    with criterion(capsys, 3, "duality swaps connectedness and locality across both tables"):
        for p in SMALL_PRIMES:
            for case in range(1, 9):
                h = d2(p, case)
                assert is_connected(h), (p, case)
                dh = dual(h)
                assert is_local(dh.algebra, dh.counit), (p, case)
                g = build(p, CatalogId("L2", case))
                assert is_local(g.algebra, g.counit), (p, case)
                assert is_connected(dual(g)), (p, case)


def test_criterion_04_degree_two_cohomology_dimensions(capsys):
    with criterion(capsys, 4, "degree-2 cohomology has dimension n(n+1)/2 with the designated basis"):
        start = time.perf_counter()
        for p in ALL_PRIMES:
            for pmap_coeff in (0, 1):
                g = one_dim_lie(p, pmap_coeff)
                dim, _ = cohomology(build_complex(enveloping(g), 3), 2)
                assert dim == 1, (p, pmap_coeff)
                basis = h2_basis_enveloping(g)
                assert basis.ok and basis.dimension == 1, basis.failures
        for p in SMALL_PRIMES:
            for case in range(1, 6):
                g = dim2_catalog(p, case)
                dim, _ = cohomology(build_complex(enveloping(g), 3), 2)
                assert dim == 3, (p, case)
                basis = h2_basis_enveloping(g)
                assert basis.ok and basis.dimension == 3, basis.failures
        assert time.perf_counter() - start < 10.0


def test_criterion_05_power_cocycles_are_coboundaries(capsys):
    with criterion(capsys, 5, "sum a_i^p w(x_i) - w(sum a_i x_i) always has a degree-1 preimage"):
        for p in SMALL_PRIMES:
            for case in range(1, 6):
                h = enveloping(dim2_catalog(p, case))
                c = build_complex(h, 2)
                x = basis_vector(h.dim, p)
                y = basis_vector(h.dim, 1)
                for a0 in range(p):
                    for a1 in range(p):
                        t = (
                            pow(a0, p, p) * omega(h, x)
                            + pow(a1, p, p) * omega(h, y)
                            - omega(h, (a0 * x + a1 * y) % p)
                        ) % p
                        assert is_coboundary(c, t) is not None, (p, case, a0, a1)
        rng = np.random.default_rng(65)
        h = enveloping(one_dim_lie(5, 0))
        c = build_complex(h, 2)
        x = basis_vector(h.dim, 1)
        for a in rng.integers(0, 5, size=20):
            t = (pow(int(a), 5, 5) * omega(h, x) - omega(h, a * x % 5)) % 5
            assert is_coboundary(c, t) is not None, a


def test_criterion_06_adjoint_chain_maps(capsys):
    with criterion(capsys, 6, "adjoint maps commute with the differentials and respect brackets and p-powers"):
        for p in SMALL_PRIMES:
            for case in range(1, 9):
                h = d2(p, case)
                prim = primitives(h)
                for x in prim.basis:
                    assert chain_map_check(h, x), (p, case)
                for x in prim.basis:
                    for y in prim.basis:
                        assert module_laws_check(h, x, y), (p, case)


def test_criterion_07_freeness_and_minimal_relations(capsys):
    with criterion(capsys, 7, "chain extensions are free with relation y^p = 0, x, y in cases 6, 7, 8"):
        for p in ALL_PRIMES:
            for case, scalars, constant_index in ((6, (0,), None), (7, (0,), p), (8, (p - 1,), None)):
                h = d2(p, case)
                k = subalgebra_generated(h, Subspace(basis_vector(h.dim, p)[None, :], p))
                rel = free_basis_minrel(h, k, basis_vector(h.dim, 1))
                assert rel.degree == 1, (p, case)
                assert rel.scalars == scalars, (p, case)
                expected_constant = (
                    np.zeros(h.dim, dtype=np.int64)
                    if constant_index is None
                    else basis_vector(h.dim, constant_index, p - 1)
                )
                assert np.array_equal(rel.constant, expected_constant), (p, case)
                assert rel.module_basis.shape == (h.dim, h.dim)


def test_criterion_08_normal_series(capsys):
    with criterion(capsys, 8, "normal series is k in N1 in H with p-index 1 steps and monotone quotients"):
        for p in SMALL_PRIMES:
            for case in (6, 7, 8):
                h = d2(p, case)
                res = normal_series_cocomm(h)
                assert res.ok, (p, case, res.failures)
                dims = tuple(term.dim for term in res.series)
                assert dims == (1, p, p * p), (p, case)
                assert res.series[1] == subalgebra_generated(h, primitives(h)), (p, case)
                for prev, term in zip(res.series, res.series[1:]):
                    assert term.dim == p * prev.dim, (p, case)
                assert res.primitive_quotient_dims == (1, 1, 0), (p, case)
                assert res.layer_dims == (p, p), (p, case)


def test_criterion_09_locality_equivalence(capsys):
    with criterion(capsys, 9, "locality, local primitive closure and nilpotent primitives agree"):
        for p in ALL_PRIMES:
            applied = 0
            for cid in all_ids():
                h = build(p, cid)
                if not is_cocommutative(h):
                    continue
                applied += 1
                if is_connected(h):
                    rep = locality_criterion(h)
                    flags = (rep.algebra_local, rep.primitive_subalgebra_local, rep.primitives_nilpotent)
                    assert rep.ok and len(set(flags)) == 1, (p, cid.label, rep)
                else:
                    prim = primitives(h)
                    closure, _ = restrict_to_subalgebra(h, subalgebra_generated(h, prim))
                    flags = (
                        is_local(h.algebra, h.counit),
                        is_local(closure.algebra, closure.counit),
                        all(is_nilpotent_element(h.algebra, row) for row in prim.basis),
                    )
                    assert len(set(flags)) == 1, (p, cid.label, flags)
            assert applied == 19, p


def test_criterion_10_first_order_values(capsys):
    with criterion(capsys, 10, "first filtration disagreement is p for case 6, 1 for primitive extensions"):
        for p in SMALL_PRIMES:
            orders = {}
            for case in range(1, 9):
                h = d2(p, case)
                k = subalgebra_generated(h, Subspace(basis_vector(h.dim, p)[None, :], p))
                if k.dim == h.dim:
                    # the p-th power of x escapes its own line, take y instead
                    k = subalgebra_generated(h, Subspace(basis_vector(h.dim, 1)[None, :], p))
                assert p_index(h, k) == 1, (p, case)
                orders[case] = first_order(h, k)
            assert orders[6] == p
            for case in range(1, 6):
                assert orders[case] == 1, (p, case)
            assert all(value in {1, 2, p} for value in orders.values()), (p, orders)


def test_criterion_11_fingerprint_distinctness_and_dual_match(capsys):
    with criterion(capsys, 11, "fingerprints separate all 8 cases and duals land on the local table"):
        for p in ALL_PRIMES:
            prints = [fingerprint(d2(p, case)) for case in range(1, 9)]
            for i in range(8):
                for j in range(i + 1, 8):
                    assert prints[i] != prints[j], (p, i + 1, j + 1)
        for p in SMALL_PRIMES:
            for case in range(1, 9):
                rep = dual_match(p, case)
                assert rep.ok, (p, case, rep.failures)


def test_criterion_12_property_suites(capsys):
    with criterion(capsys, 12, "p-power expansion, commutator filtration and graded truncation all hold"):
        for p in SMALL_PRIMES:
            for case in range(1, 6):
                alg = enveloping(dim2_catalog(p, case)).algebra
                eye = np.eye(alg.dim, dtype=np.int64)
                for x in eye:
                    for y in eye:
                        assert lemma_palgebra_check(alg, x, y), (p, case)
        for p in SMALL_PRIMES:
            for case in range(1, 9):
                h = d2(p, case)
                filt = coradical_filtration(h)
                top = len(filt.terms) - 1
                for n in range(1, top + 1):
                    for m in range(1, top + 1):
                        if n + m - 1 > top:
                            continue
                        rows = [
                            (h.algebra.multiply(a, b) - h.algebra.multiply(b, a)) % p
                            for a in filt.terms[n].basis
                            for b in filt.terms[m].basis
                        ]
                        assert filt.terms[n + m - 1].contains_rows(np.array(rows)), (p, case, n, m)
                graded = assoc_graded(h)
                report = check_graded_truncated(graded)
                assert report.ok, (p, case, report.failures)
