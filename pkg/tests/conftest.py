"""Hand-built presentations reused across test modules.

Every structure constant here is entered from a pencil-and-paper
computation, never read back from library output.
"""

from math import comb

import numpy as np

from hopfkit.algebra import AlgebraData
from hopfkit.hopf import HopfPresentation
from hopfkit.linalg import inverse


def primitive_line(p: int) -> HopfPresentation:
    """k[x]/(x^p) with x primitive; basis 1, x, ..., x^(p-1).

    Delta(x^i) = sum_j C(i,j) x^j (x) x^(i-j) by the binomial theorem.
    """
    mult = np.zeros((p, p, p), dtype=np.int64)
    for i in range(p):
        for j in range(p):
            if i + j < p:
                mult[i, j, i + j] = 1
    unit = np.zeros(p, dtype=np.int64)
    unit[0] = 1
    comult = np.zeros((p, p, p), dtype=np.int64)
    for i in range(p):
        for j in range(i + 1):
            comult[i, j, i - j] = comb(i, j) % p
    counit = np.zeros(p, dtype=np.int64)
    counit[0] = 1
    labels = tuple("1" if i == 0 else f"x^{i}" for i in range(p))
    return HopfPresentation(AlgebraData(p, mult, unit, labels), comult, counit)


def group_line(p: int) -> HopfPresentation:
    """Group algebra of Z/p; basis g^0, ..., g^(p-1), every g^i group-like."""
    mult = np.zeros((p, p, p), dtype=np.int64)
    comult = np.zeros((p, p, p), dtype=np.int64)
    for i in range(p):
        comult[i, i, i] = 1
        for j in range(p):
            mult[i, j, (i + j) % p] = 1
    unit = np.zeros(p, dtype=np.int64)
    unit[0] = 1
    counit = np.ones(p, dtype=np.int64)
    labels = tuple("1" if i == 0 else f"g^{i}" for i in range(p))
    return HopfPresentation(AlgebraData(p, mult, unit, labels), comult, counit)


def xy_square_gf2() -> HopfPresentation:
    """GF(2)[x,y]/(x^2, y^2), x primitive, Delta(y) = y(x)1 + 1(x)y + x(x)x.

    Basis order 1, y, x, xy (index 2i+j for x^i y^j).  Delta(xy) expands to
    xy(x)1 + x(x)y + y(x)x + 1(x)xy because the cross terms hit x^2 = 0.
    """
    mult = np.zeros((4, 4, 4), dtype=np.int64)
    for k in range(4):
        mult[0, k, k] = 1
        mult[k, 0, k] = 1
    mult[1, 2, 3] = 1  # y*x = xy
    mult[2, 1, 3] = 1  # x*y = xy
    comult = np.zeros((4, 4, 4), dtype=np.int64)
    comult[0, 0, 0] = 1
    comult[1, 1, 0] = 1
    comult[1, 0, 1] = 1
    comult[1, 2, 2] = 1
    comult[2, 2, 0] = 1
    comult[2, 0, 2] = 1
    comult[3, 3, 0] = 1
    comult[3, 2, 1] = 1
    comult[3, 1, 2] = 1
    comult[3, 0, 3] = 1
    counit = np.array([1, 0, 0, 0], dtype=np.int64)
    labels = ("1", "y", "x", "xy")
    return HopfPresentation(AlgebraData(2, mult, unit=[1, 0, 0, 0], labels=labels), comult, counit)


def _xy_comult_gf2() -> np.ndarray:
    """Shared comultiplication for the dim-4 GF(2) fixtures below.

    Delta(x) = x(x)1 + 1(x)x, Delta(y) = y(x)1 + 1(x)y + x(x)x and
    Delta(xy) = xy(x)1 + x(x)y + y(x)x + 1(x)xy; the cross terms involving
    x^2 either vanish or cancel in pairs in every fixture that uses this.
    """
    comult = np.zeros((4, 4, 4), dtype=np.int64)
    comult[0, 0, 0] = 1
    comult[1, 1, 0] = 1
    comult[1, 0, 1] = 1
    comult[1, 2, 2] = 1
    comult[2, 2, 0] = 1
    comult[2, 0, 2] = 1
    comult[3, 3, 0] = 1
    comult[3, 2, 1] = 1
    comult[3, 1, 2] = 1
    comult[3, 0, 3] = 1
    return comult


def xy_square_root_gf2() -> HopfPresentation:
    """Same coalgebra as xy_square_gf2 but with the relation y^2 = x.

    Equivalently GF(2)[y]/(y^4) with x = y^2; consistency: Delta(y)^2 =
    y^2(x)1 + 1(x)y^2 = Delta(x) since x^2 = 0 kills the omega term.
    """
    mult = np.zeros((4, 4, 4), dtype=np.int64)
    for k in range(4):
        mult[0, k, k] = 1
        mult[k, 0, k] = 1
    mult[1, 1, 2] = 1  # y*y = x
    mult[1, 2, 3] = 1  # y*x = xy
    mult[2, 1, 3] = 1
    counit = np.array([1, 0, 0, 0], dtype=np.int64)
    labels = ("1", "y", "x", "xy")
    alg = AlgebraData(2, mult, unit=[1, 0, 0, 0], labels=labels)
    return HopfPresentation(alg, _xy_comult_gf2(), counit)


def xy_idempotents_gf2() -> HopfPresentation:
    """Same coalgebra again but with x^2 = x and y^2 = y.

    The extra x(x)x terms in Delta(x)Delta(y) appear twice and cancel
    over GF(2), so the shared comultiplication stays multiplicative.
    """
    mult = np.zeros((4, 4, 4), dtype=np.int64)
    for k in range(4):
        mult[0, k, k] = 1
        mult[k, 0, k] = 1
    mult[1, 1, 1] = 1  # y*y = y
    mult[2, 2, 2] = 1  # x*x = x
    mult[1, 2, 3] = 1
    mult[2, 1, 3] = 1
    mult[1, 3, 3] = 1  # y*xy = xy
    mult[3, 1, 3] = 1
    mult[2, 3, 3] = 1
    mult[3, 2, 3] = 1
    mult[3, 3, 3] = 1
    counit = np.array([1, 0, 0, 0], dtype=np.int64)
    labels = ("1", "y", "x", "xy")
    alg = AlgebraData(2, mult, unit=[1, 0, 0, 0], labels=labels)
    return HopfPresentation(alg, _xy_comult_gf2(), counit)


def enveloping_case5_gf2() -> HopfPresentation:
    """u(g) for the GF(2) Lie algebra [x,y] = y, x^[2] = x, y^[2] = 0.

    Basis 1, x, y, xy; the only nonobvious products are x*x = x,
    y*x = xy + y, x*(xy) = xy and (xy)*x = (xy)*y = y*(xy) = 0.
    Both generators are primitive.
    """
    mult = np.zeros((4, 4, 4), dtype=np.int64)
    for k in range(4):
        mult[0, k, k] = 1
        mult[k, 0, k] = 1
    mult[1, 1, 1] = 1  # x*x = x
    mult[1, 2, 3] = 1  # x*y = xy
    mult[2, 1, 2] = 1  # y*x = xy + y
    mult[2, 1, 3] = 1
    mult[1, 3, 3] = 1  # x*(xy) = xy
    comult = np.zeros((4, 4, 4), dtype=np.int64)
    comult[0, 0, 0] = 1
    comult[1, 1, 0] = 1
    comult[1, 0, 1] = 1
    comult[2, 2, 0] = 1
    comult[2, 0, 2] = 1
    comult[3, 3, 0] = 1
    comult[3, 1, 2] = 1
    comult[3, 2, 1] = 1
    comult[3, 0, 3] = 1
    counit = np.array([1, 0, 0, 0], dtype=np.int64)
    labels = ("1", "x", "y", "xy")
    alg = AlgebraData(2, mult, unit=[1, 0, 0, 0], labels=labels)
    return HopfPresentation(alg, comult, counit)


def xyz_pure_class_gf2() -> HopfPresentation:
    """GF(2)[x,y,z]/(x^2,y^2,z^2), x and y primitive, Delta(z) carrying x(x)y.

    Basis x^a y^b z^c at index 4a + 2b + c, so the order is
    1, z, y, yz, x, xz, xy, xyz.  Extending multiplicatively:

        Delta(yz)  = yz(x)1 + 1(x)yz + y(x)z + z(x)y + xy(x)y
        Delta(xz)  = xz(x)1 + 1(x)xz + x(x)z + z(x)x + x(x)xy
        Delta(xy)  = xy(x)1 + 1(x)xy + x(x)y + y(x)x
        Delta(xyz) = xyz(x)1 + 1(x)xyz + xy(x)z + z(x)xy + xz(x)y
                     + y(x)xz + yz(x)x + x(x)yz + xy(x)xy

    with every square of a coproduct collapsing because each (Delta v)^2
    has a vanished square in both tensor legs.
    """
    mult = np.zeros((8, 8, 8), dtype=np.int64)
    for i in range(8):
        for j in range(8):
            if i & j == 0:
                mult[i, j, i | j] = 1
    tails = {
        0: [(0, 0)],
        1: [(1, 0), (0, 1), (4, 2)],
        2: [(2, 0), (0, 2)],
        3: [(3, 0), (0, 3), (2, 1), (1, 2), (6, 2)],
        4: [(4, 0), (0, 4)],
        5: [(5, 0), (0, 5), (4, 1), (1, 4), (4, 6)],
        6: [(6, 0), (0, 6), (4, 2), (2, 4)],
        7: [(7, 0), (0, 7), (6, 1), (1, 6), (5, 2), (2, 5), (3, 4), (4, 3), (6, 6)],
    }
    comult = np.zeros((8, 8, 8), dtype=np.int64)
    for i, terms in tails.items():
        for a, b in terms:
            comult[i, a, b] = 1
    counit = np.zeros(8, dtype=np.int64)
    counit[0] = 1
    labels = ("1", "z", "y", "yz", "x", "xz", "xy", "xyz")
    alg = AlgebraData(2, mult, unit=[1, 0, 0, 0, 0, 0, 0, 0], labels=labels)
    return HopfPresentation(alg, comult, counit)


def idempotent_line(p: int = 3) -> HopfPresentation:
    """Bialgebra k[t]/(t^2 - t) with t group-like; t has no convolution inverse."""
    mult = np.zeros((2, 2, 2), dtype=np.int64)
    mult[0, 0, 0] = 1
    mult[0, 1, 1] = 1
    mult[1, 0, 1] = 1
    mult[1, 1, 1] = 1
    comult = np.zeros((2, 2, 2), dtype=np.int64)
    comult[0, 0, 0] = 1
    comult[1, 1, 1] = 1
    return HopfPresentation(
        AlgebraData(p, mult, unit=[1, 0], labels=("1", "t")),
        comult,
        counit=[1, 1],
    )

def conjugate(h, g):
    """Transport the structure constants through the basis change f_i = sum g[i,a] e_a."""
    p = h.p
    ginv = inverse(g, p)
    mult = np.einsum("ia,jb,abc,ck->ijk", g, g, h.algebra.mult, ginv) % p
    comult = np.einsum("ia,abc,bm,cn->imn", g, h.comult, ginv, ginv) % p
    unit = h.algebra.unit @ ginv % p
    counit = g @ h.counit % p
    s = None if h.antipode is None else g @ h.antipode @ ginv % p
    return HopfPresentation(AlgebraData(p, mult, unit), comult, counit, antipode=s)

