"""Constructors for the small algebras and Hopf algebras used everywhere.

These are deterministic basis-indexed builders; the named catalog (with
serialized documents and provenance notes) lives in ``catalog``.
"""

from __future__ import annotations

from .hopf import FinAlgebra, HopfAlgebra
from .scalars import QQ, CyclotomicField
from .tensor import CoeffTensor


def group_algebra(elements, mul_table, inv_table, field=QQ, name="kG"):
    """Group algebra with S = linear extension of group inverse."""
    n = len(elements)
    one = field.one
    mul = CoeffTensor((n, n), n)
    for i in range(n):
        for j in range(n):
            mul.add((i, j), mul_table[i][j], one)
    comul = CoeffTensor((n,), n * n)
    for i in range(n):
        comul.add((i,), i * n + i, one)
    counit = {i: one for i in range(n)}
    antipode = [{inv_table[i]: one} for i in range(n)]
    return HopfAlgebra(
        field,
        elements,
        mul,
        {0: one},
        comul,
        counit,
        antipode,
        antipode_inv=[dict(c) for c in antipode],
        name=name,
    )


def cyclic_group_algebra(n, field=QQ, name=None):
    """k[Z_n] with generator g, basis 1, g, ..., g^(n-1)."""
    elements = ["1"] + [f"g{'^' + str(k) if k > 1 else ''}" for k in range(1, n)]
    mul_table = [[(i + j) % n for j in range(n)] for i in range(n)]
    inv_table = [(-i) % n for i in range(n)]
    return group_algebra(elements, mul_table, inv_table, field, name or f"kZ{n}")


def symmetric_group_algebra_s3(field=QQ):
    """k[S_3]; elements ordered e, r, r2, s, sr, sr2 with r^3 = s^2 = e."""
    perms = [
        (0, 1, 2),
        (1, 2, 0),
        (2, 0, 1),
        (1, 0, 2),
        (0, 2, 1),
        (2, 1, 0),
    ]
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p∘q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(3))

    def inverse(p):
        out = [0, 0, 0]
        for x in range(3):
            out[p[x]] = x
        return tuple(out)

    names = ["e", "r", "r2", "s", "sr", "sr2"]
    mul_table = [[index[compose(p, q)] for q in perms] for p in perms]
    inv_table = [index[inverse(p)] for p in perms]
    return group_algebra(names, mul_table, inv_table, field, "kS3")


def sweedler_h4(field=QQ):
    """The 4-dimensional Hopf algebra with basis 1, g, x, gx.

    Relations g^2 = 1, x^2 = 0, xg = -gx; coproduct Delta(g) = g⊗g,
    Delta(x) = x⊗1 + g⊗x; antipode S(g) = g, S(x) = -gx.
    """
    one = field.one
    I, G, X, GX = 0, 1, 2, 3
    mul = CoeffTensor((4, 4), 4)
    table = {
        (I, I): {I: one}, (I, G): {G: one}, (I, X): {X: one}, (I, GX): {GX: one},
        (G, I): {G: one}, (G, G): {I: one}, (G, X): {GX: one}, (G, GX): {X: one},
        (X, I): {X: one}, (X, G): {GX: -one}, (X, X): {}, (X, GX): {},
        (GX, I): {GX: one}, (GX, G): {X: -one}, (GX, X): {}, (GX, GX): {},
    }
    for idx, out in table.items():
        for k, c in out.items():
            mul.add(idx, k, c)
    comul = CoeffTensor((4,), 16)
    comul.add((I,), I * 4 + I, one)
    comul.add((G,), G * 4 + G, one)
    comul.add((X,), X * 4 + I, one)
    comul.add((X,), G * 4 + X, one)
    comul.add((GX,), GX * 4 + G, one)
    comul.add((GX,), I * 4 + GX, one)
    counit = {I: one, G: one}
    antipode = [{I: one}, {G: one}, {GX: -one}, {X: one}]
    antipode_inv = [{I: one}, {G: one}, {GX: one}, {X: -one}]
    return HopfAlgebra(
        field, ["1", "g", "x", "gx"], mul, {I: one}, comul, counit,
        antipode, antipode_inv, name="H4",
    )


def matrix_algebra_m2(field=QQ):
    """M_2(k) with basis e11, e12, e21, e22 (matrix units)."""
    one = field.one
    names = ["e11", "e12", "e21", "e22"]
    pos = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    mul = CoeffTensor((4, 4), 4)
    for (i, j), a in pos.items():
        for (k, l), b in pos.items():
            if j == k:
                mul.add((a, b), pos[(i, l)], one)
    return FinAlgebra(field, names, mul, {0: one, 3: one}, name="M2")


def dual_numbers(field=QQ):
    """k[y]/(y^2) with basis 1, y."""
    one = field.one
    mul = CoeffTensor((2, 2), 2)
    mul.add((0, 0), 0, one)
    mul.add((0, 1), 1, one)
    mul.add((1, 0), 1, one)
    return FinAlgebra(field, ["1", "y"], mul, {0: one}, name="k[y]/y2")


def trivial_base(field=QQ):
    """The ground field as a one-dimensional algebra."""
    mul = CoeffTensor((1, 1), 1)
    mul.add((0, 0), 0, field.one)
    return FinAlgebra(field, ["1"], mul, {0: field.one}, name="k")


# --- cocycle pairs -----------------------------------------------------------


def pair_trivial_kz2():
    """Trivial action and trivial sigma: B = kZ2 under H = kZ2."""
    from .cocycle import CocyclePair, trivial_action, trivial_sigma

    H = cyclic_group_algebra(2)
    B = cyclic_group_algebra(2).algebra
    return CocyclePair(H, B, trivial_action(H, B), trivial_sigma(H, B), name="trivial-kZ2")


def pair_galois_kz2(a=None):
    """B = k under H = kZ2 with sigma(g,g) = a (default -1)."""
    from .cocycle import CocyclePair, trivial_action

    H = cyclic_group_algebra(2)
    B = trivial_base()
    one = QQ(1)
    a = QQ(-1) if a is None else a
    sigma = {(0, 0): {0: one}, (0, 1): {0: one}, (1, 0): {0: one}, (1, 1): {0: a}}
    return CocyclePair(H, B, trivial_action(H, B), sigma, name="galois-kZ2")


def h4_cotwist_table(lam, field=QQ):
    """The one-parameter cotwist family of the 4-dimensional Hopf algebra."""
    one = field.one
    return {
        (0, 0): one, (0, 1): one, (1, 0): one, (1, 1): one,
        (2, 2): lam, (2, 3): -lam, (3, 2): lam, (3, 3): -lam,
    }


def pair_galois_h4(lam=None):
    """B = k under the 4-dim Hopf algebra; sigma is the lam-family cocycle."""
    from .cocycle import CocyclePair, trivial_action

    H = sweedler_h4()
    B = trivial_base()
    lam = QQ(1) if lam is None else lam
    sigma = {k: {0: v} for k, v in h4_cotwist_table(lam).items()}
    return CocyclePair(H, B, trivial_action(H, B), sigma, name="galois-H4")


def diag_u_gauge(values):
    """Gauge map kZ2 -> M2 sending g to the diagonal matrix diag(values)."""
    from .cocycle import GaugeMap

    B = matrix_algebra_m2()
    H = cyclic_group_algebra(2)
    ug = {0: values[0], 3: values[1]}
    return GaugeMap(H, B, [dict(B.unit), ug], name=f"diag{values}")


def pair_inner_m2():
    """M2 under kZ2 acting by conjugation by diag(1,-1); trivial sigma."""
    from .cocycle import CocyclePair, inner_action_cocycle, trivial_sigma

    H = cyclic_group_algebra(2)
    B = matrix_algebra_m2()
    u = diag_u_gauge((QQ(1), QQ(-1)))
    act, rep = inner_action_cocycle(B, H, u)
    assert rep.passed
    return CocyclePair(H, B, act, trivial_sigma(H, B), name="inner-M2")


def h4_dual_number_action():
    """H4-module algebra structure on k[y]/(y^2): g|>y = -y, x|>y = 1."""
    from .comod import Measuring

    H = sweedler_h4()
    B = dual_numbers()
    one = QQ(1)
    act = CoeffTensor((4, 2), 2)
    act.add((0, 0), 0, one)   # 1|>1 = 1
    act.add((0, 1), 1, one)   # 1|>y = y
    act.add((1, 0), 0, one)   # g|>1 = 1
    act.add((1, 1), 1, -one)  # g|>y = -y
    act.add((2, 1), 0, one)   # x|>y = 1, x|>1 = 0
    act.add((3, 1), 0, -one)  # gx|>y = g|>(x|>y)·sign: gx|>y = g|>1 applied after x
    return Measuring(H, B, act, name="h4-dual")


def pair_h4_dual():
    """Associative-type pair: H4 acting on the dual numbers, trivial sigma."""
    from .cocycle import CocyclePair, trivial_sigma

    m = h4_dual_number_action()
    return CocyclePair(m.H, m.B, m, trivial_sigma(m.H, m.B), name="h4-dual-numbers")


# --- quantum Weyl pairs (order-2 extensions with sigma(w,w) = nu) ------------


def weyl_pair_kz2():
    """B = kZ2, trivial involution, sigma(w,w) = g: the extension kZ4 of kZ2."""
    from .cocycle import CocyclePair, trivial_action

    H = cyclic_group_algebra(2, name="kZ2w")
    B = cyclic_group_algebra(2).algebra
    one = QQ(1)
    sigma = {
        (0, 0): dict(B.unit), (0, 1): dict(B.unit), (1, 0): dict(B.unit),
        (1, 1): {1: one},  # sigma(w,w) = g
    }
    return CocyclePair(H, B, trivial_action(H, B), sigma, name="weyl-kZ2")


def gauss_element_kz4(field):
    """x with character values (1, i, 1, i): x = (1+i)/2 + (1-i)/2 a^2."""
    i = field.zeta()
    half = field.coerce(QQ(1, 2))
    return {0: half * (1 + i), 2: half * (1 - i)}


def weyl_pair_kz4():
    """B = kZ4 over Q(i), T(a) = a^3, sigma(w,w) = x^{-1} for the Gauss element."""
    from .cocycle import CocyclePair
    from .comod import Measuring

    F = CyclotomicField(4)
    H = cyclic_group_algebra(2, field=F, name="kZ2w")
    B = cyclic_group_algebra(4, field=F).algebra
    one = F.one
    act = CoeffTensor((2, 4), 4)
    for b in range(4):
        act.add((0, b), b, one)
        act.add((1, b), (-b) % 4, one)  # w|>a^j = a^{-j}
    x = gauss_element_kz4(F)
    x_inv = B.inverse_element(x)
    sigma = {
        (0, 0): dict(B.unit), (0, 1): dict(B.unit), (1, 0): dict(B.unit),
        (1, 1): dict(x_inv),
    }
    m = Measuring(H, B, act, name="weyl-T")
    return CocyclePair(H, B, m, sigma, name="weyl-kZ4")
