"""Kernel/solve/rank against a naive dense Fraction elimination oracle."""

import random
from fractions import Fraction

from hopfax.linalg import (
    QuotientSpace,
    apply_columns,
    invert_columns,
    kernel,
    rank,
    rref,
    solve_columns,
    vadd,
    veq,
    vscale,
    vsub,
)
from hopfax.scalars import QQ


# --- independent oracle: textbook dense Gaussian elimination over Fraction ---

def oracle_rref(rows, ncols):
    m = [[Fraction(r.get(j, 0)) for j in range(ncols)] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def oracle_kernel(columns, ncols, nrows):
    rows = [{j: columns[j].get(i, 0) for j in range(ncols) if columns[j].get(i, 0) != 0} for i in range(nrows)]
    m, pivots = oracle_rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = {f: Fraction(1)}
        for row, p in zip(m, pivots):
            if row[f] != 0:
                v[p] = -row[f]
        basis.append(v)
    return basis


def rand_matrix(rng, n=5, m=5, density=0.8):
    cols = []
    for _ in range(m):
        col = {}
        for i in range(n):
            if rng.random() < density:
                c = QQ(rng.randint(-6, 6), rng.randint(1, 4))
                if c != 0:
                    col[i] = c
        cols.append(col)
    return cols


def to_rows(columns, nrows):
    rows = []
    for i in range(nrows):
        row = {}
        for j, col in enumerate(columns):
            c = col.get(i)
            if c is not None and c != 0:
                row[j] = c
        rows.append(row)
    return rows


def test_kernel_identity_and_zero():
    ident = [{0: QQ(1)}, {1: QQ(1)}]
    assert kernel(ident, 2) == []
    zero = [{}, {}]
    basis = kernel(zero, 2)
    assert len(basis) == 2


def test_kernel_rank_one_matrix():
    # rows (1,1) and (2,2): kernel is spanned by (1,-1)
    cols = [{0: QQ(1), 1: QQ(2)}, {0: QQ(1), 1: QQ(2)}]
    basis = kernel(cols, 2)
    assert len(basis) == 1
    (v,) = basis
    # equals (1, -1) up to scale: cross-multiply
    assert v[0] * QQ(-1) == v[1] * QQ(1)


def test_kernel_matches_oracle_random():
    rng = random.Random(42)
    for trial in range(100):
        cols = rand_matrix(rng)
        got = kernel(cols, 5)
        want = oracle_kernel(cols, 5, 5)
        assert len(got) == len(want), trial
        # spans agree: each oracle vector reduces to zero against engine RREF rows
        all_rows = to_rows(cols, 5)
        assert rank(all_rows) == 5 - len(got)
        for v in got:
            assert not apply_columns(cols, v), "engine kernel vector not in kernel"
        for w in want:
            joint = [dict(v) for v in got] + [{k: QQ(c.numerator, c.denominator) for k, c in w.items()}]
            assert rank(joint) == len(got), "oracle vector outside engine span"


def test_solve_matches_oracle_random():
    rng = random.Random(43)
    for trial in range(100):
        cols = rand_matrix(rng)
        x = {i: QQ(rng.randint(-5, 5)) for i in range(5)}
        rhs = apply_columns(cols, x)
        sol = solve_columns(cols, [rhs], 5)[0]
        assert sol is not None
        assert veq(apply_columns(cols, sol), rhs)


def test_solve_inconsistent():
    cols = [{0: QQ(1)}, {0: QQ(2)}]  # image is the first axis
    sol = solve_columns(cols, [{1: QQ(1)}], 2)[0]
    assert sol is None


def test_invert_columns():
    cols = [{0: QQ(2), 1: QQ(1)}, {1: QQ(1)}]
    inv = invert_columns(cols, 2)
    assert inv is not None
    composed = [apply_columns(cols, c) for c in inv]
    assert veq(composed[0], {0: QQ(1)}) and veq(composed[1], {1: QQ(1)})
    assert invert_columns([{0: QQ(1)}, {0: QQ(1)}], 2) is None


def test_rref_pivots_canonical():
    rows = [{0: QQ(1), 1: QQ(1)}, {0: QQ(1), 1: QQ(1), 2: QQ(1)}]
    rws, pivots = rref(rows)
    assert pivots == [0, 2]
    # reversed processing order gives the same pivot set
    rws2, pivots2 = rref(rows[::-1])
    assert pivots2 == [0, 2]
    assert rws == rws2


def test_vec_helpers():
    a = {0: QQ(1), 1: QQ(2)}
    b = {1: QQ(-2), 2: QQ(5)}
    assert vadd(a, b) == {0: QQ(1), 2: QQ(5)}
    assert vsub(a, a) == {}
    assert vscale(QQ(0), a) == {}
    assert veq(vadd(a, b), vsub(vadd(a, vadd(b, b)), b))


def test_quotient_trivial():
    q = QuotientSpace(3, [])
    assert q.dim == 3
    v = {0: QQ(2), 2: QQ(-1)}
    assert q.project(v) == {0: QQ(2), 2: QQ(-1)}
    assert q.section(q.project(v)) == v


def test_quotient_one_relation():
    q = QuotientSpace(2, [{0: QQ(1), 1: QQ(-1)}])
    assert q.dim == 1
    # e0 ~ e1 in the quotient
    assert q.project({0: QQ(1)}) == q.project({1: QQ(1)})
    # invariants
    assert q.project(q.section({0: QQ(5)})) == {0: QQ(5)}
    assert not q.project({0: QQ(3), 1: QQ(-3)})


def test_quotient_representative_differs_by_relation():
    rng = random.Random(3)
    rels = [{0: QQ(1), 1: QQ(2), 3: QQ(-1)}, {1: QQ(1), 2: QQ(1)}]
    q = QuotientSpace(4, rels)
    assert q.dim == 2
    for _ in range(20):
        v = {i: QQ(rng.randint(-4, 4)) for i in range(4)}
        v = {k: c for k, c in v.items() if c != 0}
        diff = vsub(v, q.section(q.project(v)))
        # diff must lie in the span of the relations
        assert rank([dict(r) for r in rels] + [diff]) == rank([dict(r) for r in rels])
