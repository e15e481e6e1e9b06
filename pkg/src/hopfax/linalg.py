"""Exact linear algebra on sparse vectors and matrices.

Vectors are plain dicts {index: scalar} with no stored zeros.  Linear maps
are lists of column vectors (image of each domain basis vector).  Row
reduction is an incremental sparse eliminator whose final state is the
reduced row echelon form of the processed rows; pivot/free columns of that
RREF give deterministic bases for kernels and quotient spaces.
"""

from __future__ import annotations


def vec(*pairs):
    return {i: c for i, c in pairs if c != 0}


def vadd(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        if s is None:
            out[k] = v
        else:
            s = s + v
            if s == 0:
                del out[k]
            else:
                out[k] = s
    return out


def vsub(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -v
        else:
            s = s - v
            if s == 0:
                del out[k]
            else:
                out[k] = s
    return out


def vscale(c, a):
    if c == 0:
        return {}
    return {k: c * v for k, v in a.items()}


def vaddmul(a, c, b):
    """a + c*b in place on a copy."""
    if c == 0:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        cv = c * v
        if s is None:
            out[k] = cv
        else:
            s = s + cv
            if s == 0:
                del out[k]
            else:
                out[k] = s
    return out


def veq(a, b):
    return a == b or not vsub(a, b)


class Eliminator:
    """Incremental Gaussian elimination keeping rows in RREF.

    Rows are normalized to pivot coefficient 1 on their lowest nonzero
    column and back-substituted into each other, so at any time
    ``pivots[c]`` has support {c} + free columns only.  Processing order
    does not affect the final pivot-column set (it is the canonical RREF
    pivot set of the row space).
    """

    def __init__(self):
        self.pivots = {}
        self._col_index = {}  # free col -> set of pivot cols whose row touches it

    def reduce(self, row):
        row = {k: v for k, v in row.items() if v != 0}
        while True:
            hit = [c for c in row if c in self.pivots]
            if not hit:
                return row
            for c in hit:
                coef = row.get(c)
                if coef is None or coef == 0:
                    continue
                prow = self.pivots[c]
                for k, v in prow.items():
                    s = row.get(k)
                    cv = coef * v
                    if s is None:
                        row[k] = -cv
                    else:
                        s = s - cv
                        if s == 0:
                            del row[k]
                        else:
                            row[k] = s
            # pivot rows only contain their own pivot among pivot cols,
            # so a single pass clears every hit
            return {k: v for k, v in row.items() if v != 0}

    def add_row(self, row):
        """Insert a row; returns its pivot column or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        p = min(row)
        lead = row[p]
        inv = lead.inverse() if hasattr(lead, "inverse") else 1 / lead
        row = {k: v * inv for k, v in row.items()}
        # back-substitute the new pivot into existing rows that touch p
        touching = self._col_index.get(p)
        if touching:
            for q in list(touching):
                qrow = self.pivots[q]
                coef = qrow.get(p)
                if coef is None:
                    continue
                for k, v in row.items():
                    s = qrow.get(k)
                    cv = coef * v
                    if s is None:
                        qrow[k] = -cv
                    else:
                        s = s - cv
                        if s == 0:
                            del qrow[k]
                        else:
                            qrow[k] = s
                for k in row:
                    if k != p and k != q:
                        if k in qrow:
                            self._col_index.setdefault(k, set()).add(q)
                        else:
                            idx = self._col_index.get(k)
                            if idx:
                                idx.discard(q)
            del self._col_index[p]
        self.pivots[p] = row
        for k in row:
            if k != p:
                self._col_index.setdefault(k, set()).add(p)
        return p

    @property
    def rank(self):
        return len(self.pivots)

    def pivot_cols(self):
        return sorted(self.pivots)


def rref(rows):
    """RREF rows (as sparse dicts, sorted by pivot col) and pivot columns."""
    e = Eliminator()
    for r in rows:
        e.add_row(r)
    cols = e.pivot_cols()
    return [e.pivots[c] for c in cols], cols


def rank(rows):
    e = Eliminator()
    for r in rows:
        e.add_row(r)
    return e.rank


def kernel(columns, ncols, nrows=None):
    """Null space basis of the linear map with the given columns.

    ``columns[j]`` is the sparse image of domain basis vector j; the result
    is the deterministic RREF-based basis: one vector per free column, with
    coefficient 1 at its own index and zeros at the other free columns.
    """
    # equations: one row per output coordinate
    rows = {}
    for j, col in enumerate(columns):
        for i, c in col.items():
            rows.setdefault(i, {})[j] = c
    e = Eliminator()
    for i in sorted(rows):
        e.add_row(rows[i])
    piv = e.pivot_cols()
    free = [j for j in range(ncols) if j not in e.pivots]
    basis = []
    for f in free:
        v = {f: _one_like(columns, f)}
        for p in piv:
            c = e.pivots[p].get(f)
            if c is not None:
                v[p] = -c
        basis.append(v)
    return basis


def _one_like(columns, f):
    for col in columns:
        for c in col.values():
            return c * 0 + 1
    return 1


def apply_columns(columns, v):
    """Image of sparse vector v under the map given by columns."""
    out = {}
    for j, c in v.items():
        if c == 0:
            continue
        col = columns[j]
        if not col:
            continue
        for i, a in col.items():
            s = out.get(i)
            ca = c * a
            if s is None:
                out[i] = ca
            else:
                s = s + ca
                if s == 0:
                    del out[i]
                else:
                    out[i] = s
    return out


def compose_columns(outer, inner):
    """Columns of outer∘inner."""
    return [apply_columns(outer, col) for col in inner]


def identity_columns(n, one=1):
    return [{i: one} for i in range(n)]


def columns_eq(a, b):
    if len(a) != len(b):
        return False
    return all(veq(x, y) for x, y in zip(a, b))


def solve_columns(columns, rhs_list, ncols):
    """Solve M x = rhs for each rhs; entries are None when inconsistent.

    M is given by columns (length ncols).  A single elimination of the
    augmented matrix is shared by all right-hand sides; free variables are
    set to zero, and every candidate is verified by applying M, so a
    returned solution is exact by construction.
    """
    rows = {}
    for j, col in enumerate(columns):
        for i, c in col.items():
            rows.setdefault(i, {})[j] = c
    for t, rhs in enumerate(rhs_list):
        for i, c in rhs.items():
            rows.setdefault(i, {})[ncols + t] = c
    e = Eliminator()
    for i in sorted(rows):
        e.add_row(rows[i])
    sols = []
    for t, rhs in enumerate(rhs_list):
        col = ncols + t
        sol = {}
        ok = True
        for p, row in e.pivots.items():
            if p >= ncols:
                # a pivot row living entirely in the rhs block encodes a
                # left-null combination; touching this rhs means no solution
                if p == col or col in row:
                    ok = False
                    break
                continue
            c = row.get(col)
            if c is not None and c != 0:
                sol[p] = c
        if ok and veq(apply_columns(columns, sol), rhs):
            sols.append(sol)
        else:
            sols.append(None)
    return sols


def invert_columns(columns, n):
    """Exact inverse of a square map, or None if singular."""
    sols = solve_columns(columns, identity_columns(n, _one_like(columns, 0)), n)
    if any(s is None for s in sols):
        return None
    return sols


class QuotientSpace:
    """Ambient space modulo the span of relation vectors.

    Quotient coordinates are the free columns of the RREF of the relation
    matrix; the section places a 1 in the free column and zero in every
    pivot column (the RREF pivot-column coordinate section), so
    proj∘sect = id and proj kills every relation by construction.
    """

    def __init__(self, ambient_dim, relations):
        self.ambient_dim = ambient_dim
        self.relations = [dict(r) for r in relations]
        e = Eliminator()
        for r in self.relations:
            if any(k >= ambient_dim or k < 0 for k in r):
                raise ValueError("relation vector outside ambient space")
            e.add_row(r)
        self._elim = e
        self.pivot_cols = e.pivot_cols()
        pivset = e.pivots
        self.free_cols = [j for j in range(ambient_dim) if j not in pivset]
        self._free_index = {f: i for i, f in enumerate(self.free_cols)}
        self.dim = len(self.free_cols)
        assert self.dim == ambient_dim - e.rank
        for r in self.relations:
            assert not self.project(r), "projection must kill relations"

    def project(self, v):
        """Quotient coordinates of an ambient sparse vector."""
        piv = self._elim.pivots
        out = {}
        extra = None
        for k, c in v.items():
            row = piv.get(k)
            if row is None:
                i = self._free_index[k]
                s = out.get(i)
                out[i] = c if s is None else s + c
            else:
                if extra is None:
                    extra = {}
                for f, a in row.items():
                    if f == k:
                        continue
                    s = extra.get(f)
                    ca = c * a
                    extra[f] = -ca if s is None else s - ca
        if extra:
            for f, c in extra.items():
                if c == 0:
                    continue
                i = self._free_index[f]
                s = out.get(i)
                out[i] = c if s is None else s + c
        return {i: c for i, c in out.items() if c != 0}

    def section(self, q):
        """Canonical ambient representative of quotient coordinates."""
        return {self.free_cols[i]: c for i, c in q.items() if c != 0}

    def reduce(self, v):
        """Canonical ambient representative of an ambient vector's class."""
        return self.section(self.project(v))


def build_quotient(ambient_dim, relations):
    return QuotientSpace(ambient_dim, relations)
