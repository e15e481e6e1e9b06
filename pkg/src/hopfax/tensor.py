"""Sparse structure-constant tensors.

A CoeffTensor stores a multilinear map as a sparse table from input
multi-indices to sparse output vectors.  All structure constants in the
engine (products, coproducts, actions, coactions, cocycles) are held in
this form; no explicit zeros are stored.
"""

from __future__ import annotations

from .linalg import vadd, vscale


class CoeffTensor:
    __slots__ = ("arity", "dims", "out_dim", "entries")

    def __init__(self, dims, out_dim, entries=None):
        dims = tuple(dims)
        self.arity = len(dims)
        self.dims = dims
        self.out_dim = out_dim
        self.entries = {}
        if entries:
            for idx, out in entries.items():
                self.set(idx, out)

    def set(self, idx, out):
        idx = tuple(idx)
        if len(idx) != self.arity:
            raise ValueError(f"index {idx} has wrong arity (want {self.arity})")
        for k, d in zip(idx, self.dims):
            if not 0 <= k < d:
                raise ValueError(f"index {idx} out of bounds for dims {self.dims}")
        out = {j: c for j, c in out.items() if c != 0}
        for j in out:
            if not 0 <= j < self.out_dim:
                raise ValueError(f"output index {j} out of bounds ({self.out_dim})")
        if out:
            self.entries[idx] = out
        else:
            self.entries.pop(idx, None)

    def add(self, idx, j, c):
        if c == 0:
            return
        cur = self.entries.setdefault(tuple(idx), {})
        s = cur.get(j)
        s = c if s is None else s + c
        if s == 0:
            del cur[j]
            if not cur:
                del self.entries[tuple(idx)]
        else:
            cur[j] = s

    def basis_image(self, *idx):
        """Sparse output vector on a tuple of basis indices."""
        return self.entries.get(tuple(idx), {})

    def apply(self, *vecs):
        """Multilinear extension to sparse input vectors."""
        if len(vecs) != self.arity:
            raise ValueError("wrong number of arguments")
        out = {}
        for idx, img in self.entries.items():
            c = None
            for k, v in zip(idx, vecs):
                a = v.get(k)
                if a is None or a == 0:
                    c = None
                    break
                c = a if c is None else c * a
            if c is None:
                continue
            for j, b in img.items():
                s = out.get(j)
                cb = c * b
                if s is None:
                    out[j] = cb
                else:
                    s = s + cb
                    if s == 0:
                        del out[j]
                    else:
                        out[j] = s
        return out

    def items(self):
        return self.entries.items()

    def copy(self):
        t = CoeffTensor(self.dims, self.out_dim)
        t.entries = {idx: dict(out) for idx, out in self.entries.items()}
        return t

    def __eq__(self, other):
        return (
            isinstance(other, CoeffTensor)
            and self.dims == other.dims
            and self.out_dim == other.out_dim
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"CoeffTensor(dims={self.dims}, out_dim={self.out_dim}, nnz={len(self.entries)})"


def tensor_vec(a, b, dim_b):
    """Sparse vector a⊗b with flattened index i*dim_b + j."""
    out = {}
    for i, c in a.items():
        base = i * dim_b
        for j, d in b.items():
            cd = c * d
            if cd != 0:
                out[base + j] = cd
    return out


def tensor_vec3(a, b, c, dim_b, dim_c):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            xy = x * y
            if xy == 0:
                continue
            base = (i * dim_b + j) * dim_c
            for k, z in c.items():
                v = xy * z
                if v != 0:
                    out[base + k] = v
    return out


def split_pair(idx, dim_b):
    return divmod(idx, dim_b)


def vec_pairs(v, dim_b):
    """Iterate ((i, j), c) over a flattened 2-tensor vector."""
    for idx, c in v.items():
        yield divmod(idx, dim_b), c


def kron_vecs(vs, dims):
    out = None
    for v, d in zip(vs, dims):
        if out is None:
            out = dict(v)
            continue
        new = {}
        for i, c in out.items():
            base = i * d
            for j, e in v.items():
                ce = c * e
                if ce != 0:
                    new[base + j] = ce
        out = new
    return out if out is not None else {}
