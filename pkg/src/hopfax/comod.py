"""Right comodule algebras, coinvariants, measurings and one-sided cotwists."""

from __future__ import annotations

from .errors import InvalidCotwist, NotSubalgebra
from .hopf import FinAlgebra, cotwist_hopf
from .linalg import apply_columns, kernel, solve_columns, veq
from .report import Report
from .tensor import CoeffTensor, tensor_vec


class ComoduleAlgebra:
    """Algebra P with a right coaction of H that is an algebra map."""

    def __init__(self, P, H, coaction, name=None):
        self.P = P
        self.H = H
        self.field = P.field
        dP, dH = P.dim, H.dim
        if isinstance(coaction, CoeffTensor):
            self.coaction = coaction
        else:
            t = CoeffTensor((dP,), dP * dH)
            for i, pairs in coaction.items():
                for (p, h), c in pairs.items():
                    t.add((i,), p * dH + h, c)
            self.coaction = t
        self.name = name or f"{P.name} over {H.name}"
        self._legs_cache = {}

    def coact_pairs(self, i):
        """Delta_R(e_i) as {(p_idx, h_idx): coeff}."""
        dH = self.H.dim
        return {divmod(k, dH): c for k, c in self.coaction.basis_image(i).items()}

    def coact_vec(self, v):
        out = {}
        for i, c in v.items():
            for k, e in self.coaction.basis_image(i).items():
                s = out.get(k)
                ce = c * e
                out[k] = ce if s is None else s + ce
        return {k: c for k, c in out.items() if c != 0}

    def validate(self):
        rep = Report(f"comodule algebra {self.name}")
        rep.merge(self.P.validate())
        P, H = self.P, self.H
        dP, dH = P.dim, H.dim
        one = self.field.one
        ok, witness = True, None
        for i in range(dP):
            lhs = {}
            rhs = {}
            for (p, h), c in self.coact_pairs(i).items():
                for (p2, h1), e in self.coact_pairs(p).items():
                    key = (p2, h1, h)
                    lhs[key] = lhs.get(key, self.field.zero) + c * e
                for (h1, h2), e in H.comul_pairs(h).items():
                    key = (p, h1, h2)
                    rhs[key] = rhs.get(key, self.field.zero) + c * e
            diff = {
                k: lhs.get(k, self.field.zero) - rhs.get(k, self.field.zero)
                for k in set(lhs) | set(rhs)
            }
            if any(c != 0 for c in diff.values()):
                ok, witness = False, (i,)
                break
        rep.add("comod.coassoc", "(Delta_R⊗id)Delta_R = (id⊗Delta)Delta_R", ok, witness)
        ok, witness = True, None
        for i in range(dP):
            acc = {}
            for (p, h), c in self.coact_pairs(i).items():
                e = H.counit.get(h)
                if e is not None:
                    acc[p] = acc.get(p, self.field.zero) + c * e
            if not veq({k: v for k, v in acc.items() if v != 0}, {i: one}):
                ok, witness = False, (i,)
                break
        rep.add("comod.counit", "(id⊗eps)Delta_R = id", ok, witness)
        ok = veq(self.coact_vec(P.unit), tensor_vec(P.unit, H.unit, dH))
        rep.add("comod.unit", "Delta_R(1) = 1⊗1", ok)
        ok, witness = True, None
        for i in range(dP):
            for j in range(dP):
                lhs = self.coact_vec(P.mul_basis(i, j))
                rhs = {}
                for (p, h), c in self.coact_pairs(i).items():
                    for (q, g), e in self.coact_pairs(j).items():
                        ce = c * e
                        for pp, f in P.mul_basis(p, q).items():
                            for hh, x in H.mul_basis(h, g).items():
                                key = pp * dH + hh
                                s = rhs.get(key)
                                v = ce * f * x
                                rhs[key] = v if s is None else s + v
                if not veq(lhs, {k: v for k, v in rhs.items() if v != 0}):
                    ok, witness = False, (i, j)
                    break
            if not ok:
                break
        rep.add("comod.alg_map", "Delta_R(pq) = Delta_R(p)Delta_R(q)", ok, witness)
        return rep


def coinvariant_vectors(pa):
    """Deterministic basis of {b : Delta_R(b) = b⊗1} inside P."""
    P, H = pa.P, pa.H
    dP, dH = P.dim, H.dim
    cols = []
    for i in range(dP):
        col = dict(pa.coaction.basis_image(i))
        for h, c in H.unit.items():
            key = i * dH + h
            s = col.get(key)
            s = -c if s is None else s - c
            if s == 0:
                col.pop(key, None)
            else:
                col[key] = s
        cols.append(col)
    return kernel(cols, dP)


class Coinvariants:
    """Coinvariant subalgebra: base algebra plus inclusion/retraction."""

    def __init__(self, pa, vectors):
        P = pa.P
        self.ambient = pa
        self.vectors = vectors  # columns of the inclusion matrix
        self.dim = len(vectors)
        field = P.field
        mul = CoeffTensor((self.dim, self.dim), self.dim)
        for a in range(self.dim):
            for b in range(self.dim):
                prod = P.mul_vec(vectors[a], vectors[b])
                coords = solve_columns(vectors, [prod], self.dim)[0]
                if coords is None:
                    raise NotSubalgebra(
                        f"coinvariants of {pa.name} not closed under product at ({a},{b})"
                    )
                for k, c in coords.items():
                    mul.add((a, b), k, c)
        unit_coords = solve_columns(vectors, [P.unit], self.dim)[0]
        if unit_coords is None:
            raise NotSubalgebra(f"unit of {pa.name} is not coinvariant")
        self.algebra = FinAlgebra(
            field, [f"b{k}" for k in range(self.dim)], mul, unit_coords,
            name=f"{P.name}^co",
        )

    def include(self, coords):
        """Coinvariant coordinates -> ambient P vector."""
        return apply_columns(self.vectors, coords)

    def retract(self, v):
        """Ambient vector -> coordinates, or None if outside the subspace."""
        return solve_columns(self.vectors, [v], self.dim)[0]


def coinvariants(pa):
    return Coinvariants(pa, coinvariant_vectors(pa))


class Measuring:
    """Map act: H⊗B -> B multiplicative in B; not necessarily an action."""

    def __init__(self, H, B, act, name="act"):
        self.H = H
        self.B = B
        self.field = B.field
        if isinstance(act, CoeffTensor):
            self.act = act
        else:
            t = CoeffTensor((H.dim, B.dim), B.dim)
            for (h, b), out in act.items():
                t.set((h, b), out)
            self.act = t
        self.name = name

    def apply(self, hvec, bvec):
        return self.act.apply(hvec, bvec)

    def apply_basis(self, h, b):
        return self.act.basis_image(h, b)

    def apply_h(self, hvec, bvec):
        out = {}
        for h, c in hvec.items():
            for b, d in bvec.items():
                cd = c * d
                if cd == 0:
                    continue
                for k, e in self.act.basis_image(h, b).items():
                    s = out.get(k)
                    ce = cd * e
                    out[k] = ce if s is None else s + ce
        return {k: v for k, v in out.items() if v != 0}

    def validate(self):
        H, B = self.H, self.B
        rep = Report(f"measuring {self.name}: {H.name} on {B.name}")
        one = self.field.one
        ok, witness = True, None
        for h in range(H.dim):
            for a in range(B.dim):
                for b in range(B.dim):
                    lhs = self.apply_h({h: one}, B.mul_basis(a, b))
                    rhs = {}
                    for (h1, h2), c in H.comul_pairs(h).items():
                        left = self.apply_basis(h1, a)
                        right = self.apply_basis(h2, b)
                        for k, v in B.mul_vec(left, right).items():
                            s = rhs.get(k)
                            cv = c * v
                            rhs[k] = cv if s is None else s + cv
                    if not veq(lhs, {k: v for k, v in rhs.items() if v != 0}):
                        ok, witness = False, (h, a, b)
                        break
                if not ok:
                    break
            if not ok:
                break
        rep.add("measure.mult", "h|>(ab) = (h1|>a)(h2|>b)", ok, witness)
        ok, witness = True, None
        for h in range(H.dim):
            want = {
                k: v
                for k, v in ((k, H.eps({h: one}) * c) for k, c in B.unit.items())
                if v != 0
            }
            if not veq(self.apply_h({h: one}, B.unit), want):
                ok, witness = False, (h,)
                break
        rep.add("measure.unit", "h|>1 = eps(h)1", ok, witness)
        return rep


def is_module_algebra(m):
    """True iff the measuring is an actual action: h|>(g|>b) = (hg)|>b, 1|>b = b."""
    H, B = m.H, m.B
    one = m.field.one
    if not m.validate().passed:
        return False
    for b in range(B.dim):
        if not veq(m.apply_h(H.unit, {b: one}), {b: one}):
            return False
    for h in range(H.dim):
        for g in range(H.dim):
            hg = H.mul_basis(h, g)
            for b in range(B.dim):
                lhs = m.apply_h({h: one}, m.apply_basis(g, b))
                rhs = m.apply_h(hg, {b: one})
                if not veq(lhs, rhs):
                    return False
    return True


def cotwist_comodule_algebra(pa, tw):
    """One-sided cotwist P_chi: p·q = p0 q0 chi^{-1}(p1,q1), same coaction.

    The result is a comodule algebra over the cotwisted Hopf algebra H^chi.
    """
    rep = tw.validate()
    if not rep.passed:
        raise InvalidCotwist("invalid cotwist", rep)
    P, H = pa.P, pa.H
    dP, dH = P.dim, H.dim
    mul = CoeffTensor((dP, dP), dP)
    for i in range(dP):
        pi = pa.coact_pairs(i)
        for j in range(dP):
            pj = pa.coact_pairs(j)
            for (p, h), c in pi.items():
                for (q, g), e in pj.items():
                    x = tw.chi_inv.get((h, g))
                    if x is None:
                        continue
                    cex = c * e * x
                    for k, f in P.mul_basis(p, q).items():
                        mul.add((i, j), k, cex * f)
    P_tw = FinAlgebra(P.field, P.basis, mul, P.unit, name=f"{P.name}_chi")
    H_tw = cotwist_hopf(H, tw)
    out = ComoduleAlgebra(P_tw, H_tw, pa.coaction, name=f"{pa.name} cotwisted")
    return out
