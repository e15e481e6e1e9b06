"""Cocycle pairs (action-like measuring + 2-cocycle sigma) and their moves.

A CocyclePair holds a measuring of H on B together with a convolution-
invertible sigma: H⊗H -> B.  Validation checks the four defining
conditions exhaustively; the derived identity suite, associative-type
tests, gauge transforms and Drinfeld cotwists of pairs live here too.
"""

from __future__ import annotations

from .comod import Measuring, is_module_algebra
from .errors import (
    InternalDisagreement,
    InvalidCotwist,
    InvalidGauge,
    InvalidPair,
    NotInvertible,
    PreconditionViolated,
)
from .hopf import (
    conv_mul,
    conv_unit,
    convolution_inverse,
    cotwist_hopf,
    tensor_coalgebra,
)
from .linalg import apply_columns, columns_eq, veq, vscale
from .report import Report
from .tensor import CoeffTensor


def sig_eval(sig, u, v):
    """Evaluate a B-valued table {(i,j): Bvec} on a pair of H-vectors."""
    out = {}
    for i, c in u.items():
        if c == 0:
            continue
        for j, d in v.items():
            cd = c * d
            if cd == 0:
                continue
            val = sig.get((i, j))
            if not val:
                continue
            for k, e in val.items():
                s = out.get(k)
                ce = cd * e
                out[k] = ce if s is None else s + ce
    return {k: v2 for k, v2 in out.items() if v2 != 0}


def sig_columns(sig, H, B):
    """Table as columns of a map H⊗H -> B (for convolution machinery)."""
    d = H.dim
    cols = [{} for _ in range(d * d)]
    for (i, j), val in sig.items():
        cols[i * d + j] = dict(val)
    return cols


def sig_from_columns(cols, H):
    d = H.dim
    out = {}
    for idx, col in enumerate(cols):
        if col:
            out[divmod(idx, d)] = dict(col)
    return out


def sigma_pair_convolution_check(H, B, sig, sig_inv):
    cc = tensor_coalgebra(H.coalgebra, H.coalgebra)
    unit = conv_unit(cc, B)
    f = sig_columns(sig, H, B)
    g = sig_columns(sig_inv, H, B)
    return columns_eq(conv_mul(cc, B, f, g), unit) and columns_eq(
        conv_mul(cc, B, g, f), unit
    )


class CocyclePair:
    def __init__(self, H, B, act, sigma, sigma_inv=None, name="pair"):
        self.H = H.with_antipode_inverse()
        self.B = B
        self.act = act if isinstance(act, Measuring) else Measuring(H, B, act)
        self.field = B.field
        self.sigma = {k: dict(v) for k, v in sigma.items() if v}
        if sigma_inv is None:
            sigma_inv = self._solve_inverse()
        self.sigma_inv = {k: dict(v) for k, v in sigma_inv.items() if v}
        self.name = name
        self.validated = False

    def _solve_inverse(self):
        cc = tensor_coalgebra(self.H.coalgebra, self.H.coalgebra)
        cols = convolution_inverse(cc, self.B, sig_columns(self.sigma, self.H, self.B))
        return sig_from_columns(cols, self.H)

    def sig(self, u, v):
        return sig_eval(self.sigma, u, v)

    def sig_inv(self, u, v):
        return sig_eval(self.sigma_inv, u, v)

    def acted(self, hvec, bvec):
        return self.act.apply_h(hvec, bvec)

    def S(self, v):
        return self.H.S(v)

    # -- validation -----------------------------------------------------------

    def validate(self):
        rep = validate_cocycle(self)
        self.validated = rep.passed
        return rep

    def require_valid(self):
        if not self.validated:
            self.validate().require(InvalidPair, f"{self.name}: invalid cocycle pair")
        return self


def validate_cocycle(pair):
    H, B = pair.H, pair.B
    one = pair.field.one
    rep = Report(f"cocycle pair {pair.name}")
    rep.merge(pair.act.validate())

    ok, witness = True, None
    for b in range(B.dim):
        if not veq(pair.acted(H.unit, {b: one}), {b: one}):
            ok, witness = False, (b,)
            break
    rep.add("cocycle.cond1", "1|>b = b", ok, witness)

    ok, witness = True, None
    for h in range(H.dim):
        lh = H.legs(h, 3)
        for g in range(H.dim):
            lg = H.legs(g, 3)
            for b in range(B.dim):
                lhs = pair.acted({h: one}, pair.act.apply_basis(g, b))
                rhs = {}
                for (h1, h2, h3), c in lh.items():
                    for (g1, g2, g3), e in lg.items():
                        ce = c * e
                        term = B.mul_many(
                            pair.sig({h1: one}, {g1: one}),
                            pair.acted(H.mul_basis(h2, g2), {b: one}),
                            pair.sig_inv({h3: one}, {g3: one}),
                        )
                        for k, v in term.items():
                            s = rhs.get(k)
                            cv = ce * v
                            rhs[k] = cv if s is None else s + cv
                if not veq(lhs, {k: v for k, v in rhs.items() if v != 0}):
                    ok, witness = False, (h, g, b)
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(
        "cocycle.cond2",
        "h|>(g|>b) = sigma(h1,g1) ((h2 g2)|>b) sigma^-1(h3,g3)",
        ok,
        witness,
    )

    ok, witness = True, None
    for h in range(H.dim):
        want = vscale(H.eps({h: one}), B.unit)
        if not veq(pair.sig({h: one}, H.unit), want) or not veq(
            pair.sig(H.unit, {h: one}), want
        ):
            ok, witness = False, (h,)
            break
    rep.add("cocycle.cond3", "sigma(h,1) = sigma(1,h) = eps(h)1", ok, witness)

    ok, witness = True, None
    for h in range(H.dim):
        lh = H.legs(h, 2)
        for g in range(H.dim):
            lg = H.legs(g, 2)
            for f in range(H.dim):
                lf = H.legs(f, 2)
                lhs = {}
                for (h1, h2), c in lh.items():
                    for (g1, g2), e in lg.items():
                        for (f1, f2), d in lf.items():
                            ced = c * e * d
                            term = B.mul_vec(
                                pair.acted({h1: one}, pair.sig({g1: one}, {f1: one})),
                                pair.sig({h2: one}, H.mul_basis(g2, f2)),
                            )
                            for k, v in term.items():
                                s = lhs.get(k)
                                cv = ced * v
                                lhs[k] = cv if s is None else s + cv
                rhs = {}
                for (h1, h2), c in lh.items():
                    for (g1, g2), e in lg.items():
                        ce = c * e
                        term = B.mul_vec(
                            pair.sig({h1: one}, {g1: one}),
                            pair.sig(H.mul_basis(h2, g2), {f: one}),
                        )
                        for k, v in term.items():
                            s = rhs.get(k)
                            cv = ce * v
                            rhs[k] = cv if s is None else s + cv
                if not veq(
                    {k: v for k, v in lhs.items() if v != 0},
                    {k: v for k, v in rhs.items() if v != 0},
                ):
                    ok, witness = False, (h, g, f)
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(
        "cocycle.cond4",
        "(h1|>sigma(g1,f1)) sigma(h2, g2 f2) = sigma(h1,g1) sigma(h2 g2, f)",
        ok,
        witness,
    )

    ok = sigma_pair_convolution_check(H, B, pair.sigma, pair.sigma_inv)
    rep.add("cocycle.conv_inverse", "sigma * sigma^-1 = sigma^-1 * sigma = unit", ok)

    try:
        recomputed = pair._solve_inverse()
        ok = all(
            veq(recomputed.get(k, {}), pair.sigma_inv.get(k, {}))
            for k in set(recomputed) | set(pair.sigma_inv)
        )
    except NotInvertible:
        ok = False
    rep.add("cocycle.inv_recomputed", "stored sigma^-1 matches solved inverse", ok)
    return rep


def check_lemma22(pair):
    """The six derived sigma identities; consequences of a valid pair."""
    pair.require_valid()
    H, B = pair.H, pair.B
    one = pair.field.one
    rep = Report(f"sigma identity suite for {pair.name}")
    d = H.dim

    def ident1():
        for h in range(d):
            for g in range(d):
                for f in range(d):
                    lhs = {}
                    for (h1, h2), c in H.legs(h, 2).items():
                        for (g1, g2), e in H.legs(g, 2).items():
                            for (f1, f2), x in H.legs(f, 2).items():
                                term = B.mul_vec(
                                    pair.sig_inv({h1: one}, H.mul_basis(g1, f1)),
                                    pair.acted({h2: one}, pair.sig_inv({g2: one}, {f2: one})),
                                )
                                _acc(lhs, term, c * e * x)
                    rhs = {}
                    for (h1, h2), c in H.legs(h, 2).items():
                        for (g1, g2), e in H.legs(g, 2).items():
                            term = B.mul_vec(
                                pair.sig_inv(H.mul_basis(h1, g1), {f: one}),
                                pair.sig_inv({h2: one}, {g2: one}),
                            )
                            _acc(rhs, term, c * e)
                    if not _eq(lhs, rhs):
                        return False, (h, g, f)
        return True, None

    def ident2():
        for h in range(d):
            for g in range(d):
                for f in range(d):
                    lhs = pair.acted({h: one}, pair.sig({g: one}, {f: one}))
                    rhs = {}
                    for (h1, h2, h3), c in H.legs(h, 3).items():
                        for (g1, g2, g3), e in H.legs(g, 3).items():
                            for (f1, f2), x in H.legs(f, 2).items():
                                term = B.mul_many(
                                    pair.sig({h1: one}, {g1: one}),
                                    pair.sig(H.mul_basis(h2, g2), {f1: one}),
                                    pair.sig_inv({h3: one}, H.mul_basis(g3, f2)),
                                )
                                _acc(rhs, term, c * e * x)
                    if not _eq(lhs, rhs):
                        return False, (h, g, f)
        return True, None

    def ident3():
        for h in range(d):
            for g in range(d):
                for f in range(d):
                    lhs = pair.acted({h: one}, pair.sig_inv({g: one}, {f: one}))
                    rhs = {}
                    for (h1, h2, h3), c in H.legs(h, 3).items():
                        for (g1, g2, g3), e in H.legs(g, 3).items():
                            for (f1, f2), x in H.legs(f, 2).items():
                                term = B.mul_many(
                                    pair.sig({h1: one}, H.mul_basis(g1, f1)),
                                    pair.sig_inv(H.mul_basis(h2, g2), {f2: one}),
                                    pair.sig_inv({h3: one}, {g3: one}),
                                )
                                _acc(rhs, term, c * e * x)
                    if not _eq(lhs, rhs):
                        return False, (h, g, f)
        return True, None

    def ident4():
        for h in range(d):
            acc = {}
            for (h1, h2, h3, h4, h5), c in H.legs(h, 5).items():
                term = B.mul_vec(
                    pair.acted({h1: one}, pair.sig_inv(H.S({h4: one}), {h5: one})),
                    pair.sig({h2: one}, H.S({h3: one})),
                )
                _acc(acc, term, c)
            if not _eq(acc, vscale(H.eps({h: one}), B.unit)):
                return False, (h,)
        return True, None

    def ident5():
        for h in range(d):
            for g in range(d):
                lhs = {}
                for (h1, h2), c in H.legs(h, 2).items():
                    for (g1, g2), e in H.legs(g, 2).items():
                        term = pair.sig_inv(
                            H.mul_vec(H.S({h1: one}), H.S({g1: one})),
                            H.mul_basis(h2, g2),
                        )
                        _acc(lhs, term, c * e)
                rhs = {}
                for (h1, h2, h3, h4, h5), c in H.legs(h, 5).items():
                    for (g1, g2, g3), e in H.legs(g, 3).items():
                        term = B.mul_many(
                            pair.sig_inv(H.S({h3: one}), {h4: one}),
                            pair.acted(
                                H.S({h2: one}),
                                pair.sig_inv(H.S({g2: one}), H.mul_basis(g3, h5)),
                            ),
                            pair.sig(H.S({h1: one}), H.S({g1: one})),
                        )
                        _acc(rhs, term, c * e)
                if not _eq(lhs, rhs):
                    return False, (h, g)
        return True, None

    def ident6():
        for h in range(d):
            acc = {}
            for (h1, h2, h3, h4, h5), c in H.legs(h, 5).items():
                term = B.mul_vec(
                    pair.sig_inv(H.S({h2: one}), {h3: one}),
                    pair.acted(H.S({h1: one}), pair.sig({h4: one}, H.S({h5: one}))),
                )
                _acc(acc, term, c)
            if not _eq(acc, vscale(H.eps({h: one}), B.unit)):
                return False, (h,)
        return True, None

    laws = [
        ("lemma_sigma.1", "sigma^-1(h1,g1 f1)(h2|>sigma^-1(g2,f2)) = sigma^-1(h1 g1,f) sigma^-1(h2,g2)", ident1),
        ("lemma_sigma.2", "h|>sigma(g,f) = sigma(h1,g1) sigma(h2 g2,f1) sigma^-1(h3,g3 f2)", ident2),
        ("lemma_sigma.3", "h|>sigma^-1(g,f) = sigma(h1,g1 f1) sigma^-1(h2 g2,f2) sigma^-1(h3,g3)", ident3),
        ("lemma_sigma.4", "(h1|>sigma^-1(S(h4),h5)) sigma(h2,S(h3)) = eps(h)1", ident4),
        ("lemma_sigma.5", "sigma^-1(S(h1)S(g1),h2 g2) = sigma^-1(S(h3),h4)(S(h2)|>sigma^-1(S(g2),g3 h5)) sigma(S(h1),S(g1))", ident5),
        ("lemma_sigma.6", "sigma^-1(S(h2),h3) S(h1)|>sigma(h4,S(h5)) = eps(h)1", ident6),
    ]
    for cid, law, fn in laws:
        ok, witness = fn()
        rep.add(cid, law, ok, witness)
    return rep


def _acc(acc, term, coef):
    if coef == 0:
        return
    for k, v in term.items():
        s = acc.get(k)
        cv = coef * v
        acc[k] = cv if s is None else s + cv


def _eq(a, b):
    return veq({k: v for k, v in a.items() if v != 0}, {k: v for k, v in b.items() if v != 0})


def is_associative_type(pair):
    """True iff the measuring is an action; cross-checked two ways."""
    pair.require_valid()
    H, B = pair.H, pair.B
    one = pair.field.one
    via_action = is_module_algebra(pair.act)
    via_identity = True
    for h in range(H.dim):
        for g in range(H.dim):
            for b in range(B.dim):
                lhs = {}
                rhs = {}
                for (h1, h2), c in H.legs(h, 2).items():
                    for (g1, g2), e in H.legs(g, 2).items():
                        t1 = B.mul_vec(
                            pair.sig({h1: one}, {g1: one}),
                            pair.acted(H.mul_basis(h2, g2), {b: one}),
                        )
                        _acc(lhs, t1, c * e)
                        t2 = B.mul_vec(
                            pair.acted(H.mul_basis(h1, g1), {b: one}),
                            pair.sig({h2: one}, {g2: one}),
                        )
                        _acc(rhs, t2, c * e)
                if not _eq(lhs, rhs):
                    via_identity = False
                    break
            if not via_identity:
                break
        if not via_identity:
            break
    if via_action != via_identity:
        raise InternalDisagreement(
            f"{pair.name}: action test ({via_action}) and sigma-commutation test "
            f"({via_identity}) disagree"
        )
    return via_action


def check_lemma24(pair):
    """(S(h3)|>b) sigma^-1(S(h1),h2) = sigma^-1(S(h2),h3) (S(h1)|>b)."""
    if not is_associative_type(pair):
        raise PreconditionViolated(f"{pair.name} is not of associative type")
    H, B = pair.H, pair.B
    one = pair.field.one
    for h in range(H.dim):
        for b in range(B.dim):
            lhs = {}
            rhs = {}
            for (h1, h2, h3), c in H.legs(h, 3).items():
                t1 = B.mul_vec(
                    pair.acted(H.S({h3: one}), {b: one}),
                    pair.sig_inv(H.S({h1: one}), {h2: one}),
                )
                _acc(lhs, t1, c)
                t2 = B.mul_vec(
                    pair.sig_inv(H.S({h2: one}), {h3: one}),
                    pair.acted(H.S({h1: one}), {b: one}),
                )
                _acc(rhs, t2, c)
            if not _eq(lhs, rhs):
                return False
    return True


class GaugeMap:
    """Convolution-invertible unital map u: H -> B."""

    def __init__(self, H, B, u, u_inv=None, name="u"):
        self.H = H
        self.B = B
        self.u = [dict(c) for c in u]
        if u_inv is None:
            u_inv = convolution_inverse(H.coalgebra, B, self.u)
        self.u_inv = [dict(c) for c in u_inv]
        self.name = name

    def of(self, hvec):
        return apply_columns(self.u, hvec)

    def of_inv(self, hvec):
        return apply_columns(self.u_inv, hvec)

    def validate(self):
        rep = Report(f"gauge map {self.name}")
        unit = conv_unit(self.H.coalgebra, self.B)
        ok = columns_eq(conv_mul(self.H.coalgebra, self.B, self.u, self.u_inv), unit)
        ok = ok and columns_eq(conv_mul(self.H.coalgebra, self.B, self.u_inv, self.u), unit)
        rep.add("gauge.conv_inverse", "u * u^-1 = u^-1 * u = unit", ok)
        rep.add("gauge.unital", "u(1) = 1", veq(self.of(self.H.unit), self.B.unit))
        return rep

    def convolve(self, other):
        """Pointwise convolution u*v as a new gauge map."""
        cols = conv_mul(self.H.coalgebra, self.B, self.u, other.u)
        return GaugeMap(self.H, self.B, cols, name=f"{self.name}*{other.name}")


def gauge_transform(pair, u):
    """New pair (act^u, sigma^u); output is validated."""
    pair.require_valid()
    if not u.validate().passed:
        raise InvalidGauge(f"{u.name}: not a valid gauge map")
    H, B = pair.H, pair.B
    one = pair.field.one
    act = CoeffTensor((H.dim, B.dim), B.dim)
    for h in range(H.dim):
        for b in range(B.dim):
            acc = {}
            for (h1, h2, h3), c in H.legs(h, 3).items():
                term = B.mul_many(
                    u.of_inv({h1: one}),
                    pair.act.apply_basis(h2, b),
                    u.of({h3: one}),
                )
                _acc(acc, term, c)
            for k, v in acc.items():
                act.add((h, b), k, v)
    sigma = {}
    for h in range(H.dim):
        for g in range(H.dim):
            acc = {}
            for (h1, h2, h3, h4), c in H.legs(h, 4).items():
                for (g1, g2, g3), e in H.legs(g, 3).items():
                    term = B.mul_many(
                        u.of_inv({h1: one}),
                        pair.acted({h2: one}, u.of_inv({g1: one})),
                        pair.sig({h3: one}, {g2: one}),
                        u.of(H.mul_basis(h4, g3)),
                    )
                    _acc(acc, term, c * e)
            acc = {k: v for k, v in acc.items() if v != 0}
            if acc:
                sigma[(h, g)] = acc
    out = CocyclePair(H, B, Measuring(H, B, act, name=f"{pair.act.name}^{u.name}"),
                      sigma, name=f"{pair.name}^{u.name}")
    out.validate().require(InvalidPair, f"gauge transform of {pair.name} failed validation")
    return out


def gauge_preserves_assoc(pair, u):
    """Associative-type preservation law for a gauge map; cross-asserted."""
    if not is_associative_type(pair):
        raise PreconditionViolated(f"{pair.name} is not of associative type")
    H, B = pair.H, pair.B
    one = pair.field.one
    holds = True
    for h in range(H.dim):
        for g in range(H.dim):
            for b in range(B.dim):
                lhs = {}
                for (h1, h2, h3), c in H.legs(h, 3).items():
                    inner = {}
                    for (g1, g2, g3), e in H.legs(g, 3).items():
                        term = B.mul_many(
                            u.of_inv({g1: one}),
                            pair.act.apply_basis(g2, b),
                            u.of({g3: one}),
                        )
                        _acc(inner, term, e)
                    term = B.mul_many(
                        u.of_inv({h1: one}),
                        pair.acted({h2: one}, {k: v for k, v in inner.items() if v != 0}),
                        u.of({h3: one}),
                    )
                    _acc(lhs, term, c)
                rhs = {}
                for (h1, h2, h3), c in H.legs(h, 3).items():
                    for (g1, g2, g3), e in H.legs(g, 3).items():
                        term = B.mul_many(
                            u.of_inv(H.mul_basis(h1, g1)),
                            pair.acted(H.mul_basis(h2, g2), {b: one}),
                            u.of(H.mul_basis(h3, g3)),
                        )
                        _acc(rhs, term, c * e)
                if not _eq(lhs, rhs):
                    holds = False
                    break
            if not holds:
                break
        if not holds:
            break
    if holds:
        if not is_associative_type(gauge_transform(pair, u)):
            raise InternalDisagreement(
                "gauge condition holds but transformed pair is not of associative type"
            )
    return holds


def cotwist_cocycle(pair, tw):
    """Pair over H^chi with the same measuring and sigma_chi = sigma * chi^-1."""
    pair.require_valid()
    H, B = pair.H, pair.B
    one = pair.field.one
    rep = tw.validate()
    if not rep.passed:
        raise InvalidCotwist("invalid cotwist", rep)
    H_tw = cotwist_hopf(H, tw)
    sigma = {}
    for h in range(H.dim):
        for g in range(H.dim):
            acc = {}
            for (h1, h2), c in H.legs(h, 2).items():
                for (g1, g2), e in H.legs(g, 2).items():
                    x = tw.chi_inv.get((h2, g2))
                    if x is None:
                        continue
                    _acc(acc, pair.sig({h1: one}, {g1: one}), c * e * x)
            acc = {k: v for k, v in acc.items() if v != 0}
            if acc:
                sigma[(h, g)] = acc
    out = CocyclePair(
        H_tw, B, Measuring(H_tw, B, pair.act.act, name=pair.act.name),
        sigma, name=f"{pair.name}_chi",
    )
    out.validate().require(InvalidPair, f"cotwist of {pair.name} failed validation")
    return out


def cotwist_preserves_assoc(pair, tw):
    """chi(h1,g1)((h2 g2)|>b)chi^-1(h3,g3) = (hg)|>b on all basis tuples."""
    if not is_associative_type(pair):
        raise PreconditionViolated(f"{pair.name} is not of associative type")
    H, B = pair.H, pair.B
    one = pair.field.one
    for h in range(H.dim):
        for g in range(H.dim):
            for b in range(B.dim):
                lhs = {}
                for (h1, h2, h3), c in H.legs(h, 3).items():
                    for (g1, g2, g3), e in H.legs(g, 3).items():
                        x = tw.chi.get((h1, g1))
                        y = tw.chi_inv.get((h3, g3))
                        if x is None or y is None:
                            continue
                        _acc(lhs, pair.acted(H.mul_basis(h2, g2), {b: one}), c * e * x * y)
                rhs = pair.acted(H.mul_basis(h, g), {b: one})
                if not _eq(lhs, rhs):
                    return False
    return True


def inner_action_cocycle(B, H, u):
    """Inner measuring h|>b = u(h1) b u^-1(h2) plus a centrality report.

    The report checks u^-1(g1) u^-1(h1) u(h2 g2) ∈ Z(B) for all basis pairs,
    which is necessary and sufficient for the measuring to be an action.
    """
    if not u.validate().passed:
        raise InvalidGauge(f"{u.name}: not a valid gauge map")
    one = B.field.one
    act = CoeffTensor((H.dim, B.dim), B.dim)
    for h in range(H.dim):
        for b in range(B.dim):
            acc = {}
            for (h1, h2), c in H.legs(h, 2).items():
                term = B.mul_many(u.of({h1: one}), {b: one}, u.of_inv({h2: one}))
                _acc(acc, term, c)
            for k, v in acc.items():
                act.add((h, b), k, v)
    m = Measuring(H, B, act, name=f"inner({u.name})")
    rep = Report(f"inner action from {u.name}")
    ok, witness = True, None
    for h in range(H.dim):
        for g in range(H.dim):
            acc = {}
            for (h1, h2), c in H.legs(h, 2).items():
                for (g1, g2), e in H.legs(g, 2).items():
                    term = B.mul_many(
                        u.of_inv({g1: one}), u.of_inv({h1: one}), u.of(H.mul_basis(h2, g2))
                    )
                    _acc(acc, term, c * e)
            val = {k: v for k, v in acc.items() if v != 0}
            if not B.is_central(val):
                ok, witness = False, (h, g)
                break
        if not ok:
            break
    rep.add(
        "inner.centrality",
        "u^-1(g1) u^-1(h1) u(h2 g2) in Z(B)",
        ok,
        witness,
    )
    return m, rep


def trivial_sigma(H, B):
    """sigma = unit∘(eps⊗eps) as a table."""
    one = B.field.one
    out = {}
    for i in range(H.dim):
        ei = H.eps({i: one})
        if ei == 0:
            continue
        for j in range(H.dim):
            c = ei * H.eps({j: one})
            if c != 0:
                out[(i, j)] = vscale(c, B.unit)
    return out


def trivial_action(H, B):
    act = CoeffTensor((H.dim, B.dim), B.dim)
    for h in range(H.dim):
        e = H.eps({h: H.field.one})
        if e == 0:
            continue
        for b in range(B.dim):
            act.add((h, b), b, e)
    return Measuring(H, B, act, name="trivial")
