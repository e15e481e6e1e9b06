"""Exact ground fields: the rationals and cyclotomic fields Q(zeta_n).

Every scalar in the engine is either a rational number (gmpy2.mpq, or
fractions.Fraction as a fallback) or a ``Cyc``: a polynomial in a fixed
primitive n-th root of unity ``z``, reduced modulo the n-th cyclotomic
polynomial.  All arithmetic is exact; there is no floating point anywhere.
"""

from __future__ import annotations

import re
from functools import lru_cache

try:
    from gmpy2 import mpq as _mpq

    def _rat(p, q=1):
        return _mpq(p, q)
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _mpq

    def _rat(p, q=1):
        return _mpq(p, q)


MAX_CYCLOTOMIC_ORDER = 64


class BadScalar(ValueError):
    """Raised for malformed scalar text (e.g. '1/0') or wrong-field values."""


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(num, den):
    # den is monic with integer/rational coefficients
    num = list(num)
    q = [0] * max(0, len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        coef = num[i + len(den) - 1]
        if coef == 0:
            continue
        q[i] = coef
        for j, d in enumerate(den):
            num[i + j] -= coef * d
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficient list (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]  # z^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not rem
    return tuple(poly)


class Field:
    """Common interface for the two supported exact fields."""

    def __eq__(self, other):
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return self.tag


class RationalField(Field):
    tag = "rational"
    zero = _rat(0)
    one = _rat(1)

    def __call__(self, p, q=1):
        if q == 0:
            raise BadScalar("zero denominator")
        return _rat(p, q)

    def coerce(self, x):
        if isinstance(x, Cyc):
            raise BadScalar("cyclotomic value in a rational context")
        return _rat(x)

    def parse(self, text):
        return parse_rational(text)

    def format(self, x):
        return format_rational(x)


QQ = RationalField()


class CyclotomicField(Field):
    """Q(zeta_n), elements reduced mod the n-th cyclotomic polynomial."""

    _cache = {}

    def __new__(cls, n):
        if not 1 <= n <= MAX_CYCLOTOMIC_ORDER:
            raise ValueError(f"cyclotomic order must be in 1..{MAX_CYCLOTOMIC_ORDER}")
        if n in cls._cache:
            return cls._cache[n]
        self = super().__new__(cls)
        self.order = n
        self.tag = f"cyclotomic({n})"
        phi = cyclotomic_polynomial(n)
        self.degree = len(phi) - 1
        # reduction table: z^k for k in [degree, 2*degree-2] as coefficient tuples
        red = []
        head = [_rat(-c) for c in phi[:-1]]  # z^degree = head
        cur = head[:]
        red.append(tuple(cur))
        for _ in range(max(0, self.degree - 2)):
            lead = cur[-1]
            cur = [_rat(0)] + cur[:-1]
            if lead != 0:
                cur = [a + lead * b for a, b in zip(cur, head)]
            red.append(tuple(cur))
        self._power_table = red
        self.zero = Cyc(self, (_rat(0),) * self.degree)
        self.one = Cyc(self, (_rat(1),) + (_rat(0),) * (self.degree - 1))
        cls._cache[n] = self
        return self

    def element(self, coeffs):
        """Element from ascending coefficients of a polynomial in zeta."""
        coeffs = [_rat(c) if not isinstance(c, Cyc) else c for c in coeffs]
        if any(isinstance(c, Cyc) for c in coeffs):
            raise BadScalar("nested cyclotomic coefficients")
        return Cyc(self, self._reduce(coeffs))

    def _reduce(self, coeffs):
        d = self.degree
        if len(coeffs) <= d:
            out = list(coeffs) + [_rat(0)] * (d - len(coeffs))
            return tuple(out)
        out = [_rat(c) for c in coeffs[:d]]
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c == 0:
                continue
            row = self._power_table[k - d] if k - d < len(self._power_table) else None
            if row is None:
                # beyond the table: reduce z^k recursively via z^(k-1)*z
                tail = [_rat(0)] * (k - 1) + [_rat(1)]
                row = self._reduce(self._mul_raw(self._reduce(tail), (0, 1)))
            out = [a + c * b for a, b in zip(out, row)]
        return tuple(out)

    def _mul_raw(self, a, b):
        prod = [_rat(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                prod[i + j] += ai * bj
        return prod

    def zeta(self, power=1):
        power %= self.order
        return self.element([0] * power + [1])

    def coerce(self, x):
        if isinstance(x, Cyc):
            if x.field is not self:
                raise BadScalar(f"scalar from {x.field.tag} used in {self.tag}")
            return x
        return Cyc(self, (_rat(x),) + (_rat(0),) * (self.degree - 1))

    def parse(self, text):
        return parse_cyclotomic(self, text)

    def format(self, x):
        return format_cyclotomic(self.coerce(x))


class Cyc:
    """Element of a cyclotomic field; immutable coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other):
        if isinstance(other, Cyc):
            if other.field is not self.field:
                raise BadScalar("mixed cyclotomic fields")
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._lift(other)
        return Cyc(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return Cyc(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Cyc(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._lift(other)
        f = self.field
        return Cyc(f, f._reduce(f._mul_raw(self.coeffs, o.coeffs)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def inverse(self):
        """Inverse via extended Euclid against the cyclotomic polynomial."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        f = self.field
        phi = [_rat(c) for c in cyclotomic_polynomial(f.order)]
        r0, r1 = phi, _poly_trim([_rat(c) for c in self.coeffs])
        s0, s1 = [], [_rat(1)]
        while len(r1) > 1:
            q, r = _poly_divmod_rat(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        lead = r1[0]
        inv = [c / lead for c in s1]
        return Cyc(f, f._reduce(inv))

    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, type(_rat(0)))):
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __bool__(self):
        return any(c != 0 for c in self.coeffs)

    def __repr__(self):
        return format_cyclotomic(self)

    @property
    def rational_part(self):
        if any(c != 0 for c in self.coeffs[1:]):
            raise BadScalar("not a rational element")
        return self.coeffs[0]


def _poly_divmod_rat(num, den):
    num = list(num)
    dl = len(den)
    q = [_rat(0)] * max(0, len(num) - dl + 1)
    lead = den[-1]
    for i in range(len(num) - dl, -1, -1):
        coef = num[i + dl - 1] / lead
        if coef == 0:
            continue
        q[i] = coef
        for j, d in enumerate(den):
            num[i + j] -= coef * d
    return q, _poly_trim(num)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [_rat(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_sub(a, b):
    out = [_rat(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _poly_trim(out)


_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text):
    text = text.strip().replace(" ", "")
    if not _RAT_RE.match(text):
        raise BadScalar(f"bad rational: {text!r}")
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise BadScalar(f"zero denominator: {text!r}")
        return _rat(int(p), int(q))
    return _rat(int(text))


def format_rational(x):
    return str(x)


_TERM_RE = re.compile(
    r"^(?P<coef>[+-]?\d+(?:/\d+)?|[+-])?(?P<star>\*)?(?P<z>z(?:\^(?P<pow>\d+))?)?$"
)


def parse_cyclotomic(field, text):
    """Parse e.g. '1/2*z^3 - z + 2' in the field's generator z."""
    compact = text.strip().replace(" ", "")
    if not compact:
        raise BadScalar("empty scalar")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(terms) != compact:
        raise BadScalar(f"bad scalar: {text!r}")
    coeffs = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("star") and not (m.group("coef") and m.group("z"))):
            raise BadScalar(f"bad term {term!r} in {text!r}")
        if not m.group("coef") and not m.group("z"):
            raise BadScalar(f"bad term {term!r} in {text!r}")
        coef_text = m.group("coef")
        if coef_text in (None, "", "+", "-"):
            coef = _rat(1) if coef_text != "-" else _rat(-1)
        else:
            coef = parse_rational(coef_text)
        if m.group("z"):
            power = int(m.group("pow") or 1)
        else:
            power = 0
        coeffs[power] = coeffs.get(power, _rat(0)) + coef
    out = [_rat(0)] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return field.element(out)


def format_cyclotomic(x):
    parts = []
    for k, c in enumerate(x.coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(format_rational(c))
        else:
            z = "z" if k == 1 else f"z^{k}"
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{format_rational(c)}*{z}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def field_from_tag(tag):
    tag = tag.strip()
    if tag == "rational":
        return QQ
    m = re.match(r"^cyclotomic[:(](\d+)\)?$", tag)
    if m:
        return CyclotomicField(int(m.group(1)))
    raise BadScalar(f"unknown field tag {tag!r}")
