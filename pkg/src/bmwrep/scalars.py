"""Exact arithmetic in the two-parameter coefficient field.

A Scalar is a reduced fraction of integer polynomials in two formal
parameters (bound to (q, p) in BMW mode, (b, c) in Brauer mode).  The
internal representation clears negative (Laurent) exponents into a
common monomial shift, so both numerator and denominator live in the
ordinary polynomial ring Z[x1, x2] as dicts {(e1, e2): int}.

Canonical form: gcd(num, den) == 1 (including integer content and the
common monomial), and the lex-leading coefficient of the denominator is
positive.  Equality of Scalars is then dict equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from .kernel import sparse_add, sparse_mul, sparse_mul_term, sparse_neg, sparse_sub

B_ONE = {(0, 0): 1}


def b_mono(c, e1=0, e2=0):
    return {(e1, e2): c} if c else {}


def b_int(c):
    return {(0, 0): c} if c else {}


class NotDivisible(ArithmeticError):
    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def b_divexact(a, b):
    """Exact division in Z[x1, x2]; raises NotDivisible otherwise."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    kb = max(b)
    cb = b[kb]
    if len(b) == 1:
        out = {}
        for k, v in a.items():
            e1, e2 = k[0] - kb[0], k[1] - kb[1]
            if e1 < 0 or e2 < 0 or v % cb:
                raise NotDivisible("monomial does not divide term", a)
            out[(e1, e2)] = v // cb
        return out
    q = {}
    r = dict(a)
    while r:
        kr = max(r)
        ka = (kr[0] - kb[0], kr[1] - kb[1])
        cr = r[kr]
        if ka[0] < 0 or ka[1] < 0 or cr % cb:
            raise NotDivisible("leading term not divisible", r)
        cq = cr // cb
        q[ka] = cq
        r = sparse_sub(r, sparse_mul_term(b, ka, cq))
    return q


# -- univariate helpers over Z (dicts {exp: int}), used by the gcd recursion


def _zx_content(a):
    g = 0
    for v in a.values():
        g = igcd(g, abs(v))
    return g


def _zx_scale(a, c):
    return {k: v * c for k, v in a.items()} if c else {}


def _zx_divint(a, c):
    return {k: v // c for k, v in a.items()}


def _zx_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            cur = out.get(k, 0) + va * vb
            if cur:
                out[k] = cur
            elif k in out:
                del out[k]
    return out


def _zx_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k, 0) - v
        if cur:
            out[k] = cur
        elif k in out:
            del out[k]
    return out


def _zx_shift(a, s):
    return {k + s: v for k, v in a.items()}


def _zx_gcd(a, b):
    """Primitive-PRS gcd in Z[x]; result has positive leading coefficient."""
    if not a:
        g = dict(b)
    elif not b:
        g = dict(a)
    else:
        ca, cb = _zx_content(a), _zx_content(b)
        c = igcd(ca, cb)
        sa = _zx_divint(a, ca)
        sb = _zx_divint(b, cb)
        # strip common power of x
        ma, mb = min(sa), min(sb)
        m = min(ma, mb)
        sa = _zx_shift(sa, -ma)
        sb = _zx_shift(sb, -mb)
        while sb:
            da, db = max(sa), max(sb)
            if da < db:
                sa, sb = sb, sa
                continue
            lb = sb[db]
            r = dict(sa)
            while r and max(r) >= db:
                dr = max(r)
                lr = r[dr]
                r = _zx_sub(_zx_scale(r, lb), _zx_mul({dr - db: lr}, sb))
            cr = _zx_content(r)
            if cr:
                r = _zx_divint(r, cr)
            sa, sb = sb, r
        g = _zx_mul({m: c}, sa)
    if g and g[max(g)] < 0:
        g = _zx_scale(g, -1)
    return g


def _zx_divexact(a, b):
    """Exact division in Z[x]."""
    if not b:
        raise ZeroDivisionError
    if not a:
        return {}
    db = max(b)
    lb = b[db]
    q = {}
    r = dict(a)
    while r:
        dr = max(r)
        if dr < db or r[dr] % lb:
            raise NotDivisible("univariate division failed", r)
        cq = r[dr] // lb
        q[dr - db] = cq
        r = _zx_sub(r, _zx_mul({dr - db: cq}, b))
    return q


# -- bivariate gcd: recursive in x1 with Z[x2] coefficients


def _to_rec(a):
    rec = {}
    for (e1, e2), v in a.items():
        rec.setdefault(e1, {})[e2] = v
    return rec


def _from_rec(rec):
    out = {}
    for e1, coeff in rec.items():
        for e2, v in coeff.items():
            out[(e1, e2)] = v
    return out


def _rec_content(rec):
    g = {}
    for coeff in rec.values():
        g = _zx_gcd(g, coeff)
        if g == {0: 1}:
            break
    return g


def _rec_divcoeff(rec, c):
    return {e1: _zx_divexact(coeff, c) for e1, coeff in rec.items()}


def _rec_mulcoeff(rec, c):
    out = {}
    for e1, coeff in rec.items():
        prod = _zx_mul(coeff, c)
        if prod:
            out[e1] = prod
    return out


def _rec_sub(a, b):
    out = dict(a)
    for e1, coeff in b.items():
        cur = _zx_sub(out.get(e1, {}), coeff)
        if cur:
            out[e1] = cur
        elif e1 in out:
            del out[e1]
    return out


def _rec_shift(a, s):
    return {e1 + s: coeff for e1, coeff in a.items()}


def b_gcd(a, b):
    """Gcd in Z[x1, x2] by content/primitive-part recursion.

    Result is primitive up to its integer content and has a positive
    lex-leading coefficient.
    """
    if not a:
        g = dict(b)
    elif not b:
        g = dict(a)
    elif len(a) == 1 or len(b) == 1:
        e1 = min(min(k[0] for k in a), min(k[0] for k in b))
        e2 = min(min(k[1] for k in a), min(k[1] for k in b))
        c = 0
        for v in a.values():
            c = igcd(c, abs(v))
        cb = 0
        for v in b.values():
            cb = igcd(cb, abs(v))
        g = {(e1, e2): igcd(c, cb)}
    else:
        ra, rb = _to_rec(a), _to_rec(b)
        ca, cb = _rec_content(ra), _rec_content(rb)
        cont = _zx_gcd(ca, cb)
        pa, pb = _rec_divcoeff(ra, ca), _rec_divcoeff(rb, cb)
        ma, mb = min(pa), min(pb)
        m = min(ma, mb)
        pa, pb = _rec_shift(pa, -ma), _rec_shift(pb, -mb)
        while pb:
            da, db = max(pa), max(pb)
            if da < db:
                pa, pb = pb, pa
                continue
            lb = pb[db]
            r = dict(pa)
            while r and max(r) >= db:
                dr = max(r)
                lr = r[dr]
                r = _rec_sub(_rec_mulcoeff(r, lb), _rec_mulcoeff(_rec_shift(pb, dr - db), lr))
            cr = _rec_content(r)
            if cr:
                r = _rec_divcoeff(r, cr)
            pa, pb = pb, r
        g = _from_rec(_rec_mulcoeff(_rec_shift(pa, m), cont))
    if g and g[max(g)] < 0:
        g = sparse_neg(g)
    return g


def _poly_term_str(k, v, names):
    e1, e2 = k
    parts = []
    if e1:
        parts.append(names[0] if e1 == 1 else f"{names[0]}^{e1}")
    if e2:
        parts.append(names[1] if e2 == 1 else f"{names[1]}^{e2}")
    if not parts:
        return str(v)
    body = "*".join(parts)
    if v == 1:
        return body
    if v == -1:
        return f"-{body}"
    return f"{v}*{body}"


def poly_to_str(a, names=("q", "p")):
    if not a:
        return "0"
    out = []
    for k in sorted(a, reverse=True):
        term = _poly_term_str(k, a[k], names)
        if out:
            if term.startswith("-"):
                out.append(" - " + term[1:])
            else:
                out.append(" + " + term)
        else:
            out.append(term)
    return "".join(out)


class Scalar:
    """Element of the fraction field Q(x1, x2), always in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = B_ONE
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # constructors

    @staticmethod
    def from_int(c):
        return Scalar(b_int(c), B_ONE, _normalized=True) if c else SC_ZERO

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        return Scalar(b_int(fr.numerator), b_int(fr.denominator), _normalized=True)

    @staticmethod
    def mono(c, e1=0, e2=0):
        """c * x1^e1 * x2^e2 with possibly negative exponents."""
        if not c:
            return SC_ZERO
        s1, s2 = max(0, -e1), max(0, -e2)
        return Scalar({(e1 + s1, e2 + s2): c}, {(s1, s2): 1}, _normalized=True)

    # queries

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (frozenset(self.num.items()), frozenset(self.den.items()))
            )
        return self._hash

    # arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return Scalar(sparse_add(self.num, other.num), self.den)
        num = sparse_add(
            sparse_mul(self.num, other.den), sparse_mul(other.num, self.den)
        )
        return Scalar(num, sparse_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(sparse_neg(self.num), self.den, _normalized=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        if not self.num or not other.num:
            return SC_ZERO
        return Scalar(
            sparse_mul(self.num, other.num), sparse_mul(self.den, other.den)
        )

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        if not other.num:
            raise ZeroDivisionError("scalar division by zero")
        if not self.num:
            return SC_ZERO
        return Scalar(
            sparse_mul(self.num, other.den), sparse_mul(self.den, other.num)
        )

    def __rtruediv__(self, other):
        return Scalar.from_int(other) / self

    def __pow__(self, k):
        if k == 0:
            return SC_ONE
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    # parameter maps

    def conj(self):
        """Invert both parameters (x1 -> 1/x1, x2 -> 1/x2)."""
        num = {(-e1, -e2): v for (e1, e2), v in self.num.items()}
        den = {(-e1, -e2): v for (e1, e2), v in self.den.items()}
        return Scalar(num, den)

    def subst_param2(self, k):
        """Substitute x2 -> x1^k (e.g. p -> q^-2 at the cyclic point)."""

        def sub(poly):
            out = {}
            for (e1, e2), v in poly.items():
                key = (e1 + k * e2, 0)
                cur = out.get(key, 0) + v
                if cur:
                    out[key] = cur
                elif key in out:
                    del out[key]
            return out

        den = sub(self.den)
        if not den:
            raise ZeroDivisionError("denominator vanishes under substitution")
        return Scalar(sub(self.num), den)

    def evaluate(self, v1, v2, names=("q", "p")):
        """Exact rational value at x1=v1, x2=v2 (Fractions)."""
        v1, v2 = Fraction(v1), Fraction(v2)

        def ev(poly):
            return sum((c * v1**e1 * v2**e2 for (e1, e2), c in poly.items()), Fraction(0))

        dv = ev(self.den)
        if dv == 0:
            raise ZeroDivisionError(
                f"denominator {poly_to_str(self.den, names)} vanishes at "
                f"{names[0]}={v1}, {names[1]}={v2}"
            )
        return ev(self.num) / dv

    def to_str(self, names=("q", "p")):
        if not self.num:
            return "0"
        ns = poly_to_str(self.num, names)
        if self.den == B_ONE:
            return ns
        return f"({ns})/({poly_to_str(self.den, names)})"

    def __repr__(self):
        return f"Scalar({self.to_str()})"


def _normalize(num, den):
    if not den:
        raise ZeroDivisionError("scalar with zero denominator")
    if not num:
        return {}, dict(B_ONE)
    m1 = min(min(k[0] for k in num), min(k[0] for k in den))
    m2 = min(min(k[1] for k in num), min(k[1] for k in den))
    if m1 or m2:
        num = {(e1 - m1, e2 - m2): v for (e1, e2), v in num.items()}
        den = {(e1 - m1, e2 - m2): v for (e1, e2), v in den.items()}
    if den != B_ONE:
        g = b_gcd(num, den)
        if g != B_ONE:
            num = b_divexact(num, g)
            den = b_divexact(den, g)
    if den[max(den)] < 0:
        num = sparse_neg(num)
        den = sparse_neg(den)
    return num, den


SC_ZERO = Scalar({}, dict(B_ONE), _normalized=True)
SC_ONE = Scalar(dict(B_ONE), dict(B_ONE), _normalized=True)


# -- scalar-string grammar (documented in README): integers, the two
#    parameter names, + - * / ^ and parentheses; exponents may be negative.


class ScalarParseError(ValueError):
    pass


def _tokenize(text, names):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name not in names:
                raise ScalarParseError(f"unknown parameter {name!r}")
            tokens.append(("name", name))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ScalarParseError(f"unexpected character {ch!r}")
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens, names):
        self.tokens = tokens
        self.pos = 0
        self.names = names

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek() != "end":
            raise ScalarParseError("trailing input")
        return value

    def expr(self):
        if self.peek() == "-":
            self.next()
            value = -self.term()
        else:
            value = self.term()
        while self.peek() in "+-":
            op = self.next()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.power()
        while self.peek() in "*/":
            op = self.next()[0]
            rhs = self.power()
            value = value * rhs if op == "*" else value / rhs
        return value

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() == "-":
                self.next()
                sign = -1
            kind, val = self.next()
            if kind != "int":
                raise ScalarParseError("exponent must be an integer")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.next()
        if kind == "int":
            return Scalar.from_int(val)
        if kind == "name":
            return Scalar.mono(1, 1, 0) if val == self.names[0] else Scalar.mono(1, 0, 1)
        if kind == "(":
            value = self.expr()
            if self.next()[0] != ")":
                raise ScalarParseError("missing closing parenthesis")
            return value
        if kind == "-":
            return -self.atom()
        raise ScalarParseError(f"unexpected token {kind!r}")


def scalar_from_str(text, names=("q", "p")):
    return _Parser(_tokenize(text, names), names).parse()


class AlgebraParams:
    """Named constants of the algebra for one of the two modes."""

    __slots__ = ("mode", "names", "a", "tau", "epsilon")

    def __init__(self, mode, names, a, tau, epsilon):
        self.mode = mode
        self.names = names
        self.a = a
        self.tau = tau
        self.epsilon = epsilon

    @staticmethod
    def bmw():
        q = Scalar.mono(1, 1, 0)
        p = Scalar.mono(1, 0, 1)
        a = Scalar.mono(1, -2, -1)  # q^-2 p^-1
        epsilon = p - p.inverse()
        tau = SC_ONE - (a - a.inverse()) / epsilon
        return AlgebraParams("bmw", ("q", "p"), a, tau, epsilon)

    @staticmethod
    def brauer():
        b = Scalar.mono(1, 1, 0)
        c = Scalar.mono(1, 0, 1)
        tau = Scalar.from_int(2) * (c + b) / c
        return AlgebraParams("brauer", ("b", "c"), SC_ONE, tau, SC_ZERO)

    @property
    def param1(self):
        return Scalar.mono(1, 1, 0)

    @property
    def param2(self):
        return Scalar.mono(1, 0, 1)

    def scalar(self, text):
        return scalar_from_str(text, self.names)

    def __repr__(self):
        return f"AlgebraParams({self.mode})"
