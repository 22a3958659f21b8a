"""Exact arithmetic in Q(i)(p1, ..., pk) and exact linear algebra over it.

Coefficients are Gaussian rationals stored as integer triples ``(a, b, d)``
meaning ``(a + b*I)/d`` with ``d > 0`` and ``gcd(a, b, d) == 1``.
Polynomials are dicts mapping exponent tuples (one slot per known
parameter) to coefficients.  A :class:`Scalar` is a normalized quotient of
two such polynomials.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import gcd

PARAMETERS = ("t", "s", "lambda",
              "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9",
              "k1", "k2", "k3")
MAX_PARAMETERS = 3

_NV = len(PARAMETERS)
_INDEX = {name: i for i, name in enumerate(PARAMETERS)}
_Z = (0,) * _NV


class ParseError(ValueError):
    """Malformed coefficient expression; ``pos`` is a 0-based offset."""

    def __init__(self, msg, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            msg = f"{msg} at position {pos}"
        super().__init__(msg)


class ParameterError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Gaussian rationals as (a, b, d)

_G0 = (0, 0, 1)
_G1 = (1, 0, 1)


def _gnorm(a, b, d):
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(a, b, d)
    if g != 1:
        a, b, d = a // g, b // g, d // g
    return (a, b, d)


def _gadd(x, y):
    if x[2] == y[2]:
        return _gnorm(x[0] + y[0], x[1] + y[1], x[2])
    return _gnorm(x[0] * y[2] + y[0] * x[2], x[1] * y[2] + y[1] * x[2], x[2] * y[2])


def _gsub(x, y):
    return _gadd(x, (-y[0], -y[1], y[2]))


def _gmul(x, y):
    if x[1] == 0 and y[1] == 0:
        a, d = x[0] * y[0], x[2] * y[2]
        g = gcd(a, d)
        return (a // g, 0, d // g)
    return _gnorm(x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0], x[2] * y[2])


def _gneg(x):
    return (-x[0], -x[1], x[2])


def _ginv(x):
    a, b, d = x
    if a == 0 and b == 0:
        raise ZeroDivisionError("division by zero")
    return _gnorm(d * a, -d * b, a * a + b * b)


def _gdiv(x, y):
    return _gmul(x, _ginv(y))


def _grender(c):
    a, b, d = c

    def rat(n):
        return str(n) if d == 1 else f"{n}/{d}"

    if b == 0:
        return rat(a)
    if a == 0:
        if b == 1 and d == 1:
            return "I"
        if b == -1 and d == 1:
            return "-I"
        return f"{rat(b)}*I"
    im = rat(abs(b))
    im = "I" if im == "1" else f"{im}*I"
    return f"({rat(a)} {'+' if b > 0 else '-'} {im})"


# ---------------------------------------------------------------------------
# sparse multivariate polynomials: {exponent tuple: gaussian coefficient}

def _lead(p):
    return max(p, key=lambda m: (sum(m), m))


def _padd(p, q):
    r = dict(p)
    for m, c in q.items():
        if m in r:
            v = _gadd(r[m], c)
            if v[0] or v[1]:
                r[m] = v
            else:
                del r[m]
        else:
            r[m] = c
    return r


def _pneg(p):
    return {m: _gneg(c) for m, c in p.items()}


def _psub(p, q):
    return _padd(p, _pneg(q))


def _mmul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _pmul(p, q):
    if len(p) == 1 and _Z in p:
        c = p[_Z]
        return {m: _gmul(c, v) for m, v in q.items()} if c != _G1 else dict(q)
    if len(q) == 1 and _Z in q:
        return _pmul(q, p)
    r = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _mmul(m1, m2)
            c = _gmul(c1, c2)
            if m in r:
                v = _gadd(r[m], c)
                if v[0] or v[1]:
                    r[m] = v
                else:
                    del r[m]
            else:
                r[m] = c
    return r


def _pscale(p, c):
    if c == _G1:
        return dict(p)
    return {m: _gmul(v, c) for m, v in p.items()}


def _pconst(p):
    return not p or (len(p) == 1 and _Z in p)


def _pdivexact(p, q):
    """Quotient of an exact division p / q."""
    if len(q) == 1:
        (mq, cq), = q.items()
        inv = _ginv(cq)
        out = {}
        for m, c in p.items():
            e = tuple(x - y for x, y in zip(m, mq))
            if min(e) < 0:
                raise ArithmeticError("inexact polynomial division")
            out[e] = _gmul(c, inv)
        return out
    lq = _lead(q)
    inv = _ginv(q[lq])
    quo = {}
    r = dict(p)
    while r:
        lr = _lead(r)
        e = tuple(x - y for x, y in zip(lr, lq))
        if min(e) < 0:
            raise ArithmeticError("inexact polynomial division")
        c = _gmul(r[lr], inv)
        quo[e] = c
        r = _psub(r, {_mmul(m, e): _gmul(v, c) for m, v in q.items()})
    return quo


def _pmonic(p):
    if not p:
        return p
    return _pscale(p, _ginv(p[_lead(p)]))


def _pvars(p):
    used = set()
    for m in p:
        if m is _Z:
            continue
        for i, e in enumerate(m):
            if e:
                used.add(i)
    return used


def _pcoeffs(p, v):
    """Split p as sum_k c_k * x_v^k; returns {k: c_k}."""
    out = {}
    for m, c in p.items():
        k = m[v]
        if k:
            m = m[:v] + (0,) + m[v + 1:]
        out.setdefault(k, {})[m] = c
    return out


def _pdeg(p, v):
    return max(m[v] for m in p)


def _xpow(v, k):
    m = [0] * _NV
    m[v] = k
    return tuple(m)


def _prem(a, b, v):
    """Pseudo-remainder of a by b as polynomials in variable v."""
    db = _pdeg(b, v)
    lb = _pcoeffs(b, v)[db]
    r = a
    while r and _pdeg(r, v) >= db:
        dr = _pdeg(r, v)
        lr = _pcoeffs(r, v)[dr]
        shift = _pmul(lr, {_xpow(v, dr - db): _G1})
        r = _psub(_pmul(lb, r), _pmul(shift, b))
    return r


def _pcontent(p, v):
    g = None
    for c in _pcoeffs(p, v).values():
        g = c if g is None else _pgcd(g, c)
        if _pconst(g):
            return {_Z: _G1}
    return _pmonic(g)


def _pgcd(a, b):
    """Monic gcd in Q(i)[params]; gcd(0, 0) is 0."""
    if not a:
        return _pmonic(b)
    if not b:
        return _pmonic(a)
    if _pconst(a) or _pconst(b):
        return {_Z: _G1}
    if len(b) == 1 or len(a) == 1:
        mono = next(iter(b)) if len(b) == 1 else next(iter(a))
        for m in itertools.chain(a, b):
            mono = tuple(min(x, y) for x, y in zip(mono, m))
        return {mono: _G1}
    va, vb = _pvars(a), _pvars(b)
    v = min(va | vb)
    if v not in va or v not in vb:
        # v appears in one argument only: gcd lives in its content
        if v in va:
            return _pgcd(_pcontent(a, v), b)
        return _pgcd(a, _pcontent(b, v))
    ca, cb = _pcontent(a, v), _pcontent(b, v)
    gc = _pgcd(ca, cb)
    pa, pb = _pdivexact(a, ca), _pdivexact(b, cb)
    if _pdeg(pa, v) < _pdeg(pb, v):
        pa, pb = pb, pa
    while True:
        if _pdeg(pb, v) == 0:
            return _pmonic(gc)
        r = _prem(pa, pb, v)
        if not r:
            break
        pa, pb = pb, _pmonic(_pdivexact(r, _pcontent(r, v)))
    return _pmonic(_pmul(gc, _pdivexact(pb, _pcontent(pb, v))))


def _prender(p):
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=lambda m: (sum(m), m), reverse=True):
        c = p[m]
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(PARAMETERS[i])
            elif e:
                factors.append(f"{PARAMETERS[i]}^{e}")
        mono = "*".join(factors)
        neg = False
        if c[1] == 0 and c[0] < 0:
            neg, c = True, _gneg(c)
        elif c[0] == 0 and c[1] < 0:
            neg, c = True, _gneg(c)
        if not mono:
            body = _grender(c)
        elif c == _G1:
            body = mono
        else:
            body = f"{_grender(c)}*{mono}"
        parts.append((neg, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


# ---------------------------------------------------------------------------

class Scalar:
    """Normalized element of Q(i)(t, s, lambda, a1..a9, k1..k3).

    At most ``MAX_PARAMETERS`` distinct parameters may occur in one value.
    Instances are immutable.
    """

    __slots__ = ("num", "den", "_k", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self.num, self.den, self._k, self._hash = value.num, value.den, value._k, None
            return
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            c = (value, 0, 1)
        elif isinstance(value, Fraction):
            c = (value.numerator, 0, value.denominator)
        elif isinstance(value, complex):
            if value.real != int(value.real) or value.imag != int(value.imag):
                raise TypeError("only integral complex literals are exact")
            c = (int(value.real), int(value.imag), 1)
        elif isinstance(value, str):
            s = parse_scalar(value)
            self.num, self.den, self._k, self._hash = s.num, s.den, s._k, None
            return
        else:
            raise TypeError(f"cannot make a Scalar from {type(value).__name__}")
        self._setconst(c)

    def _setconst(self, c):
        self._k = c
        self.num = {_Z: c} if (c[0] or c[1]) else {}
        self.den = _ONEP
        self._hash = None

    @classmethod
    def _const(cls, c):
        s = object.__new__(cls)
        s._setconst(c)
        return s

    @classmethod
    def _frompolys(cls, num, den, reduced=False):
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        if not num:
            return cls._const(_G0)
        if _pconst(den):
            inv = _ginv(den[_Z])
            num = _pscale(num, inv)
            den = _ONEP
        else:
            if not reduced:
                g = _pgcd(num, den)
                if not _pconst(g):
                    num, den = _pdivexact(num, g), _pdivexact(den, g)
            lc = den[_lead(den)]
            if lc != _G1:
                inv = _ginv(lc)
                num, den = _pscale(num, inv), _pscale(den, inv)
        if _pconst(num) and den is _ONEP:
            return cls._const(num[_Z])
        s = object.__new__(cls)
        s.num, s.den, s._k, s._hash = num, den, None, None
        used = _pvars(num) | _pvars(den)
        if len(used) > MAX_PARAMETERS:
            names = ", ".join(PARAMETERS[i] for i in sorted(used))
            raise ParameterError(f"more than {MAX_PARAMETERS} formal parameters in one value ({names})")
        return s

    @classmethod
    def param(cls, name):
        if name not in _INDEX:
            raise ParameterError(f"unknown parameter {name!r}")
        return cls._frompolys({_xpow(_INDEX[name], 1): _G1}, _ONEP)

    @classmethod
    def gaussian(cls, re_, im_=0):
        re_, im_ = Fraction(re_), Fraction(im_)
        d = re_.denominator * im_.denominator // gcd(re_.denominator, im_.denominator)
        return cls._const(_gnorm(int(re_ * d), int(im_ * d), d))

    # -- queries ----------------------------------------------------------
    def is_constant(self):
        return self._k is not None

    def parameters(self):
        return tuple(PARAMETERS[i] for i in sorted(_pvars(self.num) | _pvars(self.den)))

    def as_gaussian(self):
        """(real, imag) Fractions of a constant."""
        if self._k is None:
            raise ValueError("not a constant")
        a, b, d = self._k
        return Fraction(a, d), Fraction(b, d)

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._k is not None and o._k is not None:
            return Scalar._const(_gadd(self._k, o._k))
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return Scalar._frompolys(_padd(self.num, o.num), self.den)
        return Scalar._frompolys(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
                                 _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        if self._k is not None:
            return Scalar._const(_gneg(self._k))
        s = object.__new__(Scalar)
        s.num, s.den, s._k, s._hash = _pneg(self.num), self.den, None, None
        return s

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._k is not None and o._k is not None:
            return Scalar._const(_gmul(self._k, o._k))
        if not self.num or not o.num:
            return ZERO
        if self._k is not None:
            return Scalar._frompolys(_pscale(o.num, self._k), o.den, reduced=True)
        if o._k is not None:
            return Scalar._frompolys(_pscale(self.num, o._k), self.den, reduced=True)
        g1 = _pgcd(self.num, o.den)
        g2 = _pgcd(o.num, self.den)
        n1, d2 = _pdivexact(self.num, g1), _pdivexact(o.den, g1)
        n2, d1 = _pdivexact(o.num, g2), _pdivexact(self.den, g2)
        return Scalar._frompolys(_pmul(n1, n2), _pmul(d1, d2), reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by zero")
        if self._k is not None:
            return Scalar._const(_ginv(self._k))
        return Scalar._frompolys(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._k is not None or o._k is not None:
            return self._k == o._k
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self._k is not None:
                self._hash = hash(self._k)
            else:
                self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        if self.den is _ONEP or self.den == _ONEP:
            return _prender(self.num)
        n, d = _prender(self.num), _prender(self.den)
        if len(self.num) > 1:
            n = f"({n})"
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*(\^\d+)?|\d+", d):
            d = f"({d})"
        return f"{n}/{d}"

    def substitute(self, bindings):
        return substitute(self, bindings)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        return Scalar._const((x, 0, 1))
    if isinstance(x, Fraction):
        return Scalar._const((x.numerator, 0, x.denominator))
    if isinstance(x, str):
        return parse_scalar(x)
    return NotImplemented


_ONEP = {_Z: _G1}
ZERO = Scalar._const(_G0)
ONE = Scalar._const(_G1)
I = Scalar._const((0, 1, 1))


def S(x):
    """Coerce an int, Fraction, str expression or Scalar to a Scalar."""
    o = _coerce(x)
    if o is NotImplemented:
        raise TypeError(f"cannot make a Scalar from {type(x).__name__}")
    return o


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("num", m.group(1), start))
        elif m.group(2):
            toks.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, got {got}", tok[2], self.text)
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if not rhs:
                    raise ParseError("division by zero", pos, self.text)
                val = val / rhs
        return val

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            _, _, pos = self.take()
            k = self.exponent()
            if k < 0 and not base:
                raise ParseError("division by zero", pos, self.text)
            return base ** k
        return base

    def exponent(self):
        paren = self.peek()[0] == "("
        if paren:
            self.take()
        sign = 1
        if self.peek()[0] in "+-" and self.peek()[0] != "end":
            sign = -1 if self.take()[0] == "-" else 1
        tok = self.peek()
        if tok[0] != "num":
            raise ParseError("exponent must be an integer", tok[2], self.text)
        self.take()
        if paren:
            self.take(")")
        return sign * int(tok[1])

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return Scalar._const((int(val), 0, 1))
        if kind == "id":
            self.take()
            if val == "I":
                return I
            if val not in _INDEX:
                raise ParseError(f"unknown parameter {val!r}", pos, self.text)
            return Scalar.param(val)
        if kind == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos, self.text)


def parse_scalar(text):
    """Parse a coefficient expression such as ``"(2*lambda-1)/lambda"``."""
    if not isinstance(text, str):
        raise TypeError("coefficient expression must be a string")
    p = _Parser(text)
    val = p.expr()
    p.take("end")
    return val


# ---------------------------------------------------------------------------

def _peval(p, values):
    out = ZERO
    for m, c in p.items():
        term = Scalar._const(c)
        for i, e in enumerate(m):
            if e:
                term = term * values[i] ** e
        out = out + term
    return out


def substitute(s, bindings):
    """Substitute parameters by Scalars (or expressions); unbound stay formal."""
    s = S(s)
    if s._k is not None or not bindings:
        return s
    values = [None] * _NV
    for name, v in bindings.items():
        if name not in _INDEX:
            raise ParameterError(f"unknown parameter {name!r}")
        values[_INDEX[name]] = S(v)
    for i in _pvars(s.num) | _pvars(s.den):
        if values[i] is None:
            values[i] = Scalar.param(PARAMETERS[i])
    den = _peval(s.den, values)
    if not den:
        raise ZeroDivisionError("substitution makes a denominator vanish")
    return _peval(s.num, values) / den


# ---------------------------------------------------------------------------
# linear algebra

class Matrix:
    """Immutable dense matrix of Scalars (row-major)."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols=None):
        self.rows = tuple(tuple(S(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.ncols = ncols

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @classmethod
    def zeros(cls, n, m):
        return cls([[ZERO] * m for _ in range(n)], m)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols, nrows=None):
        cols = [list(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def transpose(self):
        return Matrix([self.column(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = [other.column(j) for j in range(other.ncols)]
            return Matrix([[_dot(r, c) for c in cols] for r in self.rows], other.ncols)
        v = list(other)
        if len(v) != self.ncols:
            raise ValueError("shape mismatch")
        return [_dot(r, v) for r in self.rows]

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r, q)] for r, q in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r, q)] for r, q in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c):
        c = S(c)
        return Matrix([[c * a for a in r] for r in self.rows], self.ncols)

    def map(self, fn):
        return Matrix([[fn(a) for a in r] for r in self.rows], self.ncols)

    def substitute(self, bindings):
        return self.map(lambda a: substitute(a, bindings))

    def is_zero(self):
        return not any(a for r in self.rows for a in r)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows) + "])"

    def tolist(self):
        return [[str(a) for a in r] for r in self.rows]

    def rank(self):
        return rref(self)[2]

    def det(self):
        return det(self)


def _dot(u, v):
    out = ZERO
    for a, b in zip(u, v):
        if a and b:
            out = out + a * b
    return out


def _sparse_rows(M):
    return [{j: a for j, a in enumerate(r) if a} for r in M.rows]


def rref_sparse(rows, ncols):
    """Gauss-Jordan on sparse rows ``{col: Scalar}``.

    Pivots are chosen left to right, taking the first remaining row with a
    nonzero entry in the column.  Returns ``(reduced rows, pivot columns)``;
    zero rows are dropped.
    """
    rows = [dict(r) for r in rows if r]
    pivots = []
    reduced = []
    for col in range(ncols):
        if not rows:
            break
        hit = None
        for idx, r in enumerate(rows):
            if col in r:
                hit = idx
                break
        if hit is None:
            continue
        prow = rows.pop(hit)
        inv = prow[col].inverse()
        prow = {j: a * inv for j, a in prow.items()}
        prow[col] = ONE
        rest = []
        for r in rows:
            f = r.get(col)
            if f is not None:
                r = _axpy(r, prow, -f)
            if r:
                rest.append(r)
        rows = rest
        for k, r in enumerate(reduced):
            f = r.get(col)
            if f is not None:
                reduced[k] = _axpy(r, prow, -f)
        reduced.append(prow)
        pivots.append(col)
    return reduced, pivots


def _axpy(r, p, f):
    """r + f * p on sparse rows."""
    out = dict(r)
    for j, a in p.items():
        v = out.get(j)
        v = f * a if v is None else v + f * a
        if v:
            out[j] = v
        else:
            out.pop(j, None)
    return out


def rref(M):
    """Reduced row echelon form: ``(R, pivot columns, rank)``."""
    reduced, pivots = rref_sparse(_sparse_rows(M), M.ncols)
    rows = [[r.get(j, ZERO) for j in range(M.ncols)] for r in reduced]
    rows += [[ZERO] * M.ncols for _ in range(M.nrows - len(rows))]
    return Matrix(rows, M.ncols), pivots, len(pivots)


def kernel_from_rref(reduced, pivots, ncols):
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in zip(reduced, pivots):
            a = r.get(f)
            if a:
                v[p] = -a
        basis.append(v)
    return basis


def kernel_basis_sparse(rows, ncols):
    reduced, pivots = rref_sparse(rows, ncols)
    return kernel_from_rref(reduced, pivots, ncols)


def kernel_basis(M):
    """Basis of {v : M v = 0}, one vector per free column."""
    return kernel_basis_sparse(_sparse_rows(M), M.ncols)


def solve_linear(M, b):
    """Solve M x = b: ``(particular solution or None, kernel basis)``."""
    b = [S(x) for x in b]
    if len(b) != M.nrows:
        raise ValueError("right-hand side length must equal the row count")
    n = M.ncols
    rows = []
    for r, bi in zip(_sparse_rows(M), b):
        r = dict(r)
        if bi:
            r[n] = bi
        rows.append(r)
    reduced, pivots = rref_sparse(rows, n + 1)
    kern = kernel_from_rref([{j: a for j, a in r.items() if j < n} for r in reduced],
                            [p for p in pivots if p < n], n)
    if n in pivots:
        return None, kern
    x = [ZERO] * n
    for r, p in zip(reduced, pivots):
        x[p] = r.get(n, ZERO)
    return x, kern


def det(M):
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in M.rows]
    n = len(rows)
    out = ONE
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            out = -out
        p = rows[c][c]
        out = out * p
        inv = p.inverse()
        for r in range(c + 1, n):
            f = rows[r][c]
            if f:
                f = f * inv
                rows[r] = [a - f * b if b else a for a, b in zip(rows[r], rows[c])]
    return out


def rank(M):
    return rref(M)[2]
