"""
Scalar fields: the rationals (via fractions.Fraction) and prime fields.

Linear algebra elsewhere in the package only uses the arithmetic operators,
so elements of either field can flow through the same code.  Plain ints
interoperate with both (they are used for the literals 0, 1 and signs).
"""

from fractions import Fraction


class ModP(object):
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixing F_%d and F_%d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.v == o

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return "ModP(%d, %d)" % (self.v, self.p)

    def __str__(self):
        # symmetric representative reads better for signs
        v = self.v if self.v <= self.p // 2 else self.v - self.p
        return str(v)


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field(object):
    """A scalar field; calling it converts ints, strings and fractions."""

    def __init__(self, name, char=0):
        self.name = name
        self.char = char

    def __call__(self, x):
        if self.char == 0:
            if isinstance(x, ModP):
                raise TypeError("F_p element given to QQ")
            return Fraction(x)
        if isinstance(x, ModP):
            if x.p != self.char:
                raise ValueError("element of F_%d given to %s" % (x.p, self.name))
            return x
        f = Fraction(x)
        if f.denominator % self.char == 0:
            raise ZeroDivisionError("%s has denominator divisible by %d" % (x, self.char))
        return ModP(f.numerator * pow(f.denominator, -1, self.char), self.char)

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return self.name

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def spec(self):
        """The string accepted by parse_field that recreates this field."""
        return "QQ" if self.char == 0 else "fp:%d" % self.char


QQ = Field("QQ")

_GF_CACHE = {}


def GF(p):
    if p not in _GF_CACHE:
        if not _is_prime(p):
            raise ValueError("%d is not prime" % p)
        if p > 2 ** 31:
            raise ValueError("prime %d exceeds 2^31" % p)
        _GF_CACHE[p] = Field("GF(%d)" % p, p)
    return _GF_CACHE[p]


def parse_field(s):
    """Parse 'QQ', 'qq', 'fp:7', 'GF(7)' or 'F7'."""
    t = s.strip()
    low = t.lower()
    if low in ("qq", "q", "rationals"):
        return QQ
    for prefix in ("fp:", "gf:", "gf(", "f"):
        if low.startswith(prefix):
            body = low[len(prefix):].rstrip(")")
            try:
                return GF(int(body))
            except ValueError as e:
                raise ValueError("bad field %r: %s" % (s, e))
    raise ValueError("unknown field %r (expected qq or fp:<prime>)" % s)


def fstr(x):
    """Render a scalar as 'p/q' (rationals) or an integer string."""
    if isinstance(x, ModP):
        return str(x.v)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)
