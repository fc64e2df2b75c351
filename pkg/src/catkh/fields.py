"""Exact coefficient fields: rationals and prime fields.

Every computation in the package runs over one of these; there is no
floating point anywhere.  Field elements are plain hashable Python
objects (gmpy2.mpq / small ints) and all arithmetic goes through the
field object, so matrices and polynomials stay field-agnostic.
"""

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as _rat


class Rationals:
    """The field of exact rational numbers."""

    name = "q"
    char = 0

    def __init__(self):
        self.zero = _rat(0)
        self.one = _rat(1)

    def of(self, n):
        return _rat(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / _rat(a)

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field with p elements, p prime; elements are ints in [0, p)."""

    char = None

    def __init__(self, p):
        assert p >= 2
        for d in range(2, p):
            if d * d > p:
                break
            assert p % d != 0, "p must be prime"
        self.p = p
        self.char = p
        self.name = str(p)
        self.zero = 0
        self.one = 1 % p

    def of(self, n):
        return int(n) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def __repr__(self):
        return "GF(%d)" % self.p


def field_by_name(name):
    """Field from a CLI-style name: "q" for rationals, "2"/"3"/... for F_p."""
    if name in ("q", "Q", "QQ", "0"):
        return Rationals()
    return PrimeField(int(name))
