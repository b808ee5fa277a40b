"""Exact ground fields.

Two fields are supported: arbitrary-precision rationals (the default) and
prime fields GF(p) for a user-selected prime p.  Rational elements are
`fractions.Fraction`; prime-field elements are ints reduced to [0, p).
Equality of elements is decidable and all arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class RationalField:
    kind = "rational"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

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
            raise FieldError("division by zero")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, s: str):
        return Fraction(s)

    def serialize(self, a) -> str:
        return f"{a.numerator}/{a.denominator}" if a.denominator != 1 else str(a.numerator)

    def is_integral(self, a) -> bool:
        return a.denominator == 1

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField:
    kind = "prime"

    zero = 0
    one = 1

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError("division by zero")
        return pow(a, -1, self.p)

    def from_int(self, n: int):
        return n % self.p

    def parse(self, s: str):
        if "/" in s:
            num, den = s.split("/", 1)
            return self.mul(int(num) % self.p, self.inv(int(den) % self.p))
        return int(s) % self.p

    def serialize(self, a) -> str:
        return str(a % self.p)

    def is_integral(self, a) -> bool:
        return True

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def field_from_spec(spec: dict):
    """Build a field from its file representation, e.g. {"type": "rational"}."""
    if spec.get("type") == "rational":
        return RationalField()
    if spec.get("type") == "prime":
        return PrimeField(int(spec["p"]))
    raise FieldError(f"unknown field spec {spec!r}")


def field_to_spec(field) -> dict:
    if field.kind == "rational":
        return {"type": "rational"}
    return {"type": "prime", "p": field.p}
