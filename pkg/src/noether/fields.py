"""Exact coefficient fields: the rationals and prime fields F_p.

Coefficients are plain Python objects — ``fractions.Fraction`` over Q and
integers in ``range(p)`` over F_p — so polynomial code can hash and compare
them directly.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``kind='q'``) or a prime field (``kind='fp'``)."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("q", "fp"):
            raise DomainError(f"unknown field kind {self.kind!r}")
        if self.kind == "fp" and not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    # -- arithmetic on coefficient values -------------------------------

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "fp" else 0

    def zero(self):
        return 0 if self.kind == "fp" else Fraction(0)

    def one(self):
        return 1 if self.kind == "fp" else Fraction(1)

    def from_int(self, n: int):
        return n % self.p if self.kind == "fp" else Fraction(n)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "fp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "fp" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "fp" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "fp" else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("field inverse of zero")
        return pow(a, -1, self.p) if self.kind == "fp" else Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def describe(self) -> str:
        return "Q" if self.kind == "q" else f"F{self.p}"


QQ = FieldSpec("q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("fp", p)
