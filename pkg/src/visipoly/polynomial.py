"""Exact integer polynomials, coefficient vectors indexed by degree.

Coefficients count vertex subsets, so they are nonnegative and may grow to
binomial(n, n/2) and beyond; plain Python integers keep all arithmetic exact.
Equality and the grouping key are bit-exact by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import FormatError, ParameterError


@dataclass(frozen=True)
class Polynomial:
    """Coefficient vector by ascending degree, trailing zeros trimmed.

    The zero polynomial has an empty vector and degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise ParameterError(f"coefficient {c!r} is not an exact integer")
            if c < 0:
                raise ParameterError(f"coefficient {c} is negative")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "Polynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        if i < 0:
            raise ParameterError("coefficient index must be nonnegative")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def add(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    __add__ = add

    def multiply(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(tuple(out))

    __mul__ = multiply

    def subtract_scalar(self, k: int) -> "Polynomial":
        """Lower the constant term by k; requires coefficient(0) >= k >= 0."""
        if k < 0:
            raise ParameterError("scalar must be nonnegative")
        c0 = self.coefficient(0)
        if c0 < k:
            raise ParameterError(f"constant term {c0} is smaller than {k}")
        if k == 0:
            return self
        return Polynomial((c0 - k,) + self.coeffs[1:])

    def evaluate(self, x: int) -> int:
        """Exact value at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_canonical_string(self) -> str:
        """Deterministic grouping key: "[c0,c1,...,ck]" with no whitespace."""
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    @classmethod
    def from_canonical_string(cls, text: str) -> "Polynomial":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise FormatError(f"canonical polynomial must be bracketed, got {text!r}")
        inner = body[1:-1]
        if not inner:
            return cls()
        try:
            coeffs = tuple(int(tok) for tok in inner.split(","))
        except ValueError:
            raise FormatError(f"bad coefficient in {text!r}") from None
        return cls(coeffs)

    def pretty(self) -> str:
        """Human-readable rendering like "1 + 4x + 6x^2 + 4x^3"."""
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}{x}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


ZERO = Polynomial()
ONE = Polynomial((1,))
