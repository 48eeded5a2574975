from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate integer polynomial; ``coeffs[k]`` is the coefficient of x^k."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * k + (coeff,))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> IntPolynomial:
        """Sum of ``coeff * x^exp`` over ``(exp, coeff)`` pairs."""
        acc: dict[int, int] = {}
        for k, c in terms:
            acc[k] = acc.get(k, 0) + c
        top = max(acc, default=-1)
        return cls(tuple(acc.get(k, 0) for k in range(top + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(tuple(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> IntPolynomial:
        return cls(tuple(int(c) for c in obj["coeffs"]))

    def format(self, var: str = "x") -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.format()
