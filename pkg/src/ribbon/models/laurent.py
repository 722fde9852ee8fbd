"""
Laurent Polynomial - exact integer polynomials in A with integer exponents
"""

from typing import Dict, Iterable, List, Mapping, Tuple, Union


class LaurentPolynomial:
    """Immutable; zero coefficients are never stored"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        merged: Dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for exponent, coefficient in items:
            merged[int(exponent)] = merged.get(int(exponent), 0) + int(coefficient)
        self._terms = {e: c for e, c in sorted(merged.items()) if c != 0}

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def from_list(cls, pairs: List[List[int]]) -> "LaurentPolynomial":
        return cls((e, c) for e, c in pairs)

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def exponents(self) -> List[int]:
        return list(self._terms)

    def span(self) -> int:
        if not self._terms:
            return 0
        exponents = list(self._terms)
        return exponents[-1] - exponents[0]

    def mirror(self) -> "LaurentPolynomial":
        """Substitute A -> A^-1"""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def to_list(self) -> List[List[int]]:
        return [[e, c] for e, c in self._terms.items()]

    def _coerce(self, other: Union["LaurentPolynomial", int]) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, 0) + c
        return LaurentPolynomial(merged)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have integer inverses")
            return LaurentPolynomial({-e: c}) ** (-power)
        result = LaurentPolynomial.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if e == 0:
                body = f"{magnitude}"
            else:
                power = "A" if e == 1 else f"A^{e}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
