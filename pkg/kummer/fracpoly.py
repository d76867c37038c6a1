from fractions import Fraction
from types import MappingProxyType

from .errors import NonIntegerExponentError, ParseError


#Exponents are numerators over lcm(2, 3, 4, 6)
DENOM = 12



def to_twelfths(value):
    scaled = Fraction(value) * DENOM
    if scaled.denominator != 1:
        raise ValueError(f"exponent {value} is not a multiple of 1/{DENOM}")
    return scaled.numerator



class FracPoly:
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        cleaned = {}
        for (xnum, ynum), coeff in (terms or {}).items():
            coeff = int(coeff)
            if coeff:
                cleaned[(int(xnum), int(ynum))] = coeff
        self._terms = dict(sorted(cleaned.items()))


    @classmethod
    def zero(cls):
        return cls()


    @classmethod
    def one(cls):
        return cls({(0, 0): 1})


    @classmethod
    def monomial(cls, coeff=1, x=0, y=0):
        """coeff * X^x * Y^y, exponents given as ints or Fractions."""
        return cls({(to_twelfths(x), to_twelfths(y)): coeff})


    @classmethod
    def X(cls):
        return cls.monomial(1, 1, 0)


    @classmethod
    def Y(cls):
        return cls.monomial(1, 0, 1)


    @classmethod
    def xy_power(cls, exponent, coeff=1):
        return cls.monomial(coeff, exponent, exponent)


    @property
    def terms(self):
        return MappingProxyType(self._terms)


    def __iter__(self):
        return iter(self._terms.items())


    def __len__(self):
        return len(self._terms)


    def __bool__(self):
        return bool(self._terms)


    def __eq__(self, other):
        if isinstance(other, int):
            other = FracPoly({(0, 0): other})
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self._terms == other._terms


    def __hash__(self):
        return hash(tuple(self._terms.items()))


    def __add__(self, other):
        if isinstance(other, int):
            other = FracPoly({(0, 0): other})
        if not isinstance(other, FracPoly):
            return NotImplemented

        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return FracPoly(merged)

    __radd__ = __add__


    def __neg__(self):
        return FracPoly({key: -coeff for key, coeff in self._terms.items()})


    def __sub__(self, other):
        return self + (-other)


    def __mul__(self, other):
        if isinstance(other, int):
            return FracPoly({key: coeff * other for key, coeff in self._terms.items()})
        if not isinstance(other, FracPoly):
            return NotImplemented

        product = {}
        for (ax, ay), ac in self._terms.items():
            for (bx, by), bc in other._terms.items():
                key = (ax + bx, ay + by)
                product[key] = product.get(key, 0) + ac * bc
        return FracPoly(product)

    __rmul__ = __mul__


    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"power must be a nonnegative integer, got {n!r}")

        result, base = FracPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


    def coefficient(self, p, q):
        """Coefficient of X^p Y^q for integer p, q."""
        return self._terms.get((p * DENOM, q * DENOM), 0)


    def is_integral(self):
        return all(
            xnum % DENOM == 0 and ynum % DENOM == 0
            for xnum, ynum in self._terms
        )


    def integer_part(self):
        return FracPoly({
            key: coeff for key, coeff in self._terms.items()
            if key[0] % DENOM == 0 and key[1] % DENOM == 0
        })


    def min_exponent(self):
        if not self._terms:
            return Fraction(0)
        return Fraction(min(min(key) for key in self._terms), DENOM)


    def to_records(self):
        return [
            {'xnum': xnum, 'ynum': ynum, 'coeff': str(coeff)}
            for (xnum, ynum), coeff in self._terms.items()
        ]


    @classmethod
    def from_records(cls, records):
        terms = {}
        for idx, record in enumerate(records):
            try:
                key = (int(record['xnum']), int(record['ynum']))
                terms[key] = terms.get(key, 0) + int(record['coeff'])
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"bad polynomial term: {exc}", f"term[{idx}]")
        return cls(terms)


    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            f"{coeff}*X^{Fraction(xnum, DENOM)}*Y^{Fraction(ynum, DENOM)}"
            for (xnum, ynum), coeff in self._terms.items()
        )



def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def power(a, n):
    return a ** n


def coefficient(a, p, q):
    return a.coefficient(p, q)


def integer_part_euler(a):
    """Alternating sum of h^{p,q}, i.e. F(-1,-1) of a completed Poincare polynomial."""
    if not a.is_integral():
        bad = next(key for key in a.terms if key[0] % DENOM or key[1] % DENOM)
        raise NonIntegerExponentError(
            f"term X^{Fraction(bad[0], DENOM)} Y^{Fraction(bad[1], DENOM)} "
            "has a fractional exponent; not a Hodge generating function"
        )

    return sum(
        -coeff if ((xnum + ynum) // DENOM) % 2 else coeff
        for (xnum, ynum), coeff in a.terms.items()
    )
