import logging
import numpy as np
from dataclasses import dataclass
from math import comb, gcd
from itertools import combinations_with_replacement

from .errors import BudgetExceeded, UsageError, Verdict




logger = logging.getLogger('kummer.invariants')

DEFAULT_SEARCH_CAP = 250000

#Character of (x, y) under the generating automorphism: tau_3 = (zeta_3 x, y), tau_4 = (-x, i y)
CURVE_CHARACTERS = {3: (1, 0), 4: (2, 1)}



@dataclass(frozen=True)
class Monomial:
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, 'exponents', tuple(int(e) for e in self.exponents))


    @classmethod
    def one(cls, size):
        return cls((0,) * size)


    @property
    def degree(self):
        return sum(self.exponents)


    def is_polynomial(self):
        return all(e >= 0 for e in self.exponents)


    def divides(self, other):
        return all(a <= b for a, b in zip(self.exponents, other.exponents))


    def __mul__(self, other):
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))


    def __truediv__(self, other):
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))


    def __pow__(self, k):
        return Monomial(tuple(k * e for e in self.exponents))


    def pretty(self, names=None):
        names = names or [f"v{i + 1}" for i in range(len(self.exponents))]

        def part(sign):
            return "".join(
                name if sign * e == 1 else f"{name}^{sign * e}"
                for name, e in zip(names, self.exponents) if sign * e > 0
            )

        num, den = part(1) or "1", part(-1)
        return f"{num}/{den}" if den else num



@dataclass(frozen=True)
class DiagonalAction:
    d: int
    vars: int
    generators: tuple
    names: tuple = ()

    def __post_init__(self):
        gens = tuple(tuple(int(c) % self.d for c in g) for g in self.generators)
        object.__setattr__(self, 'generators', gens)
        if not gens:
            raise ValueError("a diagonal action needs at least one generator")
        if any(len(g) != self.vars for g in gens):
            raise ValueError(f"every character vector must have length {self.vars}")


    @property
    def matrix(self):
        return np.array(self.generators, dtype=np.int64).reshape(-1, self.vars)


    def variable_names(self):
        return list(self.names) or [f"v{i + 1}" for i in range(self.vars)]



#Variables run x_1..x_n, y_1..y_n
def variable_names(n, with_y=True):
    names = [f"x{i}" for i in range(1, n + 1)]
    if with_y:
        names += [f"y{i}" for i in range(1, n + 1)]
    return tuple(names)


def family_elements(n, index):
    #e_k + index e_n for k < n
    return [
        tuple(1 if j == k else (index if j == n - 1 else 0) for j in range(n))
        for k in range(n - 1)
    ]


def family_action(d, n, index, with_y=True):
    if d not in CURVE_CHARACTERS:
        raise UsageError(f"the invariant families exist for d=3 and d=4, not d={d}")
    if n < 2:
        raise UsageError(f"the families need n >= 2, got {n}")

    xchar, ychar = CURVE_CHARACTERS[d]
    generators = []
    for base in family_elements(n, index):
        gen = [xchar * b for b in base]
        if with_y:
            gen += [ychar * b for b in base]
        generators.append(tuple(gen))

    return DiagonalAction(d, 2 * n if with_y else n, tuple(generators), variable_names(n, with_y))


def trivial_action(size, d=1):
    return DiagonalAction(d, size, ((0,) * size,))



### Invariance
def is_invariant(m, a):
    if len(m.exponents) != a.vars:
        raise ValueError(f"monomial has {len(m.exponents)} exponents, action has {a.vars} variables")
    return all(
        sum(e * c for e, c in zip(m.exponents, g)) % a.d == 0
        for g in a.generators
    )


def invariant_mask(exponents, a):
    return np.all((np.asarray(exponents, dtype=np.int64) @ a.matrix.T) % a.d == 0, axis=1)


def g1_criterion(exponents, n):
    """3 | i_n + i_k for 1 <= k < n, on the x-exponents."""
    exponents = np.asarray(exponents, dtype=np.int64)
    return np.all((exponents[:, :n - 1] + exponents[:, [n - 1]]) % 3 == 0, axis=1)


def h1_criterion(exponents, n):
    """For each i < n: 2 | a_i + a_n and 4 | b_i + b_n, or 2 does not divide a_i + a_n and b_i + b_n = 2 mod 4."""
    exponents = np.asarray(exponents, dtype=np.int64)
    a = exponents[:, :n - 1] + exponents[:, [n - 1]]
    b = exponents[:, n:2 * n - 1] + exponents[:, [2 * n - 1]]
    even = (a % 2 == 0) & (b % 4 == 0)
    odd = (a % 2 == 1) & (b % 4 == 2)
    return np.all(even | odd, axis=1)



### Semigroup generators
def monomials_of_degree(size, degree):
    for combo in combinations_with_replacement(range(size), degree):
        exps = [0] * size
        for idx in combo:
            exps[idx] += 1
        yield tuple(exps)


def _invariants_by_degree(a, max_degree, search_cap):
    total = comb(max_degree + a.vars, a.vars)
    if total > search_cap:
        raise BudgetExceeded(f"monomial search over {a.vars} variables up to degree {max_degree}", total, search_cap)

    for degree in range(1, max_degree + 1):
        batch = np.array(list(monomials_of_degree(a.vars, degree)), dtype=np.int64).reshape(-1, a.vars)
        for row in batch[invariant_mask(batch, a)]:
            yield tuple(int(e) for e in row)


def generators_up_to_degree(a, max_total_degree, search_cap=DEFAULT_SEARCH_CAP):
    if max_total_degree < 1:
        raise UsageError(f"max degree must be at least 1, got {max_total_degree}")

    #An invariant monomial divisible by a smaller invariant is a product of two invariants
    retained = np.zeros((0, a.vars), dtype=np.int64)
    for exps in _invariants_by_degree(a, max_total_degree, search_cap):
        row = np.array(exps, dtype=np.int64)
        if not np.any(np.all(retained <= row, axis=1)):
            retained = np.vstack([retained, row])

    logger.debug("%d generators up to degree %d", len(retained), max_total_degree)
    return [Monomial(tuple(int(e) for e in row)) for row in retained]


def verify_generator_list(a, claimed, max_degree, search_cap=DEFAULT_SEARCH_CAP):
    for m in claimed:
        if not m.is_polynomial() or not is_invariant(m, a):
            return Verdict(False, m, f"{m.pretty(a.variable_names())} is not an invariant monomial")

    gens = [m.exponents for m in claimed if m.degree > 0]
    generated = {(0,) * a.vars}

    for exps in _invariants_by_degree(a, max_degree, search_cap):
        quotients = (
            tuple(e - g for e, g in zip(exps, gen))
            for gen in gens
            if all(g <= e for e, g in zip(exps, gen))
        )
        if any(rest in generated for rest in quotients):
            generated.add(exps)
        else:
            witness = Monomial(exps)
            return Verdict(
                False, witness,
                f"{witness.pretty(a.variable_names())} is invariant but not generated",
            )
    return Verdict(True)



### Named monomials of the Z/3 and Z/4 quotients
def _mono(n, x=(), y=(), xe=1, ye=1):
    exps = [0] * (2 * n)
    for i in x:
        exps[i - 1] += xe
    for i in y:
        exps[n + i - 1] += ye
    return Monomial(exps)


def _head(n):
    return range(1, n)


def g1_generator_list(n, with_y=False, with_cubes=False):
    """The displayed generators of C[Y_n]; with_cubes adds the pure cubes x_i^3."""
    size = 2 * n if with_y else n

    def cut(m):
        return Monomial(m.exponents[:size])

    listed = [
        cut(_mono(n, x=_head(n)) * _mono(n, x=[n])**2),
        cut(_mono(n, x=_head(n))**2 * _mono(n, x=[n])),
    ]
    if with_y:
        listed = [_mono(n, y=[i]) for i in range(1, n + 1)] + listed
    if with_cubes:
        listed += [cut(_mono(n, x=[i], xe=3)) for i in range(1, n + 1)]
    return listed


def h1_even_generators(n):
    return (
        [_mono(n, y=[i], ye=4) for i in range(1, n + 1)]
        + [
            _mono(n, y=_head(n)) * _mono(n, y=[n], ye=3),
            _mono(n, y=_head(n), ye=3) * _mono(n, y=[n]),
        ]
        + [_mono(n, x=[i], xe=2) for i in range(1, n + 1)]
        + [_mono(n, x=range(1, n + 1))]
    )


def h1_odd_generators(n):
    x_head, x_n = _mono(n, x=_head(n)), _mono(n, x=[n])
    y_head, y_all, y_n = _mono(n, y=_head(n)), _mono(n, y=range(1, n + 1)), _mono(n, y=[n])
    return [
        y_head**2 * x_head,
        y_head**2 * x_n,
        y_all * x_head,
        y_all * x_n,
        y_n**2 * x_head,
        y_n**2 * x_n,
        y_all**3 * x_head,
        y_all**3 * x_n,
        y_head**2 * y_n**4 * x_n,
        y_head**2 * y_n**4 * x_head,
    ]


def h1_generator_list(n, completed=False):
    """Both displayed lists; completed adds y_1^2...y_n^2, which the free semigroup needs."""
    listed = h1_even_generators(n) + h1_odd_generators(n)
    if completed:
        listed.append(_mono(n, y=range(1, n + 1), ye=2))
    return listed



### Formal identities
def substitutions(n):
    x_n, y_n = _mono(n, x=[n]), _mono(n, y=[n])
    return {
        't_n': x_n**2,
        'z1': _mono(n, x=_head(n)) / x_n,
        'z2': _mono(n, y=_head(n)) / y_n,
        'w': y_n**2 * x_n,
        'y_n^4': y_n**4,
        'y_2^2x_n': _mono(n, y=[2], ye=2) * x_n,
    }


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: Monomial
    rhs: tuple    #(name, multiplicity) pairs
    erratum: bool = False
    corrected: tuple = ()


def h1_identities(n):
    """The monomial identities behind C(Z_n) = C(t_1, ..., t_n, z_2), minus those using the curve equation.

    Two of them are printed with y_2^2 x_n where y_n^2 x_n is meant; they are
    kept as printed and flagged, with the corrected right-hand side attached.
    """
    x_head, x_all, x_n = _mono(n, x=_head(n)), _mono(n, x=range(1, n + 1)), _mono(n, x=[n])
    y_head, y_all, y_n = _mono(n, y=_head(n)), _mono(n, y=range(1, n + 1)), _mono(n, y=[n])

    def ident(name, lhs, *rhs, **kwargs):
        return Identity(name, lhs, tuple(rhs), **kwargs)

    return [
        ident('y_head*y_n^3', y_head * y_n**3, ('z2', 1), ('y_n^4', 1)),
        ident('y_head^3*y_n', y_head**3 * y_n, ('z2', 3), ('y_n^4', 1)),
        ident('x_all', x_all, ('z1', 1), ('t_n', 1)),
        ident('y_head^2*x_head', y_head**2 * x_head, ('z1', 1), ('z2', 2), ('w', 1)),
        ident('y_head^2*x_n', y_head**2 * x_n, ('z2', 2), ('w', 1)),
        ident('y_all*x_head', y_all * x_head, ('z2', 1), ('w', 1), ('z1', 1)),
        ident('y_all*x_n', y_all * x_n, ('z2', 1), ('w', 1)),
        ident('y_n^2*x_head', y_n**2 * x_head, ('w', 1), ('z1', 1)),
        ident('y_all^3*x_n', y_all**3 * x_n, ('z2', 3), ('y_n^4', 1), ('w', 1)),
        ident('y_all^3*x_head', y_all**3 * x_head, ('z2', 3), ('w', 1), ('y_n^4', 1), ('z1', 1)),
        ident(
            'y_head^2*y_n^4*x_n', y_head**2 * y_n**4 * x_n,
            ('z2', 2), ('y_2^2x_n', 1), ('y_n^4', 1),
            erratum=True, corrected=(('z2', 2), ('w', 1), ('y_n^4', 1)),
        ),
        ident(
            'y_head^2*y_n^4*x_head', y_head**2 * y_n**4 * x_head,
            ('z2', 2), ('y_2^2x_n', 1), ('y_n^4', 1), ('z1', 1),
            erratum=True, corrected=(('z2', 2), ('w', 1), ('y_n^4', 1), ('z1', 1)),
        ),
    ]


def check_monomial_identity(lhs, rhs, subs):
    product = Monomial.one(len(lhs.exponents))
    for name, mult in rhs:
        if name not in subs:
            raise UsageError(f"no substitution for {name!r}")
        product = product * subs[name]**mult

    difference = lhs / product
    if any(difference.exponents):
        return Verdict(False, difference.exponents, f"exponent vectors differ by {difference.exponents}")
    return Verdict(True)



### Twisted families
def subgroup_closure(generators, d):
    generators = [tuple(c % d for c in g) for g in generators]
    size = len(generators[0]) if generators else 0
    seen = {(0,) * size}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for g in generators:
                w = tuple((a + b) % d for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def twist_conjugation_check(d, n, twist, source=1, target=None):
    """Does (m_1, ..., m_n) -> (m_1, ..., m_{n-1}, twist m_n) carry the source family onto the target?"""
    if gcd(twist, d) != 1:
        raise UsageError(f"twist {twist} is not coprime to d={d}")
    target = twist * source % d if target is None else target

    if d not in CURVE_CHARACTERS or n < 2:
        raise UsageError(f"no twisted family for d={d}, n={n}")
    source_gens = [tuple(c % d for c in g) for g in family_elements(n, source)]
    target_group = subgroup_closure(family_elements(n, target), d)

    images = [g[:-1] + (twist * g[-1] % d,) for g in source_gens]
    for gen, image in zip(source_gens, images):
        if image not in target_group:
            return Verdict(False, (gen, image), f"image {image} of {gen} is outside the target group")

    if subgroup_closure(images, d) != target_group:
        return Verdict(False, None, "images generate a proper subgroup of the target group")
    return Verdict(True)
