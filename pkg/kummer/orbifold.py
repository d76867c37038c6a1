import time, logging
import numpy as np
import sympy as sp
from math import comb
from fractions import Fraction
from itertools import product
from functools import lru_cache
from dataclasses import dataclass
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor

from .curves import SUPPORTED_D, fixed_point_table
from .diamond import HodgeDiamond
from .errors import BudgetExceeded, NonIntegerExponentError, UsageError, VerificationError
from .fracpoly import DENOM, FracPoly


logger = logging.getLogger('kummer.orbifold')

#Largest n enumerated by default for each d
DEFAULT_BUDGET = {2: 6, 3: 6, 4: 6, 6: 5}



def validate_d(d):
    if d not in SUPPORTED_D:
        raise UsageError(f"unsupported d={d}, expected one of {SUPPORTED_D}")


def validate_n(n):
    if n < 1:
        raise UsageError(f"dimension n must be positive, got {n}")


def check_budget(d, n, budget=None):
    validate_d(d)
    validate_n(n)

    limit = DEFAULT_BUDGET[d] if budget is None else budget
    if n > limit:
        raise BudgetExceeded(f"enumeration of G_{{{d},{n}}} (n)", n, limit)



@dataclass(frozen=True)
class GroupElement:
    d: int
    residues: tuple

    def __post_init__(self):
        if any(not 0 <= r < self.d for r in self.residues):
            raise ValueError(f"residues {self.residues} not reduced mod {self.d}")
        if sum(self.residues) % self.d:
            raise ValueError(f"residues {self.residues} do not sum to 0 mod {self.d}")


    @property
    def n(self):
        return len(self.residues)


    @property
    def support(self):
        return tuple(i for i, r in enumerate(self.residues) if r)


    @property
    def free(self):
        return tuple(i for i, r in enumerate(self.residues) if not r)


    @property
    def is_identity(self):
        return not any(self.residues)


    def __add__(self, other):
        return GroupElement(
            self.d,
            tuple((a + b) % self.d for a, b in zip(self.residues, other.residues)),
        )


    def counts(self):
        return tuple(self.residues.count(k) for k in range(1, self.d))



def enumerate_group(d, n):
    validate_d(d)
    validate_n(n)

    return [
        GroupElement(d, head + ((-sum(head)) % d,))
        for head in product(range(d), repeat=n - 1)
    ]


def group_generators(d, n):
    """e_i - e_n for i < n; they generate G_{d,n}."""
    return [
        GroupElement(d, tuple(1 if j == i else (d - 1 if j == n - 1 else 0) for j in range(n)))
        for i in range(n - 1)
    ]


@lru_cache(maxsize=None)
def _group_array(d, n):
    return np.array([g.residues for g in enumerate_group(d, n)], dtype=np.int64).reshape(-1, n)


def age(g):
    return Fraction(sum(g.residues), g.d)



@dataclass(frozen=True)
class FixedLocus:
    g: GroupElement
    support: tuple
    free_count: int
    labels: tuple


def fixed_locus(g, table=None):
    table = table or fixed_point_table(g.d)
    support = g.support
    labels = tuple(product(*(table.fixed_points(g.residues[i]) for i in support)))
    return FixedLocus(g=g, support=support, free_count=g.n - len(support), labels=labels)


def act_on_labels(h, g, label, table=None):
    table = table or fixed_point_table(g.d)
    return tuple(
        table.apply(g.residues[i], h.residues[i], x)
        for i, x in zip(g.support, label)
    )



class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}


    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y


    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x



@dataclass(frozen=True)
class Orbit:
    representative: tuple
    size: int
    stabilizer_size: int
    projection: tuple    #stabiliser projected onto the free coordinates


def orbits_and_stabilizers(g, table=None, budget=None):
    check_budget(g.d, g.n, budget)
    table = table or fixed_point_table(g.d)
    d, n = g.d, g.n

    locus = fixed_locus(g, table)
    uf = UnionFind(locus.labels)
    for h in group_generators(d, n):
        for label in locus.labels:
            uf.union(label, act_on_labels(h, g, label, table))

    classes = defaultdict(list)
    for label in locus.labels:
        classes[uf.find(label)].append(label)

    elements = _group_array(d, n)
    free = list(g.free)
    orbits = []

    for members in sorted(classes.values(), key=min):
        rep = min(members)

        #h stabilises rep iff phi^{h_i} fixes rep_i on every support coordinate
        mask = np.ones(len(elements), dtype=bool)
        for i, x in zip(locus.support, rep):
            allowed = np.zeros(d, dtype=bool)
            allowed[sorted(table.stabilizing_powers(g.residues[i], x))] = True
            mask &= allowed[elements[:, i]]
        stabilizer = elements[mask]

        if len(members) * len(stabilizer) != len(elements):
            raise VerificationError(
                f"orbit-stabiliser mismatch for g={g.residues}, rep={rep}: "
                f"{len(members)} * {len(stabilizer)} != {len(elements)}"
            )

        if free:
            projected = np.unique(stabilizer[:, free], axis=0)
            projection = tuple(tuple(int(v) for v in row) for row in projected)
        else:
            projection = ((),)

        orbits.append(Orbit(rep, len(members), len(stabilizer), projection))

    return orbits



def invariant_cohomology_dims(chars, ell, d):
    """dims[i][j] = #{(S, T) : |S|=i, |T|=j, sum_S h - sum_T h = 0 mod d for all h in chars}.

    dz_S ^ dzbar_T spans H^{i,j}(E^l); a character h acts on it by
    zeta^(sum_S h - sum_T h), so the pair is invariant iff S and T have the
    same weight vector against every character.
    """
    if ell == 0:
        return [[1]]

    subsets = np.array(list(product((0, 1), repeat=ell)), dtype=np.int64).reshape(-1, ell)
    sizes = subsets.sum(axis=1)
    chars = np.array(chars, dtype=np.int64).reshape(-1, ell)
    weights = (subsets @ chars.T) % d

    histograms = {}
    for row, size in zip(weights, sizes):
        hist = histograms.setdefault(row.tobytes(), np.zeros(ell + 1, dtype=np.int64))
        hist[size] += 1

    dims = np.zeros((ell + 1, ell + 1), dtype=np.int64)
    for hist in histograms.values():
        dims += np.outer(hist, hist)
    return dims.tolist()


@lru_cache(maxsize=4096)
def _cached_dims(chars, ell, d):
    return invariant_cohomology_dims(chars, ell, d)



def sector_contribution(g, table=None, budget=None):
    shift = age(g)
    ell = len(g.free)
    terms = defaultdict(int)

    for orbit in orbits_and_stabilizers(g, table, budget):
        dims = _cached_dims(orbit.projection, ell, g.d)
        for i in range(ell + 1):
            for j in range(ell + 1):
                if dims[i][j]:
                    poly = FracPoly.monomial(dims[i][j], i + shift, j + shift)
                    for key, coeff in poly:
                        terms[key] += coeff

    return FracPoly(terms)


def _sector_sum(job):
    d, n, budget, chunk = job
    total = FracPoly.zero()
    for residues in chunk:
        total = total + sector_contribution(GroupElement(d, residues), budget=budget)
    return total


def chen_ruan_poincare(d, n, workers=1, chunk_size=64, budget=None):
    check_budget(d, n, budget)
    start = time.time()

    elements = [g.residues for g in enumerate_group(d, n)]
    jobs = [
        (d, n, budget, elements[idx:idx + chunk_size])
        for idx in range(0, len(elements), chunk_size)
    ]
    logger.info("--- Chen-Ruan sum over |G_{%d,%d}| = %d elements in %d chunks",
                d, n, len(elements), len(jobs))

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sector_sum, jobs))
    else:
        parts = [_sector_sum(job) for job in jobs]

    #Exact addition, any merge order
    total = sum(parts, FracPoly.zero())
    logger.info("--- Chen-Ruan sum for d=%d n=%d took %.2fs", d, n, time.time() - start)
    return total


def identity_sector(d, n, budget=None):
    return sector_contribution(GroupElement(d, (0,) * n), budget=budget)



### Closed forms
def _root(k, m):
    return FracPoly.xy_power(Fraction(k, m))


def closed_form_poincare(d, n):
    validate_d(d)
    validate_n(n)
    X, Y, one = FracPoly.X(), FracPoly.Y(), FracPoly.one()

    if d == 2:
        return (X + Y) ** n + (one + X * Y + 4 * _root(1, 2)) ** n

    if d == 3:
        return X ** n + Y ** n + (one + _root(1, 3)) ** (3 * n)

    if d == 4:
        base = one + X * Y + 2 * _root(1, 4) + 3 * _root(2, 4) + 2 * _root(3, 4)
        return X ** n + Y ** n + base ** n + _root(2, 4) ** n

    base = (
        one + X * Y + _root(1, 6) + 2 * _root(2, 6)
        + 2 * _root(3, 6) + 2 * _root(4, 6) + _root(5, 6)
    )
    return (
        X ** n + Y ** n + base ** n
        + FracPoly.xy_power(Fraction(n, 2), 2)
        + (_root(2, 6) + _root(4, 6)) ** n
    )


def closed_form_invariant_dims(d, n, p, q):
    """dim H^{p,q}(E_d^n)^{G_{d,n}} by the case split of the invariant-forms lemma."""
    validate_d(d)
    if not (0 <= p <= n and 0 <= q <= n):
        raise UsageError(f"(p, q)=({p}, {q}) outside [0, {n}]")

    if d == 2:
        diagonal, antidiagonal = p == q, p + q == n
        if diagonal and antidiagonal:
            return 2 * comb(n, p)
        if diagonal or antidiagonal:
            return comb(n, p)
        return 0

    if p == q or (p, q) in ((0, n), (n, 0)):
        return comb(n, p)
    return 0


def euler_closed(d, n):
    validate_d(d)
    validate_n(n)
    sign = (-1) ** n

    if d == 2:
        value = Fraction(6 ** n + 3 * (-2) ** n, 2)
    elif d == 3:
        value = Fraction(8 ** n + 8 * sign, 3)
    elif d == 4:
        value = Fraction(9 ** n + 3, 4) + 3 * sign
    else:
        value = Fraction(10 ** n + 3 * 2 ** n + 8, 6) + 4 * sign

    if value.denominator != 1:
        raise VerificationError(f"Euler formula for d={d}, n={n} is not an integer: {value}")
    return value.numerator



#Orbits of phi on Fix(phi^k), counted per coordinate
ORBITS_PER_RESIDUE = {
    2: {1: 4},
    3: {1: 3, 2: 3},
    4: {1: 2, 2: 3, 3: 2},
    6: {1: 1, 2: 2, 3: 2, 4: 2, 5: 1},
}


def orbit_count_closed(g):
    """Orbit count of G_{d,n} on F(g) as stated in the Hodge number derivation."""
    count = 1
    for r in g.residues:
        if r:
            count *= ORBITS_PER_RESIDUE[g.d][r]

    n, counts = g.n, g.counts()
    if g.d == 6:
        v, w, s = counts[1], counts[2], counts[3]
        if w == n:
            count += 2
        elif v + s == n:
            count += 1
    elif g.d == 4 and counts[1] == n:
        count += 1
    return count



def root_of_unity_euler(poly):
    """F(-1,-1) of the integer part of poly, by averaging over twelfth roots of unity.

    (XY)^(1/12) is rescaled by every twelfth root of unity and the results
    averaged, which kills exactly the fractional-exponent terms; X = Y = -1 is
    taken as exp(i pi). Evaluated in the cyclotomic field with sympy.
    """
    grouped = defaultdict(int)
    for (xnum, ynum), coeff in poly:
        for k in range(DENOM):
            grouped[(xnum + ynum + 2 * k * xnum) % (2 * DENOM)] += coeff

    zeta = sp.exp(sp.pi * sp.I / DENOM)
    value = sp.nsimplify(sp.simplify(sp.expand_complex(
        sum(coeff * zeta ** e for e, coeff in sorted(grouped.items())) / DENOM
    )))
    if not value.is_Integer:
        raise VerificationError(f"root-of-unity average did not reduce to an integer: {value}")
    return int(value)



def hodge_diamond(d, n, method='closed', workers=1, chunk_size=64, budget=None):
    if method == 'closed':
        poly = closed_form_poincare(d, n).integer_part()
    elif method == 'brute':
        poly = chen_ruan_poincare(d, n, workers=workers, chunk_size=chunk_size, budget=budget)
        if not poly.is_integral():
            raise NonIntegerExponentError(
                f"orbifold sum for d={d}, n={n} kept fractional terms: {poly.to_records()}"
            )
    else:
        raise UsageError(f"unknown method {method!r}, expected 'brute' or 'closed'")

    return HodgeDiamond.from_poincare(poly, n).validate()
