import json, logging
import sympy as sp
from math import gcd
from fractions import Fraction
from itertools import combinations
from dataclasses import dataclass, field
from sympy.solvers.simplex import InfeasibleLPError, lpmax

from .errors import ChartError, LatticeError, ParseError, Verdict


logger = logging.getLogger('kummer.toric')

AMBIENT_VARS = 'xyzt'



#A chart is a monomial map C^k -> resolution, stored as the exponent rows of its coordinates.
#Its dual cone lives in the lattice Z^k + Z (1/r)(a_1,...,a_k).


@dataclass(frozen=True)
class CyclicQuotient:
    r: int
    weights: tuple

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"group order must be positive, got {self.r}")
        if any(not 0 <= a < self.r for a in self.weights):
            raise ValueError(f"weights {self.weights} not reduced mod {self.r}")


    @property
    def k(self):
        return len(self.weights)


    @property
    def is_gorenstein(self):
        return sum(self.weights) % self.r == 0


    @property
    def index(self):
        """[Z^k + Z (1/r) a : Z^k]."""
        return self.r // gcd(self.r, *self.weights)


    def representative(self, m):
        return tuple(Fraction(m * a % self.r, self.r) for a in self.weights)


    def __str__(self):
        return f"1/{self.r}({','.join(map(str, self.weights))})"



@dataclass(frozen=True)
class Chart:
    rows: tuple
    label: str = ''

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ChartError(f"chart {self.label!r} is not a square matrix")
        if self.matrix.det() == 0:
            raise ChartError(f"chart {self.label!r} is singular")


    @property
    def k(self):
        return len(self.rows)


    @property
    def matrix(self):
        return sp.Matrix(self.rows)


    def monomials(self):
        """The chart coordinates as Laurent monomials, e.g. ('x^4/z', 'y/x', 'z^2/x^2')."""
        return tuple(_monomial_str(row) for row in self.rows)



def _monomial_str(exponents):
    def part(sign):
        factors = []
        for var, e in zip(AMBIENT_VARS, exponents):
            e *= sign
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        return "".join(factors)

    num, den = part(1) or "1", part(-1)
    return f"{num}/{den}" if den else num



@dataclass(frozen=True)
class Triangulation:
    quotient: CyclicQuotient
    cones: tuple    #each cone is a k-tuple of points, each point a k-tuple of Fractions
    labels: tuple = field(default=())



### Ages
def element_age(q, m):
    return Fraction(sum(m * a % q.r for a in q.weights), q.r)


def age_table(q):
    return [(m, element_age(q, m)) for m in range(q.r)]


def junior_elements(q):
    return [m for m in range(1, q.r) if element_age(q, m) == 1]


def power_quotient(q, k):
    g = gcd(q.r, k)
    r = q.r // g
    return CyclicQuotient(r, tuple((k // g) * a % r for a in q.weights))



### Charts
def verify_chart_invariance(chart, q):
    for row in chart.rows:
        if sum(e * a for e, a in zip(row, q.weights)) % q.r:
            return Verdict(False, row, f"{_monomial_str(row)} is not invariant under {q}")
    return Verdict(True)


def verify_chart_crepancy(chart, q):
    sums = tuple(int(s) for s in sp.ones(1, chart.k) * chart.matrix)
    if any(s != 1 for s in sums):
        return Verdict(False, ('column sums', sums), f"column sums {sums} are not all 1")

    det = abs(int(chart.matrix.det()))
    if det != q.r:
        return Verdict(False, ('det', det), f"|det| = {det} != r = {q.r}")
    return Verdict(True)


def lift_action(chart, ambient_chars, r):
    if len(ambient_chars) != chart.k:
        raise ChartError(f"{len(ambient_chars)} characters for a {chart.k}-dimensional chart")
    return tuple(
        sum(e * c for e, c in zip(row, ambient_chars)) % r
        for row in chart.rows
    )


def in_lattice(point, q):
    return any(
        all((x - y).denominator == 1 for x, y in zip(point, q.representative(m)))
        for m in range(q.r)
    )


def cone_from_chart(chart, q):
    """Rays of the cone dual to the chart: the columns of its inverse matrix."""
    inverse = chart.matrix.inv()
    rays = []
    for j in range(chart.k):
        ray = tuple(Fraction(int(v.p), int(v.q)) for v in inverse[:, j])
        if not in_lattice(ray, q):
            raise LatticeError(
                f"chart {chart.label!r}: ray {_point_str(ray)} is not in the lattice of {q}"
            )
        rays.append(ray)
    return rays


def chart_from_cone(cone, label=''):
    inverse = _cone_matrix(cone).inv()
    if any(not v.is_Integer for v in inverse):
        raise ChartError(f"cone {[_point_str(ray) for ray in cone]} has non-integral dual generators")
    return Chart(tuple(tuple(int(v) for v in inverse.row(i)) for i in range(inverse.rows)), label)


def triangulation_from_charts(charts, q):
    return Triangulation(
        quotient=q,
        cones=tuple(tuple(cone_from_chart(chart, q)) for chart in charts),
        labels=tuple(chart.label for chart in charts),
    )



### Triangulations
def _point_str(point):
    return "(" + ", ".join(str(x) for x in point) + ")"


def _is_basis_vector(point):
    return sorted(point) == [0] * (len(point) - 1) + [1]


def _cone_matrix(cone):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in ray] for ray in cone]).T


def normalized_volume(cone, q):
    """|det| of the ray matrix in units of the covolume of the quotient lattice."""
    return abs(_cone_matrix(cone).det()) * q.index


def interiors_overlap(first, second):
    """Exact LP: is there a point strictly inside both simplicial cones?"""
    k = len(first)
    lam = sp.symbols(f'l0:{k}')
    mu = sp.symbols(f'm0:{k}')
    t = sp.Symbol('t')

    meet = _cone_matrix(first) * sp.Matrix(lam) - _cone_matrix(second) * sp.Matrix(mu)
    constraints = [sp.Eq(expr, 0) for expr in meet]
    constraints += [v >= t for v in lam + mu]
    constraints += [sp.Eq(sum(lam) + sum(mu), 1), t <= 1]
    constraints = [c for c in constraints if c is not sp.true]

    try:
        best, _ = lpmax(t, constraints)
    except InfeasibleLPError:
        return False
    return bool(best > 0)


def verify_triangulation(t):
    q = t.quotient
    labels = t.labels or tuple(str(idx) for idx in range(len(t.cones)))
    if not t.cones:
        return Verdict(False, None, "triangulation has no cones")

    total = 0
    for label, cone in zip(labels, t.cones):
        if len(cone) != q.k or any(len(ray) != q.k for ray in cone):
            return Verdict(False, label, f"cone {label} is not {q.k}-dimensional")

        for ray in cone:
            if not in_lattice(ray, q):
                return Verdict(False, (label, ray), f"ray {_point_str(ray)} of cone {label} is off the lattice")
            if any(x < 0 for x in ray):
                return Verdict(False, (label, ray), f"ray {_point_str(ray)} of cone {label} leaves the orthant")
            if not _is_basis_vector(ray) and sum(ray) != 1:
                return Verdict(
                    False, (label, ray),
                    f"ray {_point_str(ray)} of cone {label} is off the junior simplex",
                )

        volume = normalized_volume(cone, q)
        if volume != 1:
            return Verdict(False, label, f"cone {label} is not unimodular (normalized volume {volume})")
        total += volume

    if total != q.index:
        return Verdict(False, ('volume', total), f"normalized volumes sum to {total}, expected {q.index}")

    for (la, a), (lb, b) in combinations(zip(labels, t.cones), 2):
        if interiors_overlap(a, b):
            return Verdict(False, (la, lb), f"cones {la} and {lb} overlap")

    logger.debug("triangulation of %s with %d cones verified", q, len(t.cones))
    return Verdict(True)



### JSON ingestion
def _list(obj, what, where):
    if not isinstance(obj, list):
        raise ParseError(f"{what} must be a list, got {type(obj).__name__}", where)
    return obj


def _quotient(obj, where):
    try:
        r = int(obj['r'])
        if r < 1:
            raise ValueError(f"group order must be positive, got {r}")
        weights = tuple(int(a) for a in _list(obj['weights'], "'weights'", f"{where}.weights"))
        return CyclicQuotient(r, tuple(a % r for a in weights))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad quotient: {exc}", where)


def _int_vector(obj, where):
    _list(obj, "integer vector", where)
    try:
        return tuple(int(v) for v in obj)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad integer vector: {exc}", where)


@dataclass(frozen=True)
class ChartCase:
    case: str
    quotient: CyclicQuotient
    linearisation: tuple
    charts: tuple
    lifts: tuple    #expected lift per chart, None where absent


def parse_chart_bundle(data):
    """Accepts {"cases": [...]} or a single {r, weights, charts} object."""
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "$")
    cases = data['cases'] if 'cases' in data else [data]
    if not isinstance(cases, list):
        raise ParseError("'cases' must be a list", "$.cases")

    parsed = []
    for ci, case in enumerate(cases):
        where = f"cases[{ci}]" if 'cases' in data else "$"
        if not isinstance(case, dict) or not isinstance(case.get('charts'), list):
            raise ParseError("expected an object with a 'charts' list", where)

        q = _quotient(case, where)
        linearisation = _int_vector(case.get('linearisation', [0] * q.k), f"{where}.linearisation")

        charts, lifts = [], []
        for idx, chart in enumerate(case['charts']):
            cwhere = f"{where}.charts[{idx}]"
            if not isinstance(chart, dict) or 'rows' not in chart:
                raise ParseError("chart needs 'rows'", cwhere)
            rows = tuple(
                _int_vector(row, f"{cwhere}.rows[{ri}]")
                for ri, row in enumerate(_list(chart['rows'], "'rows'", f"{cwhere}.rows"))
            )
            try:
                charts.append(Chart(rows, str(chart.get('label', idx))))
            except ChartError as exc:
                raise ParseError(str(exc), cwhere)
            lifts.append(_int_vector(chart['lift'], f"{cwhere}.lift") if 'lift' in chart else None)

        parsed.append(ChartCase(
            case=str(case.get('case', ci)),
            quotient=q,
            linearisation=linearisation,
            charts=tuple(charts),
            lifts=tuple(lifts),
        ))
    return parsed


def parse_triangulation(data):
    if not isinstance(data, dict) or 'cones' not in data:
        raise ParseError("expected an object with 'cones'", "$")
    q = _quotient(data, "$")

    cones = []
    for ci, cone in enumerate(_list(data['cones'], "'cones'", "cones")):
        rays = []
        for ri, ray in enumerate(_list(cone, "cone", f"cones[{ci}]")):
            try:
                rays.append(tuple(Fraction(int(num), int(den)) for num, den in ray))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad lattice point: {exc}", f"cones[{ci}][{ri}]")
        cones.append(tuple(rays))
    return Triangulation(q, tuple(cones))


def triangulation_to_dict(t):
    return {
        'r': t.quotient.r,
        'weights': list(t.quotient.weights),
        'cones': [
            [[[x.numerator, x.denominator] for x in ray] for ray in cone]
            for cone in t.cones
        ],
    }


def load_json(path):
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}")
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), str(path))
