import logging
import sympy as sp
from dataclasses import dataclass
from types import MappingProxyType


logger = logging.getLogger('kummer.curves')

SUPPORTED_D = (2, 3, 4, 6)
INFINITY = 'a'



@dataclass(frozen=True, eq=False)
class FixedPointTable:
    d: int
    points: MappingProxyType    #k -> labels of Fix(phi^k), 0 < k < d
    action: MappingProxyType    #k -> phi restricted to Fix(phi^k)


    def fixed_points(self, k):
        return self.points[k % self.d]


    def apply(self, k, h, label):
        """phi^h applied to a point of Fix(phi^k)."""
        perm = self.action[k % self.d]
        for _ in range(h % self.d):
            label = perm[label]
        return label


    def stabilizing_powers(self, k, label):
        return frozenset(
            h for h in range(self.d) if self.apply(k, h, label) == label
        )


    def cycle_type(self, k):
        perm, seen, lengths = self.action[k % self.d], set(), []
        for start in self.points[k % self.d]:
            if start in seen:
                continue
            length, label = 0, start
            while label not in seen:
                seen.add(label)
                label = perm[label]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths))



def _table(d, points, swaps):
    action = {}
    for k, labels in points.items():
        perm = {label: label for label in labels}
        for cycle in swaps.get(k, ()):
            for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
                perm[src] = dst
        action[k] = MappingProxyType(perm)

    return FixedPointTable(
        d=d,
        points=MappingProxyType(dict(points)),
        action=MappingProxyType(action),
    )



#d=2: the four 2-torsion points, all fixed by phi_2 = -1
#d=3: infinity and (0, +-1) on y^2 = x^3 + 1, all fixed by phi_3
#d=4: on y^2 = x^3 + x, phi_4 swaps (i,0) and (-i,0) inside Fix(phi_4^2)
#d=6: on y^2 = x^3 + 1, b = (0,1), c = (0,-1), d = (-1,0), e = (-z3,0), f = (-z3^2,0)
FIXED_POINT_TABLES = MappingProxyType({
    2: _table(2, {1: ('a', 't1', 't2', 't3')}, {}),
    3: _table(3, {1: ('a', 'b', 'c'), 2: ('a', 'b', 'c')}, {}),
    4: _table(
        4,
        {1: ('a', 'b'), 2: ('a', 'b', 'p', 'q'), 3: ('a', 'b')},
        {2: [('p', 'q')]},
    ),
    6: _table(
        6,
        {
            1: ('a',),
            2: ('a', 'b', 'c'),
            3: ('a', 'd', 'e', 'f'),
            4: ('a', 'b', 'c'),
            5: ('a',),
        },
        {2: [('b', 'c')], 3: [('d', 'e', 'f')], 4: [('b', 'c')]},
    ),
})



def fixed_point_table(d):
    if d not in FIXED_POINT_TABLES:
        raise ValueError(f"unsupported d={d}, expected one of {SUPPORTED_D}")
    return FIXED_POINT_TABLES[d]



### Derivation from the Weierstrass equations
def _curve(d):
    x = sp.Symbol('x')
    zeta3 = sp.Rational(-1, 2) + sp.sqrt(3) * sp.I / 2

    #(f(x), alpha, beta) for y^2 = f(x) and phi(x, y) = (alpha x, beta y)
    return {
        2: (x**3 - x, sp.Integer(1), sp.Integer(-1)),
        3: (x**3 + 1, zeta3, sp.Integer(1)),
        4: (x**3 + x, sp.Integer(-1), sp.I),
        6: (x**3 + 1, zeta3, sp.Integer(-1)),
    }[d], x


def _is_zero(expr):
    return sp.simplify(sp.expand_complex(expr)) == 0


def _same_point(p, q):
    if p is None or q is None:
        return p is q
    return _is_zero(p[0] - q[0]) and _is_zero(p[1] - q[1])


def _affine_fixed_points(f, x, alpha_k, beta_k):
    x_forced = not _is_zero(alpha_k - 1)
    y_forced = not _is_zero(beta_k - 1)
    f0 = f.subs(x, 0)

    if x_forced and y_forced:
        return [(sp.Integer(0), sp.Integer(0))] if _is_zero(f0) else []
    if x_forced:
        y = sp.Symbol('y')
        return [(sp.Integer(0), root) for root in sp.roots(y**2 - f0, y)]
    if y_forced:
        return [(root, sp.Integer(0)) for root in sp.roots(f, x)]
    raise ValueError("phi^k is the identity; its fixed locus is the whole curve")


def derive_fixed_point_table(d):
    #Infinity is 'a', affine points are P0, P1, ... in sympy root order
    (f, alpha, beta), x = _curve(d)
    points, action, coords = {}, {}, {}

    for k in range(1, d):
        affine = _affine_fixed_points(f, x, alpha**k, beta**k)

        #Reuse labels of points already met for a smaller power
        labels = []
        for pt in [None] + affine:
            known = next(
                (name for name, other in coords.items() if _same_point(pt, other)),
                None,
            )
            if known is None:
                known = INFINITY if pt is None else f"P{len(coords) - (INFINITY in coords)}"
                coords[known] = pt
            labels.append(known)

        perm = {}
        for label in labels:
            pt = coords[label]
            image = None if pt is None else (sp.expand(alpha * pt[0]), sp.expand(beta * pt[1]))
            perm[label] = next(
                name for name in labels if _same_point(image, coords[name])
            )

        points[k] = tuple(labels)
        action[k] = MappingProxyType(perm)
        logger.debug("d=%d k=%d fixed points %s", d, k, labels)

    table = FixedPointTable(
        d=d,
        points=MappingProxyType(points),
        action=MappingProxyType(action),
    )
    return table, coords



def tables_agree(hard_coded, derived):
    return all(
        len(hard_coded.fixed_points(k)) == len(derived.fixed_points(k))
        and hard_coded.cycle_type(k) == derived.cycle_type(k)
        for k in range(1, hard_coded.d)
    )
