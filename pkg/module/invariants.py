import logging

from kummer import (
    DiagonalAction,
    Monomial,
    UsageError,
    VerificationError,
    check_monomial_identity,
    family_action,
    generators_up_to_degree,
    twist_conjugation_check,
    verify_generator_list
)
from kummer.invariants import (
    g1_generator_list,
    h1_generator_list,
    h1_identities,
    substitutions
)
from kummer.toric import load_json
from kummer.errors import ParseError
from .report import Report, draw_table, mark


logger = logging.getLogger('kummer.invariants')

# family name -> (d, index)
FAMILIES = {'g1': (3, 1), 'g2': (3, 2), 'h1': (4, 1), 'h3': (4, 3)}
DEFAULT_TWIST = {3: 2, 4: 3}




class InvariantChecker:
    def __init__(self, config):
        super(InvariantChecker, self).__init__()

        self.action = config.action
        self.n = config.n
        self.file = config.file
        self.max_degree = config.max_degree
        self.search_cap = config.search_cap

        self.family = (config.family or ('g1' if config.d in (None, 3) else 'h1')).lower()
        if self.family not in FAMILIES:
            raise UsageError(f"unknown family {self.family!r}, expected one of {sorted(FAMILIES)}")
        self.d, self.index = FAMILIES[self.family]
        if config.d is not None and config.d != self.d:
            raise UsageError(f"family {self.family} lives over d={self.d}, not d={config.d}")

        self.with_y = (config.vars or ('x' if self.d == 3 else 'xy')) == 'xy'
        self.twist_factor = config.twist or DEFAULT_TWIST[self.d]


    def run(self):
        steps = {
            'gens': self.gens,
            'verify': self.verify,
            'identity': self.identity,
            'twist': self.twist_check,
        }
        return steps[self.action]()


    def gens(self):
        a = family_action(self.d, self.n, self.index, self.with_y)
        names = a.variable_names()
        found = generators_up_to_degree(a, self.max_degree, self.search_cap)

        payload = {
            'family': self.family,
            'd': self.d,
            'n': self.n,
            'vars': list(names),
            'max_degree': self.max_degree,
            'generators': [list(m.exponents) for m in found],
        }
        txt = f"{self.family.upper()} on {', '.join(names)}: {len(found)} generators up to degree {self.max_degree}\n"
        txt += "".join(f"  {m.pretty(names)}\n" for m in found)
        return Report(payload, txt)


    def reference_lists(self):
        """(name, action, claimed, must_pass) for the family's displayed lists."""
        n = self.n
        if self.d == 3:
            a = family_action(3, n, self.index, with_y=True)
            return [
                ('displayed', a, g1_generator_list(n, with_y=True), False),
                ('displayed + cubes', a, g1_generator_list(n, with_y=True, with_cubes=True), True),
            ]

        a = family_action(4, n, self.index, with_y=True)
        lists = [
            ('displayed', a, h1_generator_list(n), False),
            ('completed', a, h1_generator_list(n, completed=True), n == 2),
        ]
        if n > 2:
            lists.append(('computed', a, generators_up_to_degree(a, self.max_degree, self.search_cap), True))
        return lists


    def custom_list(self):
        data = load_json(self.file)
        try:
            a = DiagonalAction(int(data['d']), int(data['vars']), tuple(map(tuple, data['generators'])))
            claimed = [Monomial(tuple(m)) for m in data['claimed']]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad action file: {exc}", self.file)
        return [('file', a, claimed, True)]


    def verify(self):
        if self.index != 1 and not self.file:
            raise UsageError("displayed generator lists exist for g1 and h1 only")
        lists = self.custom_list() if self.file else self.reference_lists()

        rows, results, failures = [], [], []
        for name, a, claimed, must_pass in lists:
            verdict = verify_generator_list(a, claimed, self.max_degree, self.search_cap)
            witness = verdict.witness.pretty(a.variable_names()) if isinstance(verdict.witness, Monomial) else ''
            rows.append([name, len(claimed), mark(verdict.passed), witness, 'yes' if must_pass else ''])
            results.append({
                'list': name,
                'size': len(claimed),
                'passed': verdict.passed,
                'witness': list(verdict.witness.exponents) if isinstance(verdict.witness, Monomial) else None,
                'required': must_pass,
            })
            if must_pass and not verdict:
                failures.append(f"{self.family} {name} list: {verdict.message}")

        payload = {'family': self.family, 'n': self.n, 'max_degree': self.max_degree, 'lists': results}
        txt = draw_table(['list', 'size', 'verdict', 'witness', 'required'], rows) + "\n"
        return Report(payload, txt, VerificationError.exit_code if failures else 0, failures)


    def identity(self):
        subs = substitutions(self.n)
        rows, results, failures = [], [], []

        for ident in h1_identities(self.n):
            printed = check_monomial_identity(ident.lhs, ident.rhs, subs)
            corrected = check_monomial_identity(ident.lhs, ident.corrected, subs) if ident.erratum else None
            holds = corrected.passed if ident.erratum else printed.passed

            rows.append([
                ident.name, mark(printed.passed),
                mark(corrected.passed) if corrected else '',
                'erratum' if ident.erratum else '',
            ])
            results.append({
                'identity': ident.name,
                'printed': printed.passed,
                'corrected': None if corrected is None else corrected.passed,
                'erratum': ident.erratum,
            })
            if not holds:
                failures.append(f"identity {ident.name}: {(corrected or printed).message}")

        payload = {'n': self.n, 'identities': results}
        txt = draw_table(['identity', 'printed', 'corrected', 'note'], rows) + "\n"
        return Report(payload, txt, VerificationError.exit_code if failures else 0, failures)


    def twist_check(self):
        verdict = twist_conjugation_check(self.d, self.n, self.twist_factor, source=self.index)
        target = self.twist_factor * self.index % self.d
        name = f"{self.family.upper()} -> {self.family[0].upper()}{target}"

        payload = {
            'd': self.d,
            'n': self.n,
            'twist': self.twist_factor,
            'source': self.family,
            'target': f"{self.family[0]}{target}",
            'passed': verdict.passed,
            'message': verdict.message,
        }
        txt = f"{name} under m_n -> {self.twist_factor} m_n (n={self.n}): {mark(verdict.passed)}\n"
        if not verdict:
            return Report(payload, txt + verdict.message + "\n", VerificationError.exit_code, [verdict.message])
        return Report(payload, txt)
