import logging

from kummer import (
    ChartError,
    CyclicQuotient,
    LatticeError,
    UsageError,
    VerificationError,
    junior_elements,
    lift_action,
    triangulation_from_charts,
    verify_chart_crepancy,
    verify_chart_invariance,
    verify_triangulation
)
from kummer.toric import (
    age_table,
    load_json,
    parse_chart_bundle,
    parse_triangulation,
    triangulation_to_dict
)
from .report import Report, draw_table, mark


logger = logging.getLogger('kummer.toric')




class ToricVerifier:
    def __init__(self, config):
        super(ToricVerifier, self).__init__()

        self.action = config.action
        self.r = config.r
        self.weights = config.weights
        self.file = config.file or config.charts


    def run(self):
        if self.action == 'juniors':
            return self.juniors()
        return self.verify()


    def juniors(self):
        if self.r is None or self.weights is None:
            raise UsageError("toric juniors needs --r and --weights")
        q = CyclicQuotient(self.r, tuple(a % self.r for a in self.weights))

        juniors = junior_elements(q)
        ages = age_table(q)
        payload = {
            'quotient': str(q),
            'r': q.r,
            'weights': list(q.weights),
            'gorenstein': q.is_gorenstein,
            'juniors': juniors,
            'ages': [[m, str(age)] for m, age in ages],
        }

        txt = f"{q}: junior elements {juniors}\n"
        txt += draw_table(['m', 'age', 'junior'], [[m, age, 'yes' if m in juniors else ''] for m, age in ages])
        return Report(payload, txt + "\n")


    def verify(self):
        data = load_json(self.file)
        if isinstance(data, dict) and 'cones' in data:
            return self.verify_triangulation(parse_triangulation(data))
        return self.verify_charts(parse_chart_bundle(data))


    def verify_triangulation(self, t):
        verdict = verify_triangulation(t)
        payload = {'triangulation': triangulation_to_dict(t), 'passed': verdict.passed, 'message': verdict.message}
        txt = f"triangulation of {t.quotient} with {len(t.cones)} cones: {mark(verdict.passed)}\n"
        if not verdict:
            txt += verdict.message + "\n"
            return Report(payload, txt, VerificationError.exit_code, [verdict.message])
        return Report(payload, txt)


    def check_chart(self, case, chart, expected):
        q = case.quotient
        invariant = verify_chart_invariance(chart, q)
        crepant = verify_chart_crepancy(chart, q)
        lift = lift_action(chart, case.linearisation, q.r)
        lift_ok = expected is None or tuple(e % q.r for e in expected) == lift

        messages = [v.message for v in (invariant, crepant) if not v]
        if not lift_ok:
            messages.append(f"lift {lift} != expected {expected}")

        return {
            'label': chart.label,
            'monomials': list(chart.monomials()),
            'invariant': invariant.passed,
            'crepant': crepant.passed,
            'lift': list(lift),
            'expected_lift': None if expected is None else list(expected),
            'passed': not messages,
            'messages': messages,
        }


    def verify_charts(self, cases):
        results, rows, failures = [], [], []

        for case in cases:
            charts = [self.check_chart(case, c, e) for c, e in zip(case.charts, case.lifts)]
            for res in charts:
                rows.append([
                    case.case, res['label'], ", ".join(res['monomials']),
                    mark(res['invariant']), mark(res['crepant']),
                    ",".join(map(str, res['lift'])), mark(res['passed']),
                ])
                failures += [f"case {case.case} chart {res['label']}: {msg}" for msg in res['messages']]

            try:
                fan = verify_triangulation(triangulation_from_charts(case.charts, case.quotient))
                fan_passed, fan_message = fan.passed, fan.message
            except (ChartError, LatticeError) as exc:
                fan_passed, fan_message = False, str(exc)
            if not fan_passed:
                failures.append(f"case {case.case} fan: {fan_message}")

            results.append({
                'case': case.case,
                'quotient': str(case.quotient),
                'linearisation': list(case.linearisation),
                'charts': charts,
                'fan': {'passed': fan_passed, 'message': fan_message},
            })

        header = ['case', 'chart', 'coordinates', 'invariant', 'crepant', 'lift', 'verdict']
        txt = draw_table(header, rows) + "\n"
        txt += "".join(
            f"fan of case {res['case']} {res['quotient']}: {mark(res['fan']['passed'])}\n"
            for res in results
        )

        n_charts = sum(len(res['charts']) for res in results)
        n_passed = sum(c['passed'] for res in results for c in res['charts'])
        txt += f"{n_passed}/{n_charts} charts pass\n"

        payload = {'cases': results, 'charts': n_charts, 'passed': n_passed, 'ok': not failures}
        return Report(payload, txt, VerificationError.exit_code if failures else 0, failures)
