import time, logging

from kummer import (
    VerificationError,
    chen_ruan_poincare,
    closed_form_poincare,
    euler_closed,
    hodge_diamond,
    integer_part_euler,
    root_of_unity_euler
)
from .report import Report, draw_table, mark


logger = logging.getLogger('kummer.hodge')



def budget_for(config):
    if config.budget is not None:
        return config.budget
    return config.max_n_d6 if config.d == 6 else config.max_n_small_d




class Hodge:
    def __init__(self, config):
        super(Hodge, self).__init__()

        self.d = config.d
        self.n = config.n
        self.method = config.method
        self.layout = config.subcommand == 'diamond'

        self.workers = config.workers
        self.chunk_size = config.chunk_size
        self.budget = budget_for(config)


    def compute(self, method):
        start = time.time()
        logger.info("--- computing the %s Hodge diamond of X_{%d,%d}", method, self.d, self.n)
        diamond = hodge_diamond(
            self.d, self.n, method,
            workers=self.workers,
            chunk_size=self.chunk_size,
            budget=self.budget
        )
        logger.info("--- %s diamond took %.2fs", method, time.time() - start)
        return diamond


    def describe(self, diamond, method):
        if self.layout:
            txt = f"X_{{{self.d},{self.n}}} ({method})\n{diamond.pprint()}\n"
            txt += f"betti: {' '.join(map(str, diamond.betti()))}\n"
            return txt + f"euler: {diamond.euler()}\n"

        header = ['p\\q'] + list(range(self.n + 1))
        rows = [[p] + list(diamond.entries[p]) for p in range(self.n + 1)]
        txt = f"h^{{p,q}}(X_{{{self.d},{self.n}}}) ({method})\n{draw_table(header, rows)}\n"
        return txt + f"euler: {diamond.euler()}\n"


    def payload(self, diamond, method):
        data = diamond.to_dict(self.d, method)
        if self.layout:
            data['betti'] = [str(b) for b in diamond.betti()]
        return data


    def run(self):
        if self.method != 'both':
            diamond = self.compute(self.method)
            return Report(self.payload(diamond, self.method), self.describe(diamond, self.method))

        closed, brute = self.compute('closed'), self.compute('brute')
        diff = brute.diff(closed)

        payload = {
            'd': self.d,
            'n': self.n,
            'method': 'both',
            'closed': self.payload(closed, 'closed'),
            'brute': self.payload(brute, 'brute'),
            'match': not diff,
            'diff': [
                {'p': p, 'q': q, 'brute': str(b), 'closed': str(c)}
                for p, q, b, c in diff
            ],
        }

        txt = self.describe(brute, 'brute')
        if diff:
            rows = [[p, q, b, c] for p, q, b, c in diff]
            txt += "mismatch\n" + draw_table(['p', 'q', 'brute', 'closed'], rows) + "\n"
        else:
            txt += "match: brute force agrees with the closed form\n"

        failures = [
            f"h^{{{p},{q}}}(X_{{{self.d},{self.n}}}): brute {b} != closed {c}"
            for p, q, b, c in diff
        ]
        return Report(payload, txt, VerificationError.exit_code if diff else 0, failures)




class Euler:
    def __init__(self, config):
        super(Euler, self).__init__()

        self.d = config.d
        self.n = config.n
        self.method = config.method

        self.workers = config.workers
        self.chunk_size = config.chunk_size
        self.budget = budget_for(config)


    def brute(self):
        poly = chen_ruan_poincare(
            self.d, self.n,
            workers=self.workers,
            chunk_size=self.chunk_size,
            budget=self.budget
        )
        return integer_part_euler(poly)


    def run(self):
        values = {}
        if self.method in ('closed', 'both'):
            values['closed'] = euler_closed(self.d, self.n)
            values['roots_of_unity'] = root_of_unity_euler(closed_form_poincare(self.d, self.n))
        if self.method in ('brute', 'both'):
            values['brute'] = self.brute()

        agree = len(set(values.values())) == 1
        payload = {
            'd': self.d,
            'n': self.n,
            'method': self.method,
            'euler': {key: str(val) for key, val in values.items()},
            'match': agree,
        }

        rows = [[key, val] for key, val in values.items()]
        txt = f"e(X_{{{self.d},{self.n}}})\n{draw_table(['method', 'euler'], rows)}\n"
        if len(values) > 1:
            txt += f"agreement: {mark(agree)}\n"

        if not agree:
            failure = f"Euler numbers of X_{{{self.d},{self.n}}} disagree: {values}"
            return Report(payload, txt, VerificationError.exit_code, [failure])
        return Report(payload, txt)
