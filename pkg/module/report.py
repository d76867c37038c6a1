import json, logging
from dataclasses import dataclass, field

from texttable import Texttable


logger = logging.getLogger('kummer.report')



@dataclass
class Report:
    payload: dict
    text: str
    exit_code: int = 0
    failures: list = field(default_factory=list)



def draw_table(header, rows):
    table = Texttable(max_width=0)
    table.set_deco(Texttable.HEADER | Texttable.VLINES)
    table.set_cols_dtype(['t'] * len(header))
    table.add_rows([header] + [[str(cell) for cell in row] for row in rows])
    return table.draw()


def mark(passed):
    return 'pass' if passed else 'FAIL'



def render(report, config):
    if config.format == 'json':
        return json.dumps(report.payload, indent=config.indent, sort_keys=True) + "\n"
    return report.text.rstrip("\n") + "\n"


def emit(report, config):
    out = render(report, config)

    if config.out:
        with open(config.out, 'w') as f:
            f.write(out)
        logger.info("--- report written to %s", config.out)
    else:
        print(out, end='')

    for failure in report.failures:
        logger.error(failure)
    return report.exit_code
