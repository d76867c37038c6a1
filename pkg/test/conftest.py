import os, json, random

import pytest

from kummer import FracPoly, fixed_point_table


ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURES = os.path.join(ROOT, 'fixtures')



@pytest.fixture(scope='session')
def chart_bundle():
    with open(os.path.join(FIXTURES, 'prop31_charts.json'), 'r') as f:
        return json.load(f)


@pytest.fixture(scope='session')
def quotient_data():
    with open(os.path.join(FIXTURES, 'remark34_quotients.json'), 'r') as f:
        return json.load(f)


@pytest.fixture(params=[2, 3, 4, 6])
def curve_table(request):
    return fixed_point_table(request.param)



def random_poly(rng, terms=4, max_exp=3):
    """Small polynomial with exponents in (1/12)Z."""
    return FracPoly({
        (rng.randrange(0, 12 * max_exp), rng.randrange(0, 12 * max_exp)): rng.randint(-5, 5)
        for _ in range(terms)
    })


@pytest.fixture
def rng():
    return random.Random(20240601)
