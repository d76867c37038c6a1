import os, sys, yaml, logging

from kummer.curves import (
    SUPPORTED_D,
    derive_fixed_point_table,
    fixed_point_table,
    tables_agree
)


logging.basicConfig(format='%(name)s:%(levelname)s:%(message)s', level=logging.INFO)
logger = logging.getLogger('kummer.setup')




def check_tables():
    for d in SUPPORTED_D:
        table, coords = derive_fixed_point_table(d)
        hard_coded = fixed_point_table(d)

        #Derived and hard-coded tables must describe the same phi action
        assert tables_agree(hard_coded, table), f"fixed point table of E_{d} does not match its curve"

        logger.info(f"E_{d}: {len(coords)} fixed points across all powers")
        for label, pt in coords.items():
            logger.info(f"  {label}: {'infinity' if pt is None else f'({pt[0]}, {pt[1]})'}")



def check_fixtures():
    assert os.path.exists('config.yaml')
    with open('config.yaml', 'r') as f:
        fixtures = yaml.load(f, Loader=yaml.FullLoader)['fixtures']

    for path in fixtures.values():
        assert os.path.exists(path), f"missing fixture {path}"




def main():
    #Fixtures ship with the repo
    check_fixtures()

    #Fixed point tables against the Weierstrass models
    check_tables()



if __name__ == '__main__':
    main()

    #Build tools invoke setup.py with a command; metadata lives in pyproject.toml
    if len(sys.argv) > 1:
        from setuptools import setup
        setup()
