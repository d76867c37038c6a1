from .errors import (
    Verdict,
    KummerError,
    UsageError,
    ParseError,
    VerificationError,
    BudgetExceeded,
    NonIntegerExponentError,
    HodgeInvariantError,
    ChartError,
    LatticeError
)
from .fracpoly import (
    FracPoly,
    add,
    mul,
    power,
    coefficient,
    integer_part_euler
)
from .curves import (
    FixedPointTable,
    fixed_point_table,
    derive_fixed_point_table,
    tables_agree
)
from .diamond import HodgeDiamond
from .orbifold import (
    GroupElement,
    FixedLocus,
    Orbit,
    enumerate_group,
    age,
    fixed_locus,
    act_on_labels,
    orbits_and_stabilizers,
    invariant_cohomology_dims,
    chen_ruan_poincare,
    closed_form_poincare,
    closed_form_invariant_dims,
    euler_closed,
    identity_sector,
    orbit_count_closed,
    root_of_unity_euler,
    hodge_diamond
)
from .toric import (
    CyclicQuotient,
    Chart,
    Triangulation,
    element_age,
    junior_elements,
    power_quotient,
    verify_chart_invariance,
    verify_chart_crepancy,
    lift_action,
    cone_from_chart,
    chart_from_cone,
    triangulation_from_charts,
    verify_triangulation
)
from .invariants import (
    DiagonalAction,
    Monomial,
    family_action,
    is_invariant,
    generators_up_to_degree,
    verify_generator_list,
    check_monomial_identity,
    twist_conjugation_check
)
