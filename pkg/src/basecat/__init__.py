"""basecat: finite category presentations, the categories a functor builds,
and brute-force verification of their fibration structure."""

from .core import (
    Arrow,
    FinCat,
    FinFunctor,
    IsoWitness,
    compose_functors,
    coproduct_categories,
    identity_functor,
    normalize,
    op_functor,
    op_name,
    opposite,
    product_category,
    same_presentation,
    strip_op_marks,
    validate_category,
    validate_functor,
    validate_witness,
)
from .iso import BudgetExhausted, NotIsomorphic, find_isomorphism
from .sets import (
    ConcreteStructure,
    FinFn,
    FinSetObj,
    PullbackSquare,
    compose_fn,
    fiberwise_count,
    identity_fn,
    pullback_finset,
    validate_concrete,
    verify_pullback_universal,
)
from .family import IndexedFamily, validate_family
from .constructions import (
    ConstructedCategory,
    GroupAction,
    abstract_left_action,
    abstract_right_action,
    concrete_graph_category,
    concrete_left_action,
    concrete_right_action,
    contravariant_via_witness,
    discrete_family,
    family_from_functor,
    graph_category,
    grothendieck_strict,
    inverse_witness,
    right_action_selfdual,
    transformation_groupoid,
    trivial_categorify,
    validate_group_action,
    verify_main_prop,
    verify_prop4,
)
from .fibration import (
    Cleavage,
    FunctorOver,
    MissingLift,
    MissingOpLift,
    OpCleavage,
    check_fibration,
    check_opfibration,
    check_split,
    check_split_op,
    factor_vertical_cartesian,
    is_cartesian,
    is_opcartesian,
    property_cartesian_compose,
    property_cartesian_over_iso,
    recover_indexed,
)
from .report import Report
from . import corpus, dot, dsl, errors, suites

__version__ = "0.1.0"
