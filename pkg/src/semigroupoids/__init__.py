"""Finite Exel semigroupoids, inverse semigroupoids, their actions,
semidirect products, germ quotients and the bisection duality."""
from .core import (
    GraphedSemigroupoid,
    GraphingChoice,
    Homomorphism,
    PartialMagma,
    Semigroupoid,
    categorical_witness,
    enumerate_graphings,
    exel_violations,
    graph,
    homomorphism,
    is_categorical,
    partial_magma,
    semigroupoid,
    validate_exel,
    validate_graphed,
)
from .inverse import (
    InverseSemigroupoid,
    classify,
    detect_inverse,
    make_inverse,
    order_axioms_check,
)
from .actions import Preaction, ipi, munn_action, preaction, validate_preaction, wagner_preston
from .semidirect import eta, semidirect_product, underlying_groupoid
from .quotients import (
    Congruence,
    Preorder,
    congruence_closure,
    germ_congruence,
    initial_groupoid,
    is_idempotent_pure,
    quotient,
)
from .duality import kappa, kb, natural_sigma, p_functor, ultrafilters, validate_sigma, zeta
from .iso import find_isomorphism, is_isomorphic
from .dsl import Document, format_document, load, parse
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
