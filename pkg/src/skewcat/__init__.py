"""Semidirect products of skew monoidal categories as executable data.

Finite categories, skew monoidal structures, weak/strong actions and
the semidirect product construction, together with checkers that verify
every coherence law on concrete instances in exact arithmetic.
"""

from .action import (InvalidAction, MonoidAction, StrongAction, WeakAction,
                     all_actions, all_monoid_tables, check_strong_action,
                     check_weak_action, lift_monoid_action)
from .closedness import (CocartesianData, DualData, InternalHomData,
                         LeftClosedWithProducts, MissingHomData, NoDual,
                         NotInitial, NotStrong, RightAdjointData,
                         TriangleHomData, adjoint_from_duals,
                         check_adjoint_triangles, check_duality,
                         check_hom_adjunction, check_initial_preservation,
                         left_closed_hom, left_dual_sd, left_hom_data,
                         right_closed_hom, right_closed_hom_via_dual,
                         right_hom_data, right_hom_via_dual_data)
from .core import (FiniteCategory, FunctorData, IllTyped, Mor, NatTransData,
                   NotEnumerable, check_category_axioms, check_functor,
                   check_nat, category_from_json, category_to_json,
                   discrete_category, enumerate_hom, monoid_category,
                   opposite_category, product_category, table_category,
                   thin_category)
from .harness import (DegenerateProbe, SuiteConfig, UnknownSuite,
                      counterexample_left_closed, counterexample_right_closed,
                      run_suite)
from .monoidal import (ComonadLawViolation, InvertibilityWitness,
                       LaxMonoidalComonad, LaxMonoidalFunctorData,
                       MissingWitness, MonoidalNatData, ShapeError,
                       SkewMonoidalStructure, check_comonad,
                       check_lax_monoidal_functor, check_monoidal_invertibility,
                       check_monoidal_nat, check_skew_laws)
from .report import Budget, CheckReport, SCHEMA_VERSION
from .semidirect import (SemidirectMonoid, SemidirectStructure,
                         build_semidirect, check_monoid_reduction,
                         corepresented_skew, monoid_semidirect,
                         one_object_action)

__version__ = "0.1.0"
