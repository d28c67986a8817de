"""Concrete categories, structures and actions in exact arithmetic."""

from .actions import (BUILDERS, ParamOutOfBounds, UnknownAction, build_action,
                      default_gms_family, flatten_comonad, three_point_space)
from .extrat import INF, ZERO, ExtRat, emax, emin, esup
from .finset import fs_category, fs_cartesian, fs_cocartesian, fs_op_cartesian
from .gms import (FinGMS, GMSError, NotLowerBound, NotMonotone, d_space,
                  empty_gms, gms_act, gms_category, gms_chain_colimit,
                  gms_coproduct, gms_internal_hom, gms_iso_exists, gms_tensor,
                  make_gms, nonexpansive_maps, one_point, parse_gms_json)
from .lattice import FinLattice, LatticeError, chain, diamond, parse_lattice_json
from .matcat import matcat_category, matcat_dual_pair, matcat_monoidal
from .structures import (DEFAULT_GRID, addition_structure, grid_structure,
                         gms_structure, thin_monoidal, truth_values_structure)
