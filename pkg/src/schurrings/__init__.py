"""Schur rings over small finite groups: construction, verification and schurity.

Typical use::

    from schurrings import d8zp_sring, is_schurian
    report = is_schurian(d8zp_sring(5))
    report.schurian  # False
"""

from .automorphisms import (
    automorphism_group,
    color_matrix,
    cyclotomic,
    induced_action,
    is_schurian,
    transitivity_module,
)
from .config import LIMITS, CapExceeded
from .constructions import (
    cyc_orbit_system,
    d8zp_sring,
    k_groups,
    q8zp_l4,
    q8zp_l6,
    sigma_involution,
)
from .cyclotomy import cyc_constants, verify_l4, verify_l6
from .enumeration import enumerate_srings, schurity_census, wl_closure
from .groups import (
    Group,
    cyclic,
    dihedral,
    direct_product,
    g16,
    group_from_spec,
    quaternion8,
    quotient,
    subgroup_generated,
)
from .groups import (
    automorphism_group as group_automorphisms,
)
from .permgroups import PermGroup, find_regular_subgroup, right_regular_rep
from .srings import (
    AxiomViolation,
    SRing,
    a_subgroups,
    from_partition,
    is_algebraic_isomorphism,
    is_s_wreath,
    is_tensor,
    power_map,
    quotient_sring,
    structure_constants,
    tensor_product,
)

__version__ = "0.1.0"
