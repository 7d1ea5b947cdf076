"""Chevalley-Bass numbers of abelian number fields.

A field K is given through its maximal abelian subextension as the fixed
field of a subgroup H of (Z/mZ)^x.  :func:`chevalley_bass` returns the
Chevalley-Bass number together with the conductor, the number of roots of
unity, the two-sided bound and a log of every cohomological check.

>>> from chevbass import chevalley_bass, cyclotomic_spec
>>> chevalley_bass(cyclotomic_spec(7)).lambda_cb
28
"""

from .cbalgo import CBReport, chevalley_bass, ord_p_cb
from .cohom import H1Group, h1, h1_full, induced_map_surjective
from .errors import ChevBassError, FactorizationBoundError, InputError, InternalError, OracleSizeError
from .field import AbelianFieldSpec, FieldInvariants, cyclotomic_spec, galois_group_n, invariants
from .kernels import BACKEND
from .unitgroup import SubgroupBasis, UnitSubgroup, subgroup_basis

__version__ = "0.1.0"

__all__ = [
    "AbelianFieldSpec",
    "BACKEND",
    "CBReport",
    "ChevBassError",
    "FactorizationBoundError",
    "FieldInvariants",
    "H1Group",
    "InputError",
    "InternalError",
    "OracleSizeError",
    "SubgroupBasis",
    "UnitSubgroup",
    "chevalley_bass",
    "cyclotomic_spec",
    "galois_group_n",
    "h1",
    "h1_full",
    "induced_map_surjective",
    "invariants",
    "ord_p_cb",
    "subgroup_basis",
]
