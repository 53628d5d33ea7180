"""Orders on multipartitions attached to cyclotomic rational Cherednik algebras.

All arithmetic is exact: parameters are Fractions and wall forms are primitive
integer vectors.
"""

from .multipartitions import (Charge, MultiPartition, bar, componentwise_transpose,
                              enumerate_multipartitions, parse_charge, parse_multipartition,
                              tau, tau_inverse)
from .orders import (OrderRelation, A_value, a_value, c_value, f_value, dominance_order,
                     c_order, a_order, geometric_order, facet_order, j_classes)
from .params import ParamPoint, WallForm, c_wall_forms, git_walls, parse_param
from .partitions import Partition, Relation, dominates, transpose
from .weyl import AlcoveData, alcove_data

__version__ = "0.1.0"

__all__ = [
    "A_value", "AlcoveData", "Charge", "MultiPartition", "OrderRelation", "ParamPoint",
    "Partition", "Relation", "WallForm", "a_order", "a_value", "alcove_data", "bar",
    "c_order", "c_value", "c_wall_forms", "componentwise_transpose", "dominance_order",
    "dominates", "enumerate_multipartitions", "f_value", "facet_order", "geometric_order",
    "git_walls", "j_classes", "parse_charge", "parse_multipartition", "parse_param", "tau",
    "tau_inverse", "transpose",
]
