"""Centers of plane multisets and polygons that detect symmetry.

The centroid and two asymmetry centers coincide exactly for rotationally
symmetric objects and are collinear exactly for objects with a symmetry;
every point fixed by the symmetry group is an affine combination of them.
"""

from .cyclic import CyclicConfiguration, a_center, b_center, b_center_labeled, orbit_partition, phi, rotation_order
from .errors import ContractViolation, DomainError, GeometryError, NotCyclicError, PreconditionError
from .geom import Circle, CyclicPoint, Point, Similarity, centroid
from .multiset_centers import center_through, circumcenter, x_center_multiset, y_center_multiset
from .polygon_centers import center_through_polygon, x_center_polygon, y_center_polygon
from .symmetry import LabeledMultiset, Multiset, Polygon, classify, fixed_set, symmetry_group

__version__ = "0.1.0"
