"""Point-in-convex-polygon classification by shoelace-area comparison."""
from .classify import (
    CLASSIFIERS,
    AlgorithmId,
    Classification,
    area_with_insertion,
    classify,
    classify_angle_sum,
    classify_extra_vertex_append,
    classify_extra_vertex_best_edge,
    classify_half_plane_oracle,
    classify_ray_casting,
    classify_triangulation,
    insertion_delta,
)
from .containment import polygon_inside, segment_inside, segments_intersect
from .errors import (
    BadIndex,
    ClockUnavailable,
    DegenerateInput,
    EmptyInput,
    GeometryError,
    InternalInconsistency,
    NotConvex,
)
from .geometry import (
    DEFAULT_TOL,
    Orientation,
    Point,
    Polygon,
    Tolerance,
    area,
    cross_det,
    is_point_on_ring,
    shoelace_signed_sum,
    triangle_signed2,
    validate,
)
from .polygen import GenConfig, gen_convex, gen_point_inside, gen_point_on_edge, gen_point_outside

__version__ = "0.1.0"
