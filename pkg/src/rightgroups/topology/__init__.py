"""Surface-embedding invariants of simple graphs."""

from .embedding import (
    EmbeddingCertificate,
    MalformedRotation,
    RotationSystem,
    dumps_certificate,
    face_trace,
    loads_certificate,
    trace_faces,
)
from .genus import (
    EULER_GIRTH,
    EXHAUSTED_SEARCH,
    PLANAR_TEST,
    SUBGRAPH_OBSTRUCTION,
    GenusBounds,
    edge_triangle_profile,
    euler_lower_bound,
    euler_only_bound,
    exact_genus,
    girth,
    heuristic_upper,
)
from .planarity import (
    PATTERNS,
    KuratowskiWitness,
    OuterPlanarityResult,
    PlanarityResult,
    SearchBudgetExceeded,
    find_subdivision,
    is_outer_planar,
    is_planar,
)
