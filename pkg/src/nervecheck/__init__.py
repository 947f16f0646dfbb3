"""Certify or refute that a flag complex is the nerve of a right-angled
Coxeter group whose Gromov boundary is the Menger curve."""

from .cohomology import (
    CohomologyGroup,
    boundary_dimension,
    cohomology_condition,
    reduced_cohomology,
    smith_normal_form,
)
from .complex import (
    ComplexError,
    Graph,
    SimplicialComplex,
    cone,
    from_graph,
    full_subcomplex,
    has_empty_square,
    join,
    link,
    suspension,
    validate_flag,
)
from .coxeter import ball, normal_form, sphere_sizes
from .generators import (
    cross_polytope,
    cycle_complex,
    disk_triangulation,
    dra_subdivision,
    moebius_k5_nerve,
)
from .io import read_complex, write_complex
from .nonplanarity import (
    build_embedding_witness,
    is_planar,
    search_sg_certificate,
    verify_sg_certificate,
)
from .report import MengerVerdict, run_check
from .separation import is_inseparable

__all__ = [
    "CohomologyGroup", "ComplexError", "Graph", "MengerVerdict", "SimplicialComplex",
    "ball", "boundary_dimension", "build_embedding_witness", "cohomology_condition", "cone",
    "cross_polytope", "cycle_complex", "disk_triangulation", "dra_subdivision", "from_graph",
    "full_subcomplex", "has_empty_square", "is_inseparable", "is_planar", "join", "link",
    "moebius_k5_nerve", "normal_form", "read_complex", "reduced_cohomology", "run_check",
    "search_sg_certificate", "smith_normal_form", "sphere_sizes", "suspension",
    "validate_flag", "verify_sg_certificate", "write_complex",
]
