"""Inside-out dissections of polygons and of honeycomb polyhedra."""

from .dissect2d import dissect_chains, dissect_generic, dissect_regular
from .dissect3d import dissect_complex, dissect_regular_octahedron, dissect_regular_tetrahedron
from .io_render import emit_off, emit_svg, parse_dissection, serialize_dissection
from .model import Dissection, Piece, VerificationReport
from .verify import verify

__all__ = [
    "Dissection",
    "Piece",
    "VerificationReport",
    "dissect_chains",
    "dissect_complex",
    "dissect_generic",
    "dissect_regular",
    "dissect_regular_octahedron",
    "dissect_regular_tetrahedron",
    "emit_off",
    "emit_svg",
    "parse_dissection",
    "serialize_dissection",
    "verify",
]
