"""Le diagrams, Grassmann necklaces and the bijection between them."""

from .diagram import (
    LabeledShape,
    LeDiagram,
    LeReport,
    ShapeType,
    Square,
    is_in_shape,
    le_validate,
    nearest_plus_strict_nw,
    nearest_plus_weak_nw,
    shape_from_rows,
)
from .errors import (
    DominanceError,
    InconsistentNecklaceError,
    InvalidArgumentError,
    LeNecklaceError,
    OutOfShapeError,
    ParseError,
    ScaleGuardError,
)
from .forward import boundary_square, boundary_squares, necklace_from_le, path_from, paths
from .necklace import GrassmannNecklace, NecklaceReport, necklace_validate, term_diffs
from .oracle import (
    EnumerationReport,
    enumerate_le,
    enumerate_necklaces,
    enumerate_shapes,
    roundtrip_report,
)
from .reverse import le_from_necklace, le_from_necklace_report, plus_squares_for_term, positroid_dimension
from .textio import parse_diagram, parse_necklace, render_diagram, render_necklace

__version__ = "0.1.0"
