"""Delta-matroids: operation algebra, twist polynomials, binary detection,
minors and census enumeration. The heavy lifting lives in the C++ core."""

from deltamat._core import (
    DeltaMatroid,
    census,
    d1,
    d2,
    excluded_minors,
    from_graph,
    make_free,
    make_odd_complete,
)

__all__ = [
    "DeltaMatroid",
    "census",
    "d1",
    "d2",
    "excluded_minors",
    "from_graph",
    "make_free",
    "make_odd_complete",
]
