"""Fixed polygon corpus shared by the acceptance tests."""

from fractions import Fraction as F

# exact rational coordinates throughout; the "equilateral" triangle uses a
# rational approximation of sqrt(3) since no equilateral triangle has rational vertices
POLYGONS = {
    "equilateral": ((0, 0), (2, 0), (1, F(1732050807, 10**9))),
    "obtuse": ((0, 0), (5, 0), (-1, 2)),
    "thin": ((0, 0), (10, 0), (5, F(1, 10))),
    "right": ((0, 0), (3, 0), (0, 4)),
    "square": ((0, 0), (1, 0), (1, 1), (0, 1)),
    "trapezoid": ((0, 0), (6, 0), (4, 2), (1, 2)),
    "reflex_pentagon": ((0, 0), (4, 0), (4, 4), (2, 1), (0, 4)),
    "hexagon": ((0, 0), (3, -1), (5, 1), (4, 4), (1, 5), (-1, 2)),
    "heptagon": ((0, 0), (4, 0), (4, 1), (2, 1), (2, 3), (1, 4), (0, 3)),
    "arrow_octagon": ((0, 1), (3, 1), (3, 0), (5, 2), (3, 4), (3, 3), (0, 3), (1, 2)),
    "decagon": ((0, 0), (3, 1), (6, -1), (8, 2), (7, 5), (9, 7), (5, 8), (3, 6),
                (1, 8), (-1, 4)),
    "cross": ((1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (2, 3), (1, 3),
              (1, 2), (0, 2), (0, 1), (1, 1)),
}
