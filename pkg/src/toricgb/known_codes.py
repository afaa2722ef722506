"""Reference code parameters used for regression and reproduction.

``TWO_D`` lists optimal weight-6 generalized toric codes on twisted tori as
(table, n, k, d, f, g, a1, a2, merit). ``ONE_D`` lists the induced one-dimensional
generalized bicycle codes as (table, n, k, d, f(y), g(y), l, matches_2d_optimum).
"""

from __future__ import annotations

from typing import NamedTuple


class TwoDRow(NamedTuple):
    table: int
    n: int
    k: int
    d: int
    f: str
    g: str
    a1: tuple[int, int]
    a2: tuple[int, int]
    merit: str


class OneDRow(NamedTuple):
    table: int
    n: int
    k: int
    d: int
    f: str
    g: str
    l: int
    matches_2d: bool


TWO_D: tuple[TwoDRow, ...] = (
    TwoDRow(1, 12, 4, 2, '1 + x + x*y', '1 + y + x*y', (0, 3), (2, 1), '1.33'),
    TwoDRow(1, 14, 6, 2, '1 + x + y', '1 + y + x', (0, 7), (1, 2), '1.71'),
    TwoDRow(1, 18, 4, 4, '1 + x + x*y', '1 + y + x*y', (0, 3), (3, 0), '3.56'),
    TwoDRow(1, 24, 4, 4, '1 + x + x*y', '1 + y + x*y', (0, 3), (4, 2), '2.67'),
    TwoDRow(1, 28, 6, 4, '1 + x + x^-1*y', '1 + y + x*y', (0, 7), (2, 3), '3.43'),
    TwoDRow(1, 30, 4, 6, '1 + x + x^2', '1 + y + x^2', (0, 3), (5, 1), '4.8'),
    TwoDRow(1, 36, 4, 6, '1 + x + x^-1', '1 + y + y^-1', (0, 9), (2, 4), '4.0'),
    TwoDRow(1, 42, 6, 6, '1 + x + x*y', '1 + y + x*y^-1', (0, 7), (3, 2), '5.14'),
    TwoDRow(1, 48, 4, 8, '1 + x + x^2', '1 + y + x^2', (0, 3), (8, 1), '5.33'),
    TwoDRow(1, 54, 8, 6, '1 + x + x^-1', '1 + y + x^3*y^2', (0, 3), (9, 0), '5.33'),
    TwoDRow(1, 56, 6, 8, '1 + x + y^-2', '1 + y + x^-2', (0, 7), (4, 3), '6.86'),
    TwoDRow(1, 60, 8, 6, '1 + x + y^-2', '1 + y + x^2', (0, 10), (3, 3), '4.8'),
    TwoDRow(1, 62, 10, 6, '1 + x + x^-1*y', '1 + y + x^-1*y^-1', (0, 31), (1, 13), '5.81'),
    TwoDRow(1, 66, 4, 10, '1 + x + x^-2*y^-1', '1 + y + x^2*y', (0, 3), (11, 2), '6.06'),
    TwoDRow(1, 70, 6, 8, '1 + x + x*y', '1 + y + x*y^-1', (0, 7), (5, 1), '5.49'),
    TwoDRow(1, 72, 8, 8, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 12), (3, 3), '7.11'),
    TwoDRow(1, 78, 4, 10, '1 + x + x^-2*y^-1', '1 + y + x^2*y', (0, 3), (13, 1), '5.13'),
    TwoDRow(1, 84, 6, 10, '1 + x + x^-2', '1 + y + x^-2*y^2', (0, 14), (3, -6), '7.14'),
    TwoDRow(1, 90, 8, 10, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 15), (3, -6), '8.89'),
    TwoDRow(1, 96, 4, 12, '1 + x + x^-2*y', '1 + y + x*y^-2', (0, 12), (4, 2), '6'),
    TwoDRow(1, 98, 6, 12, '1 + x + x^-1*y^2', '1 + y + x^-2*y^-1', (0, 7), (7, 0), '8.82'),
    TwoDRow(1, 102, 4, 12, '1 + x + x^-3*y', '1 + y + x^3*y^2', (0, 3), (17, 2), '5.65'),
    TwoDRow(1, 108, 8, 10, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 9), (6, 0), '7.41'),
    TwoDRow(1, 108, 8, 10, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 9), (6, 0), '7.41'),
    TwoDRow(2, 112, 6, 12, '1 + x + x^-1*y^2', '1 + y + x^-2*y^-1', (0, 7), (8, 2), '7.71'),
    TwoDRow(2, 114, 4, 14, '1 + x + x^-3*y', '1 + y + x^-5', (0, 3), (19, 1), '6.88'),
    TwoDRow(2, 120, 8, 12, '1 + x + x^-2*y', '1 + y + x*y^2', (0, 10), (6, 4), '9.6'),
    TwoDRow(2, 126, 12, 10, '1 + x + x^-1*y^-2', '1 + y + x*y^-1', (0, 9), (7, 3), '9.52'),
    TwoDRow(2, 132, 4, 14, '1 + x + y^-2', '1 + y + x^-2', (0, 33), (2, -7), '5.94'),
    TwoDRow(2, 138, 4, 14, '1 + x + x^-3*y', '1 + y + x^3*y^2', (0, 3), (23, 2), '5.68'),
    TwoDRow(2, 140, 6, 14, '1 + x + x^-2', '1 + y + x^-2*y^2', (0, 7), (10, 1), '8.4'),
    TwoDRow(2, 144, 12, 12, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 12), (6, 0), '12'),
    TwoDRow(2, 144, 12, 12, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 12), (6, 0), '12'),
    TwoDRow(2, 146, 18, 4, '1 + x + y^2', '1 + y + x^-4*y', (0, 73), (1, 16), '1.97'),
    TwoDRow(2, 150, 8, 12, '1 + x + x^-2*y', '1 + y + x*y^2', (0, 25), (3, 7), '7.68'),
    TwoDRow(2, 154, 6, 16, '1 + x + x^-1*y^2', '1 + y + y^-4', (0, 77), (1, 16), '9.97'),
    TwoDRow(2, 156, 4, 16, '1 + x + x^-2*y', '1 + y + x*y^-2', (0, 39), (2, -11), '6.56'),
    TwoDRow(2, 162, 8, 14, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 9), (9, -3), '9.68'),
    TwoDRow(2, 162, 8, 14, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 9), (9, -3), '9.68'),
    TwoDRow(2, 168, 8, 14, '1 + x + x^2*y^3', '1 + y + x^-3*y^2', (0, 42), (2, -16), '9.33'),
    TwoDRow(2, 170, 16, 10, '1 + x + y^-4', '1 + y + x^4', (0, 17), (5, -7), '9.41'),
    TwoDRow(2, 174, 4, 18, '1 + x + x^-8*y', '1 + y + x^6*y^2', (0, 3), (29, 1), '7.45'),
    TwoDRow(2, 180, 8, 16, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 15), (6, 6), '11.38'),
    TwoDRow(2, 180, 8, 16, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 15), (6, 3), '11.38'),
    TwoDRow(2, 182, 6, 18, '1 + x + x^2*y^3', '1 + y + x^4*y', (0, 7), (13, 1), '10.68'),
    TwoDRow(2, 186, 10, 14, '1 + x + x^2*y^3', '1 + y + x^2*y^-2', (0, 31), (3, 7), '10.54'),
    TwoDRow(2, 192, 8, 16, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 12), (8, 2), '10.67'),
    TwoDRow(2, 196, 6, 18, '1 + x + x^-1*y^2', '1 + y + x^-2*y^-1', (0, 49), (2, -10), '9.92'),
    TwoDRow(3, 198, 8, 16, '1 + x + x^-4', '1 + y + x^-3*y^2', (0, 33), (3, 9), '10.34'),
    TwoDRow(3, 204, 4, 20, '1 + x + x^-3*y', '1 + y + x^-1*y^-2', (0, 51), (2, 14), '7.84'),
    TwoDRow(3, 210, 10, 16, '1 + x + x^-3*y^2', '1 + y + x^-3*y^-1', (0, 21), (5, 10), '12.19'),
    TwoDRow(3, 216, 8, 18, '1 + x + x^-2*y^-5', '1 + y + x^-1*y^-3', (0, 54), (2, 16), '12'),
    TwoDRow(3, 222, 4, 20, '1 + x + x^-6*y^-1', '1 + y + x^5', (0, 3), (37, 2), '7.21'),
    TwoDRow(3, 224, 6, 20, '1 + x + x^-3*y^2', '1 + y + x^-3*y^-1', (0, 28), (4, -6), '10.71'),
    TwoDRow(3, 228, 4, 20, '1 + x + x^-2*y', '1 + y + x*y^-2', (0, 57), (2, 10), '7.02'),
    TwoDRow(3, 234, 8, 18, '1 + x + x^2*y^3', '1 + y + x^-3*y^2', (0, 39), (3, -9), '11.08'),
    TwoDRow(3, 234, 8, 18, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 39), (3, 6), '11.08'),
    TwoDRow(3, 238, 6, 20, '1 + x + x^-4', '1 + y + x^-3*y^2', (0, 7), (17, 1), '10.08'),
    TwoDRow(3, 240, 8, 18, '1 + x + x^-2*y', '1 + y + x*y^2', (0, 10), (12, 3), '10.8'),
    TwoDRow(3, 246, 4, 22, '1 + x + x^3*y', '1 + y + x^2*y^-2', (0, 123), (1, 22), '7.87'),
    TwoDRow(3, 248, 10, 18, '1 + x + x^-2*y', '1 + y + x^-3*y^-2', (0, 62), (2, 25), '13.06'),
    TwoDRow(3, 252, 12, 16, '1 + x + x^-3*y^-1', '1 + y + x^2*y^-2', (0, 18), (7, 7), '12.19'),
    TwoDRow(3, 254, 14, 16, '1 + x + x^-1*y^-3', '1 + y + y^-6', (0, 127), (1, 25), '14.11'),
    TwoDRow(3, 258, 4, 22, '1 + x + x^-8*y^-1', '1 + y + x^5*y', (0, 3), (43, 1), '7.50'),
    TwoDRow(3, 264, 8, 20, '1 + x + x*y^-5', '1 + y + x*y^4', (0, 66), (2, 28), '12.12'),
    TwoDRow(3, 266, 6, 22, '1 + x + x^-1*y^-1', '1 + y + x^5', (0, 7), (19, 2), '10.92'),
    TwoDRow(3, 270, 8, 20, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 15), (9, 6), '11.85'),
    TwoDRow(3, 270, 8, 20, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 45), (3, -12), '11.85'),
    TwoDRow(3, 276, 4, 24, '1 + x + x^-3*y', '1 + y + x^3*y^2', (0, 6), (23, 5), '8.35'),
    TwoDRow(3, 280, 6, 22, '1 + x + x*y^3', '1 + y + x^2*y^-2', (0, 28), (5, 12), '10.37'),
    TwoDRow(3, 282, 4, 24, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 141), (1, 7), '8.17'),
    TwoDRow(3, 292, 18, 8, '1 + x + y^2', '1 + y + x^-4*y', (0, 73), (2, 32), '3.95'),
    TwoDRow(4, 294, 10, 20, '1 + x + x^-3*y', '1 + y + x*y^-3', (0, 21), (7, 7), '13.61'),
    TwoDRow(4, 300, 8, 22, '1 + x + x^-1*y^-4', '1 + y + x^-3*y^3', (0, 75), (2, 26), '12.91'),
    TwoDRow(4, 306, 8, 22, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 51), (3, 21), '12.65'),
    TwoDRow(4, 308, 6, 24, '1 + x + x^-1*y^-2', '1 + y + x^2*y^-1', (0, 77), (2, -13), '11.22'),
    TwoDRow(4, 310, 10, 22, '1 + x + x^3*y^2', '1 + y + x^-4*y^4', (0, 31), (5, 11), '15.61'),
    TwoDRow(4, 312, 8, 22, '1 + x + x^-1*y^3', '1 + y + x*y^3', (0, 78), (2, -16), '12.41'),
    TwoDRow(4, 318, 4, 26, '1 + x + x^3*y^-4', '1 + y + x^-1*y^-3', (0, 159), (1, 17), '8.50'),
    TwoDRow(4, 322, 6, 24, '1 + x + x^-3*y^2', '1 + y + x^-4*y^-1', (0, 7), (23, 3), '10.73'),
    TwoDRow(4, 324, 8, 22, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 18), (9, 6), '11.95'),
    TwoDRow(4, 330, 8, 24, '1 + x + x^-6*y^2', '1 + y + x^2*y^5', (0, 55), (3, 23), '13.96'),
    TwoDRow(4, 336, 10, 22, '1 + x + x^-4', '1 + y + x^-1*y^-3', (0, 84), (2, 37), '14.40'),
    TwoDRow(4, 340, 16, 18, '1 + x + y^-4', '1 + y + x^4', (0, 34), (5, -7), '15.25'),
    TwoDRow(4, 342, 8, 22, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 57), (3, 15), '11.32'),
    TwoDRow(4, 348, 4, 26, '1 + x + x^-2*y^2', '1 + y + x^-1*y^-2', (0, 87), (2, 14), '7.77'),
    TwoDRow(4, 350, 6, 26, '1 + x + x^2*y^2', '1 + y + x^-4*y', (0, 35), (5, 13), '11.58'),
    TwoDRow(4, 354, 4, 28, '1 + x + x^-2*y^2', '1 + y + x^-1*y^-2', (0, 177), (1, -53), '8.86'),
    TwoDRow(4, 360, 12, 24, '1 + x + x^-1*y^3', '1 + y + x^3*y^-1', (0, 30), (6, 6), '19.2'),
    TwoDRow(4, 364, 6, 26, '1 + x + x^-1*y^3', '1 + y + x^3', (0, 14), (13, 4), '11.14'),
    TwoDRow(4, 366, 4, 28, '1 + x + x^2*y^3', '1 + y + x^2*y^-2', (0, 183), (1, 76), '8.57'),
    TwoDRow(4, 372, 10, 24, '1 + x + x^-3*y^-2', '1 + y + x^-1*y^-3', (0, 93), (2, -16), '15.48'),
    TwoDRow(4, 378, 12, 22, '1 + x + x^3*y^-3', '1 + y + x^4', (0, 21), (9, 6), '15.37'),
    TwoDRow(4, 384, 12, 24, '1 + x + x^-4*y^-3', '1 + y + x^3*y^-1', (0, 48), (4, 20), '18'),
    TwoDRow(4, 390, 8, 26, '1 + x + x^-2*y^3', '1 + y + x^2*y^3', (0, 15), (13, 1), '13.87'),
    TwoDRow(4, 392, 6, 28, '1 + x + x^-3*y^2', '1 + y + x^-3*y^-1', (0, 28), (7, 7), '12'),
    TwoDRow(4, 396, 8, 26, '1 + x + x^-1*y^-3', '1 + y + x^3*y^-1', (0, 66), (3, 18), '13.66'),
)

ONE_D: tuple[OneDRow, ...] = (
    OneDRow(5, 12, 4, 2, '1 + y + y^2', '1 + y + y^2', 6, True),
    OneDRow(5, 14, 6, 2, '1 + y + y^3', '1 + y + y^3', 7, True),
    OneDRow(5, 18, 4, 4, '1 + y^2 + y^4', '1 + y + y^2', 9, True),
    OneDRow(5, 24, 4, 4, '1 + y^2 + y^4', '1 + y + y^2', 12, True),
    OneDRow(5, 28, 6, 4, '1 + y^2 + y^3', '1 + y + y^5', 14, True),
    OneDRow(5, 30, 8, 4, '1 + y^2 + y^8', '1 + y + y^4', 15, False),
    OneDRow(5, 36, 4, 6, '1 + y^2 + y^4', '1 + y + y^5', 18, True),
    OneDRow(5, 42, 10, 4, '1 + y^2 + y^10', '1 + y + y^5', 21, False),
    OneDRow(5, 48, 4, 8, '1 + y^5 + y^7', '1 + y + y^5', 24, True),
    OneDRow(5, 54, 4, 8, '1 + y^5 + y^7', '1 + y + y^5', 27, False),
    OneDRow(5, 56, 6, 8, '1 + y^3 + y^9', '1 + y + y^5', 28, True),
    OneDRow(5, 60, 8, 6, '1 + y^7 + y^9', '1 + y + y^4', 30, True),
    OneDRow(5, 62, 10, 6, '1 + y^3 + y^8', '1 + y + y^12', 31, True),
    OneDRow(5, 66, 4, 10, '1 + y^2 + y^7', '1 + y + y^11', 33, True),
    OneDRow(5, 70, 6, 8, '1 + y^3 + y^9', '1 + y + y^5', 35, True),
    OneDRow(5, 72, 4, 10, '1 + y^2 + y^7', '1 + y + y^11', 36, False),
    OneDRow(5, 78, 4, 10, '1 + y^5 + y^7', '1 + y + y^8', 39, True),
    OneDRow(5, 84, 10, 6, '1 + y^11 + y^13', '1 + y + y^5', 42, False),
    OneDRow(5, 90, 8, 8, '1 + y^2 + y^9', '1 + y + y^12', 45, False),
    OneDRow(5, 96, 4, 12, '1 + y^5 + y^7', '1 + y + y^11', 48, True),
    OneDRow(5, 98, 6, 12, '1 + y^4 + y^12', '1 + y + y^10', 49, True),
    OneDRow(5, 102, 4, 12, '1 + y^4 + y^8', '1 + y + y^11', 51, True),
    OneDRow(5, 108, 4, 12, '1 + y^8 + y^10', '1 + y + y^8', 54, False),
    OneDRow(5, 112, 6, 12, '1 + y^3 + y^15', '1 + y + y^10', 56, True),
    OneDRow(5, 114, 4, 14, '1 + y^8 + y^13', '1 + y + y^11', 57, True),
    OneDRow(5, 120, 8, 12, '1 + y^8 + y^21', '1 + y + y^12', 60, True),
    OneDRow(5, 124, 10, 10, '1 + y^8 + y^11', '1 + y + y^13', 62, True),
    OneDRow(5, 126, 12, 10, '1 + y^12 + y^23', '1 + y + y^8', 63, True),
    OneDRow(5, 132, 4, 14, '1 + y^4 + y^14', '1 + y + y^14', 66, True),
    OneDRow(5, 138, 4, 14, '1 + y^8 + y^13', '1 + y + y^8', 69, True),
    OneDRow(5, 140, 6, 14, '1 + y^10 + y^16', '1 + y + y^12', 70, True),
    OneDRow(6, 144, 4, 16, '1 + y^23 + y^28', '1 + y + y^20', 72, False),
    OneDRow(6, 146, 18, 4, '1 + y^2 + y^18', '1 + y + y^9', 73, True),
    OneDRow(6, 150, 8, 12, '1 + y^2 + y^8', '1 + y + y^19', 75, True),
    OneDRow(6, 154, 6, 16, '1 + y^4 + y^34', '1 + y + y^19', 77, True),
    OneDRow(6, 156, 4, 16, '1 + y^11 + y^16', '1 + y + y^14', 78, True),
    OneDRow(6, 162, 4, 16, '1 + y^7 + y^11', '1 + y + y^14', 81, False),
    OneDRow(6, 168, 10, 12, '1 + y^11 + y^19', '1 + y + y^17', 84, False),
    OneDRow(6, 170, 16, 10, '1 + y^21 + y^25', '1 + y + y^16', 85, True),
    OneDRow(6, 174, 4, 18, '1 + y^7 + y^11', '1 + y + y^17', 87, True),
    OneDRow(6, 180, 8, 16, '1 + y^8 + y^47', '1 + y + y^34', 90, True),
    OneDRow(6, 182, 6, 18, '1 + y^9 + y^13', '1 + y + y^38', 91, True),
    OneDRow(6, 186, 14, 10, '1 + y^8 + y^19', '1 + y + y^14', 93, False),
    OneDRow(6, 192, 4, 18, '1 + y^11 + y^16', '1 + y + y^14', 96, False),
    OneDRow(6, 196, 6, 18, '1 + y^12 + y^22', '1 + y + y^19', 98, True),
    OneDRow(6, 198, 4, 18, '1 + y^11 + y^16', '1 + y + y^14', 99, False),
    OneDRow(6, 204, 4, 20, '1 + y^16 + y^35', '1 + y + y^11', 102, True),
    OneDRow(6, 210, 14, 12, '1 + y^11 + y^27', '1 + y + y^19', 105, False),
    OneDRow(6, 216, 4, 20, '1 + y^14 + y^22', '1 + y + y^20', 108, False),
    OneDRow(6, 222, 4, 20, '1 + y^10 + y^14', '1 + y + y^20', 111, True),
    OneDRow(6, 224, 6, 20, '1 + y^3 + y^22', '1 + y + y^31', 112, True),
    OneDRow(6, 228, 4, 20, '1 + y^7 + y^17', '1 + y + y^20', 114, True),
    OneDRow(6, 234, 4, 22, '1 + y^13 + y^29', '1 + y + y^20', 117, False),
    OneDRow(6, 238, 6, 20, '1 + y^9 + y^20', '1 + y + y^24', 119, True),
    OneDRow(6, 240, 8, 18, '1 + y^13 + y^21', '1 + y + y^19', 120, True),
    OneDRow(6, 246, 4, 22, '1 + y^13 + y^20', '1 + y + y^23', 123, True),
    OneDRow(6, 248, 10, 18, '1 + y^17 + y^27', '1 + y + y^13', 124, True),
    OneDRow(6, 252, 12, 16, '1 + y^25 + y^30', '1 + y + y^8', 126, True),
    OneDRow(6, 254, 14, 16, '1 + y^10 + y^37', '1 + y + y^31', 127, True),
    OneDRow(6, 258, 4, 22, '1 + y^14 + y^19', '1 + y + y^14', 129, True),
    OneDRow(6, 264, 4, 22, '1 + y^13 + y^20', '1 + y + y^17', 132, False),
    OneDRow(6, 266, 6, 22, '1 + y^12 + y^25', '1 + y + y^17', 133, True),
    OneDRow(7, 270, 8, 20, '1 + y^6 + y^23', '1 + y + y^27', 135, True),
    OneDRow(7, 276, 4, 24, '1 + y^8 + y^31', '1 + y + y^20', 138, True),
    OneDRow(7, 280, 6, 22, '1 + y^20 + y^23', '1 + y + y^17', 140, True),
    OneDRow(7, 282, 4, 24, '1 + y^10 + y^17', '1 + y + y^23', 141, True),
    OneDRow(7, 288, 4, 24, '1 + y^20 + y^25', '1 + y + y^14', 144, False),
    OneDRow(7, 292, 18, 8, '1 + y^4 + y^36', '1 + y + y^9', 146, True),
    OneDRow(7, 294, 10, 20, '1 + y^19 + y^29', '1 + y + y^26', 147, True),
    OneDRow(7, 300, 8, 22, '1 + y^43 + y^52', '1 + y + y^57', 150, True),
    OneDRow(7, 306, 4, 24, '1 + y^8 + y^22', '1 + y + y^20', 153, False),
    OneDRow(7, 308, 6, 24, '1 + y^12 + y^22', '1 + y + y^26', 154, True),
    OneDRow(7, 310, 10, 22, '1 + y^20 + y^43', '1 + y + y^14', 155, True),
    OneDRow(7, 312, 4, 24, '1 + y^10 + y^17', '1 + y + y^23', 156, False),
    OneDRow(7, 318, 4, 26, '1 + y^14 + y^34', '1 + y + y^38', 159, True),
    OneDRow(7, 322, 6, 24, '1 + y^5 + y^25', '1 + y + y^24', 161, True),
    OneDRow(7, 324, 4, 26, '1 + y^11 + y^16', '1 + y + y^26', 162, False),
    OneDRow(7, 330, 8, 24, '1 + y^32 + y^38', '1 + y + y^49', 165, True),
    OneDRow(7, 336, 10, 22, '1 + y^19 + y^50', '1 + y + y^5', 168, True),
    OneDRow(7, 340, 16, 18, '1 + y^4 + y^25', '1 + y + y^70', 170, True),
    OneDRow(7, 342, 4, 26, '1 + y^16 + y^23', '1 + y + y^20', 171, False),
    OneDRow(7, 348, 4, 26, '1 + y^16 + y^23', '1 + y + y^20', 174, True),
    OneDRow(7, 350, 6, 26, '1 + y^4 + y^33', '1 + y + y^24', 175, True),
    OneDRow(7, 354, 4, 28, '1 + y^19 + y^29', '1 + y + y^23', 177, True),
    OneDRow(7, 360, 8, 24, '1 + y^5 + y^25', '1 + y + y^27', 180, False),
    OneDRow(7, 364, 6, 26, '1 + y^17 + y^22', '1 + y + y^24', 182, True),
    OneDRow(7, 366, 4, 28, '1 + y^8 + y^28', '1 + y + y^26', 183, True),
    OneDRow(7, 372, 14, 20, '1 + y^26 + y^34', '1 + y + y^20', 186, False),
    OneDRow(7, 378, 12, 22, '1 + y^4 + y^37', '1 + y + y^25', 189, True),
    OneDRow(7, 384, 4, 28, '1 + y^16 + y^23', '1 + y + y^26', 192, False),
    OneDRow(7, 390, 8, 26, '1 + y^13 + y^37', '1 + y + y^42', 195, True),
    OneDRow(7, 392, 6, 28, '1 + y^6 + y^37', '1 + y + y^24', 196, True),
    OneDRow(7, 396, 4, 30, '1 + y^14 + y^22', '1 + y + y^32', 198, False),
)



def two_d_rows(table: int | None = None, max_n: int | None = None) -> list[TwoDRow]:
    rows = [r for r in TWO_D if table is None or r.table == table]
    return [r for r in rows if max_n is None or r.n <= max_n]
