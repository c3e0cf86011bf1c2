"""Embedded reference data for the reproduction commands.

Everything here is transcribed from the published source material:
the two printed 5x6 / 6x6 incidence matrices, the 16x18 block-form table,
the truncated-nullity table, and the dimension-4 value list.
"""

from __future__ import annotations

# displayed matrix with k=5, d=3, n=6 (rows P(5,3,5), columns P(5,3,6))
MATRIX_5_3_6 = [
    [2, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [0, 1, 0, 1, 1, 0],
    [0, 0, 1, 0, 2, 0],
    [0, 0, 0, 0, 2, 1],
]

# displayed matrix with k=5, d=3, n=7
MATRIX_5_3_7 = [
    [1, 1, 0, 0, 0, 0],
    [1, 0, 1, 1, 0, 0],
    [0, 1, 0, 2, 0, 0],
    [0, 0, 2, 0, 1, 0],
    [0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 3],
]

# block lower-triangular table for k=6, d=4, n=12
TABLE1_ROWS = [
    (6, 5, 0, 0), (6, 4, 1, 0), (6, 3, 2, 0), (6, 3, 1, 1), (6, 2, 2, 1),
    (5, 5, 1, 0), (5, 4, 2, 0), (5, 4, 1, 1), (5, 3, 3, 0), (5, 3, 2, 1),
    (5, 2, 2, 2), (4, 4, 3, 0), (4, 4, 2, 1), (4, 3, 3, 1), (4, 3, 2, 2),
    (3, 3, 3, 2),
]

TABLE1_COLS = [
    (6, 6, 0, 0), (6, 5, 1, 0), (6, 4, 2, 0), (6, 4, 1, 1), (6, 3, 3, 0),
    (6, 3, 2, 1), (6, 2, 2, 2), (5, 5, 2, 0), (5, 5, 1, 1), (5, 4, 3, 0),
    (5, 4, 2, 1), (5, 3, 3, 1), (5, 3, 2, 2), (4, 4, 4, 0), (4, 4, 3, 1),
    (4, 4, 2, 2), (4, 3, 3, 2), (3, 3, 3, 3),
]

# nonzero entries of the 16x18 matrix, keyed by (row partition, col partition)
TABLE1_ENTRIES = {
    ((6, 5, 0, 0), (6, 6, 0, 0)): 1,
    ((6, 5, 0, 0), (6, 5, 1, 0)): 2,
    ((6, 4, 1, 0), (6, 5, 1, 0)): 1,
    ((6, 4, 1, 0), (6, 4, 2, 0)): 1,
    ((6, 4, 1, 0), (6, 4, 1, 1)): 1,
    ((6, 3, 2, 0), (6, 4, 2, 0)): 1,
    ((6, 3, 2, 0), (6, 3, 3, 0)): 1,
    ((6, 3, 2, 0), (6, 3, 2, 1)): 1,
    ((6, 3, 1, 1), (6, 4, 1, 1)): 1,
    ((6, 3, 1, 1), (6, 3, 2, 1)): 2,
    ((6, 2, 2, 1), (6, 3, 2, 1)): 2,
    ((6, 2, 2, 1), (6, 2, 2, 2)): 1,
    ((5, 5, 1, 0), (6, 5, 1, 0)): 2,
    ((5, 5, 1, 0), (5, 5, 2, 0)): 1,
    ((5, 5, 1, 0), (5, 5, 1, 1)): 1,
    ((5, 4, 2, 0), (6, 4, 2, 0)): 1,
    ((5, 4, 2, 0), (5, 5, 2, 0)): 1,
    ((5, 4, 2, 0), (5, 4, 3, 0)): 1,
    ((5, 4, 2, 0), (5, 4, 2, 1)): 1,
    ((5, 4, 1, 1), (6, 4, 1, 1)): 1,
    ((5, 4, 1, 1), (5, 5, 1, 1)): 1,
    ((5, 4, 1, 1), (5, 4, 2, 1)): 2,
    ((5, 3, 3, 0), (6, 3, 3, 0)): 1,
    ((5, 3, 3, 0), (5, 4, 3, 0)): 2,
    ((5, 3, 3, 0), (5, 3, 3, 1)): 1,
    ((5, 3, 2, 1), (6, 3, 2, 1)): 1,
    ((5, 3, 2, 1), (5, 4, 2, 1)): 1,
    ((5, 3, 2, 1), (5, 3, 3, 1)): 1,
    ((5, 3, 2, 1), (5, 3, 2, 2)): 1,
    ((5, 2, 2, 2), (6, 2, 2, 2)): 1,
    ((5, 2, 2, 2), (5, 3, 2, 2)): 3,
    ((4, 4, 3, 0), (5, 4, 3, 0)): 2,
    ((4, 4, 3, 0), (4, 4, 4, 0)): 1,
    ((4, 4, 3, 0), (4, 4, 3, 1)): 1,
    ((4, 4, 2, 1), (5, 4, 2, 1)): 2,
    ((4, 4, 2, 1), (4, 4, 3, 1)): 1,
    ((4, 4, 2, 1), (4, 4, 2, 2)): 1,
    ((4, 3, 3, 1), (5, 3, 3, 1)): 1,
    ((4, 3, 3, 1), (4, 4, 3, 1)): 2,
    ((4, 3, 3, 1), (4, 3, 3, 2)): 1,
    ((4, 3, 2, 2), (5, 3, 2, 2)): 1,
    ((4, 3, 2, 2), (4, 4, 2, 2)): 1,
    ((4, 3, 2, 2), (4, 3, 3, 2)): 2,
    ((3, 3, 3, 2), (4, 3, 3, 2)): 3,
    ((3, 3, 3, 2), (3, 3, 3, 3)): 1,
}

# nullity of the truncated staircase family, keyed by (d, e)
TABLE2 = {
    (4, 0): 2, (4, 1): 0, (4, 2): 0, (4, 3): 0, (4, 4): 0, (4, 5): 0,
    (5, 0): 3, (5, 1): 0, (5, 2): 0, (5, 3): 0, (5, 4): 0, (5, 5): 0,
    (6, 0): 7, (6, 1): 0, (6, 2): 0, (6, 3): 0, (6, 4): 0, (6, 5): 0,
    (7, 0): 17, (7, 1): 4, (7, 2): 0, (7, 3): 0, (7, 4): 0, (7, 5): 0,
    (8, 0): 59, (8, 1): 21, (8, 2): 13, (8, 3): 0, (8, 4): 0, (8, 5): 0,
    (9, 0): 216, (9, 1): 127, (9, 2): 64, (9, 3): 0, (9, 4): 0, (9, 5): 0,
}

# dimension-4 value list: Jordan block sizes -> (k, plov)
DIM4_VALUES = {
    (1, 1, 1, 1): (0, 4),
    (2, 1, 1): (2, 6),
    (2, 2): (2, 8),
    (3, 1): (4, 10),
    (4,): (6, 16),
}
