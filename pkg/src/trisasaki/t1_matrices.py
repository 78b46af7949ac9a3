"""Explicit 10x10 matrices generating the 20-dimensional algebra of the
19-dimensional model with non-symmetric base (q = 2, l = 1).

The matrices act on the 10-dimensional space spanned by
eh1, eh2, eh3, e1, e2, D, E1, E2, E3, E4 and are labeled by the algebra
element they represent.  Degree-2 generators carry a factor 2
(so "2eh1^eh2" is twice the wedge eh1 ^ eh2), the module generators carry
a factor 2 as well ("2E1" = 2 E_1).
"""

# fmt: off
T1_MATRICES = [
    ("2eh1^eh2", [
        [0,  2, 0, 0, 0, 0,  0, 0,  0, 0],
        [-2, 0, 0, 0, 0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0, 0,  0, 1,  0, 0],
        [0,  0, 0, 0, 0, 0, -1, 0,  0, 0],
        [0,  0, 0, 0, 0, 0,  0, 0,  0, -1],
        [0,  0, 0, 0, 0, 0,  0, 0,  1, 0],
    ]),
    ("2eh3^eh1", [
        [0, 0, -2, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 0],
        [2, 0,  0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  1, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 1],
        [0, 0,  0, 0, 0, 0, -1, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, -1, 0, 0],
    ]),
    ("2eh2^eh3", [
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  2, 0, 0, 0,  0, 0,  0, 0],
        [0, -2, 0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0, 0,  0, 0,  0, 1],
        [0, 0,  0, 0, 0, 0,  0, 0, -1, 0],
        [0, 0,  0, 0, 0, 0,  0, 1,  0, 0],
        [0, 0,  0, 0, 0, 0, -1, 0,  0, 0],
    ]),
    ("2eh1^e1", [
        [0,  0, 0, -2, 0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0,  0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0,  0, 0,  0, 0,  0, 0],
        [-2, 0, 0, 0,  0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0,  0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0,  0, 0,  0, 0,  0, 0],
        [0,  0, 0, 0,  0, 0,  0, 0, -1, 0],
        [0,  0, 0, 0,  0, 0,  0, 0,  0, -1],
        [0,  0, 0, 0,  0, 0, -1, 0,  0, 0],
        [0,  0, 0, 0,  0, 0,  0, -1, 0, 0],
    ]),
    ("2eh1^e2", [
        [0,  0, 0, 0, -2, 0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0,  0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0,  0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0,  0,  0, 0,  0, 0],
        [-2, 0, 0, 0, 0,  0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0,  0,  0, 0,  0, 0],
        [0,  0, 0, 0, 0,  0,  1, 0,  0, 0],
        [0,  0, 0, 0, 0,  0,  0, -1, 0, 0],
        [0,  0, 0, 0, 0,  0,  0, 0, -1, 0],
        [0,  0, 0, 0, 0,  0,  0, 0,  0, 1],
    ]),
    ("2eh2^e1", [
        [0, 0,  0, 0,  0, 0,  0, 0,  0, 0],
        [0, 0,  0, -2, 0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0,  0, 0,  0, 0,  0, 0],
        [0, -2, 0, 0,  0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0,  0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0,  0, 0,  0, 0,  0, 0],
        [0, 0,  0, 0,  0, 0,  0, 0,  0, 1],
        [0, 0,  0, 0,  0, 0,  0, 0, -1, 0],
        [0, 0,  0, 0,  0, 0,  0, -1, 0, 0],
        [0, 0,  0, 0,  0, 0,  1, 0,  0, 0],
    ]),
    ("2eh2^e2", [
        [0, 0,  0, 0, 0,  0,  0, 0,  0, 0],
        [0, 0,  0, 0, -2, 0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0,  0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0,  0,  0, 0,  0, 0],
        [0, -2, 0, 0, 0,  0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0,  0,  0, 0,  0, 0],
        [0, 0,  0, 0, 0,  0,  0, 1,  0, 0],
        [0, 0,  0, 0, 0,  0,  1, 0,  0, 0],
        [0, 0,  0, 0, 0,  0,  0, 0,  0, 1],
        [0, 0,  0, 0, 0,  0,  0, 0,  1, 0],
    ]),
    ("2eh3^e1", [
        [0, 0, 0,  0,  0, 0,  0, 0,  0, 0],
        [0, 0, 0,  0,  0, 0,  0, 0,  0, 0],
        [0, 0, 0,  -2, 0, 0,  0, 0,  0, 0],
        [0, 0, -2, 0,  0, 0,  0, 0,  0, 0],
        [0, 0, 0,  0,  0, 0,  0, 0,  0, 0],
        [0, 0, 0,  0,  0, 0,  0, 0,  0, 0],
        [0, 0, 0,  0,  0, 0, -1, 0,  0, 0],
        [0, 0, 0,  0,  0, 0,  0, -1, 0, 0],
        [0, 0, 0,  0,  0, 0,  0, 0,  1, 0],
        [0, 0, 0,  0,  0, 0,  0, 0,  0, 1],
    ]),
    ("2eh3^e2", [
        [0, 0, 0,  0, 0,  0,  0, 0,  0, 0],
        [0, 0, 0,  0, 0,  0,  0, 0,  0, 0],
        [0, 0, 0,  0, -2, 0,  0, 0,  0, 0],
        [0, 0, 0,  0, 0,  0,  0, 0,  0, 0],
        [0, 0, -2, 0, 0,  0,  0, 0,  0, 0],
        [0, 0, 0,  0, 0,  0,  0, 0,  0, 0],
        [0, 0, 0,  0, 0,  0,  0, 0, -1, 0],
        [0, 0, 0,  0, 0,  0,  0, 0,  0, 1],
        [0, 0, 0,  0, 0,  0, -1, 0,  0, 0],
        [0, 0, 0,  0, 0,  0,  0, 1,  0, 0],
    ]),
    ("2e1^e2", [
        [0, 0, 0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0, 0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0, 0, 0, 0, 0,  0, 0,  0, 0],
        [0, 0, 0, 0, -2, 0, 0, 0,  0, 0],
        [0, 0, 0, 2, 0,  0, 0, 0,  0, 0],
        [0, 0, 0, 0, 0,  0, 0, 0,  0, 0],
        [0, 0, 0, 0, 0,  0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0,  0, 0, 0,  0, 1],
        [0, 0, 0, 0, 0,  0, 1, 0,  0, 0],
        [0, 0, 0, 0, 0,  0, 0, -1, 0, 0],
    ]),
    ("2D", [
        [2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 2, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 2, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ]),
    ("eh1", [[0] * 5 + [-1 if r == 0 else 0] + [0] * 4 for r in range(10)]),
    ("eh2", [[0] * 5 + [-1 if r == 1 else 0] + [0] * 4 for r in range(10)]),
    ("eh3", [[0] * 5 + [-1 if r == 2 else 0] + [0] * 4 for r in range(10)]),
    ("e1", [[0] * 5 + [-1 if r == 3 else 0] + [0] * 4 for r in range(10)]),
    ("e2", [[0] * 5 + [-1 if r == 4 else 0] + [0] * 4 for r in range(10)]),
    ("2E1", [
        [0, 0, 0, 0, 0,  0,  0, 0,  0, -2],
        [0, 0, 0, 0, 0,  0,  0, 0, -2, 0],
        [0, 0, 0, 0, 0,  0,  0, -2, 0, 0],
        [0, 0, 0, 0, 0,  0,  0, -2, 0, 0],
        [0, 0, 0, 0, 0,  0,  0, 0,  0, 2],
        [0, 0, 0, 0, 0,  0,  0, 0,  0, 0],
        [0, 0, 0, 0, 0, -1,  0, 0,  0, 0],
        [0, 0, 0, 0, 0,  0,  0, 0,  0, 0],
        [0, 0, 0, 0, 0,  0,  0, 0,  0, 0],
        [0, 0, 0, 0, 0,  0,  0, 0,  0, 0],
    ]),
    ("2E2", [
        [0, 0, 0, 0, 0,  0,  0, 0, 2,  0],
        [0, 0, 0, 0, 0,  0,  0, 0, 0, -2],
        [0, 0, 0, 0, 0,  0,  2, 0, 0,  0],
        [0, 0, 0, 0, 0,  0,  2, 0, 0,  0],
        [0, 0, 0, 0, 0,  0,  0, 0, 2,  0],
        [0, 0, 0, 0, 0,  0,  0, 0, 0,  0],
        [0, 0, 0, 0, 0,  0,  0, 0, 0,  0],
        [0, 0, 0, 0, 0, -1,  0, 0, 0,  0],
        [0, 0, 0, 0, 0,  0,  0, 0, 0,  0],
        [0, 0, 0, 0, 0,  0,  0, 0, 0,  0],
    ]),
    ("2E3", [
        [0, 0, 0, 0, 0,  0,  0, -2, 0,  0],
        [0, 0, 0, 0, 0,  0,  2, 0,  0,  0],
        [0, 0, 0, 0, 0,  0,  0, 0,  0,  2],
        [0, 0, 0, 0, 0,  0,  0, 0,  0, -2],
        [0, 0, 0, 0, 0,  0,  0, -2, 0,  0],
        [0, 0, 0, 0, 0,  0,  0, 0,  0,  0],
        [0, 0, 0, 0, 0,  0,  0, 0,  0,  0],
        [0, 0, 0, 0, 0,  0,  0, 0,  0,  0],
        [0, 0, 0, 0, 0, -1,  0, 0,  0,  0],
        [0, 0, 0, 0, 0,  0,  0, 0,  0,  0],
    ]),
    ("2E4", [
        [0, 0, 0, 0, 0,  0,  2,  0,  0, 0],
        [0, 0, 0, 0, 0,  0,  0,  2,  0, 0],
        [0, 0, 0, 0, 0,  0,  0,  0, -2, 0],
        [0, 0, 0, 0, 0,  0,  0,  0,  2, 0],
        [0, 0, 0, 0, 0,  0, -2,  0,  0, 0],
        [0, 0, 0, 0, 0,  0,  0,  0,  0, 0],
        [0, 0, 0, 0, 0,  0,  0,  0,  0, 0],
        [0, 0, 0, 0, 0,  0,  0,  0,  0, 0],
        [0, 0, 0, 0, 0,  0,  0,  0,  0, 0],
        [0, 0, 0, 0, 0, -1,  0,  0,  0, 0],
    ]),
]
# fmt: on
