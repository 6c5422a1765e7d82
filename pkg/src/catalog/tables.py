"""Static data tables: Cremona group families, K3 groups, du Val data and the
invariant lattices of the six K3 groups outside the plane Cremona group.

Groups are written in the comma separated invariant factor form.
"""

CR2_FAMILIES = [
    {"name": "Z/n x Z/m", "pattern": "n,m", "rank_at_most": 2},
    {"name": "Z/2n x (Z/2)^2", "pattern": "2,2,2n", "rank_at_most": 3},
    {"name": "(Z/4)^2 x Z/2", "pattern": "2,4,4", "rank_at_most": 3},
    {"name": "(Z/3)^3", "pattern": "3,3,3", "rank_at_most": 3},
    {"name": "(Z/2)^4", "pattern": "2,2,2,2", "rank_at_most": 4},
]

NIKULIN = [
    "2",
    "3",
    "4",
    "5",
    "6",
    "7",
    "8",
    "2,6",
    "3,3",
    "4,4",
    "2,4",
    "2,2",
    "2,2,2",
    "2,2,2,2",
]

MAXIMAL_K3 = [
    "4,4,4",
    "2,6,6",
    "3,3,6",
    "2,4,8",
    "2,2,2,2,2",
    "2,2,2,4",
    "6,12",
    "60",
    "5,10",
    "4,12",
    "2,2,12",
    "3,18",
    "3,15",
    "42",
    "2,30",
    "2,28",
    "2,24",
    "2,20",
    "2,18",
    "2,16",
]

GRAMS_4222 = [
    [[0, 4], [4, 0]],
    [[0, 2], [2, 0]],
    [[0, 0, 2], [0, -8, 0], [2, 0, 0]],
    [[0, 0, 0, 2], [0, -4, 0, 0], [0, 0, -4, 0], [2, 0, 0, 0]],
    [
        [0, 0, 0, 0, 0, 2],
        [0, -4, -2, 2, 2, 0],
        [0, -2, -4, 2, 2, 0],
        [0, 2, 2, -4, 0, 0],
        [0, 2, 2, 0, -4, 0],
        [2, 0, 0, 0, 0, 0],
    ],
    [
        [0, -2, -2, 2, -2, 0],
        [-2, -4, -2, 0, -2, -2],
        [-2, -2, -4, 0, 0, 0],
        [2, 0, 0, 0, 0, 0],
        [-2, -2, 0, 0, -4, 0],
        [0, -2, 0, 0, 0, -4],
    ],
    [
        [0, 0, 0, 2, 0, 0],
        [0, -4, -2, 0, -2, -2],
        [0, -2, -4, 0, 0, 0],
        [2, 0, 0, 0, 0, 0],
        [0, -2, 0, 0, -4, 0],
        [0, -2, 0, 0, 0, -4],
    ],
    [
        [0, 0, 2, 0, 0, 0],
        [0, -4, 0, -2, -6, 2],
        [2, 0, 0, 0, 0, 0],
        [0, -2, 0, -4, -6, 2],
        [0, -6, 0, -6, -20, 8],
        [0, 2, 0, 2, 8, -4],
    ],
    [
        [0, -2, 2, -4, -4, 2],
        [-2, -4, 0, -4, -6, 2],
        [2, 0, 0, 0, 0, 0],
        [-4, -4, 0, -8, -8, 4],
        [-4, -6, 0, -8, -12, 4],
        [2, 2, 0, 4, 4, -4],
    ],
    [
        [0, 0, -2, -4, -2, -6],
        [0, -8, -2, -20, -14, -26],
        [-2, -2, -4, -8, -4, -12],
        [-4, -20, -8, -60, -40, -78],
        [-2, -14, -4, -40, -28, -52],
        [-6, -26, -12, -78, -52, -104],
    ],
]

GRAMS_22222 = [
    [[8]],
    [[0, 2], [2, 0]],
    [[0, 4], [4, 0]],
    [[0, -2], [-2, 0]],
    [[0, 0, 2], [0, -8, 0], [2, 0, 0]],
    [[0, 0, 0, 2], [0, -4, 0, 0], [0, 0, -4, 0], [2, 0, 0, 0]],
    [
        [0, 0, 0, 0, 2],
        [0, -4, -2, -2, 0],
        [0, -2, -4, -2, 0],
        [0, -2, -2, -4, 0],
        [2, 0, 0, 0, 0],
    ],
    [
        [-4, -4, 0, -2, -2],
        [-4, -8, 0, 0, 0],
        [0, 0, 0, -2, 0],
        [-2, 0, -2, -4, 0],
        [-2, 0, 0, 0, -4],
    ],
    [
        [-4, 2, -4, -6, 2],
        [2, 0, 0, 0, 0],
        [-4, 0, -4, -2, 0],
        [-6, 0, -2, -12, 6],
        [2, 0, 0, 6, -4],
    ],
    [
        [-52, -10, -20, -38, -28],
        [-10, -4, -4, -6, -4],
        [-20, -4, -8, -14, -10],
        [-38, -6, -14, -28, -20],
        [-28, -4, -10, -20, -16],
    ],
    [
        [-4, 0, -2, -4, 0],
        [0, 0, 0, 0, 2],
        [-2, 0, -4, 0, 0],
        [-4, 0, 0, -8, 0],
        [0, 2, 0, 0, 0],
    ],
    [
        [0, 0, 2, 0, 0],
        [0, -4, 0, -4, -2],
        [2, 0, 0, 0, 0],
        [0, -4, 0, -12, -6],
        [0, -2, 0, -6, -4],
    ],
    [
        [0, 2, 2, -2, 0],
        [2, 4, 4, -2, -2],
        [2, 4, 0, 0, 0],
        [-2, -2, 0, -4, 0],
        [0, -2, 0, 0, -4],
    ],
    [
        [-4, -4, -2, -2, 0],
        [-4, -8, 0, 0, 0],
        [-2, 0, -4, 0, 0],
        [-2, 0, 0, -4, 2],
        [0, 0, 0, 2, -4],
    ],
]

# (Z/2)^5 is recorded with H_s = (Z/2)^5 and m = 2 as printed
EXCEPTIONAL_SIX = [
    {
        "group": "4,4,4",
        "symplectic_part": "4,4",
        "nonsymplectic_order": 4,
        "invariant_rank_range": [1, 1],
        "gram_options": [[[4]]],
    },
    {
        "group": "2,6,6",
        "symplectic_part": "2,6",
        "nonsymplectic_order": 6,
        "invariant_rank_range": [1, 1],
        "gram_options": [[[2]]],
    },
    {
        "group": "3,3,6",
        "symplectic_part": "3,3",
        "nonsymplectic_order": 6,
        "invariant_rank_range": [2, 2],
        "gram_options": [[[0, 3], [3, 0]]],
    },
    {
        "group": "2,4,8",
        "symplectic_part": "2,4",
        "nonsymplectic_order": 8,
        "invariant_rank_range": [2, 2],
        "gram_options": [[[0, 2], [2, 0]]],
    },
    {
        "group": "2,2,2,2,2",
        "symplectic_part": "2,2,2,2,2",
        "nonsymplectic_order": 2,
        "invariant_rank_range": [1, 5],
        "gram_options": GRAMS_22222,
    },
    {
        "group": "2,2,2,4",
        "symplectic_part": "2,2,2",
        "nonsymplectic_order": 4,
        "invariant_rank_range": [2, 6],
        "gram_options": GRAMS_4222,
    },
]

DU_VAL = [
    {"case": "A_n", "pi1ab": "Z/(n+1)"},
    {"case": "D_n, n even", "pi1ab": "2,2"},
    {"case": "D_n, n odd", "pi1ab": "4", "_printed": "2"},
    {"case": "E_6", "pi1ab": "3"},
    {"case": "E_7", "pi1ab": "2"},
    {"case": "E_8", "pi1ab": "1"},
]

FIXED_COUNTS = {2: 8, 3: 6, 4: 4, 5: 4, 6: 2, 7: 3, 8: 2}
