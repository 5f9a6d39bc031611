"""Reference matrices and sequences for the built-in reproduction suite.

Matrices are stored as whitespace separated rows.  Two entries differ from
the printed tables they were transcribed from because the printed values are
misprints; each is marked where it occurs.
"""
from .matrix import IntMatrix

_MATRICES = {
    "pascal": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        1 2 1 0 0 0 0
        1 3 3 1 0 0 0
        1 4 6 4 1 0 0
        1 5 10 10 5 1 0
        1 6 15 20 15 6 1""",
    "delannoy_triangle": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        1 3 1 0 0 0 0
        1 5 5 1 0 0 0
        1 7 13 7 1 0 0
        1 9 25 25 9 1 0
        1 11 41 63 41 11 1""",
    # (6,4) printed as 240; binom(10,4) = 210
    "pascal_rectified": """
        1 1 1 1 1 1 1
        1 2 3 4 5 6 7
        1 3 6 10 15 21 28
        1 4 10 20 35 56 84
        1 5 15 35 70 126 210
        1 6 21 56 126 252 462
        1 7 28 84 210 462 924""",
    "pascal_stretched": """
        1 0 0 0 0 0 0
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        1 2 0 0 0 0 0
        1 3 1 0 0 0 0
        1 4 3 0 0 0 0
        1 5 6 1 0 0 0""",
    "fibonacci_steps": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        2 3 1 0 0 0 0
        3 7 5 1 0 0 0
        5 15 16 7 1 0 0
        8 30 43 29 9 1 0
        13 58 104 95 46 11 1""",
    "fibonacci_steps_reversal": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        1 3 2 0 0 0 0
        1 5 7 3 0 0 0
        1 7 16 15 5 0 0
        1 9 29 43 30 8 0
        1 11 46 95 104 58 13""",
    "delannoy_square": """
        1 1 1 1 1 1 1
        1 3 5 7 9 11 13
        1 5 13 25 41 61 85
        1 7 25 63 129 231 377
        1 9 41 129 321 681 1289
        1 11 61 231 681 1683 3653
        1 13 85 377 1289 3653 8989""",
    "central_delannoy_array": """
        1 0 0 0 0 0 0
        3 1 0 0 0 0 0
        13 5 1 0 0 0 0
        63 25 7 1 0 0 0
        321 129 41 9 1 0 0
        1683 681 231 61 11 1 0
        8989 3653 1289 377 85 13 1""",
    "extended_square": """
        1 1 1 1 1 1 1
        1 3 5 7 9 11 13
        1 5 14 27 44 65 90
        1 7 27 71 147 263 427
        1 9 44 147 379 816 1550
        1 11 65 263 816 2082 4595
        1 13 90 427 1550 4595 11651""",
    "extended_diagonal_triangle": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        1 3 1 0 0 0 0
        1 5 5 1 0 0 0
        1 7 14 7 1 0 0
        1 9 27 27 9 1 0
        1 11 44 71 44 11 1""",
    "delannoy_stretched": """
        1 0 0 0 0 0 0
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        1 3 0 0 0 0 0
        1 5 1 0 0 0 0
        1 7 5 0 0 0 0
        1 9 13 1 0 0 0""",
    "delannoy_stretched_reversal": """
        1 0 0 0 0 0 0
        0 1 0 0 0 0 0
        0 1 1 0 0 0 0
        0 0 3 1 0 0 0
        0 0 1 5 1 0 0
        0 0 0 5 7 1 0
        0 0 0 1 13 9 1""",
    "fibonacci_steps_triangulated": """
        1 0 0 0 0 0 0
        1 2 0 0 0 0 0
        2 5 4 0 0 0 0
        3 12 16 8 0 0 0
        5 25 49 44 16 0 0
        8 50 127 166 112 32 0
        13 96 301 513 504 272 64""",
    "delannoy_triangulated": """
        1 0 0 0 0 0 0
        1 2 0 0 0 0 0
        1 4 4 0 0 0 0
        1 6 12 8 0 0 0
        1 8 24 32 16 0 0
        1 10 40 80 80 32 0
        1 12 60 160 240 192 64""",
    "catalan": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        2 2 1 0 0 0 0
        5 5 3 1 0 0 0
        14 14 9 4 1 0 0
        42 42 28 14 5 1 0
        132 132 90 48 20 6 1""",
    "catalan_triangulated": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        2 3 1 0 0 0 0
        5 9 5 1 0 0 0
        14 28 20 7 1 0 0
        42 90 75 35 9 1 0
        132 297 275 154 54 11 1""",
    "catalan_triangulated_twice": """
        1 0 0 0 0 0 0
        1 2 0 0 0 0 0
        2 7 4 0 0 0 0
        5 23 24 8 0 0 0
        14 76 109 68 16 0 0
        42 255 449 394 176 32 0
        132 869 1770 1947 1240 432 64""",
    "dyck": """
        1 0 0 0 0 0 0
        0 1 0 0 0 0 0
        1 0 1 0 0 0 0
        0 2 0 1 0 0 0
        2 0 3 0 1 0 0
        0 5 0 4 0 1 0
        5 0 9 0 5 0 1""",
    "dyck_aerated": """
        1 0 0 0 0 0 0
        0 0 0 0 0 0 0
        1 1 0 0 0 0 0
        0 0 0 0 0 0 0
        2 3 1 0 0 0 0
        0 0 0 0 0 0 0
        5 9 5 1 0 0 0""",
    "motzkin_tilde": """
        1 0 0 0 0 0 0
        2 1 0 0 0 0 0
        5 5 1 0 0 0 0
        15 21 8 1 0 0 0
        51 86 46 11 1 0 0
        188 355 235 80 14 1 0
        731 1488 1140 489 123 17 1""",
    "motzkin_tilde_triangulated": """
        1 0 0 0 0 0 0
        2 3 0 0 0 0 0
        5 16 9 0 0 0 0
        15 71 78 27 0 0 0
        51 304 481 324 81 0 0
        188 1300 2609 2547 1242 243 0
        731 5604 13317 16678 11853 4536 729""",
    "almost_1": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        1 3 1 0 0 0 0
        1 5 4 1 0 0 0
        1 7 9 5 1 0 0
        1 9 16 14 6 1 0
        1 11 25 30 20 7 1""",
    "almost_2": """
        1 0 0 0 0 0 0
        0 1 0 0 0 0 0
        1 1 1 0 0 0 0
        0 2 3 1 0 0 0
        1 2 6 5 1 0 0
        0 3 10 14 7 1 0
        1 3 15 30 26 9 1""",
    # (4,2) printed as 1; the closed form, a direct count and the row sum 15 give 5
    "almost_3": """
        1 0 0 0 0 0 0
        0 1 0 0 0 0 0
        1 1 1 0 0 0 0
        1 3 1 1 0 0 0
        3 5 5 1 1 0 0
        5 13 7 7 1 1 0
        13 25 25 9 9 1 1""",
    "schroeder": """
        1 0 0 0 0 0 0
        2 1 0 0 0 0 0
        6 4 1 0 0 0 0
        22 16 6 1 0 0 0
        90 68 30 8 1 0 0
        394 304 146 48 10 1 0
        1806 1412 714 264 70 12 1""",
    "g_tilde": """
        1 0 0 0 0 0 0
        2 1 0 0 0 0 0
        5 3 1 0 0 0 0
        15 10 4 1 0 0 0
        51 36 16 5 1 0 0
        188 137 65 23 6 1 0
        731 543 269 103 31 7 1""",
    "A060693": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        2 3 1 0 0 0 0
        5 10 6 1 0 0 0
        14 35 30 10 1 0 0
        42 126 140 70 15 1 0
        132 462 630 420 140 21 1""",
    "ternary_T": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        3 4 1 0 0 0 0
        12 21 10 1 0 0 0
        55 120 84 20 1 0 0
        273 715 660 252 35 1 0
        1428 4368 5005 2640 630 56 1""",
    "ternary": """
        1 0 0 0 0 0 0
        1 1 0 0 0 0 0
        3 2 1 0 0 0 0
        12 7 3 1 0 0 0
        55 30 12 4 1 0 0
        273 143 55 18 5 1 0
        1428 728 273 88 25 6 1""",
    "ternary_narayana": """
        1 0 0 0 0 0 0
        0 1 0 0 0 0 0
        0 2 1 0 0 0 0
        0 4 7 1 0 0 0
        0 8 30 16 1 0 0
        0 16 104 122 30 1 0
        0 32 320 660 365 50 1""",
}

MATRICES = {name: IntMatrix.parse(text) for name, text in _MATRICES.items()}

SEQUENCES = {
    "A002605": [1, 2, 6, 16, 44, 120, 328, 896, 2448, 6688, 18272],
    "tribonacci": [1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274],
    "A007482": [1, 3, 11, 39, 139, 495, 1763, 6279, 22363, 79647, 283667],
    "catalan_twice_row_sums": [1, 3, 13, 60, 283, 1348, 6454, 30992, 149091, 718044, 3460818],
    "catalan_twice_hankel": [1, 4, 15, 56, 209, 780, 2911, 10864, 40545],
    "motzkin_tilde_T_row_sums": [1, 5, 30, 191, 1241, 8129, 53448, 352097, 2321962, 15322025, 101143706],
    "motzkin_tilde_T_hankel": [1, 5, 24, 115, 551, 2640, 12649, 60605, 290376, 1391275],
    "A006190": [1, 3, 10, 33, 109, 360, 1189, 3927, 12970, 42837, 141481],
    "almost_1_row_sums": [1, 2, 5, 11, 23, 47, 95, 191, 383, 767, 1535],
    "almost_2_row_sums": [1, 1, 3, 6, 15, 35, 85, 204, 493, 1189, 2871],
    "almost_3_row_sums": [1, 1, 3, 6, 15, 34, 83, 194, 471, 1114, 2699],
    "motzkin_square_row_sums": [1, 2, 6, 18, 56, 176, 558, 1778, 5686, 18230, 58558],
    "cubic_1": [1, 2, 8, 44, 280, 1936, 14128, 107088, 834912],
    "cubic_2": [1, 1, 4, 16, 77, 403, 2228, 12800, 75653, 457022, 2809266],
    "A143330": [1, 1, 3, 8, 25, 83, 289, 1041],
    "schroeder": [1, 2, 6, 22, 90, 394, 1806, 8558],
    "motzkin": [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835],
    "extended_diagonal_row_sums": [1, 2, 5, 12, 30, 74, 183, 452, 1117, 2760, 6820],
    "A001045_positive": [1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683],
}
