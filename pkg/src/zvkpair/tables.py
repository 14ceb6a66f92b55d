"""Braid decomposition tables of the two sextics.

Each table lists, in order, the braid of every path piece: the approach
path ``Gamma_j`` to the j-th discriminant point, the local braid
``alpha_j`` of the small loop around it, and the half-way braid
``alpha_j+`` used to pass it on the way to the next point.  Letters are
signed sigma indices.

The C2 refinement table keeps the free exponent ``k`` of the deformed
A_15 point; :func:`c2_a15_refinement_rows` fills it in.
"""
from __future__ import annotations


def _p(gen: int, power: int) -> list[int]:
    return [gen if power > 0 else -gen] * abs(power)


C1_SPECIAL_ROWS = [
    ("Gamma_1", [-3, 2]),
    ("alpha_1", [1]),
    ("alpha_1+", []),
    ("Gamma_2", [-2] + [-3, 1] * 2 + [2]),
    ("alpha_2", [3]),
    ("alpha_2+", [3]),
    ("Gamma_3", [-2, 1]),
    ("alpha_3", _p(2, 2)),
    ("alpha_3+", [2]),
    ("Gamma_4", [-1, 2]),
    ("alpha_4", [1]),
    ("alpha_4+", [1]),
    ("Gamma_5", []),
    ("alpha_5", _p(2, 16)),
    ("alpha_5+", _p(2, 8)),
    ("Gamma_6", []),
    ("alpha_6", [3]),
]

_TWIST = [2, 1, 3, 2]

C2_SPECIAL_ROWS = [
    ("Gamma_1", [-1, -3]),
    ("alpha_1", [2]),
    ("alpha_1+", []),
    ("Gamma_2", []),
    ("alpha_2", [1, 3] * 7 + _TWIST),
    ("alpha_2+", [1, 3] * 4 + _TWIST),
    ("Gamma_3", []),
    ("alpha_3", [2]),
    ("alpha_3+", []),
    ("Gamma_4", [-1, -3]),
    ("alpha_4", _p(2, 2)),
]

# right-hand part of the generic monodromy, shared by both curves (B_6)
GENERIC_COMMON_ROWS = [
    ("Gamma_1", []),
    ("alpha_1", [1]),
    ("alpha_1+", []),
    ("Gamma_2", [-2, -3, 1, 2]),
    ("alpha_2", [3]),
    ("alpha_2+", [3]),
    ("Gamma_3", []),
    ("alpha_3", _p(4, 4)),
    ("alpha_3+", _p(4, 2)),
    ("Gamma_4", []),
    ("alpha_4", [5]),
    ("alpha_4+", []),
    ("Gamma_5", [-4, 5, -3, 4, -2, 3, -1, 2]),
    ("alpha_5", [1]),
]


def c2_a15_refinement_rows(k: int) -> list[tuple[str, list[int]]]:
    """Rows replacing (Gamma_2, alpha_2, alpha_2+) of C2 after deforming A_15."""
    return [
        ("Gamma_2a", _p(1, -2 * k) + _p(3, 2 * k) + [1, 2]),
        ("alpha_2a", [1]),
        ("alpha_2a+", [1]),
        ("Gamma_2b", [-2, 3]),
        ("alpha_2b", [2]),
        ("alpha_2b+", [2]),
        ("Gamma_2c", []),
        ("alpha_2c", _p(3, 16)),
        ("alpha_2c+", _p(3, 8)),
    ]


# a_1, a_4 go around the quartic, a_2, a_3 around the conic (both curves)
SEXTIC_COMPONENTS = {1: "quartic", 2: "conic", 3: "conic", 4: "quartic"}

# inverse of the meridian of the line at infinity, in the table's basis
C1_INFINITY_WORD = [1, 4, 3, 2, 1, 4]
C2_INFINITY_WORD = [1, 4, 3, 2, 1, 4]

# A second candidate for the C2 infinity word.  It abelianizes to
# 3 quartic + 3 conic meridians instead of 4 + 2, so it cannot be a meridian
# of the line at infinity for the labels above; kept only for comparison.
C2_INFINITY_WORD_TRANSLATED = [1, 4, 3, 2, 1, 3, 2, -3]
