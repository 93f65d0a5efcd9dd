"""Shared exact fixtures: classical tableaus and the 6-stage family.

Values are frozen from the standard references, not computed by the code
under test, so they can serve as oracles.
"""

from fractions import Fraction

from butcher_kit.verify import ButcherTableau

F = Fraction


def explicit_euler():
    return ButcherTableau.from_rows("explicit euler", [[0]], [1])


def implicit_midpoint():
    return ButcherTableau.from_rows("implicit midpoint", [[F(1, 2)]], [1], [F(1, 2)])


def rk4():
    return ButcherTableau.from_rows(
        "rk4",
        [
            [0, 0, 0, 0],
            [F(1, 2), 0, 0, 0],
            [0, F(1, 2), 0, 0],
            [0, 0, 1, 0],
        ],
        [F(1, 6), F(1, 3), F(1, 3), F(1, 6)],
        [0, F(1, 2), F(1, 2), 1],
    )


def butcher6(u, v):
    """The classical two-parameter family of 6-stage order-5 methods.

    Exact in u and v; u must be nonzero (it divides several entries).
    Every member has order exactly 5.
    """
    u, v = F(u), F(v)
    if u == 0:
        raise ValueError("u must be nonzero")
    z = F(0)
    a = [
        [z, z, z, z, z, z],
        [u, z, z, z, z, z],
        [(-1 + 8 * u) / (32 * u), 1 / (32 * u), z, z, z, z],
        [
            (-1 + 4 * u + 2 * v - 8 * u * v) / (8 * u),
            (1 - 2 * v) / (8 * u),
            v,
            z,
            z,
            z,
        ],
        [
            3 * (1 - 3 * u - v + 4 * u * v) / (16 * u),
            3 * (-1 + v) / (16 * u),
            -F(3, 4) * (-1 + v),
            F(9, 16),
            z,
            z,
        ],
        [
            (-7 + 22 * u + 6 * v - 24 * u * v) / (14 * u),
            (7 - 6 * v) / (14 * u),
            F(12, 7) * v,
            -F(12, 7),
            F(8, 7),
            z,
        ],
    ]
    b = [F(7, 90), z, F(16, 45), F(2, 15), F(16, 45), F(7, 90)]
    c = [z, u, F(1, 4), F(1, 2), F(3, 4), 1]
    return ButcherTableau.from_rows(f"butcher6(u={u}, v={v})", a, b, c)


# Three distinct instantiations used across the suite; u nonzero everywhere.
BUTCHER6_SAMPLES = ((F(2, 5), F(1, 3)), (F(1, 2), F(1, 4)), (F(1, 3), F(2, 7)))
