# tests/fixtures.py
# Datos de referencia compartidos por las pruebas

# Curva y^2 + y = x^3 + x^2 - 2x con P = (0,0), Q = (1,0)
CURVE_389 = (0, 1, 1, -2, 0)
P_389 = (0, 0)
Q_389 = (1, 0)
R_389 = (3, 5)

GRID_RANGES = [(-2, 6), (-2, 6)]

# Filas de arriba (v2 = 6) hacia abajo (v2 = -2); columnas v1 = -2..6
GRID_ROWS = [
    [3269, -2869, 4335, 5959, 12016, -55287, 23921, 1587077, -7159461],
    [-127, -299, 94, 479, 919, -2591, 13751, 68428, 424345],
    [-44, -27, -31, 53, -33, -350, 493, 6627, 48191],
    [-1, -7, -5, 8, -19, -41, -151, 989, -1466],
    [3, -2, 1, 3, -1, -13, -36, 181, -1535],
    [1, -1, 1, 1, 2, -5, 7, 89, -149],
    [-1, -1, 0, 1, 1, -3, 11, 38, 249],
    [-2, -1, -1, 1, -1, -4, 1, 47, 185],
    [1, -3, -1, 2, -3, -5, -17, 63, -184],
]


def grid_value(v1: int, v2: int) -> int:
    return GRID_ROWS[6 - v2][v1 + 2]


def grid_items():
    for v2 in range(-2, 7):
        for v1 in range(-2, 7):
            yield (v1, v2), grid_value(v1, v2)


# Sucesión de divisibilidad elíptica de P, W(0)..W(14)
EDS_389 = [0, 1, 1, -3, 11, 38, 249, -2357, 8767, 496035, -3769372, -299154043,
           -12064147359, 632926474117, -65604679199921]

# Semillas de rango 2 en el orden (1,0),(0,1),(1,1),(2,0),(0,2),(2,1),(1,2),(2,2)
RANK2_SEEDS = {
    (1, 0): 1, (0, 1): 1, (1, 1): 1, (2, 0): 1,
    (0, 2): 1, (2, 1): 2, (1, 2): 3, (2, 2): -1,
}
RANK2_SEED_TEXT = "1,1,1,1,1,2,3,-1"

RANK1_SEEDS = {(1,): 1, (2,): 1, (3,): -3, (4,): 11}

# Diagonal W(k,k): sucesión de P + Q = (-2,-1)
DIAGONAL_389 = [1, -1, -41, 493]


def grid_net(field=None):
    """Red de rango 2 con las 81 entradas de la rejilla"""
    from src.arith.field import FieldDescriptor
    from src.nets.elliptic_net import EllipticNet
    return EllipticNet(2, field or FieldDescriptor.rationals(), dict(grid_items()))
