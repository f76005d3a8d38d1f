from discopula import QuasiCopula


def interior(rows):
    return QuasiCopula.from_interior(rows)


# the seven matrices of (Q_3, <=), bottom to top
Q3_ELEMENTS = {
    "bottom": ((0, 0, 1), (0, 1, 2), (1, 2, 3)),
    "atom_231": ((0, 1, 1), (0, 1, 2), (1, 2, 3)),
    "atom_312": ((0, 0, 1), (1, 1, 2), (1, 2, 3)),
    "middle": ((0, 1, 1), (1, 1, 2), (1, 2, 3)),
    "coatom_132": ((1, 1, 1), (1, 1, 2), (1, 2, 3)),
    "coatom_213": ((0, 1, 1), (1, 2, 2), (1, 2, 3)),
    "top": ((1, 1, 1), (1, 2, 2), (1, 2, 3)),
}
