from math import comb, factorial, sqrt

# (n, k) -> (generators, tetrahedron relations)
GNK_COUNTS = {
    (n, k): (comb(n, k), factorial(k + 1) * comb(n, k + 1) // 2) for n in range(3, 8) for k in range(2, n)
}

GAMMA_GENERATORS = {4: 3, 5: 15, 6: 45}
GAMMA_QUOTIENT_DIMENSION = {4: 3, 5: 9}
PENTAGONS_PER_FIVE_SET = 12

# xi(b_12) in lenient mode
XI_B12 = {
    4: (["d_(1,2,3,4)", "d_(1,2,4,3)"], 4),
    5: (["d_(1,2,4,5)", "d_(1,2,3,4)", "d_(1,2,5,4)", "d_(1,2,4,3)"], 6),
}

GENERIC_LINES = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
GENERIC_LINES_MARGIN = 1 / sqrt(3)
CONCURRENT_LINES = [[1, 0, 0], [0, 1, 0], [1, 1, 0]]

# planar key frames, points[t][i]
B12_FRAMES = [
    [[0.0, 0.0], [1.0, 0.05], [2.2, 0.35], [3.1, -0.2]],
    [[0.0, 0.0], [0.0, 0.6], [2.2, 0.35], [3.1, -0.2]],
    [[0.0, 0.0], [-0.6, 0.0], [2.2, 0.35], [3.1, -0.2]],
    [[0.0, 0.0], [0.0, -0.6], [2.2, 0.35], [3.1, -0.2]],
    [[0.0, 0.0], [0.6, 0.0], [2.2, 0.35], [3.1, -0.2]],
    [[0.0, 0.0], [1.0, 0.05], [2.2, 0.35], [3.1, -0.2]],
]
B12_BRAID = ["s1", "s1"]

B13_FRAMES = [
    [[0.0, 0.0], [1.0, 0.05], [2.0, 0.13], [3.2, -0.4]],
    [[0.0, 0.0], [1.0, 0.05], [0.5, 1.0], [3.2, -0.4]],
    [[0.0, 0.0], [1.0, 0.05], [-1.0, 0.0], [3.2, -0.4]],
    [[0.0, 0.0], [1.0, 0.05], [0.5, -1.0], [3.2, -0.4]],
    [[0.0, 0.0], [1.0, 0.05], [0.5, 0.3], [3.2, -0.4]],
    [[0.0, 0.0], [1.0, 0.05], [2.0, 0.13], [3.2, -0.4]],
]
B13_BRAID = ["s2", "s1", "s1", "s2^-1"]

SQUARE_FRAMES = [
    [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 0.9]],
    [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.1]],
]
SQUARE_FLIP = "d_(1,2,4,3)"
SQUARE_INTERIOR_POINT = [0.5, 0.45]

STABILITY_PERTURBATION = 1e-4
STABILITY_SEEDS = (1, 2, 3)
