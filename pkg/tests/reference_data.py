"""Published spectrum of q^2/4 + sqrt(x^2 + 1) (beta = 1), 5-decimal print.

Indexed ``[n][l]`` for 0 <= n, l <= 4.
"""

UPPER = [
    [1.94926, 2.49495, 2.99541, 3.46197, 3.90193],
    [2.99541, 3.46197, 3.90193, 4.32027, 4.72059],
    [3.90193, 4.32027, 4.72059, 5.10556, 5.47723],
    [4.72059, 5.10556, 5.47723, 5.83725, 6.18692],
    [5.47723, 5.83725, 6.18692, 6.52732, 6.85935],
]
EXACT = [
    [1.91247, 2.45074, 2.94841, 3.41419, 3.85430],
    [2.89556, 3.34652, 3.77899, 4.19405, 4.59335],
    [3.74112, 4.14232, 4.53310, 4.91307, 5.28251],
    [4.50374, 4.87138, 5.23246, 5.58628, 5.93264],
    [5.20859, 5.55148, 5.88996, 6.22329, 6.55111],
]
FITTED = [
    [1.89549, 2.44621, 2.95032, 3.41969, 3.86189],
    [2.85420, 3.32970, 3.77678, 4.20097, 4.60620],
    [3.69078, 4.11913, 4.52783, 4.91998, 5.29790],
    [4.44883, 4.84403, 5.22459, 5.59242, 5.94903],
    [5.15078, 5.52098, 5.87970, 6.22821, 6.56756],
]
LOWER = [
    [1.65395, 2.22870, 2.75000, 3.23240, 3.68492],
    [2.22870, 2.75000, 3.23240, 3.68492, 4.11355],
    [2.75000, 3.23240, 3.68492, 4.11355, 4.52250],
    [3.23240, 3.68492, 4.11355, 4.52250, 4.91485],
    [3.68492, 4.11355, 4.52250, 4.91485, 5.29295],
]

STATES = [(n, l) for n in range(5) for l in range(5)]

# first zeros of Ai, from oracles.airy_zeros(3)
AIRY_ZEROS = (2.3381074104597674, 4.08794944413097, 5.520559828095552)
