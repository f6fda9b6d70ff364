"""Reference values used by the golden tests.

Single-type matrices are printed to 3 decimals, two-type ones to 2.
"""

import numpy as np

SINGLE = dict(N=3, F=2, rho=0.6, mu=1.0)

SINGLE_C = np.array([
    [1.000, 0.000, 0.000, 0.000],
    [0.600, 0.400, 0.000, 0.000],
    [0.360, 0.480, 0.160, 0.000],
    [0.000, 0.648, 0.288, 0.064],
])

SINGLE_A = np.array([
    [0.368, 0.368, 0.184, 0.080],
    [0.000, 0.368, 0.368, 0.264],
    [0.000, 0.000, 0.368, 0.632],
    [0.000, 0.000, 0.000, 1.000],
])

SINGLE_P = np.array([
    [0.368, 0.368, 0.184, 0.080],
    [0.221, 0.368, 0.258, 0.154],
    [0.132, 0.309, 0.302, 0.257],
    [0.000, 0.238, 0.344, 0.417],
])

SINGLE_PI = np.array([0.171, 0.323, 0.278, 0.231])
SINGLE_L = 1.572

THREE_STATE_P = np.array([
    [0.25, 0.75, 0.00],
    [0.30, 0.60, 0.10],
    [0.00, 0.80, 0.20],
])
THREE_STATE_PI = np.array([0.262, 0.656, 0.082])

TWO_TYPE = dict(N=3, mu=[1.5, 1.0], rho=[0.75, 0.8], fu=[2, 1])

TWO_TYPE_STATES = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)]

TWO_TYPE_C = np.array([
    [1.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00],
    [0.80, 0.20, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00],
    [0.00, 0.96, 0.04, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00],
    [0.00, 0.00, 0.99, 0.01, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00],
    [0.75, 0.00, 0.00, 0.00, 0.25, 0.00, 0.00, 0.00, 0.00, 0.00],
    [0.60, 0.15, 0.00, 0.00, 0.20, 0.05, 0.00, 0.00, 0.00, 0.00],
    [0.00, 0.72, 0.03, 0.00, 0.00, 0.24, 0.01, 0.00, 0.00, 0.00],
    [0.56, 0.00, 0.00, 0.00, 0.38, 0.00, 0.00, 0.06, 0.00, 0.00],
    [0.45, 0.11, 0.00, 0.00, 0.30, 0.07, 0.00, 0.05, 0.01, 0.00],
    [0.00, 0.00, 0.00, 0.00, 0.84, 0.00, 0.00, 0.14, 0.00, 0.02],
])

TWO_TYPE_A = np.array([
    [0.08, 0.08, 0.04, 0.03, 0.12, 0.12, 0.13, 0.09, 0.20, 0.10],
    [0.00, 0.08, 0.08, 0.11, 0.00, 0.12, 0.34, 0.00, 0.26, 0.00],
    [0.00, 0.00, 0.08, 0.37, 0.00, 0.00, 0.55, 0.00, 0.00, 0.00],
    [0.00, 0.00, 0.00, 1.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00],
    [0.00, 0.00, 0.00, 0.00, 0.08, 0.08, 0.11, 0.12, 0.34, 0.26],
    [0.00, 0.00, 0.00, 0.00, 0.00, 0.08, 0.37, 0.00, 0.55, 0.00],
    [0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 1.00, 0.00, 0.00, 0.00],
    [0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.08, 0.37, 0.55],
    [0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 1.00, 0.00],
    [0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 1.00],
])

TWO_TYPE_P = np.array([
    [0.08, 0.08, 0.04, 0.03, 0.12, 0.12, 0.13, 0.09, 0.20, 0.10],
    [0.07, 0.08, 0.05, 0.05, 0.10, 0.12, 0.17, 0.07, 0.21, 0.08],
    [0.00, 0.08, 0.08, 0.12, 0.00, 0.12, 0.35, 0.00, 0.25, 0.00],
    [0.00, 0.00, 0.08, 0.37, 0.00, 0.00, 0.55, 0.00, 0.00, 0.00],
    [0.06, 0.06, 0.03, 0.02, 0.11, 0.11, 0.13, 0.10, 0.23, 0.14],
    [0.05, 0.06, 0.04, 0.03, 0.09, 0.11, 0.17, 0.08, 0.25, 0.11],
    [0.00, 0.06, 0.06, 0.09, 0.00, 0.11, 0.36, 0.00, 0.32, 0.00],
    [0.05, 0.05, 0.02, 0.02, 0.10, 0.10, 0.12, 0.10, 0.26, 0.19],
    [0.04, 0.05, 0.03, 0.03, 0.08, 0.10, 0.16, 0.08, 0.29, 0.15],
    [0.00, 0.00, 0.00, 0.00, 0.07, 0.07, 0.10, 0.12, 0.34, 0.31],
])

TWO_TYPE_PI = np.array([0.026, 0.047, 0.040, 0.066, 0.058, 0.096, 0.228, 0.060, 0.267, 0.110])
TWO_TYPE_L = (1.366, 1.144)
TWO_TYPE_L_TOTAL = 2.51
TWO_TYPE_R = (1.098, 0.874)
TWO_TYPE_P_FULL = 0.67

COST_MODEL = dict(N=16, mu=[2.0, 1.0], rho=[0.8, 0.8])
COST_CASES = {
    (1.0, 3.0): ((3, 2), 13.4),
    (2.0, 6.0): ((2, 1), 21.5),
}
