"""Configuration constants for rydblock.

Units throughout the package: µm for lengths, µs for times, rad/µs for amplitudes and
detunings, hbar = 1.
"""

import math

PACKAGE_VERSION = "0.1.0"

# Interaction coefficients in rad·µm⁶/µs. "862 GHz·µm⁶" is read without a 2π factor.
C6_N70 = 8.62e5
C6_N82 = 5.559e6
C6_BY_LEVEL = {70: C6_N70, 82: C6_N82}

# Blockade radius of a global drive relative to the sequential one
GLOBAL_RADIUS_FACTOR = 0.98

# Simplified P_RR curves: r -> a*r - b*r_B
GLOBAL_CURVE_COEFFS = (1.29, 0.26)
LOCAL_CURVE_COEFFS = (1.18, 0.16)
SEQUENTIAL_GRADIENT = 3.0
LOCAL_GRADIENT = 3.475

# Quench sampling
DEFAULT_DT = 0.05
PAIR_DURATION = 50.0
FIT_DURATION = 15.0
EMBED_DURATION = 100.0
REFERENCE_DT = 1e-3

# Tolerances
NORM_TOL = 1e-9
HERMITIAN_TOL = 1e-12
IMAG_TOL = 1e-10
REFERENCE_NORM_DRIFT = 1e-6
POLE_TOL = 1e-12
POLE_PERTURBATION = 1e-9

# Seven-atom star used by the embedding sweep
STAR_OMEGA = math.pi
STAR_SPECIAL_OMEGA = math.pi / 20
STAR_SHUFFLE_PROBABILITY = 3 / 7
DEFAULT_LAMBDA_RATIOS = (0.8, 2.0)

# Local-gradient fitting sweep
FIT_R_GRID = (5.0, 24.75, 80)
FIT_COMBINATIONS = 61
FIT_OMEGA0_RANGE = (1.0, 5.0)
FIT_RATIO_RANGE = (0.4, 1.0)
FLUCTUABILITY_WINDOW = 5
FLUCTUABILITY_CAP = 0.99

# Final-Hamiltonian optimization
KAPPA_BOUNDS = (0.05, 2.0)
DELTA_F_BOUNDS = (0.0, 10.0)
GRID_POINTS = 21
SIMPLEX_BUDGET = 400
GROUND_REL_TOL = 1e-9
# Grid optima below this P_MIS carry no information and are flagged
FLAT_OBJECTIVE_TOL = 1e-12

# Graph limits
MAX_MIS_VERTICES = 24
MAX_REALIZE_VERTICES = 12
MAX_DENSE_ATOMS = 14
REALIZE_MARGIN = 0.05

# Outputs
OUTPUT_ROOT_ENV = "RYDBLOCK_OUTPUT_ROOT"
DEFAULT_OUTPUT_ROOT = "rydblock-output"
CSV_FLOAT_FORMAT = ".12g"
LOCK_FILENAME = ".rydblock.lock"
LOCK_TIMEOUT_S = 30

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3
