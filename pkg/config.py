# L-system toolkit configuration
# Every tolerance and default grid used by the modules lives here.

# Matrix checks (relative Frobenius unless noted)
HERMITIAN_TOL = 1e-10          # ||H - H*|| <= tol * (1 + ||H||)
SINGULAR_PIVOT_TOL = 1e-14     # |pivot| <= tol * ||M|| means SingularMatrix
POSITIVE_DEFINITE_TOL = 1e-14  # absolute floor on the smallest eigenvalue for log

# L-system validation
SIGNATURE_TOL = 1e-10          # J = J* and J^2 = I
IMBALANCE_TOL = 1e-10          # ||Im T - K J K*|| <= tol * (1 + ||T||)
RANK_TOL = 1e-10               # singular values below tol * largest are zero
J_MATCH_TOL = 1e-12            # couple() requires equal directing operators

# Model evaluators
POLE_GUARD = 1e-13             # |z - pole| < guard * (1 + |pole|) means PoleHit

# c-Entropy
SINGULAR_MODULUS_TOL = 1e-12   # smallest eigenvalue of |W(-i)| below this => +inf
ENTROPY_LIMIT_LADDER = (1e-3, 1e-4, 1e-5)  # z = -i + i*eps when -i is in the spectrum
LIMIT_DIVERGENT_SLOPE = 0.5    # |d ln|det W| / d ln eps| at or above this is a pole or zero
LIMIT_STABLE_SLOPE = 0.1       # |d ln|det W| / d ln eps| at or below this is removable
ENTROPY_ZERO_TOL = 1e-12       # |S| below this is reported as exactly 0

# Herglotz checks
HERGLOTZ_TOL = 1e-10           # min eigenvalue of Im V must be >= -tol
HERGLOTZ_GRID_COUNT = 10       # 10 x 10 samples
HERGLOTZ_RE_BOUND = 2.0        # |Re z| <= 2
HERGLOTZ_IM_MAX = 2.0          # 0 < Im z <= 2

# Surface grids (Re lambda0 on x, Im lambda0 on y)
SURFACE_X_RANGE = (-3.0, 3.0)
SURFACE_Y_RANGE = (0.05, 3.0)
SURFACE_STEP = 0.05

# Extremal scans along Re lambda0
SCAN_X_RANGE = (-3.0, 3.0)
SCAN_STEP = 0.01
SCAN_HEIGHTS = (0.1, 0.5, 2.0, 10.0)

# Verification suites
DEFAULT_SEED = 42
DEFAULT_CASES = 100
ORACLE_TOL = 1e-12             # coefficient closed forms vs classify()
CLOSED_ENTROPY_TOL = 1e-9
ROUND_TRIP_TOL = 1e-9
MULTIPLICATION_TOL = 1e-10
RESOLVENT_TOL = 1e-10
ADDITIVITY_TOL = 1e-9
COMPOSITION_TOL = 1e-12
SPECTRUM_MARGIN = 0.1          # sampled z stay this far from factor eigenvalues
EXCLUDED_DISK = 1e-3           # random lambda0 avoid this disk around i
MAX_LAMBDA_IM = 5.0
MAX_LAMBDA_RE = 5.0
RANDOM_MAX_STATE = 4           # random systems: 1 <= n <= 4
RANDOM_MAX_CHANNEL = 3         # random systems: 1 <= m <= 3

# Example regression
EXAMPLE_TOL = 1e-9
EXAMPLE_LAMBDAS = {1: 1j, 2: 1 + 1j}
EXAMPLE_POINTS = (2j, 0.5 + 2j, -1.5 + 0.5j, 3 - 2j)
