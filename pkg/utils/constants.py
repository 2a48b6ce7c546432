"""Topological constants and tool parameters for Chern-number computations."""

from pathlib import Path

# Repository paths
REPO_ROOT = Path(__file__).resolve().parent.parent
CONFIG_DIR = REPO_ROOT / "configs"
RECIPE_DIR = REPO_ROOT / "recipes"
DEFAULT_CONFIG_FILE = "default_config.json"

# Environment override for the default ASD policy
POLICY_ENV_VAR = "CHERNFORGE_POLICY"
DEFAULT_POLICY = "known"

# Surfaces
K3_CHI = 24
K3_TAU = -16
K3_P1 = 3 * K3_TAU  # -48, the fiber multiple in p1 = -48F
CP2_CHI = 3
CP2_TAU = 1
CP2BAR_CHI = 3  # one CP2-bar summand adds chi - 2 = +1
CP2BAR_TAU = -1

# (chi, tau) of the only 4-manifolds with Kahler twistor spaces (S4, CP2)
HITCHIN_KAHLER_TWISTOR_INVARIANTS = frozenset({(2, 0), (3, 1)})

# 3-folds
CP3_EULER = 4
CP3_BETTI_SUM = 4  # b0 + b2 + b4 + b6
CP3_P1_COEFF = 4  # p1(CP3) = 4 H^2
K3_S2_EULER = K3_CHI * 2
K3_S2_B2 = 22 + 1  # b2(K3 x S2)

# Chern-number arithmetic
BLOWUP_C1_CUBED_SHIFT = 8  # per point
BLOWUP_C3_SHIFT = 2  # per point
TODD_DENOMINATOR = 24  # chi(O) = c1c2 / 24
SPIN_C1_CUBED_DIVISOR = 8
SURFACE_TODD_DENOMINATOR = 4  # (chi + tau) / 4
TODD_FAMILY_DENOMINATOR = 48  # chi(O) = (c1^3 - c1 p1) / 48

# Anti-self-dual metrics on N(m) # k CP2-bar exist for k >= k0(m)
K0_TABLE = {0: 6, 1: 14, 2: 3}
K0_NEGATIVE_M = 0  # k0(m) for every m < 0

# Report output
REPORT_SCHEMA_VERSION = 1
REPORT_FIELDS = (
    "c1_cubed", "c1c2", "c3", "todd", "spin",
    "kahler_type", "simply_connected", "provenance", "warnings",
)

# CLI exit codes
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_PARSE_ERROR = 2
EXIT_POLICY_REJECTION = 3

# verify-paper parameters
VERIFY_RANDOM_SEED = 20  # fixed so the check is reproducible
VERIFY_RANDOM_THREEFOLDS = 50
VERIFY_MAX_BLOWUPS = 20
VERIFY_K3_FAMILY_RANGE = (1, 100)
VERIFY_CATALOGUE_RANGE = (-5, 5)
VERIFY_REALIZE_RANGE = (-3, 3)
VERIFY_N_TILDE_WINDOW = 10
VERIFY_TODD_FAMILY_RANGE = (-50, 50)
VERIFY_DOMINANCE_RANGE = (-60, 60)
VERIFY_RING_MAX_BLOWUPS = 10

# Console output
BANNER_WIDTH = 70
