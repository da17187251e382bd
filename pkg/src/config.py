"""
Central configuration for the slow-consistency workbench
Budgets, counting conventions, search caps and storage settings
"""

import os
from dotenv import load_dotenv

# Load environment variables from .env
load_dotenv()

# ============================================================================
# EVALUATION BUDGETS
# ============================================================================

# Named budget profiles; values are astronomically large past the micro range
BUDGET_PROFILES = {
    'micro': {
        'max_steps': 10_000,              # recursion-rule applications
        'max_value': 10 ** 6,             # ceiling on intermediate values
        'step_down_budget': 10_000,       # waypoints per descent
        'enumeration_cap': 10,            # symbols per enumerated proof
        'reduction_budget': 1_000,        # walker steps
    },
    'desk': {
        'max_steps': 1_000_000,
        'max_value': 10 ** 12,
        'step_down_budget': 1_000_000,
        'enumeration_cap': 12,
        'reduction_budget': 10_000,
    },
    'big': {
        'max_steps': 100_000_000,
        'max_value': 10 ** 100,
        'step_down_budget': 10_000_000,
        'enumeration_cap': 12,
        'reduction_budget': 100_000,
    },
}

DEFAULT_BUDGET_PROFILE = 'desk'

# Environment variable selecting the active profile
BUDGET_PROFILE_ENV = 'WORKBENCH_BUDGET_PROFILE'


def active_profile_name() -> str:
    """Name of the budget profile selected by the environment"""
    name = os.getenv(BUDGET_PROFILE_ENV, DEFAULT_BUDGET_PROFILE)
    if name not in BUDGET_PROFILES:
        raise ValueError(f"Unknown budget profile: {name!r}")
    return name


def active_profile() -> dict:
    """Copy of the active budget profile"""
    return dict(BUDGET_PROFILES[active_profile_name()])


# ============================================================================
# ORDINALS
# ============================================================================

# Maximal nesting of omega towers built by omega_tower
TOWER_DEPTH_CAP = int(os.getenv('TOWER_DEPTH_CAP', '64'))

# ============================================================================
# SYMBOL COUNTING
# ============================================================================

COUNTING_MODES = ('normative', 'raw')
DEFAULT_COUNTING_MODE = 'normative'

# Embedded in every report so measurements can be reproduced
COUNTING_CONVENTION_ID = 'tokens-v1'

# ============================================================================
# PROOF SEARCH AND GENERATION
# ============================================================================

# Absolute ceiling for consistency-search, independent of profile
ENUMERATION_HARD_CEILING = 14

# n at which the per-level constant C of the size bound is calibrated
CALIBRATION_N = 5

# ============================================================================
# INFINITARY ENGINE
# ============================================================================

# Children checked per omega-rule node by locally_correct
OMEGA_SAMPLE_COUNT = 3

# Largest witness tried when searching relativized existentials
WITNESS_SEARCH_LIMIT = 10_000

# Surrogate hierarchy values past this bit length count as overflow
SURROGATE_MAX_BITS = 1 << 16

# ============================================================================
# DATABASE
# ============================================================================

DATABASE_URL = os.getenv('DATABASE_URL', 'sqlite:///workbench.db')

# ============================================================================
# LOGGING
# ============================================================================

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
