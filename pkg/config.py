"""
Configuration file for the twistlab workbench.
Contains all tunable bounds, prime budgets and environment variables.
"""
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Worker threads for per-basis-element verification loops
THREADS = int(os.getenv("TWISTLAB_THREADS", "1"))

# Dimension bound for block decomposition and full simplicity enumeration
MAX_ENUM_DIM = int(os.getenv("TWISTLAB_MAX_ENUM_DIM", "120"))

# Modular idempotent search
PRIME_BUDGET = int(os.getenv("TWISTLAB_PRIMES", "12"))
PRIME_AGREEMENT = int(os.getenv("TWISTLAB_PRIME_AGREEMENT", "3"))
PRIME_FLOOR = int(os.getenv("TWISTLAB_PRIME_FLOOR", str(2 ** 62)))
RECON_HEIGHT = int(os.getenv("TWISTLAB_RECON_HEIGHT", str(2 ** 24)))
MATCH_LIMIT = int(os.getenv("TWISTLAB_MATCH_LIMIT", "20000"))

# Exact arithmetic
MAX_CONDUCTOR = int(os.getenv("TWISTLAB_MAX_CONDUCTOR", "5040"))

# Group engine
TABLE_LIMIT = int(os.getenv("TWISTLAB_TABLE_LIMIT", "1500"))
EXHAUSTIVE_LIMIT = int(os.getenv("TWISTLAB_EXHAUSTIVE_LIMIT", "120"))
TENSOR_BUDGET = int(os.getenv("TWISTLAB_TENSOR_BUDGET", "4000000"))

# Cohomology
COCYCLE_FULL_CHECK = int(os.getenv("TWISTLAB_COCYCLE_FULL_CHECK", "64"))
SCHUR_BRUTE_LIMIT = int(os.getenv("TWISTLAB_SCHUR_BRUTE_LIMIT", "12"))

# Deterministic random generators
SEED = int(os.getenv("TWISTLAB_SEED", "20061"))

# Logging
LOG_LEVEL = os.getenv("TWISTLAB_LOG_LEVEL", "WARNING")
