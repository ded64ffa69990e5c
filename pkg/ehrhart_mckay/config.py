import os
from fractions import Fraction
from pathlib import Path

# Defaults; each one can be overridden from the environment (flags override both).
DEFAULT_TERMS = int(os.environ.get("EHRHART_TERMS", "16"))
OMEGA_MAX_RANK = int(os.environ.get("EHRHART_OMEGA_MAX_RANK", "6"))
OMEGA_LARGE_RANK = 4 # from this rank on the omega method is capped in length
OMEGA_LARGE_RANK_TERMS = int(os.environ.get("EHRHART_OMEGA_LARGE_TERMS", "8"))
ASYMPTOTIC_LEVEL = int(os.environ.get("EHRHART_ASYMPTOTIC_LEVEL", "200"))
ASYMPTOTIC_TOLERANCE = Fraction(os.environ.get("EHRHART_TOLERANCE", "1/10"))
LEVELRANK_MAX = 10
GOLDEN_PATH = Path(os.environ.get(
    "EHRHART_GOLDEN",
    Path(__file__).resolve().parent / "data" / "golden_counts.csv",
))
