from enum import Enum


class Family(Enum):
    A = "A"
    D = "D"
    E = "E"


class Method(Enum):
    BRUTE = "brute"   # polytope enumeration
    OMEGA = "omega"   # Omega-operator elimination
    GENFUN = "genfun" # closed-form generating functions
    REPS = "reps"     # representation counting over the McKay-dual group


class OutputFormat(Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class VerifyMode(Enum):
    DUALITY = "duality"
    LEVELRANK = "levelrank"
    ASYMPTOTIC = "asymptotic"
    OMEGA_IDENTITIES = "omega-identities"
    DETERMINANTS = "determinants"
    GOLDEN = "golden" # compare against the in-repo golden counts
