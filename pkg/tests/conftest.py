import os
import sys
from itertools import permutations

import pytest

# Make the ehrhart_mckay package importable when pytest runs from a checkout
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)


@pytest.fixture
def permutation_equivalent():
    """True when some simultaneous row/column permutation turns `ours` into `displayed`."""

    def check(ours, displayed) -> bool:
        n = len(displayed)
        if len(ours) != n:
            return False
        for perm in permutations(range(n)):
            if all(ours[perm[i]][perm[j]] == displayed[i][j] for i in range(n) for j in range(n)):
                return True
        return False

    return check
