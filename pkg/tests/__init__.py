import functools
import os

from distributions import build_tw1_table
from ensembles import Seed

# Small TW1 table shared by the test cases.
SMALL_TW1_M = 10000
SMALL_TW1_N_GEN = 500


@functools.lru_cache(maxsize=None)
def small_tw1(seed=11):
    return build_tw1_table(SMALL_TW1_M, SMALL_TW1_N_GEN, Seed(seed))


# TW1 table shipped with modnet.
SHIPPED_TW1 = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "share", "tw1_table.txt")
