"""
Exhaustive search beyond dimension 2
====================================

The RREF scan works for any k.  No published values are checked here, so
these numbers are computed but unverified against the literature.
"""

from lcdcodes import min_distance, is_lcd, oracle_exhaustive
from lcdcodes.oracle import gaussian_binomial

for k in (3, 4):
    for n in range(k, 11):
        res = oracle_exhaustive(n, k, workers=2)
        code = res.code
        assert is_lcd(code) and min_distance(code) == res.d
        print(f"LCD[{n},{k}] = {res.d}   ({gaussian_binomial(n, k)} subspaces scanned)")

# The witness for LCD[10,3]
print()
print(oracle_exhaustive(10, 3).witness)
