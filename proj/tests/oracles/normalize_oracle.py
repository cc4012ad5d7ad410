"""Hand-style reference values of x / sqrt(x^2 + 15), computed at 40 digits.

Run: python3 normalize_oracle.py > ../fixtures/normalize_fixtures.tsv
"""
import mpmath

mpmath.mp.dps = 40
xs = [0, 0.5, -0.5, 1, -1, 2, -2, -3.1, 3.1, 0.001, -0.001, 0.05, 0.25, 0.733, -0.74, 1.48,
      -1.48, 2.293, 3.317, -3.317, 4, -4, 5.5, -5.5, 7.25, 8, -8, 10, -10, 12.5, 15, -15, 20,
      25.75, -25.75, 40, 50, -60, 100, -100, 250, 1000, -1000, 1e4, -1e4, 3.872983346207417,
      -3.872983346207417, 0.292, 1.168, 6.4]
assert len(xs) == 50
for x in xs:
    v = mpmath.mpf(x) / mpmath.sqrt(mpmath.mpf(x) ** 2 + 15)
    print(f"{x!r}\t{mpmath.nstr(v, 20)}")
