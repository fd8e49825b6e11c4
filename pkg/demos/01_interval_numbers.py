# Interval numbers: exact bounds in [0, 1] with a componentwise lattice.
from fractions import Fraction

from ivfgraph import compare, isum, make_interval, rmax, rmin, scale

# Decimal literals are read exactly, so 0.3 really is 3/10.
a = make_interval("0.3", "0.7")
b = make_interval(0.4, 0.5)
print(a, b)

# Meet and join act on each bound separately.
print("rmin:", rmin(a, b))   # [3/10, 1/2]
print("rmax:", rmax(a, b))   # [2/5, 7/10]

# The sum is the probabilistic sum a + b - ab, again per bound.
print("sum :", isum(make_interval(0.3, 0.5), make_interval(0.4, 0.6)))  # [29/50, 4/5]

# Scaling by a factor in [0, 1].
print("half:", scale(Fraction(1, 2), make_interval(0.4, 0.8)))

# The order is partial: [0.2, 0.5] and [0.3, 0.4] are incomparable.
print(compare(make_interval(0.2, 0.3), make_interval(0.3, 0.4)))
print(compare(make_interval(0.2, 0.5), make_interval(0.3, 0.4)))

# Bounds outside [0, 1] or in the wrong order are rejected.
try:
    make_interval(0.7, 0.3)
except ValueError as exc:
    print("rejected:", exc)
