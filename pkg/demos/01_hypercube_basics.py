"""
Points, balls, and geodesics of the n-cube
==========================================

A point of the n-cube is a bit-coded integer: entry i lives in bit i-1, so
the "first entry" is the lowest bit.  A geodesic walks from a point to its
complement, flipping every coordinate exactly once.
"""

from geostab import (
    Geodesic,
    Point,
    expand,
    geodesic_to_text,
    in_ball,
    is_geodesic,
    layer_points,
    reverse,
    weight,
)

x = Point.from_bit_string("01101")
print(f"point {x.bit_string()} has weight {weight(x)}")
print(f"inside B_2(0^5)? {in_ball(x, 2, 0)}   inside B_2(1^5)? {in_ball(x, 2, 1)}")

# a geodesic is stored as start + flip order and expanded on demand
g = Geodesic(x, (3, 5, 1, 2, 4))
print("\ngeodesic", geodesic_to_text(g))
for p in expand(g):
    print("  ", p.bit_string())
print("valid geodesic?", is_geodesic(expand(g)))
print("endpoints are complements:", expand(g)[-1] == x.complement())

# the reverse walks the same points backwards
r = reverse(g)
print("\nreverse:", geodesic_to_text(r))
print("reverse expands to the reversed sequence:",
      expand(r) == list(reversed(expand(g))))

# layers: all points of one weight
print("\nweight-2 layer of the 4-cube:",
      [p.bit_string() for p in layer_points(4, 2)])
