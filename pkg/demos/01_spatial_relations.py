"""
Directed spatial relations between rectangles
=============================================

Builds a handful of axis-aligned rectangles and prints which directed
relations hold between them.
"""

from parcc import Direction, SceneObject, dr_directed, ec_directed
from parcc import externally_connected, interiors_disjoint

# a 2x2 crate sitting at the origin, plus neighbours in various poses
crate = SceneObject("crate", "BOX", l=2, w=2, x=0, y=0)
above = SceneObject("above", "BOX", l=2, w=2, x=0, y=4)      # gap of 2
stacked = SceneObject("stacked", "BOX", l=2, w=2, x=0, y=2)  # edge contact
beside = SceneObject("beside", "BOX", l=2, w=2, x=2, y=0)    # west edge on crate's east
corner = SceneObject("corner", "BOX", l=2, w=2, x=2, y=2)    # corner touch only
overlap = SceneObject("overlap", "BOX", l=2, w=2, x=1, y=1)

others = [above, stacked, beside, corner, overlap]

# note the argument conventions: DR_d(o, crate) reads "o lies wholly in
# direction d of crate", while EC_d(o, crate) reads "crate touches o's
# side d".  The stacked row below shows both at once.
print(f"{'partner':>8}  disjoint  touching  " + "  ".join(f"DR_{d.name} EC_{d.name}" for d in Direction))
for o in others:
    row = [
        f"{str(interiors_disjoint(o, crate)):>8}",
        f"{str(externally_connected(o, crate)):>8}",
    ]
    for d in Direction:
        row.append(f"{str(dr_directed(o, crate, d)):>4}")
        row.append(f"{str(ec_directed(o, crate, d)):>4}")
    print(f"{o.id:>8}  " + "  ".join(row))

print()

# DR_N holds as soon as the partner is wholly below: the stacked box
# counts both as "discrete to the north" and "externally connected on
# the north side", since edge contact keeps interiors disjoint.
assert dr_directed(stacked, crate, Direction.N)
assert ec_directed(crate, stacked, Direction.N)

# the corner case is the classic RCC subtlety: the boxes are externally
# connected, but no *directed* EC holds because a single corner point
# gives no overlap along either perpendicular axis
assert externally_connected(corner, crate)
assert not any(ec_directed(crate, corner, d) for d in Direction)
print("corner contact is EC but carries no direction, as expected")

# swapping arguments mirrors the direction
for d in Direction:
    assert dr_directed(above, crate, d) == dr_directed(crate, above, d.opposite)
print("duality spot-check passed")
