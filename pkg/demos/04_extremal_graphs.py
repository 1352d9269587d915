"""
The largest graphs a small weak code can handle
===============================================

A weak r-code of size k can identify at most k + r(2^k - 2) vertices.
The bound is attained by a k-clique carrying the code, with r layers of
tentacle vertices tagged by nonempty proper subsets of the clique: a
vertex in layer j is recognized, at radius j, by which code vertices it
can reach.
"""

from idcodes.extremal import build_extremal, w_max

print("maximum order k + r(2^k - 2):")
print("  r\\k", *[f"{k:5d}" for k in range(1, 6)])
for r in range(1, 5):
    print(f"  {r}  ", *[f"{w_max(r, k):5d}" for k in range(1, 6)])

# Build the r = 2, k = 3 instance and inspect it.
inst = build_extremal(2, 3)
print(f"\nr=2, k=3: order {inst.graph.n}, code {inst.code}")

report = inst.verify()
print("self-check:", "valid" if report.valid else "invalid")

# The verifier's certificate recovers the layer structure: clique vertices
# are identified at radius 0, layer-j tentacles at radius j.
radii = inst.certificate_radii()
by_radius = {}
for v, rho in sorted(radii.items()):
    by_radius.setdefault(rho, []).append(v)
for rho, vertices in sorted(by_radius.items()):
    print(f"  radius {rho}: vertices {vertices}")

confirmed = {v: rho for v, (rho,) in report.certificate.per_vertex.items()}
print("certificate matches layer map:", confirmed == radii)

# The serialized form round-trips through the text graph format.
print("\n" + inst.serialize())
