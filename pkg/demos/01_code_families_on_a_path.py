"""
Three code families on a five-vertex path
=========================================

A code is a subset of vertices carrying detectors.  The families differ in
what a detector reading must reveal: identifying codes fix one radius,
weak codes let each vertex pick its own radius, light codes let it use a
whole set of radii.  The same code can sit on different sides of these
lines, and the verifier hands back either a certificate or a concrete
counterexample.
"""

from idcodes import FamilySpec, build_path, check_code, min_radius_set

g = build_path(5)

# {2, 3} is a weak 2-code: every vertex has some radius at which its view
# of the code is unlike anyone else's.
report = check_code(g, [2, 3], FamilySpec.weak(2))
print("weak 2-code {2,3}:", "valid" if report.valid else "invalid")
for v, radii in sorted(report.certificate.per_vertex.items()):
    print(f"  vertex {v} identified at radius {radii[0]}")

# The same code is not an identifying 2-code: at the fixed radius 2 the
# verifier exhibits two vertices with identical views.
report = check_code(g, [2, 3], FamilySpec.identifying(2))
print("\nidentifying 2-code {2,3}:", "valid" if report.valid else "invalid")
print("  witness:", report.witness.to_dict())

# {0, 4} drops down a level: it is a light 2-code (each vertex is pinned
# by a set of radii) but not a weak one (vertex 1 has no single working
# radius; the witness lists what blocks each attempt).
report = check_code(g, [0, 4], FamilySpec.light(2))
print("\nlight 2-code {0,4}:", "valid" if report.valid else "invalid")
for v in range(5):
    print(f"  vertex {v} needs radii {min_radius_set(g, [0, 4], 2, v)}")

report = check_code(g, [0, 4], FamilySpec.weak(2))
print("\nweak 2-code {0,4}:", "valid" if report.valid else "invalid")
print("  witness:", report.witness.to_dict())
