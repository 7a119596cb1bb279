"""The fourteen groups of order 16 as cyclic extensions (N, n, tau, v)."""
from gray16 import (build_builtin, build_extension, classify_order16, extension_type, format_extension,
                    is_isomorphic, validate_extension_type)

for c in classify_order16():
    print(f"{c.name:4} {c.description:28} {format_extension(c.extension)}")

# tau must fix v and tau^n must be conjugation by v; this one breaks the second rule
rep = validate_extension_type(extension_type("K8", 3, {"x": "xy", "y": "y"}, "e"))
print("\n(K8, 3, x->xy, e):", "valid" if rep.valid else [c.name for c in rep.failures()])

# inverting the C8 generator with a^2 = x^4 gives the generalized quaternion group
Q16 = build_extension(extension_type("C8", 2, {"x": "x^7"}, "x^4")).group
print("(C8, 2, x->x^7, x^4) ~ Q16:", is_isomorphic(Q16, build_builtin("Q16")) is not None)
