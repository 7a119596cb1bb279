"""Type 1 maps: double a Gray map on an index-2 subgroup."""
from gray16 import build_builtin, doubling_obstruction, is_gray_map, type1_extend, verify_gray_map
from gray16 import catalog

phi = catalog.type1_map_order8("C8")
print("C8 from C4 on <x^2>:")
for g in phi.group:
    print(f"  {phi.group.labels[g]:4} {phi.word(g)}")

G7 = catalog.type1_catalog()["G7"]
print("\nG7, length", G7.length, "->", verify_gray_map(G7).summary().replace("\n", "\n  "))

# with the coset written a k, the quotient of two coset elements is a (k1 k2^-1) a^-1,
# so the map survives only if conjugation by a keeps the weights
G10 = build_builtin("G10")
ext = catalog.order16_extension("G10")
base = catalog._onto_kernel(catalog.type1_map_order8("K8", ("x^2", "y")), ext)
print("\nG10 over K8, coset a*K8 :", doubling_obstruction(G10, range(8), "a", base))
print("  Gray map:", is_gray_map(type1_extend(G10, range(8), "a", base, strict=False)))
print("G10 over K8, coset K8*a :",
      is_gray_map(type1_extend(G10, range(8), "a", base, side="right")))
