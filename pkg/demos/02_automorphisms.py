"""Automorphism groups by exhaustive search over generator images."""
from gray16 import aut_as_group, automorphism_group, automorphism_order, build_builtin, inner_automorphism_group, is_isomorphic

for name in ("C4", "C8", "K8", "D8"):
    G = build_builtin(name)
    auts = automorphism_group(G)
    print(f"Aut({name}) has {len(auts)} elements")
    for f in auts:
        print("   ", f.images(), "order", automorphism_order(f))

# Aut(K8) is itself dihedral of order 8
print("Aut(K8) ~ D8:", is_isomorphic(aut_as_group(build_builtin("K8")), build_builtin("D8")) is not None)
print("inner automorphisms of D8:", len(inner_automorphism_group(build_builtin("D8"))))
