"""Small groups as Cayley tables: words, subgroups, isomorphism."""
from gray16 import build_builtin, count_involutions, direct_product, cyclic, is_isomorphic, subgroups

D8 = build_builtin("D8")
print("D8 elements:", " ".join(D8.labels))
# words are evaluated and printed in the normal form x^i y^j
print("yx =", D8.label(D8.element("yx")))
print("involutions in D8:", count_involutions(D8))

Q8 = build_builtin("Q8")
print("subgroups of Q8:", [[Q8.labels[g] for g in S] for S in subgroups(Q8)])

# K8 is C4 x C2
K8 = build_builtin("K8")
iso = is_isomorphic(direct_product(cyclic(4, "x"), cyclic(2, "y")), K8)
print("C4 x C2 ~ K8:", iso is not None)
print("D8 ~ Q8:", is_isomorphic(D8, Q8) is not None)
