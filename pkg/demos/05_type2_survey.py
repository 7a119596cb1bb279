"""Type 2 maps and the order-16 survey."""
from gray16 import verify_gray_map
from gray16 import catalog

# concatenating the C2 and C4 maps works for D8 but not for Q8
for name in ("D8", "Q8"):
    rep = verify_gray_map(catalog.type2_candidate_order8(name))
    print(name, "Gray map" if rep.passed else f"fails: {rep.first_failure().witness_text()}")

rows = catalog.type2_survey()
print()
for r in rows:
    print(f"{r.group:4} {r.locus:12} {r.verdict:9} {r.witness[:60]}")
print("\nfeasible:", sorted(catalog.feasible_set(rows), key=lambda s: int(s[1:])))

for c in catalog.necessary_conditions_report(rows):
    print(f"{c.group:4} C8:{c.contains_c8!s:5} Q8:{c.contains_q8!s:5} feasible:{c.type2_feasible}")
