"""
Closed formulas against the exact solver
========================================

Every covered family has a closed-form corona dimension; this script prints
formula and solver side by side.  The bistar row is the known trap: the
r*n(H)+s expression assumes part sizes r and s, but the order-(r+s+2)
bistar has parts of sizes r+1 and s+1, so the bipartite rule (and the
solver) disagree with it.
"""

from equidim import FamilySpec, closed_formula, generate, xi_corona_structured

CASES = [
    FamilySpec("complete", (5,)),
    FamilySpec("complete", (2,)),
    FamilySpec("complete-bipartite", (2, 3)),
    FamilySpec("complete-multipartite", (1, 2, 2)),
    FamilySpec("wheel", (6,)),
    FamilySpec("hypercube", (3,)),
    FamilySpec("path", (5,)),
    FamilySpec("cycle", (5,)),
    FamilySpec("cycle", (6,)),
]

print(f"{'family':32s} {'n(H)':>4} {'formula':>8} {'solver':>7}")
for spec in CASES:
    g = generate(spec)
    for n_h in (1, 2, 3):
        f = closed_formula(spec, n_h)
        exact = xi_corona_structured(g, n_h).value
        tag = f"{spec.name}{list(spec.params)}"
        status = "" if f.value == exact else "  <-- mismatch"
        print(f"{tag:32s} {n_h:4d} {f.value:8d} {exact:7d}{status}")

print()
print("bistar(2, 3): both readings")
spec = FamilySpec("bistar", (2, 3))
g = generate(spec)
for n_h in (1, 2, 3):
    f = closed_formula(spec, n_h)
    exact = xi_corona_structured(g, n_h).value
    print(
        f"  n(H)={n_h}: r*n(H)+s = {f.value}, bipartite rule = "
        f"{f.alternate_value}, solver = {exact}"
    )
