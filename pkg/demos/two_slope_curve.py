"""
A corona dimension with two slopes
==================================

On the pendant-triangle graph the corona dimension follows 4*n(H)+4 for
small copies and the flatter 3*n(H)+7 afterwards: below the threshold it
pays to buy copies over a larger vertex cover.  The CSV printed at the end
regenerates the curve data for external plotting.
"""

from equidim import k_threshold, xi_corona_structured
from equidim.families import pendant_triangle_graph

g = pendant_triangle_graph()
line = k_threshold(g)
print(f"slope {line.slope}, intercept {line.k}, threshold {line.threshold}")
print()

for n_h in range(1, 9):
    result = xi_corona_structured(g, n_h)
    upper, _ = result.decomposition
    on_line = line.slope * n_h + line.k
    marker = "on line" if result.value == on_line else f"below line ({on_line})"
    print(
        f"n(H)={n_h}: xi={result.value:3d}  copies over "
        f"{sorted(g.label_of(v) for v in upper)}  {marker}"
    )

print()
print("nh,xi")
for n_h in range(1, 9):
    print(f"{n_h},{xi_corona_structured(g, n_h).value}")
