"""Check the counting inequalities against every small graph.

Two audits.  The first sweeps all 4-colour graphs on up to six vertices and
confirms the 3-subset component bound with its exact worst-case slack, plus
the alternating identity that separates sphere components from the rest.
The second fixes two matchings on six vertices and counts planar
completions by a third, comparing against the coarse exponential bound.
"""

from gemkit import verify_extension_bound, verify_lemma_bounds

for n in (2, 4, 6):
    rep = verify_lemma_bounds(3, n, check_5=False)
    print(f"n={n}: {rep.graphs} graphs, {rep.checked_3} subset checks,"
          f" violations={rep.violations_3},"
          f" min slack={rep.min_slack_3},"
          f" identity mismatches={rep.identity_mismatches}")

rep5 = verify_lemma_bounds(4, 2, check_5=True)
print(f"d=4 n=2 with 5-subsets: checked_5={rep5.checked_5},"
      f" violations={rep5.violations_5}, min slack={rep5.min_slack_5}")

print()

# base: a single 6-cycle from two interleaved matchings
m1 = (2, 1, 4, 3, 6, 5)
m2 = (6, 3, 2, 5, 4, 1)
ext = verify_extension_bound(m1, m2)
print(f"extension base on n={ext.n}: {ext.base_components} component(s),"
      f" {ext.extensions_tried} third matchings tried,"
      f" {ext.planar_extensions} planar")
for k in sorted(ext.buckets):
    print(f"  k={k}: {ext.buckets[k]} extensions, bound {ext.bounds[k]}")
print(f"bound violations: {ext.violations or 'none'}")
