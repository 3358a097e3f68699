"""Exhaustive census of 4-colour graphs on four vertices.

Two independent enumerators cover the same ground.  The fast one walks
canonical matching tuples and converts each count to a labelled count with
the orbit formula; the slow one enumerates labelled bipartite graphs
directly.  Their answers must coincide class by class.
"""

from gemkit import CLASSES, enumerate_census, enumerate_labelled, tuple_count

d, n = 3, 4

fast = enumerate_census(d, n)
slow = enumerate_labelled(d, n)

print(f"matching tuples at d={d}, n={n}: {tuple_count(d, n)}")
print()
labelled = fast.labelled_counts
print(f"{'class':<15}{'canonical':>10}{'labelled':>10}{'oracle':>10}")
for cls in CLASSES:
    agree = "ok" if labelled[cls] == slow.counts[cls] else "MISMATCH"
    print(f"{cls:<15}{fast.counts[cls]:>10}{labelled[cls]:>10}"
          f"{slow.counts[cls]:>10}  {agree}")

print()
print(f"labelled universe: {slow.bipartite_tuples} bipartite tuples"
      f" out of {slow.total_tuples} matching tuples")
