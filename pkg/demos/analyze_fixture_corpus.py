"""Walk a small Java tree through the full pipeline.

Scans the ten-class test fixture, prints the five coupling edge sets and
a couple of degree series, then shows why desk-scale corpora report
insufficient data: with ten classes there are never enough non-empty
buckets to regress on.
"""

from pathlib import Path

from couplaw import build_graphs, degree_series, fit_series, scan_tree
from couplaw.graphs import COUPLING_TYPES, RELATIONSHIPS

FIXTURE = Path(__file__).parent.parent / "tests" / "fixtures" / "corpus10"


def main():
    corpus = scan_tree(FIXTURE)
    print(f"parsed {len(corpus.classes)} classes:")
    for name, summary in corpus.classes.items():
        print(f"  {name} ({summary.kind}): {len(summary.fields)} fields, "
              f"{len(summary.methods)} methods")

    graphs = build_graphs(corpus)
    print("\ncoupling edges:")
    for coupling_type in COUPLING_TYPES:
        for src, dst in sorted(graphs.edges(coupling_type)):
            print(f"  {coupling_type}: {src} -> {dst}")

    print("\ndegree series:")
    for relationship in ("Subclasses", "Members of class type"):
        series = degree_series(graphs, relationship, corpus)
        nonzero = {n.rsplit('.', 1)[-1]: v for n, v in series.counts if v}
        print(f"  {relationship}: {nonzero}")

    print("\nfits (all insufficient at this scale):")
    for relationship in RELATIONSHIPS:
        result = fit_series(degree_series(graphs, relationship, corpus))
        print(f"  {relationship}: {result.status}")


if __name__ == "__main__":
    main()
