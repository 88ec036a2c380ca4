"""One-time generator for the bundled karate-club data files.

Writes the 34-node, 78-edge Zachary karate club network as an edge list
plus the two faction alignments.  The faction labeling groups actor 9
(0-indexed node 8) with the officers' faction, matching the political
alignments reported in the original study; after the actual fission that
individual joined the instructor's new club anyway, which is why some
distributions label node 8 the other way.

Run from the repository root:

    python tools/gen_karate_data.py
"""

from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "src" / "twclust" / "data"

# officers' faction, 0-indexed (everything else aligns with the instructor)
OFFICER_FACTION = {
    8, 9, 14, 15, 18, 20, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33,
}


def main():
    g = nx.karate_club_graph()
    assert g.number_of_nodes() == 34 and g.number_of_edges() == 78
    OUT.mkdir(parents=True, exist_ok=True)

    with open(OUT / "karate.edges", "w") as fh:
        fh.write("# Zachary karate club (34 members, 78 ties)\n")
        for i, j in sorted(g.edges()):
            fh.write(f"{i} {j}\n")

    with open(OUT / "karate_factions.labels", "w") as fh:
        fh.write("# faction alignment: 0 = instructor's faction, "
                 "1 = officers' faction\n")
        for v in range(34):
            fh.write(f"{v} {1 if v in OFFICER_FACTION else 0}\n")

    print(f"wrote {OUT / 'karate.edges'} and {OUT / 'karate_factions.labels'}")


if __name__ == "__main__":
    main()
