#!/usr/bin/env python3
"""Regenerate the bundled graph6 corpora under crates/core/assets/.

small_connected.g6: every connected graph on 2..5 vertices, one per
isomorphism class, taken from the networkx graph atlas.

beineke.g6: the nine minimal non-line graphs. Derived, not transcribed:
a connected graph on <= 6 vertices is a line graph iff it is isomorphic
to L(H) for some connected H on <= 7 vertices (all such H are in the
atlas); minimal means every vertex-deleted subgraph is a line graph.
"""
import hashlib
import json
import pathlib

import networkx as nx

ASSETS = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "assets"


def relabel_canonical(g):
    # stable 0..n-1 numbering in sorted node order
    mapping = {v: i for i, v in enumerate(sorted(g.nodes()))}
    return nx.relabel_nodes(g, mapping)


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    atlas = nx.graph_atlas_g()

    small = [relabel_canonical(g) for g in atlas
             if 2 <= g.number_of_nodes() <= 5 and nx.is_connected(g)]
    assert [sum(1 for g in small if g.number_of_nodes() == n) for n in range(2, 6)] == [1, 2, 6, 21]

    line_graphs = []
    for h in atlas:
        if h.number_of_edges() == 0 or not nx.is_connected(h):
            continue
        lg = nx.line_graph(h)
        if lg.number_of_nodes() <= 6:
            line_graphs.append(lg)

    def is_line(g):
        comps = [g.subgraph(c).copy() for c in nx.connected_components(g)]
        return all(any(nx.is_isomorphic(c, lg) for lg in line_graphs
                       if lg.number_of_nodes() == c.number_of_nodes()
                       and lg.number_of_edges() == c.number_of_edges())
                   for c in comps)

    minimal = []
    for g in atlas:
        if not (1 <= g.number_of_nodes() <= 6) or not nx.is_connected(g):
            continue
        if is_line(g):
            continue
        if all(is_line(nx.restricted_view(g, [v], [])) for v in g.nodes()):
            minimal.append(relabel_canonical(g))
    assert len(minimal) == 9, len(minimal)
    claw = nx.star_graph(3)
    minimal.sort(key=lambda g: (not nx.is_isomorphic(g, claw), g.number_of_nodes(), g.number_of_edges(), g6(g)))
    assert nx.is_isomorphic(minimal[0], claw)

    names = ["claw"]
    for g in minimal[1:]:
        if nx.is_isomorphic(g, nx.wheel_graph(6)):
            names.append("wheel-6")
        elif nx.is_isomorphic(g, nx.complete_graph(5)) or (
                g.number_of_nodes() == 5 and g.number_of_edges() == 9):
            names.append("k5-minus-edge")
        else:
            names.append(f"beineke-n{g.number_of_nodes()}-m{g.number_of_edges()}")
    # disambiguate repeated (n, m) names
    seen = {}
    for i, name in enumerate(names):
        seen[name] = seen.get(name, 0) + 1
    counter = {}
    for i, name in enumerate(names):
        if seen[name] > 1:
            counter[name] = counter.get(name, 0) + 1
            names[i] = f"{name}-{chr(ord('a') + counter[name] - 1)}"

    small_names = [f"n{g.number_of_nodes()}-m{g.number_of_edges()}-{i}" for i, g in enumerate(small)]

    manifest = {}
    for fname, graphs, gnames in [("small_connected.g6", small, small_names),
                                  ("beineke.g6", minimal, names)]:
        text = "".join(g6(g) + "\n" for g in graphs)
        (ASSETS / fname).write_text(text)
        manifest[fname] = {
            "sha256": hashlib.sha256(text.encode()).hexdigest(),
            "names": gnames,
        }
    (ASSETS / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    for n, g in zip(names, minimal):
        print(n, g6(g), sorted(d for _, d in g.degree()))


if __name__ == "__main__":
    main()
