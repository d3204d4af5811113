"""JSON interchange formats for graphs, path systems, instances, and
arrangements.

Graph files: {"n": int, "edges": [[u, v], ...]} with 1-indexed vertices
and edges sorted with u < v.  Path-system files list all n^2 ordered
pairs sorted by (u, v).  Instance files reference their graph and path
files by path rather than inlining them.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graphs import Graph, from_edges
from .pathsystems import PathSystem
from .separation import PathArrangement


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges()]}


def graph_from_dict(data: dict) -> Graph:
    return from_edges(int(data["n"]), ((int(u), int(v)) for u, v in data["edges"]))


def path_system_to_dict(ps: PathSystem) -> dict:
    rows = [
        {"u": u, "v": v, "p": list(ps.path(u, v))}
        for u in range(1, ps.n + 1)
        for v in range(1, ps.n + 1)
    ]
    return {"n": ps.n, "paths": rows}


def path_system_from_dict(data: dict) -> PathSystem:
    n = int(data["n"])
    paths = {
        (int(row["u"]), int(row["v"])): tuple(int(x) for x in row["p"])
        for row in data["paths"]
    }
    return PathSystem(n, paths)


def instance_to_dict(graph_path: str, paths_path: str, milestones, bit: int,
                     values=None, flags=None) -> dict:
    data = {
        "graph": str(graph_path),
        "paths": str(paths_path),
        "milestones": [int(v) for v in milestones],
        "bit": int(bit),
    }
    if values is not None:
        data["values"] = [int(values[v]) for v in sorted(values)]
        data["flags"] = [int(flags[v]) for v in sorted(flags)]
    return data


def arrangement_to_dict(pa: PathArrangement) -> dict:
    return {
        "m": pa.m,
        "clusters": [sorted(c) for c in pa.clusters],
        "v_start": pa.v_start,
        "inter_paths": [
            {"k": k, "i": i, "j": j, "p": list(p)}
            for (k, i, j), p in sorted(pa.inter_paths.items())
        ],
    }


def arrangement_from_dict(data: dict, g: Graph) -> PathArrangement:
    clusters = tuple(frozenset(int(v) for v in c) for c in data["clusters"])
    inter = {
        (int(r["k"]), int(r["i"]), int(r["j"])): tuple(int(x) for x in r["p"])
        for r in data["inter_paths"]
    }
    return PathArrangement(g, int(data["m"]), clusters, inter, int(data["v_start"]))


def dump_json(data, path) -> None:
    Path(path).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


def load_json(path):
    return json.loads(Path(path).read_text())


def save_graph(g: Graph, path) -> None:
    dump_json(graph_to_dict(g), path)


def load_graph(path) -> Graph:
    return graph_from_dict(load_json(path))


def save_path_system(ps: PathSystem, path) -> None:
    dump_json(path_system_to_dict(ps), path)


def load_path_system(path) -> PathSystem:
    return path_system_from_dict(load_json(path))
