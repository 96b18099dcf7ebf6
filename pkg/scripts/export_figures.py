#!/usr/bin/env python3
"""Regenerate the small example graphs under data/figures/."""

import sys
from pathlib import Path
from typing import Dict, List, Tuple

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from core.sgraph.formats import serialize_graph, write_graph  # noqa: E402
from core.sgraph.graph import Graph2EC  # noqa: E402

FIGURES_DIR = ROOT / 'data' / 'figures'

# name -> (comment, vertex names, edges)
FIGURES = {
    'up3': (
        "UP3: a 2-edge-colored clique that is not a signed clique",
        ['a', 'b', 'c'],
        [('b', 'a', '-'), ('b', 'c', '+')],
    ),
    'p3pos': (
        "all-positive P3, switching equivalent to UP3",
        ['a', 'b', 'c'],
        [('a', 'b', '+'), ('b', 'c', '+')],
    ),
    'ec_clique5': (
        "2-edge-colored clique on 5 vertices that is not a signed clique",
        ['x', 'a', 'b', 'c', 'd'],
        [('x', 'a', '+'), ('x', 'b', '+'), ('x', 'c', '-'), ('x', 'd', '-'),
         ('a', 'b', '+'), ('d', 'c', '+')],
    ),
    'uc4': (
        "UC4: unbalanced 4-cycle, a signed clique",
        ['a1', 'a2', 'a3', 'a4'],
        [('a1', 'a2', '+'), ('a1', 'a4', '-'), ('a3', 'a2', '+'), ('a3', 'a4', '+')],
    ),
    'signed_clique10': (
        "signed clique on 10 vertices: two UC4s, x1 and x2 joined to both",
        ['a1', 'a2', 'a3', 'a4', 'b1', 'b2', 'b3', 'b4', 'x1', 'x2'],
        [(f'{c}1', f'{c}2', '+') for c in 'ab']
        + [(f'{c}1', f'{c}4', '-') for c in 'ab']
        + [(f'{c}3', f'{c}2', '+') for c in 'ab']
        + [(f'{c}3', f'{c}4', '+') for c in 'ab']
        + [('x1', f'a{i}', '-') for i in range(1, 5)]
        + [('x1', f'b{i}', '+') for i in range(1, 5)]
        + [('x2', f'{c}{i}', '+') for c in 'ab' for i in range(1, 5)],
    ),
    'psi2_deletion': (
        "psi2 = 3, and 4 once d is deleted",
        ['a', 'b', 'c', 'd', 'e', 'f'],
        [('f', 'a', '-'), ('a', 'b', '+'), ('b', 'c', '+'), ('c', 'd', '-'),
         ('d', 'e', '+'), ('e', 'a', '+')],
    ),
    'psis_deletion': (
        "all-negative 6-cycle: psis = 3, and 4 once a is deleted",
        ['a', 'b', 'c', 'd', 'e', 'f'],
        [('a', 'b', '-'), ('b', 'c', '-'), ('c', 'd', '-'), ('d', 'e', '-'),
         ('e', 'f', '-'), ('f', 'a', '-')],
    ),
    'psis_chorded': (
        "chorded 6-cycle: psis = 4, still 4 once c is deleted",
        ['a', 'b', 'c', 'd', 'e', 'f'],
        [('f', 'a', '-'), ('f', 'e', '+'), ('a', 'b', '+'), ('b', 'c', '+'),
         ('c', 'd', '-'), ('d', 'e', '+'), ('e', 'a', '+'), ('e', 'c', '+')],
    ),
}

# derived figures: name -> (source, deleted vertex)
DELETIONS = {
    'psi2_deletion_minus_d': ('psi2_deletion', 'd'),
    'psis_deletion_minus_a': ('psis_deletion', 'a'),
    'psis_chorded_minus_c': ('psis_chorded', 'c'),
}


def figure_graphs() -> Dict[str, Tuple[Graph2EC, List[str]]]:
    graphs = {}
    for name, (comment, names, edges) in FIGURES.items():
        graphs[name] = (Graph2EC.from_named_edges(names, edges), [comment])
    for name, (source, vertex) in DELETIONS.items():
        g, _ = graphs[source]
        graphs[name] = (g.delete_vertex(g.index(vertex)), [f"{source} with {vertex} deleted"])
    return graphs


def export_figures(out_dir: Path = FIGURES_DIR) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, (g, comments) in figure_graphs().items():
        write_graph(out_dir / f'{name}.sg', g, comments)
        print(f'{name}: {g.n} vertices, {g.m} edges')


def check_figures(out_dir: Path = FIGURES_DIR) -> List[str]:
    """Names of figure files that are missing or differ from what export would write."""
    stale = []
    for name, (g, comments) in figure_graphs().items():
        path = out_dir / f'{name}.sg'
        if not path.exists() or path.read_text(encoding='utf-8') != serialize_graph(g, comments):
            stale.append(name)
    return stale


if __name__ == '__main__':
    if '--check' in sys.argv[1:]:
        stale = check_figures()
        for name in stale:
            print(f'stale: {name}')
        sys.exit(1 if stale else 0)
    export_figures()
