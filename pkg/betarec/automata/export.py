# betarec/automata/export.py
"""
GraphViz DOT export: incoming arrow marks initial states, double circles
mark accepting states.
"""

from collections import defaultdict

from .buchi import BuchiAutomaton, Symbol, is_star, symbol_key


def format_symbol(symbol: Symbol) -> str:
    if is_star(symbol):
        return "*"
    parts = [str(c) for c in symbol]
    return parts[0] if len(parts) == 1 else "(" + ",".join(parts) + ")"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dot_lines(
    n_states: int,
    initial,
    accepting,
    labelled_edges: dict[tuple[int, int], list[str]],
    name: str = "automaton",
    state_labels: list[str] | None = None,
) -> list[str]:
    lines = [f"digraph {_quote(name)} {{", "\trankdir=LR;", '\tnode [shape=circle];']
    for q in sorted(initial):
        lines.append(f"\t__start{q} [shape=point, style=invis];")
    for q in range(n_states):
        shape = "doublecircle" if q in accepting else "circle"
        label = state_labels[q] if state_labels else str(q)
        lines.append(f"\t{q} [shape={shape}, label={_quote(label)}];")
    for q in sorted(initial):
        lines.append(f"\t__start{q} -> {q};")
    for (s, t), labels in sorted(labelled_edges.items()):
        lines.append(f"\t{s} -> {t} [label={_quote(' '.join(labels))}];")
    lines.append("}")
    return lines


def to_dot(a: BuchiAutomaton, name: str = "automaton", state_labels: list[str] | None = None) -> str:
    """DOT text; parallel edges are merged into one arrow with all labels."""
    grouped: dict[tuple[int, int], list[tuple]] = defaultdict(list)
    for s, x, t in a.edges:
        grouped[(s, t)].append(x)
    labelled = {
        k: [format_symbol(x) for x in sorted(v, key=symbol_key)] for k, v in grouped.items()
    }
    return "\n".join(dot_lines(a.n_states, a.initial, a.accepting, labelled, name, state_labels)) + "\n"
