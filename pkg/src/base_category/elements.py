"""
Element values for the objects of the base category.

Elements are plain hashable Python values:
- atoms are str or int
- tuples are Python tuples (pullback pairs, products, writer pairs)
- Tag(label, value) marks a constructor such as just/nothing
- ListOf(items) is an element of the free monoid carrier

A structural total order (canonical_key) fixes every element list, so all
constructed sets and reports are deterministic.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tag:
    label: str
    value: object = ()


@dataclass(frozen=True)
class ListOf:
    items: tuple = ()

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


NOTHING = Tag("nothing", ())


def canonical_key(element):
    """
    Sort key giving a total order across all element shapes.

    Rank order: int, str, tuple, Tag, ListOf. Tuples and lists compare by
    length first, then componentwise.
    """
    if isinstance(element, bool):
        return (0, int(element))
    if isinstance(element, int):
        return (0, element)
    if isinstance(element, str):
        return (1, element)
    if isinstance(element, tuple):
        return (2, len(element), tuple(canonical_key(e) for e in element))
    if isinstance(element, Tag):
        return (3, element.label, canonical_key(element.value))
    if isinstance(element, ListOf):
        return (4, len(element.items), tuple(canonical_key(e) for e in element.items))
    raise TypeError(f"ERROR: {element!r} is not an element value")


def sort_canonical(elements):
    """Deduplicates and sorts by canonical_key."""
    return tuple(sorted(set(elements), key=canonical_key))


def render(element):
    """Stable human-readable text for witnesses and tables."""
    if isinstance(element, (int, str)):
        return str(element)
    if isinstance(element, tuple):
        return "(" + ", ".join(render(e) for e in element) + ")"
    if isinstance(element, Tag):
        if element.value == ():
            return element.label
        return f"{element.label}({render(element.value)})"
    if isinstance(element, ListOf):
        return "[" + ", ".join(render(e) for e in element.items) + "]"
    return repr(element)


def to_json(element):
    """JSON-compatible form; tuples become arrays, tags become one-key objects."""
    if isinstance(element, (int, str)):
        return element
    if isinstance(element, tuple):
        return [to_json(e) for e in element]
    if isinstance(element, Tag):
        return {element.label: to_json(element.value)}
    if isinstance(element, ListOf):
        return {"list": [to_json(e) for e in element.items]}
    raise TypeError(f"ERROR: {element!r} is not an element value")


def flatten_left(element, depth):
    """
    Flattens a left-nested pair ((a, b), c) into (a, b, c).

    Iterated pullbacks nest to the left; depth is the number of pairings.
    """
    parts = []
    for _ in range(depth):
        element, last = element
        parts.append(last)
    parts.append(element)
    return tuple(reversed(parts))
