"""Generating trees for the two length-4 tree patterns (2143 and 1234).

Avoiders are grown by inserting a new largest image into the negative half,
one element at a time, keeping the number of positive indices with positive
images fixed.  Each avoider is reached exactly once, so the nodes at depth
``d`` of the tree rooted at the unique smallest avoider with statistic ``j``
are precisely the avoiders of size ``j + d``.

Three statistics label each node:

* ``x`` - sites before the first descent (2143) or first ascent (1234),
* ``y`` - active sites in the relevant layer (the current layer for 2143,
  the top layer for 1234), found by trial insertion and an avoidance check,
* ``z`` - the layer number, counting from the layer of the largest inserted
  image up to the top.

The label of a node determines the multiset of its children's labels; the
closed-form succession rules live in :func:`successors`, and the label-level
dynamic program in :func:`level_counts` reproduces the tree's level sizes
without building it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .core import Pattern, SignedPermutation, find_occurrence_positions

__all__ = [
    "TreeLabel",
    "PermTreeNode",
    "TREE_PATTERNS",
    "tree_root",
    "children",
    "stats",
    "active_sites",
    "successors",
    "build_tree",
    "level_counts",
    "iter_nodes",
]


class TreeLabel(NamedTuple):
    x: int
    y: int
    z: int


PATTERN_2143 = Pattern((2, 1, 4, 3))
PATTERN_1234 = Pattern((1, 2, 3, 4))
TREE_PATTERNS = (PATTERN_1234, PATTERN_2143)


def _require_tree_pattern(pattern: Pattern) -> bool:
    """Return True for 2143, False for 1234, reject anything else."""
    if pattern == PATTERN_2143:
        return True
    if pattern == PATTERN_1234:
        return False
    raise ValueError(f"no generating tree for pattern {pattern}")


def tree_root(pattern: Pattern, j: int) -> SignedPermutation:
    """The unique avoider of size ``j`` whose positive images all sit at
    positive indices: increasing there for 2143, decreasing for 1234."""
    if j < 0:
        raise ValueError("statistic must be nonnegative")
    if _require_tree_pattern(pattern):
        return SignedPermutation(tuple(range(-j, 0)))
    return SignedPermutation(tuple(range(-1, -j - 1, -1)))


def _max_inserted(w: SignedPermutation) -> int:
    """Largest negative-half image, or 0 when none is positive."""
    return max((v for v in w.neg_images if v > 0), default=0)


def _trial_avoids(
    word: tuple[int, ...], site: int, gap: int, pattern: Pattern
) -> tuple[int, ...] | None:
    """Insert into a bare negative-half word and test avoidance.

    Same arithmetic as :meth:`SignedPermutation.insert`, minus the value-type
    construction; trees try (sites x gaps) candidates per node and most are
    thrown away, so the hot loop works on raw words.  Returns the new word,
    or None when the insertion creates the pattern.
    """
    shifted = [v if abs(v) < gap else (v - 1 if v < 0 else v + 1) for v in word]
    shifted.insert(len(word) + 1 - site, gap)
    new_word = tuple(shifted)
    full = new_word + tuple(-v for v in reversed(new_word))
    if find_occurrence_positions(full, pattern) is None:
        return new_word
    return None


def children(w: SignedPermutation, pattern: Pattern) -> list[SignedPermutation]:
    """All avoiding insertions of a new largest image into ``w``.

    Sites run over ``1..n+1``; gaps run strictly above the largest image
    already inserted, which is what makes the construction reach every
    avoider exactly once.
    """
    _require_tree_pattern(pattern)
    if w.contains(pattern):
        raise ValueError(f"{w} contains {pattern}")
    n = w.n
    m = _max_inserted(w)
    out = []
    for gap in range(m + 1, n + 2):
        for site in range(1, n + 2):
            word = _trial_avoids(w.neg_images, site, gap, pattern)
            if word is not None:
                out.append(SignedPermutation(word))
    return out


def _sites_before_first_turn(w: SignedPermutation, is_2143: bool) -> int:
    """Sites whose left prefix is still monotone: increasing word means no
    descent yet (2143); decreasing word means no ascent yet (1234)."""
    word = w.neg_images
    if not word:
        return 1
    t = 0
    while t + 1 < len(word) and (word[t] < word[t + 1]) == is_2143:
        t += 1
    return t + 2


def _layer_number(w: SignedPermutation) -> int:
    if w.n == 0:
        return 1
    m = max(w.neg_images)
    heights = (-v for v in w.neg_images if v < 0)
    return 1 + sum(1 for h in heights if h > m)


def active_sites(
    w: SignedPermutation, pattern: Pattern, gap: int | None = None
) -> tuple[int, ...]:
    """Sites where inserting the next largest image keeps ``w`` avoiding.

    The trial gap defaults to the lowest admissible one for 2143 (the
    current layer) and to the top gap for 1234 (the top layer); any gap
    within the same layer gives an order-isomorphic result, so the choice
    of representative does not matter.
    """
    is_2143 = _require_tree_pattern(pattern)
    if gap is None:
        gap = _max_inserted(w) + 1 if is_2143 else w.n + 1
    return tuple(
        site
        for site in range(1, w.n + 2)
        if _trial_avoids(w.neg_images, site, gap, pattern) is not None
    )


def stats(w: SignedPermutation, pattern: Pattern) -> TreeLabel:
    """The label (x, y, z) of ``w`` in the generating tree for ``pattern``.

    >>> from .core import parse
    >>> stats(parse("[-6,4,-3,5,2,1]"), Pattern((2, 1, 4, 3)))
    TreeLabel(x=3, y=5, z=2)
    >>> stats(parse("[2,-3,4,-5,1,-6]"), Pattern((1, 2, 3, 4)))
    TreeLabel(x=3, y=7, z=3)
    """
    is_2143 = _require_tree_pattern(pattern)
    if w.contains(pattern):
        raise ValueError(f"{w} contains {pattern}")
    x = _sites_before_first_turn(w, is_2143)
    y = len(active_sites(w, pattern))
    z = _layer_number(w)
    return TreeLabel(x, y, z)


def successors(label: TreeLabel, pattern: Pattern) -> list[TreeLabel]:
    """The multiset of children labels under the succession rule.

    Written with the layer recursion unrolled.  Same-layer moves either bump
    the active-site count (new first turn right after the insertion) or keep
    ``x`` and shrink ``y``; moves into a lower layer restart the active-site
    count from the sites before the first turn.  For 1234 only the top layer
    admits the shrinking moves, and the active-site count carries over from
    layer to layer; at layer 1 the two rules coincide.
    """
    x, y, z = label
    if not (1 <= x <= y and z >= 1):
        raise ValueError(f"invalid label {label}")
    out: list[TreeLabel] = []
    if _require_tree_pattern(pattern):
        out.extend(TreeLabel(i, y + 1, z) for i in range(2, x + 2))
        out.extend(TreeLabel(x, yy, z) for yy in range(x + 1, y + 1))
        for zz in range(z - 1, 0, -1):
            out.extend(TreeLabel(i, x + 1, zz) for i in range(2, x + 2))
    else:
        for zz in range(z, 0, -1):
            out.extend(TreeLabel(i, y + 1, zz) for i in range(2, x + 2))
        out.extend(TreeLabel(x, yy, 1) for yy in range(x + 1, y + 1))
    return out


@dataclass
class PermTreeNode:
    """A node of the explicit permutation-labeled tree."""

    perm: SignedPermutation
    children: list["PermTreeNode"] = field(default_factory=list)


def build_tree(
    pattern: Pattern,
    j: int,
    depth: int,
    *,
    max_depth: int = 6,
    max_j: int = 4,
) -> PermTreeNode:
    """The explicit tree down to ``depth``; level ``d`` holds every avoider
    of size ``j + d`` with statistic ``j``, each exactly once.

    Guarded by ``max_depth``/``max_j`` because the explicit tree is only for
    desk-scale inspection; the label dynamic program has no such cap.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > max_depth or j > max_j:
        raise ValueError(
            f"explicit tree capped at depth {max_depth}, statistic {max_j}; "
            "raise the caps explicitly for a larger build"
        )
    root = PermTreeNode(tree_root(pattern, j))
    frontier = [root]
    for _ in range(depth):
        next_frontier: list[PermTreeNode] = []
        for node in frontier:
            node.children = [PermTreeNode(c) for c in children(node.perm, pattern)]
            next_frontier.extend(node.children)
        frontier = next_frontier
    return root


def iter_nodes(root: PermTreeNode) -> Iterator[PermTreeNode]:
    """Depth-first iteration over every node of an explicit tree."""
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(node.children)


def level_counts(pattern: Pattern, j: int, max_depth: int) -> list[int]:
    """Avoider counts ``|B_{j+d}^j|`` for ``d = 0..max_depth`` by label DP.

    The state is a multiplicity map over labels; one step replaces every
    label by its successor multiset.  Labels stay within ``x <= y <= j+d+2``
    and ``z <= j+1``, so the map stays polynomial in the depth.
    """
    if j < 0 or max_depth < 0:
        raise ValueError("arguments must be nonnegative")
    _require_tree_pattern(pattern)
    state: dict[TreeLabel, int] = {TreeLabel(j + 1, j + 1, j + 1): 1}
    counts = [1]
    for _ in range(max_depth):
        nxt: dict[TreeLabel, int] = {}
        for label, mult in state.items():
            for child in successors(label, pattern):
                nxt[child] = nxt.get(child, 0) + mult
        state = nxt
        counts.append(sum(state.values()))
    return counts
