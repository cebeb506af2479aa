"""Tree statistics, succession rules, and the label dynamic program."""

from collections import Counter

import pytest

from sigperm.core import Pattern, parse, signed_permutations
from sigperm.gentree import (
    TreeLabel,
    active_sites,
    build_tree,
    children,
    iter_nodes,
    level_counts,
    stats,
    successors,
    tree_root,
)
from sigperm.oracle import avoider_counts

P1234 = Pattern.parse("1234")
P2143 = Pattern.parse("2143")
BOTH = (P1234, P2143)


def successors_recursive(label, pattern):
    """The succession rules exactly as recursions over the layer number.

    Kept here as the independent reference for the unrolled implementation.
    """
    x, y, z = label
    if z == 0:
        return []
    block1 = [TreeLabel(i, y + 1, z) for i in range(2, x + 2)]
    block2 = [TreeLabel(x, yy, z) for yy in range(x + 1, y + 1)]
    if pattern == P2143:
        return block1 + block2 + successors_recursive(TreeLabel(x, x, z - 1), pattern)
    if z == 1:
        return block1 + block2
    return block1 + successors_recursive(TreeLabel(x, y, z - 1), pattern)


class TestStats:
    def test_figure_fixtures(self):
        assert stats(parse("[-6,4,-3,5,2,1]"), P2143) == (3, 5, 2)
        assert stats(parse("[2,-3,4,-5,1,-6]"), P1234) == (3, 7, 3)

    @pytest.mark.parametrize("pattern", BOTH)
    @pytest.mark.parametrize("j", range(4))
    def test_root_label(self, pattern, j):
        assert stats(tree_root(pattern, j), pattern) == (j + 1, j + 1, j + 1)

    def test_rejects_containing_permutation(self):
        w = parse("[-2,-1]")  # embeds to 1234
        with pytest.raises(ValueError):
            stats(w, P1234)

    def test_rejects_other_patterns(self):
        with pytest.raises(ValueError):
            stats(parse("[-1]"), Pattern.parse("123"))

    def test_top_layer_full_before_first_top_insertion(self):
        # while no image sits in the top layer (z >= 2), every site of a
        # 1234-avoider is active for the top layer
        for w in signed_permutations(4):
            if w.avoids(P1234):
                label = stats(w, P1234)
                if label.z >= 2:
                    assert label.y == w.n + 1

    def test_2143_lower_layers_have_x_active_sites(self):
        # layers strictly above the current one admit exactly the sites
        # before the first descent
        for w in signed_permutations(4):
            if not w.avoids(P2143):
                continue
            label = stats(w, P2143)
            heights = sorted(-v for v in w.neg_images if v < 0)
            for layer in range(1, label.z):
                # smallest gap landing in the given layer
                above = len(heights) - (layer - 1)
                gap = heights[above - 1] + 1 if above >= 1 else 1
                assert len(active_sites(w, P2143, gap)) == label.x


class TestRoots:
    def test_shapes(self):
        assert tree_root(P2143, 2) == parse("[-2,-1]")
        assert tree_root(P1234, 2) == parse("[-1,-2]")
        assert tree_root(P2143, 0) == parse("[]")

    @pytest.mark.parametrize("pattern", BOTH)
    def test_root_statistic(self, pattern):
        for j in range(4):
            root = tree_root(pattern, j)
            assert root.positive_entries() == j
            assert root.avoids(pattern)


class TestChildren:
    def test_empty_root_has_single_child(self):
        assert children(parse("[]"), P2143) == [parse("[1]")]

    def test_trial_word_path_matches_public_insert(self):
        # the raw-word fast path used inside children/active_sites must be
        # the same map as SignedPermutation.insert plus an avoidance check
        from sigperm.gentree import _trial_avoids

        for w in signed_permutations(3):
            for pattern in BOTH:
                for site in range(1, w.n + 2):
                    for gap in range(1, w.n + 2):
                        child = w.insert(site, gap)
                        got = _trial_avoids(w.neg_images, site, gap, pattern)
                        if child.avoids(pattern):
                            assert got == child.neg_images
                        else:
                            assert got is None

    @pytest.mark.parametrize("pattern", BOTH)
    def test_root_of_statistic_two_has_nine_children(self, pattern):
        # the rule expansion of the root label (3,3,3) yields three labels
        # per layer over three layers
        kids = children(tree_root(pattern, 2), pattern)
        assert len(kids) == 9
        assert len(successors(TreeLabel(3, 3, 3), pattern)) == 9

    def test_rejects_containing_permutation(self):
        with pytest.raises(ValueError):
            children(parse("[-2,-1]"), P1234)

    @pytest.mark.parametrize("pattern", BOTH)
    def test_children_are_distinct_avoiding_extensions(self, pattern):
        for w in signed_permutations(3):
            if not w.avoids(pattern):
                continue
            kids = children(w, pattern)
            assert len(set(kids)) == len(kids)
            m = max((v for v in w.neg_images if v > 0), default=0)
            for child in kids:
                assert child.n == w.n + 1
                assert child.avoids(pattern)
                new_value = max(child.neg_images)
                assert new_value > m
                assert child.remove(new_value) == w


class TestSuccessionRule:
    def test_expansion_of_root_label(self):
        got = Counter(successors(TreeLabel(3, 3, 3), P2143))
        want = Counter(
            TreeLabel(i, 4, z) for i in (2, 3, 4) for z in (3, 2, 1)
        )
        assert got == want

    def test_rules_coincide_in_the_top_layer(self):
        for x in range(1, 6):
            for y in range(x, 7):
                label = TreeLabel(x, y, 1)
                assert Counter(successors(label, P1234)) == Counter(
                    successors(label, P2143)
                )

    @pytest.mark.parametrize("pattern", BOTH)
    def test_iterative_matches_recursive(self, pattern):
        for x in range(1, 6):
            for y in range(x, 7):
                for z in range(1, 5):
                    label = TreeLabel(x, y, z)
                    assert Counter(successors(label, pattern)) == Counter(
                        successors_recursive(label, pattern)
                    )

    def test_layer_descent_traces(self):
        # 2143 recurses through (x, x, z-1): every lower-layer label carries
        # the active-site count x+1.  1234 recurses through (x, y, z-1):
        # every bumping label carries y+1 whatever its layer.
        for x in range(1, 5):
            for y in range(x, 6):
                for z in range(2, 5):
                    for lab in successors(TreeLabel(x, y, z), P2143):
                        if lab.z < z:
                            assert lab.y == x + 1
                    for lab in successors(TreeLabel(x, y, z), P1234):
                        if lab.y == y + 1:
                            assert 1 <= lab.z <= z
                        else:
                            assert lab.z == 1 and lab.x == x

    def test_invalid_label(self):
        with pytest.raises(ValueError):
            successors(TreeLabel(3, 2, 1), P2143)
        with pytest.raises(ValueError):
            successors(TreeLabel(1, 1, 0), P2143)


class TestTreeIsomorphism:
    @pytest.mark.parametrize("pattern", BOTH)
    @pytest.mark.parametrize("j", range(3))
    def test_children_stats_match_rule(self, pattern, j):
        root = build_tree(pattern, j, 3)
        for node in iter_nodes(root):
            got = Counter(stats(c, pattern) for c in children(node.perm, pattern))
            want = Counter(successors(stats(node.perm, pattern), pattern))
            assert got == want, node.perm

    @pytest.mark.parametrize("pattern", BOTH)
    def test_active_sites_shrink_along_edges(self, pattern):
        # within a fixed layer, inserting splits one active site in two and
        # can only deactivate others
        for j in range(2):
            root = build_tree(pattern, j, 2)
            for node in iter_nodes(root):
                w = node.perm
                heights = sorted(-v for v in w.neg_images if v < 0)
                m = max((v for v in w.neg_images if v > 0), default=0)
                for gap in range(m + 1, w.n + 2):
                    old = set(active_sites(w, pattern, gap))
                    layer_top = sum(1 for h in heights if h >= gap)
                    for site in old:
                        child = w.insert(site, gap)
                        # gap of the child landing in the same layer
                        new_heights = sorted(
                            -v for v in child.neg_images if v < 0
                        )
                        candidates = [
                            g
                            for g in range(gap + 1, child.n + 2)
                            if sum(1 for h in new_heights if h >= g) == layer_top
                        ]
                        if not candidates:
                            continue
                        new = set(active_sites(child, pattern, candidates[0]))
                        survivors = {
                            s if s < site else s + 1 for s in old - {site}
                        } | {site, site + 1}
                        assert new <= survivors, (w, site, gap)


class TestExplicitTree:
    @pytest.mark.parametrize("pattern", BOTH)
    def test_levels_are_avoider_sets(self, pattern):
        # every avoider appears exactly once, at the level matching its size
        for n in range(6):
            for j in range(n + 1):
                frontier = [build_tree(pattern, j, n - j, max_j=5)]
                for _ in range(n - j):
                    frontier = [c for node in frontier for c in node.children]
                perms = [node.perm for node in frontier]
                assert len(set(perms)) == len(perms)
                expected = {
                    w
                    for w in signed_permutations(n)
                    if w.positive_entries() == j and w.avoids(pattern)
                }
                assert set(perms) == expected, (n, j)

    @pytest.mark.parametrize("pattern", BOTH)
    def test_no_permutation_appears_twice_anywhere(self, pattern):
        seen = Counter(
            node.perm for node in iter_nodes(build_tree(pattern, 1, 3))
        )
        assert all(count == 1 for count in seen.values())

    def test_caps(self):
        with pytest.raises(ValueError):
            build_tree(P2143, 5, 1)
        with pytest.raises(ValueError):
            build_tree(P2143, 0, 7)
        build_tree(P2143, 5, 1, max_j=5)  # caps are configurable


class TestLevelCounts:
    def test_classical_slice(self):
        assert level_counts(P2143, 0, 6) == [1, 1, 2, 6, 23, 103, 513]
        assert level_counts(P1234, 0, 6) == [1, 1, 2, 6, 23, 103, 513]

    def test_level_zero(self):
        for pattern in BOTH:
            for j in range(4):
                assert level_counts(pattern, j, 0) == [1]

    @pytest.mark.parametrize("pattern", BOTH)
    def test_matches_brute_force(self, pattern):
        for n in range(6):
            row = avoider_counts(n, pattern)
            for j in range(n + 1):
                assert level_counts(pattern, j, n - j)[-1] == row[j]

    def test_label_bounds(self):
        # the DP state stays inside x <= y <= j + d + 2, z <= j + 1
        for pattern in BOTH:
            j = 2
            state = {TreeLabel(j + 1, j + 1, j + 1): 1}
            for depth in range(5):
                nxt = Counter()
                for label, mult in state.items():
                    for child in successors(label, pattern):
                        nxt[child] += mult
                state = nxt
                for label in state:
                    assert 1 <= label.x <= label.y <= j + depth + 3
                    assert 1 <= label.z <= j + 1
