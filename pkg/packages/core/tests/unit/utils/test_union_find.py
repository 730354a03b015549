from core.utils.union_find import UnionFind


class TestUnionFind:

    def test_it_starts_with_singletons(self):
        forest = UnionFind(4)

        assert forest.components == 4
        assert not forest.connected(0, 1)

    def test_it_keeps_the_larger_root(self):
        forest = UnionFind(5)
        forest.union(3, 4)

        root = forest.union(0, 3)

        assert root == forest.find(3)
        assert forest.find(0) == root
        assert forest.size[root] == 3

    def test_it_keeps_the_first_root_on_ties(self):
        forest = UnionFind(2)

        assert forest.union(1, 0) == 1

    def test_it_ignores_a_repeated_union(self):
        forest = UnionFind(3)
        forest.union(0, 1)

        root = forest.union(1, 0)

        assert root == forest.find(0)
        assert forest.components == 2

    def test_it_links_transitively(self):
        forest = UnionFind(6)
        for a, b in [(0, 1), (2, 3), (1, 3), (4, 5)]:
            forest.union(a, b)

        assert forest.connected(0, 2)
        assert not forest.connected(0, 4)
        assert forest.components == 2
