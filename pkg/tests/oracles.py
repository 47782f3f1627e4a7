"""Independent oracles: concrete (signed-)permutation realizations.

Nothing here touches the library's word machinery.  Words are folded
into concrete permutations, and lengths/descents come from
breadth-first search distances in the right-multiplication Cayley
graph, so agreement with the library is a genuine cross-check.

Type A_n is realized in S_{n+1} (word notation: the tuple of images of
0..n); generator i swaps positions i, i+1.  Type B_n acts on signed
values: a signed permutation is the tuple (w(1), ..., w(n)) with
w(-v) = -w(v) implied; generator 0 negates the value 1 and generator i
(i >= 1) swaps the values i, i+1.
"""

from functools import lru_cache


def _compose_perm(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """(f o g): apply g, then f."""
    return tuple(f[v] for v in g)


def _apply_signed(f: tuple[int, ...], v: int) -> int:
    return f[v - 1] if v > 0 else -f[-v - 1]


def _compose_signed(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(_apply_signed(f, g[i]) for i in range(len(g)))


class Realization:
    """A concrete group with generators matching a Coxeter preset."""

    def __init__(self, identity, gens, compose):
        self.identity = identity
        self.gens = gens
        self.compose = compose

    def product(self, word) -> tuple[int, ...]:
        result = self.identity
        for letter in word:
            result = self.compose(result, self.gens[letter])
        return result

    @property
    def distances(self) -> dict:
        """BFS distance from the identity = the length function."""
        if not hasattr(self, "_distances"):
            dist = {self.identity: 0}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for g in frontier:
                    for gen in self.gens:
                        h = self.compose(g, gen)
                        if h not in dist:
                            dist[h] = dist[g] + 1
                            nxt.append(h)
                frontier = nxt
            self._distances = dist
        return self._distances

    def length(self, perm) -> int:
        return self.distances[perm]

    def right_descents(self, perm) -> set[int]:
        dist = self.distances
        return {
            s
            for s, gen in enumerate(self.gens)
            if dist[self.compose(perm, gen)] < dist[perm]
        }

    def shortest_words(self, perm, max_length: int = 12) -> list[tuple[int, ...]]:
        """All minimal-length words for ``perm``, by exhaustive search."""
        rank = len(self.gens)
        layer = {self.identity: [()]}
        for _ in range(max_length + 1):
            if perm in layer:
                return sorted(layer[perm])
            grown: dict = {}
            for g, words in layer.items():
                for s in range(rank):
                    h = self.compose(g, self.gens[s])
                    grown.setdefault(h, []).extend(w + (s,) for w in words)
            layer = grown
        raise AssertionError(f"no word of length <= {max_length} reaches {perm}")


def type_a(rank: int) -> Realization:
    n = rank + 1
    identity = tuple(range(n))
    gens = []
    for i in range(rank):
        perm = list(identity)
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(tuple(perm))
    return Realization(identity, gens, _compose_perm)


def type_b(rank: int) -> Realization:
    identity = tuple(range(1, rank + 1))
    gens = [(-1,) + identity[1:]]
    for i in range(1, rank):
        perm = list(identity)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        gens.append(tuple(perm))
    return Realization(identity, gens, _compose_signed)


@lru_cache(maxsize=None)
def realization(name: str) -> Realization:
    kind, rank = name[0], int(name[1:])
    if kind == "A":
        return type_a(rank)
    if kind == "B":
        return type_b(rank)
    raise KeyError(name)
