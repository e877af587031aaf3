'''Permutations of ``{0, 1, ..., d-1}`` stored as tuples of images.

The functions in here are the hot path of the realizability search, so they
work on plain tuples and avoid any validation. ``p[i]`` is the image of the
point ``i``. Products are read left to right: in ``perm_compose(p1, p2)``
the permutation ``p1`` is applied first.

.. note::
   :class:`hurwitz.realizability.Permutation` is the validated public type.
   There should be no need to use :mod:`hurwitz.permutation` directly.

'''
import functools
import itertools


def perm_check(images):
    '''Return True if ``images`` is a bijection of ``{0, ..., len(images)-1}``.
    '''
    d = len(images)
    seen = [False] * d
    for j in images:
        if (not isinstance(j, int) or isinstance(j, bool) or
                not 0 <= j < d or seen[j]):
            return False
        seen[j] = True
    return True


def perm_id(d):
    '''Return the identity on ``d`` points.'''
    return tuple(range(d))


def perm_compose(p1, p2):
    '''Return the product ``p1 p2`` (``p1`` is applied first).'''
    return tuple([p2[j] for j in p1])


def perm_invert(p):
    '''Return the inverse of ``p``.'''
    res = [0] * len(p)
    for i, j in enumerate(p):
        res[j] = i
    return tuple(res)


def perm_conjugate(p, h):
    '''Conjugate ``p`` by ``h``.

    If ``p`` maps ``a`` to ``b``, the result maps ``h[a]`` to ``h[b]``. This
    is the permutation ``h^-1 p h`` in left-to-right notation.

    '''
    res = [0] * len(p)
    for i, j in enumerate(p):
        res[h[i]] = h[j]
    return tuple(res)


def perm_cycle_type(p):
    '''Return the list of cycle lengths of ``p`` in decreasing order.

    Fixed points count as cycles of length one.

    '''
    d = len(p)
    seen = [False] * d
    lengths = []
    for i in range(d):
        if seen[i]:
            continue
        k = 0
        j = i
        while not seen[j]:
            seen[j] = True
            k += 1
            j = p[j]
        lengths.append(k)
    lengths.sort(reverse=True)
    return lengths


def perm_from_cycles(cycles, d):
    '''Return the permutation of ``d`` points with the given cycles.

    Points not mentioned in ``cycles`` are fixed.

    '''
    images = list(range(d))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return tuple(images)


def class_representative(parts):
    '''Return the canonical element of cycle type ``parts``.

    Cycles are laid out on consecutive points, longest first: the
    representative of ``(3, 2)`` is ``(0 1 2)(3 4)``.

    '''
    cycles = []
    start = 0
    for length in parts:
        cycles.append(tuple(range(start, start + length)))
        start += length
    return perm_from_cycles(cycles, start)


@functools.lru_cache(maxsize=None)
def class_elements(parts):
    '''Return all permutations of cycle type ``parts``, sorted.

    Args:
        parts: A tuple of weakly decreasing positive integers.

    Returns:
        A tuple of image tuples in lexicographic order.

    Each element is built exactly once: the cycle through the smallest
    unassigned point is chosen first, starting at that point.

    '''
    d = sum(parts)
    images = [None] * d
    found = []

    def place(remaining):
        try:
            start = images.index(None)
        except ValueError:
            found.append(tuple(images))
            return
        free = [i for i in range(d) if images[i] is None and i != start]
        for length in sorted(set(remaining), reverse=True):
            rest = list(remaining)
            rest.remove(length)
            for tail in itertools.permutations(free, length - 1):
                cycle = (start,) + tail
                for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                    images[a] = b
                place(rest)
                for a in cycle:
                    images[a] = None

    place(list(parts))
    found.sort()
    return tuple(found)


# Orbits ######################################################################

class UnionFind:
    '''Disjoint sets over ``{0, ..., size-1}`` with union by rank.'''

    def __init__(self, size):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.count = size

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        # path compression
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.count -= 1


def perms_orbits(perms, d):
    '''Return the orbits of the group generated by ``perms`` on ``d`` points.

    The orbits are returned as a sorted list of sorted tuples.

    '''
    uf = UnionFind(d)
    for p in perms:
        for i, j in enumerate(p):
            uf.union(i, j)
    orbits = {}
    for i in range(d):
        orbits.setdefault(uf.find(i), []).append(i)
    return sorted(tuple(orbit) for orbit in orbits.values())


def perms_are_transitive(perms, d):
    '''Return True if the group generated by ``perms`` has a single orbit.'''
    uf = UnionFind(d)
    for p in perms:
        for i, j in enumerate(p):
            uf.union(i, j)
            if uf.count == 1:
                return True
    return uf.count <= 1
