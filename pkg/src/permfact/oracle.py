"""Brute-force ground truth on small symmetric groups.

Explicit permutation arithmetic plus exhaustive factorization counting.
Everything here is deliberately naive: enumerate, filter by cycle type,
count.  The only optimization is fixing the first factor to a class
representative (the counts are conjugation invariant), which multiplies
the feasible group size.
"""

from functools import lru_cache
from itertools import permutations as _all_images

from .partition import Partition, class_size, all_partitions


class Perm:
    """A permutation of {0, ..., n-1} stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation: {imgs!r}")
        self.images = imgs

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Perm":
        """Build from 0-based cycles, e.g. [(0,1,2)] for a 3-cycle."""
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(images)

    def __len__(self):
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __eq__(self, other):
        if isinstance(other, Perm):
            return self.images == other.images
        return NotImplemented

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({list(self.images)})"

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img] = i
        return Perm(inv)


def compose(a: Perm, b: Perm) -> Perm:
    """Product a*b acting as x -> a(b(x)) (b applied first)."""
    if len(a) != len(b):
        raise ValueError("size mismatch in composition")
    bi = b.images
    ai = a.images
    return Perm(tuple(ai[x] for x in bi))


def cycle_type(p: Perm) -> Partition:
    """Cycle type of p as a partition of n."""
    return Partition._from_sorted(_cycle_type_raw(p.images))


def _cycle_type_raw(images: tuple) -> tuple:
    n = len(images)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def _cycle_count_raw(images: tuple) -> int:
    n = len(images)
    seen = [False] * n
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
    return count


def class_representative(n: int, gamma: Partition) -> Perm:
    """Canonical member of the class: consecutive cycles (0 1 ..)(..) etc."""
    images = list(range(n))
    pos = 0
    for part in gamma.parts:
        block = list(range(pos, pos + part))
        for a, b in zip(block, block[1:] + block[:1]):
            images[a] = b
        pos += part
    return Perm(images)


def permutations_of_type(n: int, gamma: Partition):
    """Yield every permutation of cycle type gamma (filter over all of S_n)."""
    target = gamma.parts
    for images in _all_images(range(n)):
        if _cycle_type_raw(images) == target:
            yield Perm(images)


_T2_LIMIT = 9
_T3_LIMIT = 6
_MU_LIMIT = 9


@lru_cache(maxsize=None)
def _xi2_table(n: int) -> dict:
    """Counts keyed by (type1, type2, m) for pairs, first factor fixed."""
    table: dict = {}
    classes = all_partitions(n)
    perms = list(_all_images(range(n)))
    types = [_cycle_type_raw(p) for p in perms]
    for c1 in classes:
        rep = class_representative(n, c1).images
        size1 = class_size(c1)
        for images, t2 in zip(perms, types):
            product = tuple(rep[x] for x in images)
            m = _cycle_count_raw(product)
            key = (c1.parts, t2, m)
            table[key] = table.get(key, 0) + size1
    return table


@lru_cache(maxsize=None)
def _xi3_table(n: int) -> dict:
    """Counts keyed by (type1, type2, type3, m) for triples, first fixed."""
    table: dict = {}
    classes = all_partitions(n)
    perms = list(_all_images(range(n)))
    types = [_cycle_type_raw(p) for p in perms]
    for c1 in classes:
        rep = class_representative(n, c1).images
        size1 = class_size(c1)
        for imgs2, t2 in zip(perms, types):
            first_two = tuple(rep[x] for x in imgs2)
            for imgs3, t3 in zip(perms, types):
                product = tuple(first_two[x] for x in imgs3)
                m = _cycle_count_raw(product)
                key = (c1.parts, t2, t3, m)
                table[key] = table.get(key, 0) + size1
    return table


@lru_cache(maxsize=None)
def _mu_table(n: int) -> dict:
    """Counts keyed by (gamma, m): factorizations of the fixed full cycle.

    omega = (0 1 ... n-1); for each sigma in S_n the cofactor is
    pi = sigma^-1 * omega, and the entry counts sigma of type gamma whose
    cofactor has m cycles.
    """
    table: dict = {}
    omega = tuple(list(range(1, n)) + [0])
    for images in _all_images(range(n)):
        gamma = _cycle_type_raw(images)
        inv = [0] * n
        for i, img in enumerate(images):
            inv[img] = i
        pi = tuple(inv[x] for x in omega)
        m = _cycle_count_raw(pi)
        key = (gamma, m)
        table[key] = table.get(key, 0) + 1
    return table


def brute_xi(classes, m: int) -> int:
    """Exhaustive count of tuples from the given classes whose product has m cycles.

    Guards: n <= 9 for pairs, n <= 6 for triples; larger inputs are refused.
    """
    classes = tuple(classes)
    if not classes:
        raise ValueError("at least one class required")
    n = classes[0].n
    if any(c.n != n for c in classes):
        raise ValueError("all classes must partition the same n")
    t = len(classes)
    if t == 1:
        return class_size(classes[0]) if classes[0].length == m else 0
    if t == 2:
        if n > _T2_LIMIT:
            raise ValueError(f"brute_xi with 2 classes limited to n <= {_T2_LIMIT}")
        return _xi2_table(n).get((classes[0].parts, classes[1].parts, m), 0)
    if t == 3:
        if n > _T3_LIMIT:
            raise ValueError(f"brute_xi with 3 classes limited to n <= {_T3_LIMIT}")
        return _xi3_table(n).get(
            (classes[0].parts, classes[1].parts, classes[2].parts, m), 0
        )
    raise ValueError("brute_xi supports at most 3 classes")


def brute_mu(gamma: Partition, m: int) -> int:
    """Exhaustive count of factorizations sigma*pi of the fixed full cycle.

    sigma runs over the class of gamma, pi = sigma^-1 * omega must have
    m cycles.  Guard: n <= 9.
    """
    n = gamma.n
    if n > _MU_LIMIT:
        raise ValueError(f"brute_mu limited to n <= {_MU_LIMIT}")
    if n < 1:
        raise ValueError("brute_mu requires n >= 1")
    return _mu_table(n).get((gamma.parts, m), 0)
