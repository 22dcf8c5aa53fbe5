"""Independent brute-force oracles shared by the test modules."""
import itertools


def hamiltonian_vertex_paths(k):
    """All Hamiltonian paths of the k-cube as vertex lists, from every start."""
    n = 1 << k
    out = []

    def extend(path, seen):
        if len(path) == n:
            out.append(tuple(path))
            return
        v = path[-1]
        for b in range(k):
            w = v ^ (1 << b)
            if w not in seen:
                seen.add(w)
                path.append(w)
                extend(path, seen)
                path.pop()
                seen.discard(w)

    for s in range(n):
        extend([s], {s})
    return out


def _crossing_plane(a, b):
    return (a ^ b).bit_length() - 1


def brute_force_orbits(d, k, kinds):
    """Orbits of zero patterns by explicit sweep over the hyperoctahedral group.

    Intervals are vertex walks: a Hamiltonian path for "F", a single edge for
    "B".  Consecutive walks must chain (end vertex = next start vertex) and
    every plane must be crossed exactly d times.
    """
    paths = hamiltonian_vertex_paths(k)
    edges = [(v, v ^ (1 << b)) for v in range(1 << k) for b in range(k)]
    options = [paths if c == "F" else edges for c in kinds]
    patterns = set()
    for combo in itertools.product(*options):
        if any(a[-1] != b[0] for a, b in zip(combo, combo[1:])):
            continue
        totals = [0] * k
        for walk in combo:
            for a, b in zip(walk, walk[1:]):
                totals[_crossing_plane(a, b)] += 1
        if all(t == d for t in totals):
            patterns.add(combo)

    group = []
    for perm in itertools.permutations(range(k)):
        for flips in range(1 << k):
            group.append((perm, flips))

    def act(g, v):
        perm, flips = g
        out = 0
        for j in range(k):
            if v >> j & 1:
                out |= 1 << perm[j]
        return out ^ flips

    remaining = set(patterns)
    orbits = 0
    while remaining:
        p = remaining.pop()
        orbits += 1
        for g in group:
            remaining.discard(tuple(tuple(act(g, v) for v in walk) for walk in p))
    return orbits, len(patterns)
