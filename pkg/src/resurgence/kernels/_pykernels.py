"""Pure-Python hot kernels.

Monomials are tuples of non-negative ints, one entry per variable. Every
function here has a twin with the same signature in ``_ckernels.pyx``; the
two are kept behaviourally identical and tested against each other.
"""


class BudgetExceeded(RuntimeError):
    """The membership search visited more nodes than allowed."""

    def __init__(self, nodes):
        super().__init__(f"membership search exceeded node budget ({nodes} nodes)")
        self.nodes = nodes


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def minimalize(gens):
    """Divisibility-minimal subset of ``gens``, sorted lexicographically."""
    cands = sorted(set(gens), key=lambda g: (sum(g), g))
    kept = []
    lower = 0  # kept[:lower] have degree strictly below the current one
    cur_deg = -1
    for g in cands:
        d = sum(g)
        if d != cur_deg:
            lower = len(kept)
            cur_deg = d
        # equal-degree distinct monomials never divide each other
        for h in kept[:lower]:
            if _divides(h, g):
                break
        else:
            kept.append(g)
    kept.sort()
    return kept


def product_min(a, b):
    return minimalize([tuple(x + y for x, y in zip(u, v)) for u in a for v in b])


def intersect_min(a, b):
    return minimalize([tuple(x if x > y else y for x, y in zip(u, v)) for u in a for v in b])


def member_of_power(gens, m, t, budget):
    """Search for ``t`` generators (with repetition) whose product divides ``m``.

    Returns a sorted tuple of generator indices, or None when ``m`` is not in
    the ``t``-th power. Raises BudgetExceeded past ``budget`` search nodes.
    """
    if t == 0:
        return ()
    if not gens:
        return None
    order = sorted(range(len(gens)), key=lambda i: (-sum(gens[i]), gens[i]))
    G = [gens[i] for i in order]
    nv = len(m)
    caps = [max(g[j] for g in G) for j in range(nv)]
    mindeg = min(sum(g) for g in G)
    failed = set()
    chosen = []
    nodes = 0

    def search(res, k):
        nonlocal nodes
        if k == 0:
            return True
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes)
        # entries above k * (largest exponent in use) can never be consumed
        res = tuple(r if r < c * k else c * k for r, c in zip(res, caps))
        if sum(res) < k * mindeg:
            return False
        key = (res, k)
        if key in failed:
            return False
        for idx, g in enumerate(G):
            if _divides(g, res):
                chosen.append(idx)
                if search(tuple(r - x for r, x in zip(res, g)), k - 1):
                    return True
                chosen.pop()
        failed.add(key)
        return False

    if search(tuple(m), t):
        return tuple(sorted(order[i] for i in chosen))
    return None


def enumerate_symbolic(nvars, primes, s):
    """Minimal generators of the intersection of ``P^s`` over ``primes``.

    ``primes`` is a sequence of tuples of variable indices. A lattice point
    ``e`` lies in the intersection iff every prime's coordinate sum is at
    least ``s``; it is minimal iff every positive coordinate sits in some
    prime whose sum is exactly ``s``.
    """
    primes = [tuple(sorted(p)) for p in primes]
    npr = len(primes)
    member = [[k for k in range(npr) if j in primes[k]] for j in range(nvars)]
    closing = [[k for k in range(npr) if primes[k][-1] == j] for j in range(nvars)]
    settled = [[] for _ in range(nvars)]
    for i in range(nvars):
        if member[i]:
            settled[max(primes[k][-1] for k in member[i])].append(i)
    sums = [0] * npr
    e = [0] * nvars
    out = []

    def rec(j):
        if j == nvars:
            out.append(tuple(e))
            return
        lo = 0
        for k in closing[j]:
            if s - sums[k] > lo:
                lo = s - sums[k]
        if member[j]:
            # a positive entry must leave room for some prime to end exactly at s
            hi = max(0, s - min(sums[k] for k in member[j]))
        else:
            hi = 0
        for v in range(lo, hi + 1):
            e[j] = v
            for k in member[j]:
                sums[k] += v
            ok = True
            for i in settled[j]:
                if e[i] > 0 and not any(sums[k] == s for k in member[i]):
                    ok = False
                    break
            if ok:
                rec(j + 1)
            for k in member[j]:
                sums[k] -= v
        e[j] = 0

    rec(0)
    out.sort()
    return out
