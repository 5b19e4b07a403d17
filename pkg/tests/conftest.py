import itertools


def middle_levels(n):
    m = 2 * n + 1
    return ["".join(b) for b in itertools.product("01", repeat=m) if b.count("1") in (n, n + 1)]


def bfs_potentials(word):
    """Sum of distances from every vertex, by plain BFS on the parsed tree."""
    adj = [[]]
    stack = [0]
    for c in word:
        if c == "0":
            adj.append([stack[-1]])
            adj[stack[-1]].append(len(adj) - 1)
            stack.append(len(adj) - 1)
        else:
            stack.pop()
    out = []
    for s in range(len(adj)):
        dist = {s: 0}
        queue = [s]
        for v in queue:
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        out.append(sum(dist.values()))
    return out
