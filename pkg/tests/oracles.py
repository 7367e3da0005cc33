"""Independent reference implementations used to freeze expected values.

Nothing here imports the package's numerical code; each oracle takes a
different route (hand Jacobi rotations, brute-force pair counts, explicit
matrix inverses, BFS path enumeration) so agreement is meaningful.
"""

from __future__ import annotations

import itertools
import math
from collections import deque

import numpy as np


def dense_laplacian(n, edges):
    lap = np.zeros((n, n))
    for i, j in edges:
        lap[i, j] -= 1
        lap[j, i] -= 1
        lap[i, i] += 1
        lap[j, j] += 1
    return lap


def dense_adjacency(n, edges):
    a = np.zeros((n, n))
    for i, j in edges:
        a[i, j] = a[j, i] = 1
    return a


def jacobi_eigenvalues(m, sweeps=100, tol=1e-14):
    """Cyclic Jacobi rotations on a small symmetric matrix; eigenvalues descending."""
    a = [list(map(float, row)) for row in m]
    n = len(a)
    for _ in range(sweeps):
        off = sum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j)
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p][q]) < 1e-300:
                    continue
                theta = (a[q][q] - a[p][p]) / (2 * a[p][q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
    return sorted((a[i][i] for i in range(n)), reverse=True)


def projector_lec(lap, r, group_tol=1e-8):
    """LEC from whole-matrix ``eigh`` and explicit spectral projectors.

    Orders cutting a block of equal eigenvalues interpolate between the
    projectors at the block edges.
    """
    n = len(lap)
    w, v = np.linalg.eigh(lap)
    w, v = w[::-1], v[:, ::-1]
    if r == 0:
        return np.full(n, 1.0 / n)
    if r == n - 1:
        return np.ones(n)
    scale = group_tol * max(1.0, w[0])
    lam = w[r - 1]
    lo = min(k for k in range(n) if abs(w[k] - lam) <= scale)
    hi = max(k for k in range(n) if abs(w[k] - lam) <= scale) + 1

    zero_start = min(k for k in range(n) if w[k] <= scale)
    if hi > zero_start:
        # a cut into the null space: the block is every non-constant null
        # direction, and its upper edge is the full identity
        hi = n - 1

    def diag_proj(stop):
        if stop == n - 1:
            return np.ones(n)
        # columns ending before the null block are orthogonal to 1
        return 1.0 / n + np.square(v[:, :stop]).sum(axis=1)

    if hi == r:
        return diag_proj(r)
    before, after = diag_proj(lo), diag_proj(hi)
    return before + (r - lo) / (hi - lo) * (after - before)


def kendall_tau_b_bruteforce(x, y):
    nc = nd = tx = ty = 0
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            dx = (x[i] > x[j]) - (x[i] < x[j])
            dy = (y[i] > y[j]) - (y[i] < y[j])
            if dx == 0 and dy == 0:
                continue
            if dx == 0:
                tx += 1
            elif dy == 0:
                ty += 1
            elif dx == dy:
                nc += 1
            else:
                nd += 1
    return nc, nd, tx, ty


def kendall_counts_bruteforce(x, y):
    """``(n_pairs, ties_x, ties_y, concordant - discordant)`` by enumeration."""
    n = len(x)
    n0 = n * (n - 1) // 2
    t1 = sum(1 for i, j in itertools.combinations(range(n), 2) if x[i] == x[j])
    t2 = sum(1 for i, j in itertools.combinations(range(n), 2) if y[i] == y[j])
    nc, nd, _, _ = kendall_tau_b_bruteforce(x, y)
    return n0, t1, t2, nc - nd


def average_ranks(x):
    """Average ranks (1-based) by explicit tie-group scanning."""
    order = sorted(range(len(x)), key=lambda i: x[i])
    ranks = [0.0] * len(x)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and x[order[j + 1]] == x[order[i]]:
            j += 1
        avg = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def bfs_all_shortest_paths(n, edges):
    """Distances and path counts from every source by BFS."""
    nbrs = [[] for _ in range(n)]
    for i, j in edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    dist = np.full((n, n), -1)
    sigma = np.zeros((n, n))
    for s in range(n):
        dist[s, s] = 0
        sigma[s, s] = 1
        q = deque([s])
        while q:
            u = q.popleft()
            for v in nbrs[u]:
                if dist[s, v] < 0:
                    dist[s, v] = dist[s, u] + 1
                    q.append(v)
                if dist[s, v] == dist[s, u] + 1:
                    sigma[s, v] += sigma[s, u]
    return dist, sigma


def betweenness_bruteforce(n, edges):
    """Sum over unordered pairs of the share of shortest paths through each node."""
    dist, sigma = bfs_all_shortest_paths(n, edges)
    out = np.zeros(n)
    for s, t in itertools.combinations(range(n), 2):
        if dist[s, t] <= 0:
            continue
        for v in range(n):
            if v in (s, t) or dist[s, v] < 0 or dist[v, t] < 0:
                continue
            if dist[s, v] + dist[v, t] == dist[s, t]:
                out[v] += sigma[s, v] * sigma[v, t] / sigma[s, t]
    return out


def katz_series(a, alpha, terms=5000):
    x = np.ones(len(a))
    term = np.ones(len(a))
    for _ in range(terms):
        term = alpha * (a @ term)
        x = x + term
        if np.abs(term).max() < 1e-16:
            break
    return x


def direct_loss_after_target(lap, beta, i):
    """``a'a`` with ``a = inv(I + beta L)(1 - e_i)`` via an explicit inverse."""
    n = len(lap)
    theta = np.ones(n)
    theta[i] = 0.0
    a = np.linalg.inv(np.eye(n) + beta * lap) @ theta
    return float(a @ a)
