"""Pure-Python integer kernels; reference path and fallback for _ckernels.

Tensors are flat lists in row-major order: a structure table ``c`` has
``c[(i*n + j)*n + l]`` and a 4-index tensor ``t[((i*n + j)*n + k)*n + l]``.
"""


def left_right(c, n):
    """Integer tensors of ``(e_i e_j) e_k`` and ``e_i (e_j e_k)``."""
    n2, n3 = n * n, n * n * n
    left = [0] * (n3 * n)
    right = [0] * (n3 * n)
    for i in range(n):
        for j in range(n):
            ij = (i * n + j) * n
            for m in range(n):
                a = c[ij + m]
                if not a:
                    continue
                # (e_i e_j) e_k gets a * c[m,k,:]
                for k in range(n):
                    base = ((i * n + j) * n + k) * n
                    src = m * n2 + k * n
                    for l in range(n):
                        b = c[src + l]
                        if b:
                            left[base + l] += a * b
                # e_k (e_i e_j) gets a * c[k,m,:]; here (j,k) play (i,j)
                for k in range(n):
                    base = ((k * n + i) * n + j) * n
                    src = k * n2 + m * n
                    for l in range(n):
                        b = c[src + l]
                        if b:
                            right[base + l] += a * b
    return left, right


def permuted_rows(t, n, perms):
    """For every triple (i,j,k) and output l, the row
    ``[t[p(i,j,k), l] for p in perms]`` flattened; ``perms`` are 0-based
    position maps so that p(i,j,k)[q] = (i,j,k)[perms[s][q]]."""
    r = len(perms)
    out = [0] * (n ** 4 * r)
    pos = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                trip = (i, j, k)
                bases = []
                for p in perms:
                    a, b, c = trip[p[0]], trip[p[1]], trip[p[2]]
                    bases.append(((a * n + b) * n + c) * n)
                for l in range(n):
                    for s in range(r):
                        out[pos + s] = t[bases[s] + l]
                    pos += r
    return out


def tensor_table(ca, na, cb, nb):
    n = na * nb
    out = [0] * (n ** 3)
    for a1 in range(na):
        for a2 in range(na):
            for a3 in range(na):
                x = ca[(a1 * na + a2) * na + a3]
                if not x:
                    continue
                for b1 in range(nb):
                    for b2 in range(nb):
                        for b3 in range(nb):
                            y = cb[(b1 * nb + b2) * nb + b3]
                            if y:
                                i, j, l = a1 * nb + b1, a2 * nb + b2, a3 * nb + b3
                                out[(i * n + j) * n + l] = x * y
    return out
