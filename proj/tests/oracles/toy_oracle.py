"""Dense linear-solve oracle for the frozen PageRank test values.

Independent of the C++ solver: graphs are written out by hand and the
personalized PageRank is obtained by solving

    (I - c M - c v d^T) Pr = (1 - c) v

directly, where d marks isolated nodes (their walk mass restarts at v).
Prints the values that tests/ppv_test.cc and tests/data/toy_g1_expected.tsv
freeze.
"""

import numpy as np

C = 0.85


def ppr(n, edges, v, c=C):
    adj = np.zeros((n, n))
    for a, b in edges:
        adj[a, b] = adj[b, a] = 1.0
    deg = adj.sum(axis=0)
    m = np.zeros((n, n))
    for i in range(n):
        if deg[i] > 0:
            m[:, i] = adj[:, i] / deg[i]
    dangling = (deg == 0).astype(float)
    v = np.asarray(v, dtype=float)
    a = np.eye(n) - c * m - c * np.outer(v, dangling)
    return np.linalg.solve(a, (1 - c) * v)


def path3():
    pr = ppr(3, [(0, 1), (1, 2)], [1.0, 0.0, 0.0])
    print("path a-b-c, v=(1,0,0):", " ".join("%.12e" % x for x in pr))


def toy_g1():
    # Node order is (pos, offset): adjectives first, then the noun.
    ids = ["00000100-a", "00000200-a", "00000300-a", "00000400-a",
           "00000500-a", "00000600-a", "00000700-a", "00000010-n"]
    good, bad, nice, fine, awful, evil, decent, quality = range(8)
    syn = [(good, nice), (nice, fine), (bad, awful), (awful, evil),
           (fine, decent)]
    ant = [(good, bad), (decent, evil)]
    # AG seeds after one iteration: quality is reached with both
    # polarities and dropped.
    pos = np.zeros(8)
    pos[[good, nice]] = 0.5
    neg = np.zeros(8)
    neg[[bad, awful]] = 0.5
    pos_syn = ppr(8, syn, pos)
    pos_ant = ppr(8, ant, pos)
    neg_syn = ppr(8, syn, neg)
    neg_ant = ppr(8, ant, neg)
    score = (pos_syn + neg_ant) - (neg_syn + pos_ant)
    for i in sorted(range(8), key=lambda k: ids[k]):
        if score[i] != 0.0:
            print("%s\t%s\t%.17g" % (ids[i], "pos" if score[i] > 0 else "neg",
                                     score[i]))


if __name__ == "__main__":
    path3()
    toy_g1()
