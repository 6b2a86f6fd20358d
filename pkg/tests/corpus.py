"""Small matroids shared by the oracle tests (all with n <= 12)."""

from tropbasis import families as F
from tropbasis import graph as G
from tropbasis.matroid import direct_sum, matroid_from_labels


def corpus():
    out = {}
    for d in range(1, 5):
        for n in range(d, 8):
            out[f"U({d},{n})"] = F.uniform(d, n)
    out["fano"] = F.fano()
    out["r10"] = F.r10()
    out["graphic K4"] = F.graphic(G.complete_graph(4))
    out["graphic K5"] = F.graphic(G.complete_graph(5))
    out["graphic prism"] = F.graphic(G.prism_graph())
    out["graphic C5"] = F.graphic(G.cycle_graph(5))
    out["cographic K4"] = F.cographic(G.complete_graph(4))
    out["cographic K5"] = F.cographic(G.complete_graph(5))
    out["cographic prism"] = F.cographic(G.prism_graph())
    out["partition 123|45"] = F.partition_matroid([[0, 1, 2], [3, 4]])
    out["example4"] = matroid_from_labels(4, [[1, 3, 4], [2, 3, 4], [1, 2]])
    out["U(2,4)+U(2,3)"] = direct_sum(F.uniform(2, 4), F.uniform(2, 3))
    out["U(1,3)+U(2,4)+free"] = direct_sum(direct_sum(F.uniform(1, 3), F.uniform(2, 4)), F.uniform(2, 2))
    return out


CORPUS = corpus()
