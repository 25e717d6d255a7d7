"""Recognition and polynomial-time path problems on P5-free chordal bipartite graphs."""

from nno.decomposition import Decomposition, check_lemmas, decompose
from nno.errors import NNOError, NotInClassError, TheoryViolation
from nno.graph import Graph, VertexSequence, parse_graph, read_graph, serialize_graph
from nno.hamiltonicity import hamiltonian_cycle, hamiltonian_path
from nno.longest import longest_path, min_leaf_spanning_tree
from nno.recognition import classify
from nno.steiner import steiner_path

__all__ = [
    "Decomposition",
    "Graph",
    "NNOError",
    "NotInClassError",
    "TheoryViolation",
    "VertexSequence",
    "check_lemmas",
    "classify",
    "decompose",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "longest_path",
    "min_leaf_spanning_tree",
    "parse_graph",
    "read_graph",
    "serialize_graph",
    "steiner_path",
]
