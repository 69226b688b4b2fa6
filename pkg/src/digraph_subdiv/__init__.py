"""Certificate-producing algorithms for complete-digraph subdivisions in digraphs of large minimum outdegree."""

from .builder import (BuildPlan, BuildResult, SubdivisionCertificate, build_subdivision,
                      connect_pairs_greedy, order_bound, select_branch_vertices, short_bound)
from .connectivity import (DisjointPaths, Separator, Uncuttable, brute_force_separator, kappa,
                           max_disjoint_paths, min_vertex_separator)
from .digraph import (DiGraph, Dipath, from_edge_list, induced_subdigraph, parse_digraph,
                      read_digraph, shortest_dipath, undirected_component, vertices_reaching,
                      write_digraph)
from .errors import *  # noqa: F401,F403
from .extractor import ExtractionTrace, IterationRecord, extract_core, extract_step, find_violating_pair
from .params import CoreReport, Params
from .verifier import (Violation, parse_certificate, verify_certificate, verify_core,
                       verify_disjoint_family)

__version__ = "0.1.0"
