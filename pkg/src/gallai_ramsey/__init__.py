"""Gallai colorings of complete graphs: construction, detection, decomposition, search."""
from .constructions import SamplerProfile, gallai_lower_bound, odd_cycle_two_color_extremal, random_gallai
from .detect import (CycleWitness, NodeBudgetExceeded, Verdict, find_mono_cycle, find_rainbow_triangle,
                     is_bad, validate_witness)
from .gallai import (GallaiPartition, Join, Leaf, find_gallai_partition, reduced_graph, substitute,
                     validate_partition)
from .graph import ColoredCompleteGraph, colors_used, induced_subgraph, load, save
from .lemmas import JoinScenario, join_lemma, three_vertex_claim
from .search import SearchOutcome, search_bad_gallai, search_bad_two_coloring, threshold_scan

__version__ = "0.1.0"
