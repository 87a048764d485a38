"""Finite-scale constructions behind choice, Kőnig's lemma and graph colouring parameters.

The package builds the family graphs ``G_A`` / ``H_A`` and the double stars
``DS`` / ``DC``, runs the colouring transfers and choice-driven constructions
on them, and checks every output against brute-force automorphism and
colouring oracles.
"""

from .caps import Caps, get_caps
from .choice import (
    ChoiceFunction,
    choice_cost,
    construct_distinguishing,
    construct_irreducible_DS,
    default_injection,
    derive_choice,
)
from .errors import ChoiceGraphError
from .families import (
    AcceptableFamilySpec,
    FamilyGraph,
    TwoStarGraph,
    build_DC,
    build_DS,
    build_GA,
    build_HA,
    expected_max_degree,
    spec_from_sizes,
    verify_claim1,
)
from .graph import EDGE, VERTEX, Colouring, Graph, is_proper, make_graph, max_degree
from .oracle import chromatic_index, chromatic_number, distinguishing_index, distinguishing_number
from .reduction import (
    PropertyTag,
    compare,
    enumerate_chain,
    find_irreducible_greedy,
    find_least_in_chain,
    is_irreducible,
    reduce,
)
from .symmetry import automorphisms, is_distinguishing, orbit_partition, preserving_automorphisms
from .transfer import de_to_pe, ds_transfer, dv_to_de, transfer_pipeline, pe_to_pv, pv_to_dv

__version__ = "0.1.0"
