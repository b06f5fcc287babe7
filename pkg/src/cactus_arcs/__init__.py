"""Non-crossing arc diagrams and the cactus group action on them."""

from .action import (
    N3_WITNESS,
    N3Solution,
    adjacency_word,
    apply_generator,
    apply_word,
    brute_force_reconnection,
    fissure_word,
    n3_solve,
    rotation_word,
    swap_word,
)
from .cactus import Generator, IntervalPermutation, Word, parse_word, phi
from .diagram import (
    ArcDiagram,
    InvalidDiagramError,
    SlotMatching,
    ValenceProfile,
    canonical_key,
    collapse_from_slots,
    expand_to_slots,
    validate,
)
from .enumeration import DiagramSet, brute_force_oracle, count, enumerate_diagrams, enumerate_structures
from .invariants import (
    InvariantRecord,
    border_thickness,
    component_count,
    component_decomposition,
    component_sizes,
    gcd_multiplicity,
    invariant_record,
)
from .orbits import OrbitReport, check_all_two_formula, orbit_of, orbits
from .relations import (
    RelationCheck,
    check_braid,
    check_defining_relations,
    check_rotation_relation,
    holds_on_set,
    word_order_on_set,
)
from .render import render

__version__ = "0.1.0"
