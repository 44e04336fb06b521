"""Doubly-even binary codes, their operad, Adinkras, code loops, and dessins."""

from .adinkra import (
    Adinkra,
    Chromotopology,
    build_adinkra,
    chromotopology_from_code,
    color_permutation_action,
    export_dot,
    solve_dashing,
    susy_relations,
    translation_action,
    two_color_cycles,
    valise_ranking,
    verify_chromotopology,
)
from .codeloop import (
    CodeLoop,
    LoopElement,
    build_cocycle,
    build_loop,
    cayley_table,
    is_associative,
    is_moufang,
    loop_product,
    verify_extension,
)
from .codes import (
    BinaryCode,
    Permutation,
    code_automorphisms,
    code_from_record,
    code_to_record,
    codewords,
    enumerate_doubly_even,
    is_doubly_even,
    make_code,
    permute_code,
    permute_word,
    trivial_code,
    weight,
)
from .dessin import (
    Dessin,
    dessin_from_chromotopology,
    genus,
    is_transitive,
    monodromy_order,
    sigma_infinity,
    verify_cycle_structure,
)
from .gf2 import BitWord, GF2Matrix, rref, solve_affine, span_closure
from .operad import (
    block_permutation,
    gamma,
    gamma_raw_set,
    insert,
    iterated_insert,
    within_block_permutation,
)

__version__ = "0.1.0"
