"""Virtual braids via braid-Gauss diagrams.

Words are parsed with :func:`parse_word`, turned into diagrams with
:func:`word_to_gauss` and compared exactly up to virtual and mixed moves with
:func:`vm_equivalent`.  Reidemeister equivalence is searched (bounded) with
:func:`r_equivalent_bounded`; :func:`canonical_genus` gives the genus of the
capped regular-neighbourhood surface.
"""

from .gauss import (
    Arrow,
    BraidGaussDiagram,
    canonical_form,
    compose,
    identity_diagram,
    inverse,
    vm_equivalent,
    word_to_gauss,
)
from .moves import MoveTrace, OmegaMoveSite, apply_omega, rewrite_word
from .pure import PureWord, is_pure, to_pure_word, verify_pv_presentation
from .realize import realize, tau_word_for
from .search import Budget, min_genus_bounded, r_equivalent_bounded
from .surface import build_ribbon_graph, canonical_genus
from .word import BraidWord, Letter, Permutation, concat, invert, parse_word, permutation

__version__ = "0.1.0"
