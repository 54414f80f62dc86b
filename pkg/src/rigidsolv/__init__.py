"""Exact computation in free solvable groups and iterated wreath products."""

from .errors import AmbientMismatchError, CapExceededError, WordSyntaxError
from .groups import AbelianGroup, Group, abelian_group
from .group_ring import RingElement
from .magnus import SplitMatrix, eval_word, restricted_module_generators, sigma
from .free_solvable import (
    FreeSolvableGroup,
    SolvableElement,
    ball_enumerate,
    free_solvable_group,
    is_trivial,
    normalize,
    project,
    series_member_commutator,
    series_member_projection,
    standard_witnesses,
)
from .wreath import (
    WreathElement,
    WreathProduct,
    embed_free_solvable,
    embedding_codomain,
    function_to_matrix,
    iterated_wreath,
    matrix_to_function,
)
from .linalg import (
    LaurentPoly,
    PrincipalDimension,
    closed_form_dimension,
    coset_rank,
    laurent_rank,
    lex_compare,
    principal_dimension_metabelian,
    smith_form,
    smith_rank,
)
from .equations import (
    MixedWord,
    SolutionSet,
    equivalent_on_ball,
    evaluate,
    solve_ball,
    vanishes_on,
)
from .verify import CheckReport, run_all
from .words import Word, free_reduce, parse_word

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AmbientMismatchError",
    "CapExceededError",
    "CheckReport",
    "FreeSolvableGroup",
    "Group",
    "LaurentPoly",
    "MixedWord",
    "PrincipalDimension",
    "RingElement",
    "SolutionSet",
    "SolvableElement",
    "SplitMatrix",
    "Word",
    "WordSyntaxError",
    "WreathElement",
    "WreathProduct",
    "abelian_group",
    "ball_enumerate",
    "closed_form_dimension",
    "coset_rank",
    "embed_free_solvable",
    "embedding_codomain",
    "equivalent_on_ball",
    "eval_word",
    "evaluate",
    "free_reduce",
    "free_solvable_group",
    "function_to_matrix",
    "is_trivial",
    "iterated_wreath",
    "laurent_rank",
    "lex_compare",
    "matrix_to_function",
    "normalize",
    "parse_word",
    "principal_dimension_metabelian",
    "project",
    "restricted_module_generators",
    "run_all",
    "series_member_commutator",
    "series_member_projection",
    "sigma",
    "smith_form",
    "smith_rank",
    "solve_ball",
    "standard_witnesses",
    "vanishes_on",
]
