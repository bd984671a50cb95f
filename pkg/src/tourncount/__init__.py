"""tourncount: exact cycle counting and census machinery for tournaments.

Highlights:
  * exact directed 5-cycle counts from per-arc scores, with upper and lower
    bounds (scores module);
  * brute-force oracles, the 12-class census of 5-vertex subtournaments and
    its 14 x 12 relation matrix (census module);
  * acyclic subtournament counts with the f/g closed-form bounds (acyclic
    module);
  * deterministic generators and a bit-exact text format (core module);
  * a compiled kernel backend with a pure-Python fallback (kernels module).
"""

from .acyclic import (
    AcyclicBounds,
    acyclic_bounds,
    count_acyclic,
    count_acyclic_recursive,
    f_lower,
    g_expected,
)
from .census import (
    Census5,
    ClassTable,
    build_class_table,
    census5,
    classify5,
    count_k_cycles_bruteforce,
    r_quantities,
    recover_matrix,
)
from .core import (
    Tournament,
    circulant,
    from_arcs,
    parse,
    quadratic_residue,
    random_tournament,
    relabel,
    reverse,
    serialize,
    transitive,
    validate,
)
from .errors import (
    BadFormat,
    BadParameter,
    BadPermutation,
    BadVertex,
    ConflictingArc,
    IncompleteTournament,
    LengthMismatch,
    NotAnArc,
    NotATournament,
    TournamentError,
    WrongOrder,
)
from .kernels import BACKEND
from .scores import (
    C5Breakdown,
    EdgeScore,
    c3_closed,
    c5_exact,
    edge_score,
    edge_scores_iter,
    expected_c5,
    lower_bound_c5,
    max_c3,
    max_c4,
    score_variance,
    subtracted_sum_chain,
    upper_bound_c5,
)

__version__ = "0.1.0"
