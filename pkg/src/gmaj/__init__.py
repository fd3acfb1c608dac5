"""Graph-parameterized inversion and major-index statistics on words.

Exact-arithmetic library for the word statistics obtained by replacing the
classical "greater than" comparison with membership in an arbitrary directed
graph on the alphabet: computing them, summing them into distribution
polynomials, evaluating the closed product forms those distributions take
when the graph comes from an ordered bipartition, transporting one statistic
onto the other bijectively, counting the graphs in question, and exhaustively
verifying the equidistribution characterizations at small alphabet sizes.
"""

from .bijections import (
    LabeledWord,
    PairLetter,
    VerfahrenImage,
    inv_to_maj,
    inv_to_maj_full,
    inv_to_maj_prime,
    label_word,
    macmahon_decode,
    macmahon_encode,
    maj_to_inv,
    maj_to_inv_full,
    maj_to_inv_prime,
    star_bipartition,
    unlabel_word,
)
from .enumeration import (
    count_bipartitional,
    count_compatible,
    egf_bipartitional,
    egf_compatible,
    fubini_numbers,
    stirling2,
)
from .errors import (
    ClassTooLargeError,
    CompatibilityError,
    GmajError,
    GuardError,
    ParseError,
    ShapeError,
)
from .formulas import (
    BlockProfile,
    ending_distribution,
    formula_inv_full,
    formula_inv_prime,
    formula_tq_full,
    formula_tq_prime,
)
from .qseries import (
    PolyQ,
    PolyTQ,
    TruncSeriesU,
    q_binomial,
    q_multinomial,
    q_pochhammer,
    t_pochhammer,
    trunc_pochhammer_expansion,
    trunc_reciprocal_pochhammer,
)
from .relations import (
    OrderedBipartition,
    Relation,
    all_bipartitions,
    all_relations,
    decompose,
    format_bipartition,
    is_bipartitional,
    is_compatible,
    parse_bipartition,
    relation_from_bipartition,
)
from .stats import (
    StatTriple,
    distribution,
    joint_distribution,
    stats_full,
    stats_prime,
    underlined_count,
)
from .survey import (
    SurveyReport,
    contents_up_to,
    equidistributed,
    theorem1_survey,
    theorem2_survey,
)
from .words import (
    class_size,
    content_of,
    enumerate_class,
    format_content,
    format_word,
    parse_content,
    parse_word,
)

__version__ = "0.1.0"
