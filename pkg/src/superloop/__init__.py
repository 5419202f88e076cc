"""superloop: exact structure and representation computations for the
special linear and orthosymplectic families of Lie superalgebras, their
multiloop extensions by Laurent polynomial rings, and the modules
obtained by evaluation and by parabolic induction."""

from .induction import (
    Classification,
    ClassificationError,
    InducedModule,
    LambdaFunctional,
    VerificationError,
    build_M,
    build_V,
    build_W,
    classify,
    evaluation_obstruction,
    irreducible_quotient,
    is_evaluation,
    maximal_submodule,
)
from .laurent import (
    CofiniteIdeal,
    EvaluationGrid,
    LaurentPoly,
    Lemma22Report,
    QuotientAlgebra,
    build_phi,
    check_lemma22,
    loop_algebra,
    loop_index,
)
from .linalg import (
    Echelon,
    Mat,
    Subspace,
    algebra_span,
    closure_under,
    kernel_basis,
    rank,
    rref,
)
from .realizations import (
    CenterSplit,
    MatrixRealization,
    build_C,
    build_sl,
    center_split,
    killing_form,
    odd_bracket_center_witness,
    supertrace,
    triangular,
)
from .representations import (
    PsiFunctional,
    Representation,
    SemisimplePart,
    defining_rep,
    evaluation_module,
    highest_weight_vectors,
    irreducible_hw_module,
    is_irreducible,
    psi_of,
    semisimple_part,
    tensor,
    trivial_module,
)
from .scalars import QQ, qq
from .superalgebra import (
    AxiomReport,
    GradingReport,
    LieSuperalgebra,
    NotDiagonalizableError,
    Root,
    RootDecomposition,
    from_matrices,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "qq",
    "Mat",
    "Echelon",
    "Subspace",
    "rref",
    "rank",
    "kernel_basis",
    "closure_under",
    "algebra_span",
    "LieSuperalgebra",
    "Root",
    "RootDecomposition",
    "AxiomReport",
    "GradingReport",
    "NotDiagonalizableError",
    "from_matrices",
    "MatrixRealization",
    "CenterSplit",
    "build_sl",
    "build_C",
    "supertrace",
    "center_split",
    "triangular",
    "odd_bracket_center_witness",
    "killing_form",
    "LaurentPoly",
    "CofiniteIdeal",
    "QuotientAlgebra",
    "EvaluationGrid",
    "loop_algebra",
    "loop_index",
    "build_phi",
    "check_lemma22",
    "Lemma22Report",
    "Representation",
    "SemisimplePart",
    "PsiFunctional",
    "semisimple_part",
    "psi_of",
    "defining_rep",
    "trivial_module",
    "tensor",
    "highest_weight_vectors",
    "irreducible_hw_module",
    "is_irreducible",
    "evaluation_module",
    "LambdaFunctional",
    "InducedModule",
    "Classification",
    "ClassificationError",
    "VerificationError",
    "build_W",
    "build_M",
    "build_V",
    "irreducible_quotient",
    "maximal_submodule",
    "is_evaluation",
    "evaluation_obstruction",
    "classify",
    "__version__",
]
