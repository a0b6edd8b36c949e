from .types import (
    Witness,
    BoundReport,
    ProofQuantities,
    ChainStep,
    Question1Profile,
    ReductionLevel,
    Prop34Reduction
)

from .lemma import (
    mediant_check,
    lemma1_bound,
    iterate_lemma1_bound,
    proof_quantities,
    lemma1_verify
)

from .conjectures import (
    frankl_verified,
    frankl_check,
    nagel_check,
    nagel_chain,
    s_frankl_check,
    question1_profile,
    t2_profile_check
)

from .nagel import (
    nagel_lemma_check,
    two_set_majority,
    prop34_witness,
    prop34_reduction,
    small_set_frankl
)
