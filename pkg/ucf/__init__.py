__version__ = '0.1.0'

from ucf.common.constants import (
    Verdict,
    CheckName,
    ConjectureStatus,
    EnumMode,
    Objective,
    CONJECTURE_STATUS
)

from ucf.common.exceptions import (
    UCFException,
    InvalidGroundSetException,
    ElementOutOfRangeException,
    EmptyFamilyException,
    NotUnionClosedException,
    TrivialFamilyException,
    MembershipException,
    SetSizeException,
    InvalidRatioException,
    InvalidArgumentException,
    CanonicalizationLimitException,
    EnumerationLimitException,
    UnknownCheckException,
    FamilyParseException,
    InvalidConfigException,
    CheckpointException,
    TheoremViolationException
)

from ucf.common.ratio import (
    Ratio,
    nagel_bound
)

from ucf.family import (
    GroundSet,
    ElementSet,
    SetFamily,
    FrequencyProfile,
    family_from_generators,
    parse_family,
    parse_families,
    format_family
)

from ucf.bounds import (
    BoundReport,
    mediant_check,
    lemma1_bound,
    proof_quantities,
    lemma1_verify,
    frankl_verified,
    frankl_check,
    nagel_check,
    nagel_chain,
    s_frankl_check,
    question1_profile,
    nagel_lemma_check,
    two_set_majority,
    prop34_witness,
    small_set_frankl
)

from ucf.enumeration import (
    EnumConfig,
    RandomConfig,
    enumerate_families,
    enumerate_dense,
    enumerate_canonical,
    random_closed_family,
    sweep
)

from ucf.search import (
    SearchConfig,
    SearchRecord,
    local_search,
    verify_record
)
