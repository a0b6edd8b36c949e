from enum import Enum as _Enum
from fractions import Fraction


class Enum(_Enum):
    def __str__(self) -> str:
        return str(self.value)


MSG_PREFIX = '[UCF] '

# Ground sets
# ==================================================

# Members are machine-word bitmasks, element e lives at bit e - 1
MAX_GROUND_SIZE = 24

# canonical_form brute-forces all n! relabelings
MAX_CANONICAL_N = 8

# Above this size the permutation image tables are not cached
MAX_TABLE_N = 6

EMPTY_SET_TOKEN = '-'
COMMENT_PREFIX = '#'
HEADER_PREFIX = 'n='


# Verdicts and checks
# ==================================================

class Verdict(Enum):
    HOLDS = 'holds'
    FAILS = 'fails'
    NOT_APPLICABLE = 'not_applicable'


class CheckName(Enum):
    FRANKL = 'frankl'
    NAGEL = 'nagel'
    CHAIN = 'chain'
    S_FRANKL = 's_frankl'
    LEMMA1 = 'lemma1'
    EQ21 = 'eq21'
    LEMMA33 = 'lemma33'
    PROP34 = 'prop34'
    TWO_SET = 'two_set'
    SMALL_SET = 'small_set'
    QUESTION1_T2 = 'question1_t2'


class ConjectureStatus(Enum):
    # A theorem in general
    THEOREM = 'theorem'
    # Proven for every family a desk-scale run can reach (n <= 12, m <= 50)
    PROVEN_SMALL = 'proven_small'
    OPEN = 'open'


CONJECTURE_STATUS = {
    CheckName.FRANKL: ConjectureStatus.PROVEN_SMALL,
    CheckName.NAGEL: ConjectureStatus.PROVEN_SMALL,
    CheckName.CHAIN: ConjectureStatus.PROVEN_SMALL,
    CheckName.S_FRANKL: ConjectureStatus.OPEN,
    CheckName.LEMMA1: ConjectureStatus.THEOREM,
    CheckName.EQ21: ConjectureStatus.THEOREM,
    CheckName.LEMMA33: ConjectureStatus.THEOREM,
    CheckName.PROP34: ConjectureStatus.THEOREM,
    CheckName.TWO_SET: ConjectureStatus.THEOREM,
    CheckName.SMALL_SET: ConjectureStatus.THEOREM,
    CheckName.QUESTION1_T2: ConjectureStatus.THEOREM,
}

# Frankl's conjecture is verified for every family with at most this many
# elements in its union, or at most FRANKL_VERIFIED_M members
FRANKL_VERIFIED_N = 12
FRANKL_VERIFIED_M = 50

# Nagel's bound is proven for every family from this rank on, the lower
# ranks only where Frankl's conjecture is verified
NAGEL_PROVEN_RANK = 3

# Liu's lower bound on the largest normalized frequency
LIMIT_RATIO = Fraction(38234, 100000)


# Enumeration
# ==================================================

class EnumMode(Enum):
    DENSE = 'dense'
    CANONICAL = 'canonical'


# 2^(2^4) candidate families
MAX_DENSE_N = 4
MAX_CANONICAL_GEN_N = 5

MAX_FAILING_WITNESSES = 100

# Number of contiguous candidate ranges per worker
PARTITIONS_PER_WORKER = 4


# Search
# ==================================================

class Objective(Enum):
    MIN_C1 = 'min_c1'
    LEX_MIN_C1_C2 = 'lex_min_c1_c2'


MAX_SEARCH_N = 20

DEFAULT_INITIAL_TEMPERATURE = 1.0
DEFAULT_TEMPERATURE_DECAY = 0.9995
DEFAULT_ITERATIONS = 5000
DEFAULT_RESTARTS = 1

# Added to both objective components of a non-spanning closure
NON_SPANNING_PENALTY = 1

# Weight of c2 in the scalar energy used for the acceptance rule only
LEX_ACCEPT_WEIGHT = 0.001

CHECKPOINT_VERSION = 1

DEFAULT_AUDIT_DIR = '.'


# CLI
# ==================================================

ENV_THREADS = 'UCF_THREADS'
INLINE_OPTION = '--inline'

EXIT_OK = 0
EXIT_THEOREM_FAILURE = 1
EXIT_USAGE = 2

KEY_WALL_TIME = 'wall_time_ms'
