from .ground import (
    GroundSet,
    ElementSet
)

from .family import (
    SetFamily,
    FrequencyProfile,
    union_closure_masks,
    family_from_generators
)

from .canonical import canonical_masks

from .text import (
    parse_family,
    parse_families,
    parse_inline,
    read_family,
    format_family,
    format_families
)
