from typing import (
    Any,
    Dict,
    List,
    Tuple,
    Union
)


# A member of a family as a bitmask, element e is bit e - 1
Mask = int

Masks = Tuple[Mask, ...]

JSONObject = Dict[str, Any]

# What a check outcome refers to, e.g. a member or a pair (i, j)
Instance = Union[str, List[int], Dict[str, Any]]
