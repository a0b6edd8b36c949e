from .config import SearchConfig
from .record import (
    Evaluation,
    SearchRecord,
    evaluate,
    verify_record,
    save_checkpoint,
    load_checkpoint
)
from .annealer import (
    Annealer,
    local_search,
    local_search_async
)
