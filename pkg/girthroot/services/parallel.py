import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

from girthroot.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

def run_chunks(fn: Callable[[T], R], items: Iterable[T], jobs: Optional[int] = None) -> list[R]:
    """Map ``fn`` over ``items``, in worker processes when ``jobs > 1``. Order is kept."""
    jobs = jobs or settings.JOBS
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.debug(f"dispatching {len(items)} tasks to {jobs} workers")
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))
