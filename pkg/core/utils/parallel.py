#!/usr/bin/env python3
"""
Worker-pool helper for splitting an outer search space into chunks.

Results come back indexed by chunk, so callers merge them in a fixed order
and the outcome never depends on which worker finished first.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

import config

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def chunked(items: Sequence[T], pieces: int) -> List[Sequence[T]]:
    """Split items into at most `pieces` contiguous, nearly equal chunks."""
    pieces = max(1, min(pieces, len(items)))
    size, extra = divmod(len(items), pieces)
    chunks = []
    start = 0
    for i in range(pieces):
        end = start + size + (1 if i < extra else 0)
        chunks.append(items[start:end])
        start = end
    return [c for c in chunks if len(c)]


def run_chunks(items: Sequence[T], work: Callable[[Sequence[T]], R],
               workers: Optional[int] = None, progress: bool = False,
               desc: str = "Searching") -> List[R]:
    """Apply work to contiguous chunks of items; results are returned in chunk order."""
    workers = max(1, workers if workers is not None else config.WORKERS)
    # more chunks than workers keeps the progress bar moving
    chunks = chunked(items, workers * 4 if workers > 1 else (len(items) if progress else 1))
    results: List[Optional[R]] = [None] * len(chunks)
    bar = tqdm(total=len(items), desc=desc, disable=not progress, leave=False)

    try:
        if workers > 1 and len(chunks) > 1:
            logger.info(f"Running {len(chunks)} chunks on {workers} workers")
            with ThreadPoolExecutor(max_workers=workers) as executor:
                future_to_index = {executor.submit(work, chunk): i for i, chunk in enumerate(chunks)}
                for future in as_completed(future_to_index):
                    i = future_to_index[future]
                    results[i] = future.result()
                    bar.update(len(chunks[i]))
        else:
            for i, chunk in enumerate(chunks):
                results[i] = work(chunk)
                bar.update(len(chunk))
    finally:
        bar.close()
    return results
