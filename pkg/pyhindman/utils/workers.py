#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
from concurrent.futures import ProcessPoolExecutor

logger = logging.getLogger(__name__)


def ordered_map(fn, items, jobs=1):
    """
    Maps `fn` over `items`, in-process when `jobs` is 1 and over a process pool
    otherwise. Results always come back in input order, so any reduction over
    them is independent of the number of jobs.

    :param fn: a picklable, module-level callable
    :type fn: callable
    :param items: the arguments
    :type items: iterable
    :param jobs: number of worker processes
    :type jobs: int
    :returns: list of results
    """
    assert isinstance(jobs, int) and jobs >= 1, 'jobs must be a positive int'
    items = list(items)
    if jobs == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    workers = min(jobs, len(items))
    logger.debug('Mapping %s over %d items with %d workers', getattr(fn, '__name__', fn), len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))
