# -*- coding: utf-8 -*-
r"""Module implements :class:`WorkerPool` to map work over documents.

:class:`WorkerPool` wraps :class:`multiprocessing.pool.Pool` so that batch
commands can fan documents out to worker processes and still receive results
in input order. Its main purpose is to make serial and parallel runs produce
byte-identical outputs and to ensure worker processes are terminated on exit
or error.

Example
-------
Use the module and :class:`WorkerPool` class like this to ensure worker
processes are released when no longer required.
::

    from functools import partial

    from keyphrase_bench.helpers.pool import WorkerPool


    with WorkerPool(jobs=4) as pool:
        results = pool.map(partial(score_document, k=5), documents)

Note
----
Mapped functions and their arguments must be picklable, i.e. module-level
functions or :func:`functools.partial` objects built from them.

"""
from logging import getLogger
from multiprocessing import Pool, cpu_count

from tqdm import tqdm


class WorkerPool:
    """Class for housekeeping of order-preserving parallel maps.

    Starts worker processes only when more than one job is requested, and
    closes them when the instance is exited.

    Attributes
    ----------
    _logger : :class:`~logging.Logger`
        Channel to be used for log output specific to the module.

    _jobs : :obj:`int`
        Number of worker processes, ``1`` means in-process execution.

    _pool : :class:`multiprocessing.pool.Pool`
        Handle to worker processes, or :obj:`None` for in-process execution.

    """

    def __init__(self, jobs=1, chunksize=16, progress=False, description=None):
        """Initialize worker processes.

        Parameters
        ----------
        jobs : :obj:`int`, optional
            Number of worker processes, ``0`` or negative means all CPU cores.
            (default 1)

        chunksize : :obj:`int`, optional
            Number of items sent to a worker at once.
            (default 16)

        progress : :obj:`bool`, optional
            Show a progress bar on stderr.
            (default :obj:`False`)

        description : :obj:`str`, optional
            Progress bar label.
            (default :obj:`None`)

        """
        self._logger = getLogger(__name__)
        self._pool = None

        self._jobs = jobs if jobs and jobs > 0 else cpu_count()
        self._chunksize = max(1, chunksize)
        self._progress = progress
        self._description = description

        if self._jobs > 1:
            try:
                self._pool = Pool(processes=self._jobs)
            except OSError:
                self._logger.exception(
                    "Exception: failed to start %d worker processes, "
                    "falling back to in-process execution",
                    self._jobs,
                )
                self._jobs = 1

        self._logger.debug(
            "Created instance from %s(jobs='%s', chunksize='%s')",
            self.__class__.__name__,
            self._jobs,
            self._chunksize,
        )

    def __enter__(self):
        """Return class instance."""
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        """Terminate worker processes on instance destruction."""
        if self._pool is not None:
            self._logger.debug("Close %d worker processes", self._jobs)

            if exc_type is None:
                self._pool.close()
            else:
                self._pool.terminate()

            self._pool.join()
            self._pool = None

    @property
    def jobs(self):
        """:obj:`int` Number of worker processes in use."""
        return self._jobs

    def map(self, func, items):
        """Apply ``func`` to every item and return results in input order.

        Parameters
        ----------
        func : callable
            Picklable function of one argument.

        items : iterable
            Work items.

        Returns
        -------
        :obj:`list`
            ``[func(item) for item in items]``, computed by the worker processes
            when available.

        """
        items = list(items)

        if self._pool is None:
            results = map(func, items)
        else:
            results = self._pool.imap(func, items, chunksize=self._chunksize)

        return list(
            tqdm(
                results,
                total=len(items),
                desc=self._description,
                disable=not self._progress,
                leave=False,
            )
        )
