import asyncio
import traceback
from asyncio import CancelledError, Event, Semaphore
from collections import defaultdict
from concurrent.futures import Executor, Future, ProcessPoolExecutor
from multiprocessing import get_context
from threading import Thread
from typing import Any, Callable, Coroutine, DefaultDict, Dict, Iterable, List, Optional
from uuid import uuid4

from ..logging import CodesLogger


class JobManager:
    """
    Event loop on a daemon thread that runs job coroutines in named groups.

    CPU-bound calls go through :meth:`execute`, which hands them to a process
    pool when more than one worker is configured.
    """

    def __init__(self, logger: CodesLogger, num_workers: int = 1):
        self._logger = logger
        self._num_workers = max(1, num_workers)
        self._jobs: DefaultDict[str, Dict[str, Event]] = defaultdict(dict)
        self._loop = asyncio.new_event_loop()
        self._thread = Thread(
            target=self._loop.run_forever, name="sdcodes-jobs", daemon=True
        )
        self._sem = Semaphore(self._num_workers)
        self._executor: Optional[Executor] = None
        if self._num_workers > 1:
            self._executor = ProcessPoolExecutor(
                self._num_workers, mp_context=get_context("spawn")
            )
        self._closed = False
        self._thread.start()

    @property
    def semaphore(self) -> Semaphore:
        return self._sem

    @property
    def num_workers(self) -> int:
        return self._num_workers

    def run(self, cor: Coroutine, job_group: str) -> Future:
        job_id = str(uuid4())
        cancel_event = Event()
        self._jobs[job_group][job_id] = cancel_event
        wrapped_cor = self._handle_coroutine(
            cor, job_group=job_group, job_id=job_id, cancel_event=cancel_event
        )
        return asyncio.run_coroutine_threadsafe(wrapped_cor, loop=self._loop)

    async def execute(self, func: Callable, *args) -> Any:
        """Run ``func(*args)`` in the executor; only awaitable on the job loop."""
        async with self._sem:
            return await asyncio.get_running_loop().run_in_executor(
                self._executor, func, *args
            )

    def map(
        self, func: Callable, arguments: Iterable[tuple], job_group: str
    ) -> List[Any]:
        """Blocking fan-out; results come back in submission order."""
        futures = [self.run(self.execute(func, *args), job_group) for args in arguments]
        return [future.result() for future in futures]

    def stop_jobs(self, group: str):
        self._logger.fdebug("Stopping jobs in group {group}")
        for cancel_event in list(self._jobs[group].values()):
            self._loop.call_soon_threadsafe(cancel_event.set)

    def close(self):
        if self._closed:
            return
        self._closed = True
        for group in list(self._jobs):
            self.stop_jobs(group)
        asyncio.run_coroutine_threadsafe(
            self._loop.shutdown_default_executor(), loop=self._loop
        ).result()
        self._loop.call_soon_threadsafe(self._loop.stop)
        self._thread.join()
        self._loop.close()
        if self._executor is not None:
            self._executor.shutdown(wait=True)
        self._logger.fdebug("Job manager closed")

    def __enter__(self) -> "JobManager":
        return self

    def __exit__(self, *exc_info):
        self.close()

    async def _handle_coroutine(
        self, cor: Coroutine, job_group: str, job_id: str, cancel_event: Event
    ):
        try:
            self._logger.fdebug("Starting job with group {job_group}")
            run_task = asyncio.create_task(cor)
            cancel_task = asyncio.create_task(cancel_event.wait())
            done, _ = await asyncio.wait(
                [run_task, cancel_task], return_when=asyncio.FIRST_COMPLETED
            )
            if run_task in done:
                cancel_task.cancel()
                e = run_task.exception()
                if e:
                    self._logger.warning(f"Exception thrown in job: {e}")
                    self._logger.debug(
                        "\n".join(
                            traceback.format_exception(type(e), e, e.__traceback__)
                        )
                    )
                    raise e
                self._logger.fdebug("Finished job with group {job_group}")
                return run_task.result()
            run_task.cancel()
            self._logger.fdebug("Cancelled running job with group {job_group}")
            raise CancelledError(f"job group {job_group} stopped")
        finally:
            self._jobs[job_group].pop(job_id, None)
