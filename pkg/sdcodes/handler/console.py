import sys
from typing import Coroutine, Optional, TextIO

from ..jobs import JobManager
from ..logging import CodesLogger


class Console:
    """
    Output streams and job manager shared by the commands.

    Results go to ``stdout``; progress goes to ``stderr`` and the log, so the
    two never interleave on one stream.
    """

    def __init__(
        self,
        logger: CodesLogger,
        num_workers: int = 1,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
    ):
        self._logger = logger
        self._stdout = stdout or sys.stdout
        self._stderr = stderr or sys.stderr
        self._num_workers = num_workers
        self._job_manager: Optional[JobManager] = None

    @property
    def log(self) -> CodesLogger:
        return self._logger

    @property
    def jobs(self) -> JobManager:
        """Started on first use."""
        if self._job_manager is None:
            self._job_manager = JobManager(self._logger, self._num_workers)
        return self._job_manager

    def message(self, message):
        if not isinstance(message, str) or not message.endswith("\n"):
            message = str(message) + "\n"
        self._stdout.write(message)
        self._stdout.flush()

    def progress(self, message: str):
        self._logger.info(message)
        self._stderr.write(message.rstrip("\n") + "\n")
        self._stderr.flush()

    def error(self, message: str):
        self._stderr.write(f"error: {message}\n")
        self._stderr.flush()

    def launch(self, func: Coroutine, job_group: str):
        """
        Launch a coroutine on the job thread.

        :param func: Coroutine to run.
        :param job_group: Group the job can be stopped by.
        """
        return self.jobs.run(func, job_group=job_group)

    def stop(self, job_group: str):
        """
        Stop all jobs associated with the given job group

        :param job_group:  group for a group of jobs
        """
        if self._job_manager is not None:
            self._job_manager.stop_jobs(job_group)

    def close(self):
        if self._job_manager is not None:
            self._job_manager.close()
            self._job_manager = None
